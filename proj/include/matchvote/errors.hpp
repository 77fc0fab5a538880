#ifndef MATCHVOTE_ERRORS_HPP
#define MATCHVOTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matchvote {

// Malformed inputs: bad edge ids, invalid formulas, schema violations.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An algorithm was asked to run outside its supported utility model.
class model_mismatch_error : public std::runtime_error {
public:
    explicit model_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

// Candidate enumeration would exceed the configured cap.
class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// The DPLL decision budget ran out before reaching SAT or UNSAT.
class budget_exhausted_error : public std::runtime_error {
public:
    explicit budget_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

// Text formats (DIMACS, instance files) that do not parse.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Problem/algorithm/model combination not supported by the requested backend.
class routing_error : public std::runtime_error {
public:
    explicit routing_error(const std::string& what) : std::runtime_error(what) {}
};

// A certificate decode hit an answer inconsistent with the reduction.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matchvote

#endif  // MATCHVOTE_ERRORS_HPP
