#ifndef MATCHVOTE_RATIONAL_HPP
#define MATCHVOTE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "matchvote/errors.hpp"

namespace matchvote {

// Exact arithmetic everywhere: welfare ties and pairwise comparisons are
// decided on reduced fractions, never on floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Renders "p/q", or just "p" for integers. Canonical form is maintained by
// the rational type itself (reduced, positive denominator).
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "p", "p/q", with optional leading minus on p (and on q).
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw input_error("cannot parse rational: '" + text + "'");
    }
}

// Welfare value with a +infinity sentinel. Egalitarian welfare over an empty
// voter set is defined as +infinity so "approved by all voters" stays
// vacuously true on degenerate instances; utilitarian welfare is always
// finite.
class WelfareValue {
public:
    WelfareValue() : finite_(true), value_(0) {}
    explicit WelfareValue(Rational v) : finite_(true), value_(std::move(v)) {}

    static WelfareValue infinity() {
        WelfareValue w;
        w.finite_ = false;
        return w;
    }

    bool is_finite() const { return finite_; }

    const Rational& value() const {
        if (!finite_) throw input_error("welfare value is infinite");
        return value_;
    }

    friend bool operator==(const WelfareValue& a, const WelfareValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    friend bool operator<(const WelfareValue& a, const WelfareValue& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }

    friend bool operator!=(const WelfareValue& a, const WelfareValue& b) { return !(a == b); }
    friend bool operator>(const WelfareValue& a, const WelfareValue& b) { return b < a; }
    friend bool operator<=(const WelfareValue& a, const WelfareValue& b) { return !(b < a); }
    friend bool operator>=(const WelfareValue& a, const WelfareValue& b) { return !(a < b); }

    std::string str() const { return finite_ ? matchvote::to_string(value_) : "+inf"; }

    // Inverse of str(): accepts "+inf" or a rational literal.
    static WelfareValue parse(const std::string& text) {
        if (text == "+inf") return infinity();
        return WelfareValue(parse_rational(text));
    }

private:
    bool finite_;
    Rational value_;
};

}  // namespace matchvote

#endif  // MATCHVOTE_RATIONAL_HPP
