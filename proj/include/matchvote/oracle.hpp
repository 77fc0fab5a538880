#ifndef MATCHVOTE_ORACLE_HPP
#define MATCHVOTE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "matchvote/enumerate.hpp"
#include "matchvote/instance.hpp"

namespace matchvote {

struct SolveReport {
    std::optional<bool> decision;        // existence / verification verdict
    std::optional<Matching> witness;     // optimizer, winner, or refuter
    std::optional<WelfareValue> optimum;
    std::uint64_t candidates_examined = 0;
};

// Brute-force welfare maximization over the declared candidate space. Ties
// break toward the first maximizer in enumeration order.
inline SolveReport oracle_optimize(const Instance& instance, WelfareMode mode,
                                   std::uint64_t cap = kDefaultCandidateCap) {
    CandidateStream stream(instance, cap);
    SolveReport report;
    while (auto m = stream.next()) {
        WelfareValue w = welfare(instance, *m, mode);
        if (!report.witness || w > *report.optimum) {
            report.witness = std::move(*m);
            report.optimum = w;
        }
    }
    report.candidates_examined = stream.produced();
    return report;
}

namespace detail {

// Per-candidate utility rows; integer fast path for the approval models.
class UtilityTable {
public:
    UtilityTable(const Instance& instance, const std::vector<Matching>& candidates)
        : voters_(instance.voter_count()), approval_(instance.model.is_approval()) {
        if (approval_) {
            approval_rows_.reserve(candidates.size());
            for (const Matching& m : candidates) {
                std::vector<signed char> row(voters_);
                for (int v = 0; v < voters_; ++v)
                    row[v] = static_cast<signed char>(approval_utility01(instance, v, m));
                approval_rows_.push_back(std::move(row));
            }
        } else {
            rational_rows_.reserve(candidates.size());
            for (const Matching& m : candidates) {
                std::vector<Rational> row(voters_);
                for (int v = 0; v < voters_; ++v) row[v] = utility(instance, v, m);
                rational_rows_.push_back(std::move(row));
            }
        }
    }

    PairwiseTally compare(std::size_t a, std::size_t b) const {
        PairwiseTally tally;
        for (int v = 0; v < voters_; ++v) {
            int cmp = approval_ ? approval_rows_[a][v] - approval_rows_[b][v]
                                : rational_rows_[a][v].compare(rational_rows_[b][v]);
            if (cmp > 0) ++tally.prefer_a;
            else if (cmp < 0) ++tally.prefer_b;
            else ++tally.indifferent;
        }
        return tally;
    }

private:
    int voters_;
    bool approval_;
    std::vector<std::vector<signed char>> approval_rows_;
    std::vector<std::vector<Rational>> rational_rows_;
};

inline void require_candidate(const Instance& instance, const Matching& m,
                              const char* oper) {
    if (!is_matching(instance.graph, m))
        throw input_error(std::string(oper) + ": given edge set is not a matching");
    if (instance.space == SpaceKind::MaximalOnly && !is_maximal(instance.graph, m))
        throw input_error(std::string(oper) + ": candidate space is maximal-only but the "
                                              "given matching is not maximal");
}

}  // namespace detail

// Searches the candidate space for a Pareto improvement over m.
//
//   Weak   — returns a strong improvement (all voters strictly better) if one
//            exists; nullopt certifies weak Pareto optimality.
//   Strong — returns a weak improvement (someone strictly better, nobody
//            worse) if one exists; nullopt certifies strong Pareto optimality.
//
// With zero voters every candidate counts as optimal under both strengths
// (vacuous comparisons), so the answer is always nullopt.
inline std::optional<Matching> oracle_pareto_verify(const Instance& instance, const Matching& m,
                                                    ParetoStrength strength,
                                                    std::uint64_t cap = kDefaultCandidateCap) {
    detail::require_candidate(instance, m, "oracle_pareto_verify");
    if (instance.voters.empty()) return std::nullopt;
    const int voters = instance.voter_count();
    std::vector<Rational> base(voters);
    for (int v = 0; v < voters; ++v) base[v] = utility(instance, v, m);

    CandidateStream stream(instance, cap);
    while (auto c = stream.next()) {
        bool someone_better = false;
        bool nobody_worse = true;
        bool all_better = true;
        for (int v = 0; v < voters; ++v) {
            Rational u = utility(instance, v, *c);
            int cmp = u.compare(base[v]);
            if (cmp > 0) someone_better = true;
            else all_better = false;
            if (cmp < 0) {
                nobody_worse = false;
                break;
            }
        }
        if (strength == ParetoStrength::Weak && all_better) return c;
        if (strength == ParetoStrength::Strong && someone_better && nobody_worse) return c;
    }
    return std::nullopt;
}

// Condorcet solving by exhaustive pairwise comparison.
//
// With a candidate m given, verifies that m wins-or-ties (weak) or strictly
// wins (strong) against every other candidate; on failure the report carries
// a refuting candidate. Without m, searches the space and returns the first
// winner in enumeration order, or decision=false when none exists.
inline SolveReport oracle_condorcet(const Instance& instance, CondorcetStrength strength,
                                    const std::optional<Matching>& m = std::nullopt,
                                    std::uint64_t cap = kDefaultCandidateCap) {
    std::vector<Matching> candidates;
    {
        CandidateStream stream(instance, cap);
        while (auto c = stream.next()) candidates.push_back(std::move(*c));
    }
    detail::UtilityTable table(instance, candidates);
    SolveReport report;
    report.candidates_examined = candidates.size();

    auto beats_all = [&](std::size_t i) -> std::optional<std::size_t> {
        // Returns a refuting index, or nullopt when i wins everywhere.
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (j == i) continue;
            PairwiseTally t = table.compare(i, j);
            bool ok = strength == CondorcetStrength::Weak ? t.prefer_a >= t.prefer_b
                                                          : t.prefer_a > t.prefer_b;
            if (!ok) return j;
        }
        return std::nullopt;
    };

    if (m) {
        detail::require_candidate(instance, *m, "oracle_condorcet");
        std::size_t index = candidates.size();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates[i] == *m) {
                index = i;
                break;
            }
        }
        if (index == candidates.size())
            throw input_error("oracle_condorcet: matching not in candidate space");
        auto refuter = beats_all(index);
        report.decision = !refuter.has_value();
        if (refuter) report.witness = candidates[*refuter];
        return report;
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!beats_all(i)) {
            report.decision = true;
            report.witness = candidates[i];
            return report;
        }
    }
    report.decision = false;
    return report;
}

}  // namespace matchvote

#endif  // MATCHVOTE_ORACLE_HPP
