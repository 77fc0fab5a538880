#ifndef MATCHVOTE_INSTANCE_HPP
#define MATCHVOTE_INSTANCE_HPP

#include <string>
#include <tuple>
#include <vector>

#include "matchvote/graph.hpp"
#include "matchvote/rational.hpp"

namespace matchvote {

enum class ModelKind { Affine, OneEdge, KappaMissing };

// Tagged utility model. kappa is meaningful only for KappaMissing.
struct UtilityModel {
    ModelKind kind = ModelKind::Affine;
    int kappa = 0;

    static UtilityModel affine() { return {ModelKind::Affine, 0}; }
    static UtilityModel one_edge() { return {ModelKind::OneEdge, 0}; }
    static UtilityModel kappa_missing(int kappa) {
        if (kappa < 0) throw input_error("kappa must be non-negative");
        return {ModelKind::KappaMissing, kappa};
    }

    bool is_approval() const { return kind != ModelKind::Affine; }

    friend bool operator==(const UtilityModel& a, const UtilityModel& b) {
        return a.kind == b.kind && (a.kind != ModelKind::KappaMissing || a.kappa == b.kappa);
    }
};

enum class SpaceKind { AllMatchings, MaximalOnly };

// A voter is a preferred matching plus affine coefficients; the coefficients
// are ignored under the approval models.
struct Voter {
    Matching preferred;
    Rational alpha = 1;
    Rational beta = 0;
};

struct Instance {
    Graph graph;
    std::vector<Voter> voters;
    UtilityModel model;
    SpaceKind space = SpaceKind::AllMatchings;

    int voter_count() const { return static_cast<int>(voters.size()); }
};

enum class WelfareMode { Utilitarian, Egalitarian };
enum class ParetoStrength { Weak, Strong };
enum class CondorcetStrength { Weak, Strong };

// 0/1 utility for the approval models; only |M*(v) ∩ M| and |M*(v) \ M|
// matter, so edges outside the preferred matching never change the outcome.
inline int approval_utility01(const Instance& instance, int voter_index, const Matching& m) {
    const Voter& v = instance.voters.at(voter_index);
    int overlap = overlap_size(v.preferred.edge_ids, m.edge_ids);
    if (instance.model.kind == ModelKind::OneEdge) return overlap > 0 ? 1 : 0;
    int missing = static_cast<int>(v.preferred.size()) - overlap;
    return missing <= instance.model.kappa ? 1 : 0;
}

inline Rational utility(const Instance& instance, int voter_index, const Matching& m) {
    const Voter& v = instance.voters.at(voter_index);
    if (instance.model.kind == ModelKind::Affine) {
        int overlap = overlap_size(v.preferred.edge_ids, m.edge_ids);
        return v.alpha * overlap + v.beta;
    }
    return Rational(approval_utility01(instance, voter_index, m));
}

inline WelfareValue welfare(const Instance& instance, const Matching& m, WelfareMode mode) {
    if (mode == WelfareMode::Utilitarian) {
        if (instance.model.is_approval()) {
            long long approvers = 0;
            for (int v = 0; v < instance.voter_count(); ++v)
                approvers += approval_utility01(instance, v, m);
            return WelfareValue(Rational(approvers));
        }
        Rational total = 0;
        for (int v = 0; v < instance.voter_count(); ++v) total += utility(instance, v, m);
        return WelfareValue(total);
    }
    if (instance.voters.empty()) return WelfareValue::infinity();
    bool first = true;
    Rational best = 0;
    for (int v = 0; v < instance.voter_count(); ++v) {
        Rational u = utility(instance, v, m);
        if (first || u < best) { best = u; first = false; }
    }
    return WelfareValue(best);
}

struct PairwiseTally {
    long long prefer_a = 0;
    long long prefer_b = 0;
    long long indifferent = 0;

    friend bool operator==(const PairwiseTally& x, const PairwiseTally& y) {
        return std::tie(x.prefer_a, x.prefer_b, x.indifferent) ==
               std::tie(y.prefer_a, y.prefer_b, y.indifferent);
    }
};

inline PairwiseTally compare_pairwise(const Instance& instance, const Matching& a,
                                      const Matching& b) {
    PairwiseTally tally;
    for (int v = 0; v < instance.voter_count(); ++v) {
        Rational ua = utility(instance, v, a);
        Rational ub = utility(instance, v, b);
        if (ua > ub) ++tally.prefer_a;
        else if (ub > ua) ++tally.prefer_b;
        else ++tally.indifferent;
    }
    return tally;
}

struct ValidationReport {
    std::vector<std::string> errors;    // type-invariant violations
    std::vector<std::string> warnings;  // edges not in any preferred matching

    bool ok() const { return errors.empty(); }
};

// Never throws; collects everything it finds. Uncovered edges are a warning
// only: the general solvers are well-defined without the coverage condition,
// and the one fast path that needs it re-checks it explicitly.
inline ValidationReport validate_instance(const Instance& instance) {
    ValidationReport report;
    const Graph& g = instance.graph;
    if (instance.model.kind == ModelKind::KappaMissing && instance.model.kappa < 0)
        report.errors.push_back("kappa must be non-negative");
    std::vector<char> covered(g.edge_count(), 0);
    for (int i = 0; i < instance.voter_count(); ++i) {
        const Voter& v = instance.voters[i];
        std::string who = "voter " + std::to_string(i);
        bool ids_ok = true;
        for (EdgeId e : v.preferred.edge_ids) {
            if (e < 0 || e >= g.edge_count()) {
                report.errors.push_back(who + ": preferred edge id out of range");
                ids_ok = false;
            }
        }
        if (!ids_ok) continue;
        if (!is_matching(g, v.preferred)) {
            report.errors.push_back(who + ": preferred set is not a matching");
            continue;
        }
        if (instance.space == SpaceKind::MaximalOnly && !is_maximal(g, v.preferred))
            report.errors.push_back(who + ": preferred matching not maximal");
        if (instance.model.kind == ModelKind::Affine && v.alpha <= 0)
            report.errors.push_back(who + ": alpha must be positive");
        for (EdgeId e : v.preferred.edge_ids) covered[e] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!covered[e])
            report.warnings.push_back("edge " + std::to_string(e) +
                                      " is in no preferred matching");
    }
    return report;
}

inline void require_model(const Instance& instance, ModelKind kind, const std::string& oper) {
    if (instance.model.kind != kind)
        throw model_mismatch_error(oper + ": unsupported utility model");
}

}  // namespace matchvote

#endif  // MATCHVOTE_INSTANCE_HPP
