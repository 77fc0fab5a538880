#ifndef MATCHVOTE_POLY_HPP
#define MATCHVOTE_POLY_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "matchvote/instance.hpp"
#include "matchvote/two_sat.hpp"
#include "matchvote/weighted_matching.hpp"

namespace matchvote {

// w(e) = sum of alpha_v over voters whose preferred matching contains e.
// The utilitarian welfare of a matching M under affine utilities is
// sum_{e in M} w(e) plus the matching-independent sum of the betas.
inline EdgeWeights affine_edge_weights(const Instance& instance) {
    EdgeWeights weights(instance.graph.edge_count(), Rational(0));
    for (const Voter& v : instance.voters)
        for (EdgeId e : v.preferred.edge_ids) weights[e] += v.alpha;
    return weights;
}

// Utilitarian welfare maximization under affine utilities, by reduction to
// maximum-weight matching. On a maximal-only instance the result is
// completed greedily; every addable edge has weight zero (otherwise the
// matching was not maximum), so the optimum is unchanged.
inline std::pair<Matching, Rational> solve_utilitarian_affine(const Instance& instance) {
    require_model(instance, ModelKind::Affine, "solve_utilitarian_affine");
    EdgeWeights weights = affine_edge_weights(instance);
    Matching best = max_weight_matching(instance.graph, weights);
    if (instance.space == SpaceKind::MaximalOnly)
        best = complete_to_maximal(instance.graph, best);
    Rational total = 0;
    for (EdgeId e : best.edge_ids) total += weights[e];
    for (const Voter& v : instance.voters) total += v.beta;
    return {std::move(best), std::move(total)};
}

// The 2-SAT instance deciding whether some matching is approved by every
// voter in `voter_subset` under 1-missing approval: variables are edges,
// adjacent edges exclude each other, and for each voter every pair of
// distinct preferred edges yields a clause forcing at most one to be
// dropped. Duplicate clauses across voters are removed.
inline TwoSatFormula make_kappa1_two_sat(const Instance& instance,
                                         const std::vector<int>& voter_subset) {
    const Graph& g = instance.graph;
    TwoSatFormula f;
    f.variable_count = g.edge_count();
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto& inc = g.incident_edges(u);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                f.add_clause({inc[i], false}, {inc[j], false});
    }
    std::set<std::pair<EdgeId, EdgeId>> seen;
    for (int vi : voter_subset) {
        const auto& pref = instance.voters.at(vi).preferred.edge_ids;
        for (std::size_t i = 0; i < pref.size(); ++i)
            for (std::size_t j = i + 1; j < pref.size(); ++j)
                if (seen.insert({pref[i], pref[j]}).second)
                    f.add_clause({pref[i], true}, {pref[j], true});
    }
    return f;
}

namespace detail {

// Matching approved by all voters in the subset, or nullopt. General-space
// search; callers complete the witness when the space is maximal-only
// (kappa-missing approval is monotone under adding edges).
inline std::optional<Matching> egalitarian_small_kappa_subset(const Instance& instance,
                                                              const std::vector<int>& subset) {
    if (instance.model.kappa == 0) {
        std::vector<EdgeId> u;
        for (int vi : subset)
            u.insert(u.end(), instance.voters.at(vi).preferred.edge_ids.begin(),
                     instance.voters.at(vi).preferred.edge_ids.end());
        Matching candidate(std::move(u));
        if (!is_matching(instance.graph, candidate)) return std::nullopt;
        return candidate;
    }
    TwoSatFormula f = make_kappa1_two_sat(instance, subset);
    auto assignment = two_sat_solve(f);
    if (!assignment) return std::nullopt;
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < instance.graph.edge_count(); ++e)
        if ((*assignment)[e]) ids.push_back(e);
    return Matching(std::move(ids));
}

inline std::vector<int> all_voter_indices(const Instance& instance) {
    std::vector<int> idx(instance.voters.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    return idx;
}

inline Matching fit_space(const Instance& instance, Matching m) {
    if (instance.space == SpaceKind::MaximalOnly)
        return complete_to_maximal(instance.graph, m);
    return m;
}

}  // namespace detail

// Egalitarian welfare under kappa-missing approval with kappa <= 1:
// kappa = 0 reduces to checking that the union of preferred matchings is a
// matching, kappa = 1 to 2-SAT. Returns a matching approved by every voter
// (egalitarian welfare one), or nullopt when none exists.
inline std::optional<Matching> solve_egalitarian_small_kappa(const Instance& instance) {
    require_model(instance, ModelKind::KappaMissing, "solve_egalitarian_small_kappa");
    if (instance.model.kappa > 1)
        throw model_mismatch_error(
            "solve_egalitarian_small_kappa: kappa > 1 is NP-hard; use the SAT backend or "
            "the oracle");
    auto m = detail::egalitarian_small_kappa_subset(instance, detail::all_voter_indices(instance));
    if (!m) return std::nullopt;
    return detail::fit_space(instance, std::move(*m));
}

// Weakly Pareto optimal candidate: voter 0's preferred matching gives that
// voter maximum utility under every model, so no candidate can make all
// voters strictly better off. Completion to maximal cannot lower voter 0's
// utility either.
inline Matching construct_wpo(const Instance& instance) {
    Matching m;
    if (!instance.voters.empty()) m = instance.voters.front().preferred;
    return detail::fit_space(instance, std::move(m));
}

// Strongly Pareto optimal candidate under affine utilities: any utilitarian
// welfare maximizer qualifies, since a weak improvement would have strictly
// larger total welfare.
inline Matching construct_spo_affine(const Instance& instance) {
    require_model(instance, ModelKind::Affine, "construct_spo_affine");
    return solve_utilitarian_affine(instance).first;
}

namespace detail {

inline std::optional<Matching> verify_pareto_small_kappa_impl(const Instance& instance,
                                                              const Matching& m,
                                                              ParetoStrength strength) {
    std::vector<int> approvers;
    std::vector<int> others;
    for (int v = 0; v < instance.voter_count(); ++v) {
        if (approval_utility01(instance, v, m) == 1) approvers.push_back(v);
        else others.push_back(v);
    }
    if (strength == ParetoStrength::Strong) {
        for (int v : others) {
            std::vector<int> subset = approvers;
            subset.push_back(v);
            if (auto imp = egalitarian_small_kappa_subset(instance, subset))
                return fit_space(instance, std::move(*imp));
        }
        return std::nullopt;
    }
    // Weak: a candidate with at least one approver is trivially weakly
    // Pareto optimal; with zero voters every candidate is (vacuously).
    if (instance.voters.empty() || !approvers.empty()) return std::nullopt;
    if (auto imp = egalitarian_small_kappa_subset(instance, all_voter_indices(instance)))
        return fit_space(instance, std::move(*imp));
    return std::nullopt;
}

}  // namespace detail

// Pareto verification under kappa-missing approval, kappa <= 1. Strong
// verification returns a weak Pareto improvement (keeps all approvers, adds
// one) when m is not strongly Pareto optimal; weak verification returns a
// strong improvement (approved by everyone) when m is not weakly Pareto
// optimal. nullopt certifies optimality at the requested strength.
inline std::optional<Matching> verify_pareto_small_kappa(const Instance& instance,
                                                         const Matching& m,
                                                         ParetoStrength strength) {
    require_model(instance, ModelKind::KappaMissing, "verify_pareto_small_kappa");
    if (instance.model.kappa > 1)
        throw model_mismatch_error("verify_pareto_small_kappa: kappa > 1 is coNP-hard; "
                                   "use the oracle");
    if (!is_matching(instance.graph, m))
        throw input_error("verify_pareto_small_kappa: not a matching");
    if (instance.space == SpaceKind::MaximalOnly && !is_maximal(instance.graph, m))
        throw input_error("verify_pareto_small_kappa: candidate not maximal");
    return detail::verify_pareto_small_kappa_impl(instance, m, strength);
}

// Strongly Pareto optimal candidate under kappa-missing approval with
// kappa <= 1: chase weak Pareto improvements starting from the empty
// matching. The approver set grows strictly each round, so this ends after
// at most |V| improvements.
inline Matching construct_spo_small_kappa(const Instance& instance) {
    require_model(instance, ModelKind::KappaMissing, "construct_spo_small_kappa");
    if (instance.model.kappa > 1)
        throw model_mismatch_error("construct_spo_small_kappa: kappa > 1 is NP-hard; "
                                   "use the oracle");
    Matching current;
    while (auto imp = detail::verify_pareto_small_kappa_impl(instance, current,
                                                             ParetoStrength::Strong))
        current = std::move(*imp);
    return detail::fit_space(instance, std::move(current));
}

// Under the approval models a weak Condorcet winner always exists (any
// utilitarian welfare maximizer is one), so existence is answerable without
// producing a witness. Affine existence is NP-hard and routes to the oracle.
inline bool weak_cw_exists_approval(const Instance& instance) {
    if (!instance.model.is_approval())
        throw model_mismatch_error("weak_cw_exists_approval: affine existence is NP-hard; "
                                   "use the oracle");
    return true;
}

// Constant-time weak-Pareto verification for one-edge approval on maximal
// matchings. Requires the every-edge-approved-by-someone condition: then a
// non-empty maximal matching has an approver, who cannot strictly improve.
inline bool verify_wpo_one_edge_maximal(const Instance& instance, const Matching& m) {
    require_model(instance, ModelKind::OneEdge, "verify_wpo_one_edge_maximal");
    if (instance.space != SpaceKind::MaximalOnly)
        throw model_mismatch_error("verify_wpo_one_edge_maximal: maximal-only spaces only");
    std::vector<char> covered(instance.graph.edge_count(), 0);
    for (const Voter& v : instance.voters)
        for (EdgeId e : v.preferred.edge_ids) covered[e] = 1;
    for (EdgeId e = 0; e < instance.graph.edge_count(); ++e) {
        if (!covered[e])
            throw routing_error("verify_wpo_one_edge_maximal: edge " + std::to_string(e) +
                                " is in no preferred matching; use the oracle");
    }
    if (!is_matching(instance.graph, m) || !is_maximal(instance.graph, m))
        throw input_error("verify_wpo_one_edge_maximal: candidate must be a maximal matching");
    return !m.empty() || instance.graph.edge_count() == 0;
}

}  // namespace matchvote

#endif  // MATCHVOTE_POLY_HPP
