#ifndef MATCHVOTE_ENUMERATE_HPP
#define MATCHVOTE_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "matchvote/graph.hpp"
#include "matchvote/instance.hpp"

namespace matchvote {

inline constexpr std::uint64_t kDefaultCandidateCap = 10'000'000;

// Lexicographic stream over all matchings of a graph, smallest sorted id
// list first, starting with the empty matching. The order is a pure function
// of the graph, so witnesses reproduce across runs. Single consumer.
//
// Refuses (throws cap_exceeded_error) instead of truncating once more than
// `cap` candidates have been produced: the oracle is a correctness tool and
// must never silently approximate.
class MatchingStream {
public:
    explicit MatchingStream(const Graph& graph, std::uint64_t cap = kDefaultCandidateCap)
        : graph_(&graph), cap_(cap), vertex_used_(graph.vertex_count(), 0) {}

    std::optional<Matching> next() {
        if (!started_) {
            started_ = true;
            bump();
            return Matching{};  // the empty matching is lexicographically first
        }
        // Successor in lexicographic order: extend with the smallest
        // compatible id after the last element, else backtrack and replace.
        EdgeId from = prefix_.empty() ? 0 : prefix_.back() + 1;
        while (true) {
            EdgeId e = first_compatible(from);
            if (e >= 0) {
                push(e);
                bump();
                Matching m;
                m.edge_ids = prefix_;
                return m;
            }
            if (prefix_.empty()) return std::nullopt;
            from = prefix_.back() + 1;
            pop();
        }
    }

    std::uint64_t produced() const { return produced_; }

private:
    EdgeId first_compatible(EdgeId from) const {
        for (EdgeId e = from; e < graph_->edge_count(); ++e) {
            auto [u, v] = graph_->edge(e);
            if (!vertex_used_[u] && !vertex_used_[v]) return e;
        }
        return -1;
    }

    void push(EdgeId e) {
        auto [u, v] = graph_->edge(e);
        vertex_used_[u] = vertex_used_[v] = 1;
        prefix_.push_back(e);
    }

    void pop() {
        auto [u, v] = graph_->edge(prefix_.back());
        vertex_used_[u] = vertex_used_[v] = 0;
        prefix_.pop_back();
    }

    void bump() {
        if (++produced_ > cap_)
            throw cap_exceeded_error("candidate enumeration exceeded cap of " +
                                     std::to_string(cap_));
    }

    const Graph* graph_;
    std::uint64_t cap_;
    std::uint64_t produced_ = 0;
    bool started_ = false;
    std::vector<EdgeId> prefix_;
    std::vector<char> vertex_used_;
};

// Maximal matchings, in the order induced by the full stream. The cap counts
// work done on the underlying stream, not just the survivors.
class MaximalMatchingStream {
public:
    explicit MaximalMatchingStream(const Graph& graph,
                                   std::uint64_t cap = kDefaultCandidateCap)
        : graph_(&graph), inner_(graph, cap) {}

    std::optional<Matching> next() {
        while (auto m = inner_.next()) {
            if (is_maximal(*graph_, *m)) return m;
        }
        return std::nullopt;
    }

    std::uint64_t produced() const { return inner_.produced(); }

private:
    const Graph* graph_;
    MatchingStream inner_;
};

// The candidate space of an instance as one stream type.
class CandidateStream {
public:
    CandidateStream(const Graph& graph, SpaceKind space,
                    std::uint64_t cap = kDefaultCandidateCap) {
        if (space == SpaceKind::MaximalOnly) maximal_.emplace(graph, cap);
        else all_.emplace(graph, cap);
    }

    explicit CandidateStream(const Instance& instance,
                             std::uint64_t cap = kDefaultCandidateCap)
        : CandidateStream(instance.graph, instance.space, cap) {}

    std::optional<Matching> next() { return all_ ? all_->next() : maximal_->next(); }
    std::uint64_t produced() const { return all_ ? all_->produced() : maximal_->produced(); }

private:
    std::optional<MatchingStream> all_;
    std::optional<MaximalMatchingStream> maximal_;
};

inline std::vector<Matching> collect_matchings(const Graph& graph,
                                               std::uint64_t cap = kDefaultCandidateCap) {
    MatchingStream stream(graph, cap);
    std::vector<Matching> out;
    while (auto m = stream.next()) out.push_back(std::move(*m));
    return out;
}

inline std::vector<Matching> collect_maximal_matchings(
    const Graph& graph, std::uint64_t cap = kDefaultCandidateCap) {
    MaximalMatchingStream stream(graph, cap);
    std::vector<Matching> out;
    while (auto m = stream.next()) out.push_back(std::move(*m));
    return out;
}

inline std::vector<Matching> collect_candidates(const Instance& instance,
                                                std::uint64_t cap = kDefaultCandidateCap) {
    CandidateStream stream(instance, cap);
    std::vector<Matching> out;
    while (auto m = stream.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace matchvote

#endif  // MATCHVOTE_ENUMERATE_HPP
