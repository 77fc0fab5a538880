#ifndef MATCHVOTE_GRAPH_HPP
#define MATCHVOTE_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "matchvote/errors.hpp"

namespace matchvote {

using EdgeId = int;
using VertexId = int;

// Simple undirected graph. Edges are stored in insertion order and an edge's
// id is its list position, which stays stable for the lifetime of the graph;
// candidates, voters and CNF variables all refer to edges by id.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (vertex_count_ < 0) throw input_error("negative vertex count");
        std::set<std::pair<VertexId, VertexId>> seen;
        for (auto& [u, v] : edges_) {
            if (u == v) throw input_error("self-loop rejected");
            if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
                throw input_error("edge endpoint out of range");
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) throw input_error("duplicate edge rejected");
        }
        incident_.assign(vertex_count_, {});
        for (EdgeId e = 0; e < edge_count(); ++e) {
            incident_[edges_[e].first].push_back(e);
            incident_[edges_[e].second].push_back(e);
        }
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<VertexId, VertexId> edge(EdgeId e) const {
        check_edge(e);
        return edges_[e];
    }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_[v]; }

    bool adjacent(EdgeId a, EdgeId b) const {
        auto [a1, a2] = edge(a);
        auto [b1, b2] = edge(b);
        return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
    }

    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count()) throw input_error("invalid edge id " + std::to_string(e));
    }

private:
    int vertex_count_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

// A candidate: sorted, duplicate-free list of edge ids in which no two edges
// share an endpoint. Sorted ids give canonical equality across the library.
struct Matching {
    std::vector<EdgeId> edge_ids;

    Matching() = default;
    explicit Matching(std::vector<EdgeId> ids) : edge_ids(std::move(ids)) { canonicalize(); }

    void canonicalize() {
        std::sort(edge_ids.begin(), edge_ids.end());
        edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
    }

    std::size_t size() const { return edge_ids.size(); }
    bool empty() const { return edge_ids.empty(); }
    bool contains(EdgeId e) const {
        return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
    }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.edge_ids == b.edge_ids;
    }
    friend bool operator<(const Matching& a, const Matching& b) {
        return a.edge_ids < b.edge_ids;
    }
};

inline bool is_matching(const Graph& g, const std::vector<EdgeId>& edge_ids) {
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<char> picked(g.edge_count(), 0);
    for (EdgeId e : edge_ids) {
        g.check_edge(e);
        if (picked[e]) continue;
        picked[e] = 1;
        auto [u, v] = g.edge(e);
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

inline bool is_matching(const Graph& g, const Matching& m) { return is_matching(g, m.edge_ids); }

// True iff every edge outside m is adjacent to an edge of m.
inline bool is_maximal(const Graph& g, const Matching& m) {
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : m.edge_ids) {
        auto [u, v] = g.edge(e);
        used[u] = used[v] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!used[u] && !used[v]) return false;
    }
    return true;
}

// Extends m to a maximal matching by adding addable edges in ascending id
// order. Deterministic; the identity on already-maximal inputs.
inline Matching complete_to_maximal(const Graph& g, const Matching& m) {
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<EdgeId> ids = m.edge_ids;
    for (EdgeId e : ids) {
        auto [u, v] = g.edge(e);
        used[u] = used[v] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            ids.push_back(e);
        }
    }
    return Matching(std::move(ids));
}

// |a ∩ b| for sorted id lists.
inline int overlap_size(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

}  // namespace matchvote

#endif  // MATCHVOTE_GRAPH_HPP
