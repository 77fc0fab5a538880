#ifndef MATCHVOTE_TWO_SAT_HPP
#define MATCHVOTE_TWO_SAT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "matchvote/errors.hpp"

namespace matchvote {

// Literal = (variable index, polarity). polarity true = positive.
struct TwoSatLiteral {
    int variable = 0;
    bool positive = true;
};

struct TwoSatFormula {
    int variable_count = 0;
    std::vector<std::pair<TwoSatLiteral, TwoSatLiteral>> clauses;

    void add_clause(TwoSatLiteral a, TwoSatLiteral b) {
        check(a);
        check(b);
        clauses.emplace_back(a, b);
    }

    void check(TwoSatLiteral l) const {
        if (l.variable < 0 || l.variable >= variable_count)
            throw input_error("2-SAT literal out of range");
    }
};

// Implication-graph / SCC decision procedure, linear in the formula size.
// Returns a satisfying assignment or nullopt. Deterministic: Tarjan's SCCs
// are discovered in a fixed order, and a variable is set true iff its
// positive literal's component comes earlier in reverse topological order.
inline std::optional<std::vector<bool>> two_sat_solve(const TwoSatFormula& f) {
    const int nodes = 2 * f.variable_count;
    // node 2v = positive literal of v, 2v+1 = negative.
    auto node_of = [](TwoSatLiteral l) { return 2 * l.variable + (l.positive ? 0 : 1); };
    std::vector<std::vector<int>> adj(nodes);
    for (const auto& [a, b] : f.clauses) {
        adj[node_of(a) ^ 1].push_back(node_of(b));  // ¬a → b
        adj[node_of(b) ^ 1].push_back(node_of(a));  // ¬b → a
    }

    // Iterative Tarjan.
    std::vector<int> index(nodes, -1), lowlink(nodes, 0), component(nodes, -1);
    std::vector<char> on_stack(nodes, 0);
    std::vector<int> stack;
    int next_index = 0, next_component = 0;
    struct Frame {
        int node;
        std::size_t child;
    };
    std::vector<Frame> frames;
    for (int start = 0; start < nodes; ++start) {
        if (index[start] != -1) continue;
        frames.push_back({start, 0});
        while (!frames.empty()) {
            Frame& fr = frames.back();
            int u = fr.node;
            if (fr.child == 0) {
                index[u] = lowlink[u] = next_index++;
                stack.push_back(u);
                on_stack[u] = 1;
            }
            bool descended = false;
            while (fr.child < adj[u].size()) {
                int w = adj[u][fr.child++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w] && index[w] < lowlink[u]) lowlink[u] = index[w];
            }
            if (descended) continue;
            if (lowlink[u] == index[u]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component[w] = next_component;
                    if (w == u) break;
                }
                ++next_component;
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().node;
                if (lowlink[u] < lowlink[parent]) lowlink[parent] = lowlink[u];
            }
        }
    }

    std::vector<bool> assignment(f.variable_count);
    for (int v = 0; v < f.variable_count; ++v) {
        if (component[2 * v] == component[2 * v + 1]) return std::nullopt;
        assignment[v] = component[2 * v] < component[2 * v + 1];
    }
    return assignment;
}

}  // namespace matchvote

#endif  // MATCHVOTE_TWO_SAT_HPP
