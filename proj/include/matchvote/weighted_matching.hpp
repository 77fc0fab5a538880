#ifndef MATCHVOTE_WEIGHTED_MATCHING_HPP
#define MATCHVOTE_WEIGHTED_MATCHING_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "matchvote/graph.hpp"
#include "matchvote/rational.hpp"

namespace matchvote {

// One weight per EdgeId of the owning graph.
using EdgeWeights = std::vector<Rational>;

namespace detail {

// Maximum-weight matching on general graphs via the primal-dual blossom
// method (Galil's O(n^3) formulation). Duals are kept at twice their LP
// value, so edge slack is dual[i] + dual[j] - 2*w(ij); with exact rational
// weights every dual update and tie is exact and no perturbation is needed.
//
// Vertices double as trivial blossoms; ids n..2n-1 name nontrivial blossoms.
// Endpoint p in [0, 2m) denotes edge p/2 oriented toward vertex ends[p].
class WeightedMatcher {
public:
    WeightedMatcher(const Graph& g, const EdgeWeights& weights) : n_(g.vertex_count()) {
        if (static_cast<int>(weights.size()) != g.edge_count())
            throw input_error("max_weight_matching: one weight per edge required");
        m_ = g.edge_count();
        ends_.resize(2 * m_);
        weight_.resize(m_);
        neighbend_.assign(n_, {});
        for (int k = 0; k < m_; ++k) {
            auto [i, j] = g.edge(k);
            ends_[2 * k] = i;
            ends_[2 * k + 1] = j;
            weight_[k] = weights[k];
            neighbend_[i].push_back(2 * k + 1);
            neighbend_[j].push_back(2 * k);
        }
    }

    // Returns matched edge ids (vertex v is matched through mate_[v]).
    std::vector<EdgeId> solve() {
        if (n_ == 0 || m_ == 0) return {};

        Rational maxweight = 0;
        for (const Rational& w : weight_)
            if (w > maxweight) maxweight = w;

        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v) blossombase_[v] = v;
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, std::nullopt);
        unusedblossoms_.clear();
        for (int b = n_; b < 2 * n_; ++b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * n_, Rational(0));
        for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
        allowedge_.assign(m_, false);

        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) blossombestedges_[b] = std::nullopt;
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();

            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = ends_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;  // internal edge
                        Rational kslack;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = true;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) add_blossom(base, k);
                                else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[inblossom_[w]] == 2);
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                                bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                                bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // Choose the smallest dual adjustment that creates new tight
                // structure: delta1 frees the duals entirely (optimum),
                // delta2/delta3 make an edge tight, delta4 empties a
                // T-blossom's dual so it can expand.
                int deltatype = 1;
                Rational delta = dualvar_[0];
                for (int v = 1; v < n_; ++v)
                    if (dualvar_[v] < delta) delta = dualvar_[v];
                int deltaedge = -1;
                int deltablossom = -1;

                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        Rational d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        Rational d = slack(bestedge_[b]) / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dualvar_[b] += delta;
                        else if (label_[b] == 2) dualvar_[b] -= delta;
                    }
                }

                if (deltatype == 1) break;  // no augmenting path can exist
                if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = ends_[2 * deltaedge];
                    if (label_[inblossom_[i]] == 0) i = ends_[2 * deltaedge + 1];
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    int i = ends_[2 * deltaedge];
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 4) {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (int b = n_; b < 2 * n_; ++b) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0)
                    expand_blossom(b, true);
            }
        }

        std::vector<EdgeId> matched;
        for (int k = 0; k < m_; ++k)
            if (mate_[ends_[2 * k]] == 2 * k + 1) matched.push_back(k);
        return matched;
    }

private:
    Rational slack(int k) const {
        return dualvar_[ends_[2 * k]] + dualvar_[ends_[2 * k + 1]] - 2 * weight_[k];
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) blossom_leaves(t, out);
    }

    // Labels the top-level blossom of w; an S label (t=1) queues its leaves
    // for scanning, a T label (t=2) immediately S-labels the mate of its base.
    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            blossom_leaves(b, queue_);
        } else if (t == 2) {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(ends_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    // Traces back from v and w through alternating trees; returns the base
    // of the first common blossom, or -1 when the trees have distinct roots
    // (an augmenting path).
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;  // breadcrumb
            assert(labelend_[b] == mate_[blossombase_[b]]);
            if (labelend_[b] == -1) {
                v = -1;  // reached a single vertex
            } else {
                v = ends_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                assert(labelend_[b] >= 0);
                v = ends_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    // Contracts the cycle through edge k and the common base into a fresh
    // S-blossom and takes over the least-slack bookkeeping of its children.
    void add_blossom(int base, int k) {
        int v = ends_[2 * k];
        int w = ends_[2 * k + 1];
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int>& path = blossomchilds_[b];
        std::vector<int>& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = ends_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(labelend_[bw] >= 0);
            w = ends_[labelend_[bw]];
            bw = inblossom_[w];
        }
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int u : leaves) {
            if (label_[inblossom_[u]] == 2) queue_.push_back(u);
            inblossom_[u] = b;
        }
        // Merge children's least-slack edge lists toward other S-blossoms.
        std::vector<int> bestedgeto(2 * n_, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!blossombestedges_[child]) {
                std::vector<int> childleaves;
                blossom_leaves(child, childleaves);
                for (int u : childleaves) {
                    nblists.emplace_back();
                    for (int p : neighbend_[u]) nblists.back().push_back(p / 2);
                }
            } else {
                nblists.push_back(*blossombestedges_[child]);
            }
            for (const auto& nblist : nblists) {
                for (int e : nblist) {
                    int i = ends_[2 * e];
                    int j = ends_[2 * e + 1];
                    if (inblossom_[j] == b) std::swap(i, j);
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = e;
                }
            }
            blossombestedges_[child] = std::nullopt;
            bestedge_[child] = -1;
        }
        blossombestedges_[b] = std::vector<int>();
        for (int e : bestedgeto)
            if (e != -1) blossombestedges_[b]->push_back(e);
        bestedge_[b] = -1;
        for (int e : *blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
    }

    // Python-style wrap-around indexing over a blossom's child list.
    static int wrap(const std::vector<int>& v, long long idx) {
        long long size = static_cast<long long>(v.size());
        return v[static_cast<std::size_t>(((idx % size) + size) % size)];
    }

    // Dissolves blossom b, either at the end of a stage (dual hit zero and
    // stays zero) or mid-stage for a T-blossom whose dual emptied; the
    // mid-stage case relabels the exposed sub-blossoms.
    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int u : leaves) inblossom_[u] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            assert(labelend_[b] >= 0);
            int entrychild = inblossom_[ends_[labelend_[b] ^ 1]];
            const std::vector<int>& childs = blossomchilds_[b];
            const std::vector<int>& endps = blossomendps_[b];
            long long size = static_cast<long long>(childs.size());
            long long j = 0;
            while (childs[static_cast<std::size_t>(j)] != entrychild) ++j;
            long long jstep;
            int endptrick;
            if (j & 1) {
                j -= size;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[ends_[p ^ 1]] = 0;
                label_[ends_[wrap(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(ends_[p ^ 1], 2, p);
                allowedge_[wrap(endps, j - endptrick) / 2] = true;
                j += jstep;
                p = wrap(endps, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = wrap(childs, j);
            label_[ends_[labelend_[b] ^ 1]] = label_[bv] = 2;
            labelend_[ends_[labelend_[b] ^ 1]] = labelend_[bv] = labelend_[b];
            bestedge_[bv] = -1;
            j += jstep;
            while (wrap(childs, j) != entrychild) {
                bv = wrap(childs, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int reached = -1;
                for (int u : leaves) {
                    if (label_[u] != 0) {
                        reached = u;
                        break;
                    }
                }
                if (reached >= 0) {
                    assert(label_[reached] == 2);
                    assert(inblossom_[reached] == bv);
                    assert(mate_[blossombase_[bv]] >= 0);
                    label_[reached] = 0;
                    label_[ends_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(reached, 2, labelend_[reached]);
                }
                j += jstep;
            }
        }
        label_[b] = -1;
        labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b] = std::nullopt;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    // Swaps matched/unmatched edges inside blossom b so that vertex v
    // becomes its exposed base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        std::vector<int>& childs = blossomchilds_[b];
        std::vector<int>& endps = blossomendps_[b];
        long long size = static_cast<long long>(childs.size());
        long long i = 0;
        while (childs[static_cast<std::size_t>(i)] != t) ++i;
        long long j = i;
        long long jstep;
        int endptrick;
        if (i & 1) {
            j -= size;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = wrap(childs, j);
            int p = wrap(endps, j - endptrick) ^ endptrick;
            if (t >= n_) augment_blossom(t, ends_[p]);
            j += jstep;
            t = wrap(childs, j);
            if (t >= n_) augment_blossom(t, ends_[p ^ 1]);
            mate_[ends_[p]] = p ^ 1;
            mate_[ends_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + static_cast<std::size_t>(i), childs.end());
        std::rotate(endps.begin(), endps.begin() + static_cast<std::size_t>(i), endps.end());
        blossombase_[b] = blossombase_[childs[0]];
        assert(blossombase_[b] == v);
    }

    // Augments along the path through tight edge k, flipping matched edges
    // from both endpoints back to the tree roots.
    void augment_matching(int k) {
        for (int side = 0; side < 2; ++side) {
            int s = ends_[2 * k + side];
            int p = 2 * k + (side ^ 1);
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;  // tree root reached
                int t = ends_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = ends_[labelend_[bt]];
                int j = ends_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    int m_;
    std::vector<int> ends_;
    std::vector<Rational> weight_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::optional<std::vector<int>>> blossombestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<Rational> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

}  // namespace detail

// Maximum-weight matching over a general (possibly non-bipartite) graph.
// Negative-weight edges are never forced, so the optimum is always >= 0 and
// attained by the empty matching in the worst case. Deterministic: ties are
// broken by the algorithm's fixed scanning order over edge ids.
inline Matching max_weight_matching(const Graph& graph, const EdgeWeights& weights) {
    detail::WeightedMatcher matcher(graph, weights);
    return Matching(matcher.solve());
}

}  // namespace matchvote

#endif  // MATCHVOTE_WEIGHTED_MATCHING_HPP
