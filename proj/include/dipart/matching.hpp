#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "dipart/detect.hpp"
#include "dipart/digraph.hpp"

namespace dipart {

/// Bipartite view between two disjoint vertex sets; vertices keep their
/// carrier labels. Edges are unordered pairs crossing the bipartition.
class BipartiteView {
public:
    BipartiteView() = default;

    BipartiteView(VertexSet xs, VertexSet ys) : xs_(xs), ys_(ys), adj_(kMaxVertices, 0) {
        if (xs.intersects(ys)) throw std::invalid_argument("bipartite view: sides intersect");
    }

    /// Underlying adjacency of D restricted to pairs between X and Y.
    static BipartiteView from_digraph(const Digraph& d, VertexSet xs, VertexSet ys) {
        BipartiteView b(xs, ys);
        for (int x : xs) b.adj_[x] = (d.adj(x) & ys).bits();
        for (int y : ys) b.adj_[y] = (d.adj(y) & xs).bits();
        return b;
    }

    void add_edge(int x, int y) {
        if (!xs_.contains(x) || !ys_.contains(y)) throw std::invalid_argument("bipartite view: edge off sides");
        adj_[x] |= std::uint64_t(1) << y;
        adj_[y] |= std::uint64_t(1) << x;
    }

    VertexSet xs() const { return xs_; }
    VertexSet ys() const { return ys_; }
    VertexSet adj(int v) const { return VertexSet(adj_[v]); }
    bool has_edge(int x, int y) const { return (adj_[x] >> y) & 1; }

    VertexSet neighbors(VertexSet s) const {
        VertexSet out;
        for (int v : s) out |= adj(v);
        return out - s;
    }

    /// Subview on xs' and ys' keeping only edges inside them.
    BipartiteView restricted(VertexSet xs2, VertexSet ys2) const {
        BipartiteView b(xs2 & xs_, ys2 & ys_);
        for (int x : b.xs_) b.adj_[x] = (adj(x) & b.ys_).bits();
        for (int y : b.ys_) b.adj_[y] = (adj(y) & b.xs_).bits();
        return b;
    }

private:
    VertexSet xs_, ys_;
    std::vector<std::uint64_t> adj_;
};

/// Matching as a set of unordered pairs stored {x, y} by view sides and
/// sorted by x; pairwise vertex-disjoint.
struct Matching {
    std::vector<std::array<int, 2>> edges;

    VertexSet covered() const {
        VertexSet s;
        for (auto [a, b] : edges) {
            s.add(a);
            s.add(b);
        }
        return s;
    }

    bool covers(VertexSet xs) const { return xs.subset_of(covered()); }

    int size() const { return static_cast<int>(edges.size()); }

    /// Partner of v, or -1.
    int partner(int v) const {
        for (auto [a, b] : edges) {
            if (a == v) return b;
            if (b == v) return a;
        }
        return -1;
    }

    void canonicalize() {
        for (auto& e : edges)
            if (e[0] > e[1]) std::swap(e[0], e[1]);
        std::sort(edges.begin(), edges.end());
    }
};

inline bool matching_valid(const BipartiteView& g, const Matching& m) {
    VertexSet seen;
    for (auto [a, b] : m.edges) {
        int x = g.xs().contains(a) ? a : b;
        int y = g.xs().contains(a) ? b : a;
        if (!g.xs().contains(x) || !g.ys().contains(y) || !g.has_edge(x, y)) return false;
        if (seen.contains(x) || seen.contains(y)) return false;
        seen.add(x);
        seen.add(y);
    }
    return true;
}

namespace detail {

/// State for the deterministic augmenting search. match[v] = partner or -1.
struct MatchState {
    std::array<int, kMaxVertices> match;
    MatchState() { match.fill(-1); }
};

/// Shortest augmenting path from a free vertex of `side_from`, lexicographically
/// least among those of minimum length. Path alternates unmatched/matched
/// starting and ending on free vertices. Returns the vertex sequence or empty.
inline std::vector<int> lex_shortest_augmenting(const BipartiteView& g, const MatchState& st,
                                                VertexSet side_from, VertexSet side_to,
                                                VertexSet allowed_from, VertexSet allowed_to) {
    // BFS levels: even levels on side_from, odd on side_to.
    std::array<int, kMaxVertices> level;
    level.fill(-1);
    VertexSet frontier;
    for (int v : (side_from & allowed_from))
        if (st.match[v] == -1) {
            level[v] = 0;
            frontier.add(v);
        }
    if (frontier.empty()) return {};
    int depth = 0;
    int found_depth = -1;
    VertexSet free_targets;
    while (!frontier.empty() && found_depth < 0) {
        VertexSet next;
        if (depth % 2 == 0) {
            for (int u : frontier)
                for (int y : (g.adj(u) & allowed_to))
                    if (level[y] < 0) {
                        level[y] = depth + 1;
                        next.add(y);
                        if (st.match[y] == -1) {
                            found_depth = depth + 1;
                            free_targets.add(y);
                        }
                    }
            if (found_depth > 0) {
                // keep only free vertices at the found depth
                VertexSet keep;
                for (int y : next)
                    if (st.match[y] == -1) keep.add(y);
                next = keep;
            }
        } else {
            for (int y : frontier) {
                int x = st.match[y];
                if (x >= 0 && level[x] < 0 && allowed_from.contains(x)) {
                    level[x] = depth + 1;
                    next.add(x);
                }
            }
        }
        frontier = next;
        ++depth;
    }
    if (found_depth < 0) return {};
    // Mark vertices lying on some shortest path by a backward sweep.
    std::array<bool, kMaxVertices> good{};
    for (int y : free_targets) good[y] = true;
    for (int lv = found_depth - 1; lv >= 0; --lv) {
        for (int v = 0; v < kMaxVertices; ++v) {
            if (level[v] != lv) continue;
            bool ok = false;
            if (lv % 2 == 0) {
                for (int y : (g.adj(v) & allowed_to))
                    if (level[y] == lv + 1 && good[y]) { ok = true; break; }
            } else {
                int x = st.match[v];
                ok = x >= 0 && level[x] == lv + 1 && good[x];
            }
            good[v] = ok;
        }
    }
    // Greedy lexicographically least walk through good vertices.
    int start = -1;
    for (int v : (side_from & allowed_from))
        if (st.match[v] == -1 && level[v] == 0 && good[v]) { start = v; break; }
    if (start < 0) return {};
    std::vector<int> path{start};
    int cur = start;
    for (int lv = 0; lv < found_depth; ++lv) {
        int chosen = -1;
        if (lv % 2 == 0) {
            for (int y : (g.adj(cur) & allowed_to))
                if (level[y] == lv + 1 && good[y]) { chosen = y; break; }
        } else {
            chosen = st.match[cur];
        }
        path.push_back(chosen);
        cur = chosen;
    }
    return path;
}

inline void apply_augment(MatchState& st, const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
        st.match[path[i]] = path[i + 1];
        st.match[path[i + 1]] = path[i];
    }
}

inline Matching to_matching(const BipartiteView& g, const MatchState& st) {
    Matching m;
    for (int x : g.xs())
        if (st.match[x] >= 0) m.edges.push_back({x, st.match[x]});
    m.canonicalize();
    return m;
}

}  // namespace detail

/// Maximum-cardinality matching, deterministic: augmenting paths are taken
/// shortest-first from the lowest free X vertex, lexicographically least among
/// equals. Certified maximum by one final failed augmenting search.
inline Matching maximum_matching(const BipartiteView& g) {
    detail::MatchState st;
    for (;;) {
        auto path = detail::lex_shortest_augmenting(g, st, g.xs(), g.ys(), g.xs(), g.ys());
        if (path.empty()) break;
        detail::apply_augment(st, path);
    }
    if (!detail::lex_shortest_augmenting(g, st, g.xs(), g.ys(), g.xs(), g.ys()).empty())
        throw invariant_error("maximum_matching: certification found an augmenting path");
    return detail::to_matching(g, st);
}

/// Subset W of X with |N(W)| < |W|, derived from the final failed augmenting
/// search; absent exactly when some matching covers X.
inline std::optional<VertexSet> hall_violator(const BipartiteView& g) {
    Matching m = maximum_matching(g);
    VertexSet covered = m.covered();
    if (g.xs().subset_of(covered)) return std::nullopt;
    detail::MatchState st;
    for (auto [x, y] : m.edges) {
        st.match[x] = y;
        st.match[y] = x;
    }
    int x0 = (g.xs() - covered).lowest();
    // Alternate: X -> Y over any edge, Y -> X over matched edge.
    VertexSet reach_x = VertexSet::single(x0), reach_y;
    for (;;) {
        VertexSet ny;
        for (int x : reach_x) ny |= g.adj(x);
        ny -= reach_y;
        if (ny.empty()) break;
        reach_y |= ny;
        VertexSet nx;
        for (int y : ny)
            if (st.match[y] >= 0) nx.add(st.match[y]);
        nx -= reach_x;
        reach_x |= nx;
        if (nx.empty()) break;
    }
    if (reach_y.count() != reach_x.count() - 1)
        throw invariant_error("hall_violator: alternating reachability is inconsistent");
    return reach_x;
}

struct DeficiencyCore {
    VertexSet core;      // X' (the minimal violator itself in the degenerate case)
    Matching matching;   // covers N(X') and X'; empty in the degenerate case
    bool size_zero = false;  // N(minimal violator) was empty
};

/// Constructive content of the deficiency lemma: when no matching covers X,
/// a minimal violator W (by size, then mask) yields X' of size |N(W)| whose
/// neighborhood is matched completely. Absent when X is coverable.
inline std::optional<DeficiencyCore> deficiency_core(const BipartiteView& g) {
    if (!hall_violator(g)) return std::nullopt;
    std::optional<VertexSet> minimal;
    for (int size = 1; size <= g.xs().count() && !minimal; ++size) {
        detail::for_each_subset_by_size(g.xs(), size, [&](VertexSet w) {
            if (g.neighbors(w).count() < w.count()) {
                minimal = w;
                return false;
            }
            return true;
        });
    }
    if (!minimal) throw invariant_error("deficiency_core: violator vanished");
    VertexSet w = *minimal;
    VertexSet nw = g.neighbors(w);
    DeficiencyCore out;
    if (nw.empty()) {
        out.core = w;
        out.size_zero = true;
        return out;
    }
    VertexSet xp;
    int take = nw.count();
    for (int v : w) {
        if (take == 0) break;
        xp.add(v);
        --take;
    }
    out.core = xp;
    Matching m = maximum_matching(g.restricted(xp, nw));
    if (!m.covers(xp) || !m.covers(g.neighbors(xp)))
        throw invariant_error("deficiency_core: core matching fails to cover");
    out.matching = m;
    return out;
}

/// Matching between a stable set X (disjoint from the maximum stable set S)
/// and N(X) ∩ S covering X; guaranteed to exist, absence is a hard error.
inline Matching matching_against_stable(const Digraph& d, VertexSet s, VertexSet x) {
    if (!is_max_stable(d, s)) throw std::invalid_argument("matching_against_stable: S is not a maximum stable set");
    if (!d.is_stable(x)) throw std::invalid_argument("matching_against_stable: X is not stable");
    if (x.intersects(s)) throw std::invalid_argument("matching_against_stable: X meets S");
    VertexSet y = d.neighbors(x) & s;
    BipartiteView g = BipartiteView::from_digraph(d, x, y);
    Matching m = maximum_matching(g);
    if (!m.covers(x))
        throw invariant_error("matching_against_stable: no covering matching; maximality of S is violated");
    return m;
}

/// X-covering matching whose restriction to G[N(Yp) ∪ Yp] is maximum there,
/// computed by the augment-and-drop exchange.
inline Matching constrained_matching(const BipartiteView& g, VertexSet yp) {
    if (!yp.subset_of(g.ys())) throw std::invalid_argument("constrained_matching: Yp off the Y side");
    Matching m0 = maximum_matching(g);
    if (!m0.covers(g.xs())) throw std::invalid_argument("constrained_matching: no matching covers X");
    detail::MatchState st;
    for (auto [x, y] : m0.edges) {
        st.match[x] = y;
        st.match[y] = x;
    }
    VertexSet xp = g.neighbors(yp) & g.xs();
    for (;;) {
        // Augmenting path for M' = M ∩ E(H) inside H = G[xp ∪ yp], starting
        // from a Yp vertex free in M' (hence free in M) and ending at an X'
        // vertex free in M' (its M-partner lies outside Yp).
        detail::MatchState sub;
        VertexSet m_prime_covered;
        for (int x : xp) {
            int y = st.match[x];
            if (y >= 0 && yp.contains(y)) {
                sub.match[x] = y;
                sub.match[y] = x;
                m_prime_covered.add(x);
                m_prime_covered.add(y);
            }
        }
        auto path = detail::lex_shortest_augmenting(g, sub, g.ys(), g.xs(), yp, xp);
        if (path.empty()) break;
        int v = path.back();  // X' endpoint, free in M' but matched in M
        int w = st.match[v];
        if (w < 0 || yp.contains(w))
            throw invariant_error("constrained_matching: exchange endpoint has no outside partner");
        st.match[v] = -1;
        st.match[w] = -1;
        detail::apply_augment(st, path);
    }
    Matching out;
    for (int x : g.xs())
        if (st.match[x] >= 0) out.edges.push_back({x, st.match[x]});
    out.canonicalize();
    if (!out.covers(g.xs())) throw invariant_error("constrained_matching: X coverage lost in exchange");
    return out;
}

}  // namespace dipart
