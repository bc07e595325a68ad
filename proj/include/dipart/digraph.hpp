#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dipart/core.hpp"

namespace dipart {

/// Simple undirected graph on 0..n-1, adjacency as bit masks.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, 0) { check_n(n); }

    int n() const { return n_; }
    VertexSet adj(int v) const { return VertexSet(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph: loop edge");
        adj_[u] |= std::uint64_t(1) << v;
        adj_[v] |= std::uint64_t(1) << u;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += VertexSet(adj_[v]).count();
        return twice / 2;
    }

    /// Neighbors of a set, excluding the set itself.
    VertexSet neighbors(VertexSet xs) const {
        VertexSet out;
        for (int v : xs) out |= adj(v);
        return out - xs;
    }

    Graph induced(VertexSet xs) const {
        std::vector<int> map = xs.to_list();
        Graph g(static_cast<int>(map.size()));
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                if (has_edge(map[i], map[j])) g.add_edge(i, j);
        return g;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    bool connected_within(VertexSet xs) const {
        if (xs.empty()) return true;
        VertexSet seen = VertexSet::single(xs.lowest());
        for (;;) {
            VertexSet frontier;
            for (int v : seen) frontier |= adj(v);
            frontier &= xs;
            frontier -= seen;
            if (frontier.empty()) break;
            seen |= frontier;
        }
        return seen == xs;
    }

    bool connected() const { return connected_within(vertices()); }

    std::vector<VertexSet> components_within(VertexSet xs) const {
        std::vector<VertexSet> comps;
        VertexSet left = xs;
        while (!left.empty()) {
            VertexSet comp = VertexSet::single(left.lowest());
            for (;;) {
                VertexSet frontier;
                for (int v : comp) frontier |= adj(v);
                frontier &= xs;
                frontier -= comp;
                if (frontier.empty()) break;
                comp |= frontier;
            }
            comps.push_back(comp);
            left -= comp;
        }
        return comps;
    }

    std::vector<VertexSet> components() const { return components_within(vertices()); }

    /// Two-coloring check on the induced subgraph.
    bool bipartite_within(VertexSet xs) const {
        VertexSet color[2];
        VertexSet left = xs;
        while (!left.empty()) {
            int s = left.lowest();
            color[0].add(s);
            VertexSet frontier = VertexSet::single(s);
            int side = 0;
            while (!frontier.empty()) {
                VertexSet next;
                for (int v : frontier) next |= adj(v);
                next &= xs;
                next -= (color[0] | color[1]);
                color[1 - side] |= next;
                frontier = next;
                side = 1 - side;
            }
            left -= (color[0] | color[1]);
        }
        for (int v : (xs & color[0]))
            if (adj(v).intersects(color[0] & xs)) return false;
        for (int v : (xs & color[1]))
            if (adj(v).intersects(color[1] & xs)) return false;
        return true;
    }

    bool bipartite() const { return bipartite_within(vertices()); }

private:
    static void check_n(int n) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph: vertex count out of range");
    }
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

using Arc = std::pair<int, int>;

/// Finite loop-free digraph, digons allowed. Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) { check_n(n); }

    Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
        for (auto [u, v] : arcs) add_arc_internal(u, v);
    }

    int n() const { return n_; }
    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
    VertexSet out(int v) const { return VertexSet(out_[v]); }
    VertexSet in(int v) const { return VertexSet(in_[v]); }
    VertexSet adj(int v) const { return VertexSet(out_[v] | in_[v]); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    int arc_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += VertexSet(out_[v]).count();
        return m;
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet(out_[u])) out.push_back({u, v});
        return out;
    }

    /// Out-neighborhood of a set: vertices outside X dominated by some member.
    VertexSet out_of(VertexSet xs) const {
        VertexSet s;
        for (int v : xs) s |= out(v);
        return s - xs;
    }

    /// In-neighborhood of a set: vertices outside X dominating some member.
    VertexSet in_of(VertexSet xs) const {
        VertexSet s;
        for (int v : xs) s |= in(v);
        return s - xs;
    }

    VertexSet neighbors(VertexSet xs) const { return out_of(xs) | in_of(xs); }

    /// No arc in either direction between any two members.
    bool is_stable(VertexSet xs) const {
        for (int v : xs)
            if (adj(v).intersects(xs)) return false;
        return true;
    }

    friend class Enumerator;  // reuses a scratch digraph in hot loops

private:
    static void check_n(int n) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("digraph: vertex count out of range");
    }
    void add_arc_internal(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("digraph: arc endpoint out of range");
        if (u == v) throw std::invalid_argument("digraph: loop arc");
        out_[u] |= std::uint64_t(1) << v;
        in_[v] |= std::uint64_t(1) << u;
    }

    int n_ = 0;
    std::vector<std::uint64_t> out_, in_;
};

/// Directed path as a vertex sequence; a single vertex is a path.
struct Path {
    std::vector<int> vertices;

    int start() const { return vertices.front(); }
    int finish() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }

    VertexSet vertex_set() const { return VertexSet::from_list(vertices); }

    bool valid_in(const Digraph& d) const {
        if (vertices.empty()) return false;
        VertexSet seen;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            int v = vertices[i];
            if (v < 0 || v >= d.n() || seen.contains(v)) return false;
            seen.add(v);
            if (i > 0 && !d.has_arc(vertices[i - 1], v)) return false;
        }
        return true;
    }
};

struct PathPartition {
    std::vector<Path> paths;

    VertexSet covered() const {
        VertexSet s;
        for (const auto& p : paths) s |= p.vertex_set();
        return s;
    }
};

struct InducedSubdigraph {
    Digraph d;
    std::vector<int> to_parent;             // new index -> old index
    std::vector<int> from_parent;           // old index -> new index, -1 outside

    int parent_of(int v) const { return to_parent[v]; }
};

/// D[X] with vertices relabeled to 0..|X|-1 in increasing original order.
inline InducedSubdigraph induced_subdigraph(const Digraph& d, VertexSet xs) {
    if (!xs.subset_of(d.vertices())) throw std::invalid_argument("induced_subdigraph: vertex out of range");
    InducedSubdigraph sub;
    sub.to_parent = xs.to_list();
    sub.from_parent.assign(d.n(), -1);
    for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) sub.from_parent[sub.to_parent[i]] = i;
    std::vector<Arc> arcs;
    for (int u : xs)
        for (int v : (d.out(u) & xs)) arcs.push_back({sub.from_parent[u], sub.from_parent[v]});
    sub.d = Digraph(static_cast<int>(sub.to_parent.size()), arcs);
    return sub;
}

inline Graph underlying_graph(const Digraph& d) {
    Graph g(d.n());
    for (int u = 0; u < d.n(); ++u)
        for (int v : d.out(u))
            if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

inline Digraph inverse(const Digraph& d) {
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs()) arcs.push_back({v, u});
    return Digraph(d.n(), arcs);
}

struct Neighborhoods {
    VertexSet in, out, all;
};

inline Neighborhoods neighborhoods(const Digraph& d, VertexSet xs) {
    if (!xs.subset_of(d.vertices())) throw std::invalid_argument("neighborhoods: vertex out of range");
    Neighborhoods nb;
    nb.in = d.in_of(xs);
    nb.out = d.out_of(xs);
    nb.all = nb.in | nb.out;
    return nb;
}

struct DominationRelation {
    bool arrow;    // every x in X dominates every y in Y
    bool no_back;  // no arc from Y to X
    bool maps_to;  // both
};

inline DominationRelation domination_relation(const Digraph& d, VertexSet xs, VertexSet ys) {
    if (xs.intersects(ys)) throw std::invalid_argument("domination_relation: sets intersect");
    DominationRelation r{true, true, false};
    for (int x : xs)
        if (!ys.subset_of(d.out(x))) { r.arrow = false; break; }
    for (int y : ys)
        if (d.out(y).intersects(xs)) { r.no_back = false; break; }
    r.maps_to = r.arrow && r.no_back;
    return r;
}

inline bool maps_to(const Digraph& d, VertexSet xs, VertexSet ys) {
    return domination_relation(d, xs, ys).maps_to;
}

/// Directed distance between vertex sets; nullopt when Y is unreachable.
inline std::optional<int> distance(const Digraph& d, VertexSet xs, VertexSet ys) {
    if (xs.empty() || ys.empty()) throw std::invalid_argument("distance: empty input set");
    if (xs.intersects(ys)) return 0;
    VertexSet seen = xs;
    VertexSet frontier = xs;
    int dist = 0;
    while (!frontier.empty()) {
        ++dist;
        VertexSet next;
        for (int v : frontier) next |= d.out(v);
        next -= seen;
        if (next.intersects(ys)) return dist;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

inline bool is_semicomplete(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u) {
        VertexSet others = d.vertices() - VertexSet::single(u);
        if (!others.subset_of(d.adj(u))) return false;
    }
    return true;
}

inline VertexSet sources(const Digraph& d) {
    VertexSet s;
    for (int v = 0; v < d.n(); ++v)
        if (d.in(v).empty()) s.add(v);
    return s;
}

inline VertexSet sinks(const Digraph& d) {
    VertexSet s;
    for (int v = 0; v < d.n(); ++v)
        if (d.out(v).empty()) s.add(v);
    return s;
}

/// Lift a partition found in an induced subdigraph back to parent labels.
inline PathPartition lift(const PathPartition& pp, const std::vector<int>& to_parent) {
    PathPartition out;
    out.paths.reserve(pp.paths.size());
    for (const auto& p : pp.paths) {
        Path q;
        q.vertices.reserve(p.vertices.size());
        for (int v : p.vertices) q.vertices.push_back(to_parent[v]);
        out.paths.push_back(std::move(q));
    }
    return out;
}

inline PathPartition reversed(const PathPartition& pp) {
    PathPartition out = pp;
    for (auto& p : out.paths) std::reverse(p.vertices.begin(), p.vertices.end());
    return out;
}

}  // namespace dipart
