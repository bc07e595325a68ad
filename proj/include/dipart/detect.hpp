#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dipart/digraph.hpp"

namespace dipart {

// ---------------------------------------------------------------------------
// Maximum stable sets (= independent sets of the underlying graph).
// ---------------------------------------------------------------------------

namespace detail {

inline int mis_upper(const Graph& g, VertexSet cand) {
    return cand.count();
}

inline void mis_size(const Graph& g, VertexSet cand, int cur, int& best) {
    if (cur + cand.count() <= best) return;
    if (cand.empty()) {
        best = std::max(best, cur);
        return;
    }
    // Pivot on the candidate with most candidate-neighbors, ties by index.
    int pivot = -1, deg = -1;
    for (int v : cand) {
        int dv = (g.adj(v) & cand).count();
        if (dv > deg) { deg = dv; pivot = v; }
    }
    mis_size(g, cand - g.adj(pivot) - VertexSet::single(pivot), cur + 1, best);
    mis_size(g, cand - VertexSet::single(pivot), cur, best);
}

inline void enumerate_stable(const Graph& g, VertexSet cand, VertexSet cur, int target,
                             std::vector<VertexSet>& out) {
    if (cur.count() == target) {
        out.push_back(cur);
        return;
    }
    if (cur.count() + cand.count() < target) return;
    int v = cand.lowest();
    enumerate_stable(g, cand - VertexSet::single(v) - g.adj(v), cur | VertexSet::single(v), target, out);
    enumerate_stable(g, cand - VertexSet::single(v), cur, target, out);
}

}  // namespace detail

inline int stability_number(const Graph& g) {
    int best = 0;
    detail::mis_size(g, g.vertices(), 0, best);
    return best;
}

inline int stability_number(const Digraph& d) { return stability_number(underlying_graph(d)); }

struct StableSets {
    int alpha = 0;
    std::vector<VertexSet> witnesses;  // all maximum stable sets, ascending by mask value
};

/// Exact stability number together with every maximum stable set.
inline StableSets alpha_and_max_stable_sets(const Digraph& d) {
    Graph g = underlying_graph(d);
    StableSets r;
    r.alpha = stability_number(g);
    detail::enumerate_stable(g, g.vertices(), VertexSet(), r.alpha, r.witnesses);
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
}

inline bool is_max_stable(const Digraph& d, VertexSet s) {
    return d.is_stable(s) && s.count() == stability_number(d);
}

// ---------------------------------------------------------------------------
// Chordless cycle enumeration on the underlying graph.
// ---------------------------------------------------------------------------

/// Visits every chordless cycle of g once, as a vertex sequence in cyclic
/// order starting at its least vertex. Return false from the visitor to stop.
inline bool for_each_chordless_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> path;
    VertexSet on_path;
    std::function<bool(int)> dfs = [&](int s) -> bool {
        int tail = path.back();
        // close the cycle
        for (int u : (g.adj(tail) & g.adj(s))) {
            if (u <= s || on_path.contains(u)) continue;
            if (u <= path[1]) continue;  // reflection canonical: closing vertex > second
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(u, path[i])) { chord = true; break; }
            if (chord) continue;
            path.push_back(u);
            bool go = visit(path);
            path.pop_back();
            if (!go) return false;
        }
        // extend
        for (int u : g.adj(tail)) {
            if (u <= s || on_path.contains(u) || g.has_edge(u, s)) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(u, path[i])) { chord = true; break; }
            if (chord) continue;
            path.push_back(u);
            on_path.add(u);
            bool go = dfs(s);
            on_path.remove(u);
            path.pop_back();
            if (!go) return false;
        }
        return true;
    };
    for (int s = 0; s < g.n(); ++s) {
        for (int v1 : g.adj(s)) {
            if (v1 <= s) continue;
            path = {s, v1};
            on_path = VertexSet::of({s, v1});
            if (!dfs(s)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Forbidden structures.
// ---------------------------------------------------------------------------

enum class WitnessKind {
    AntiDirectedOddCycle,
    BlockingOddCycle,
    TransitiveTriangle,
    NonOrientedOddCycle,
    OddHole,
    OddAntihole,
};

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::AntiDirectedOddCycle: return "anti_directed_odd_cycle";
        case WitnessKind::BlockingOddCycle: return "blocking_odd_cycle";
        case WitnessKind::TransitiveTriangle: return "transitive_triangle";
        case WitnessKind::NonOrientedOddCycle: return "non_oriented_odd_cycle";
        case WitnessKind::OddHole: return "odd_hole";
        case WitnessKind::OddAntihole: return "odd_antihole";
    }
    return "?";
}

/// A forbidden induced structure, vertices traced cyclically along U(C).
struct ForbiddenWitness {
    WitnessKind kind;
    std::vector<int> vertices;
};

namespace detail {

/// The cycle sequence must be an induced cycle of U(D); checks the blocking
/// pattern in the given rotation: vertices[0] a source of C, vertices[1] a sink.
inline bool blocking_in_rotation(const Digraph& d, const std::vector<int>& cyc) {
    VertexSet cs = VertexSet::from_list(cyc);
    int x1 = cyc[0], x2 = cyc[1];
    return (d.in(x1) & cs).empty() && (d.out(x2) & cs).empty();
}

inline bool anti_directed_in_rotation(const Digraph& d, const std::vector<int>& cyc) {
    int len = static_cast<int>(cyc.size());
    if (len < 5 || len % 2 == 0) return false;
    VertexSet cs = VertexSet::from_list(cyc);
    auto source_or_sink = [&](int v) {
        return (d.in(v) & cs).empty() || (d.out(v) & cs).empty();
    };
    // positions 1..4 and every even position up to 2k (1-based labeling)
    for (int pos = 1; pos <= len; ++pos) {
        bool constrained = pos <= 4 || (pos % 2 == 0 && pos <= len - 1);
        if (constrained && !source_or_sink(cyc[pos - 1])) return false;
    }
    return true;
}

/// All rotations and reflections of a cyclic sequence.
inline std::vector<std::vector<int>> dihedral_orbits(const std::vector<int>& cyc) {
    std::vector<std::vector<int>> out;
    int len = static_cast<int>(cyc.size());
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> base = cyc;
        if (dir == 1) std::reverse(base.begin(), base.end());
        for (int r = 0; r < len; ++r) {
            std::vector<int> rot(len);
            for (int i = 0; i < len; ++i) rot[i] = base[(i + r) % len];
            out.push_back(std::move(rot));
        }
    }
    return out;
}

struct WitnessRank {
    int length;
    std::uint64_t mask;
    std::vector<int> rotation;
    bool operator<(const WitnessRank& o) const {
        if (length != o.length) return length < o.length;
        if (mask != o.mask) return mask < o.mask;
        return rotation < o.rotation;
    }
};

}  // namespace detail

/// Re-check a claimed witness against its defining pattern.
inline bool validate_witness(const Digraph& d, const ForbiddenWitness& w) {
    const auto& cyc = w.vertices;
    int len = static_cast<int>(cyc.size());
    if (len < 3) return false;
    VertexSet cs = VertexSet::from_list(cyc);
    if (cs.count() != len || !cs.subset_of(d.vertices())) return false;
    Graph g = underlying_graph(d);
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    switch (w.kind) {
        case WitnessKind::TransitiveTriangle:
            return len == 3 && detail::blocking_in_rotation(d, cyc);
        case WitnessKind::BlockingOddCycle:
            return len % 2 == 1 && detail::blocking_in_rotation(d, cyc);
        case WitnessKind::AntiDirectedOddCycle:
            return detail::anti_directed_in_rotation(d, cyc);
        case WitnessKind::NonOrientedOddCycle: {
            if (len % 2 == 0 || len < 5) return false;
            bool fwd = true, bwd = true;
            for (int i = 0; i < len; ++i) {
                fwd = fwd && d.has_arc(cyc[i], cyc[(i + 1) % len]);
                bwd = bwd && d.has_arc(cyc[(i + 1) % len], cyc[i]);
            }
            int arcs = 0;
            for (int i = 0; i < len; ++i)
                for (int j = 0; j < len; ++j)
                    if (i != j && d.has_arc(cyc[i], cyc[j])) ++arcs;
            bool is_directed_cycle = (arcs == len) && (fwd || bwd);
            return !is_directed_cycle;
        }
        case WitnessKind::OddHole:
            return len % 2 == 1 && len >= 5;
        case WitnessKind::OddAntihole:
            return false;  // validated against the complement by the caller
    }
    return false;
}

/// Least induced blocking odd cycle (transitive triangle when length 3).
inline std::optional<ForbiddenWitness> find_blocking_odd_cycle(const Digraph& d) {
    Graph g = underlying_graph(d);
    std::optional<detail::WitnessRank> best;
    for_each_chordless_cycle(g, [&](const std::vector<int>& cyc) {
        int len = static_cast<int>(cyc.size());
        if (len % 2 == 0) return true;
        if (best && len > best->length) return true;
        for (const auto& rot : detail::dihedral_orbits(cyc)) {
            if (!detail::blocking_in_rotation(d, rot)) continue;
            detail::WitnessRank r{len, VertexSet::from_list(rot).bits(), rot};
            if (!best || r < *best) best = r;
        }
        return true;
    });
    if (!best) return std::nullopt;
    WitnessKind kind = best->length == 3 ? WitnessKind::TransitiveTriangle : WitnessKind::BlockingOddCycle;
    return ForbiddenWitness{kind, best->rotation};
}

inline bool in_class_D(const Digraph& d) { return !find_blocking_odd_cycle(d).has_value(); }

/// Least induced anti-directed odd cycle (length >= 5).
inline std::optional<ForbiddenWitness> find_anti_directed_odd_cycle(const Digraph& d) {
    Graph g = underlying_graph(d);
    std::optional<detail::WitnessRank> best;
    for_each_chordless_cycle(g, [&](const std::vector<int>& cyc) {
        int len = static_cast<int>(cyc.size());
        if (len % 2 == 0 || len < 5) return true;
        if (best && len > best->length) return true;
        for (const auto& rot : detail::dihedral_orbits(cyc)) {
            if (!detail::anti_directed_in_rotation(d, rot)) continue;
            detail::WitnessRank r{len, VertexSet::from_list(rot).bits(), rot};
            if (!best || r < *best) best = r;
        }
        return true;
    });
    if (!best) return std::nullopt;
    return ForbiddenWitness{WitnessKind::AntiDirectedOddCycle, best->rotation};
}

inline bool in_class_B(const Digraph& d) { return !find_anti_directed_odd_cycle(d).has_value(); }

/// Least induced odd cycle of U(D), length >= 5, that is not a directed cycle.
inline std::optional<ForbiddenWitness> find_non_oriented_odd_cycle(const Digraph& d) {
    Graph g = underlying_graph(d);
    std::optional<detail::WitnessRank> best;
    for_each_chordless_cycle(g, [&](const std::vector<int>& cyc) {
        int len = static_cast<int>(cyc.size());
        if (len % 2 == 0 || len < 5) return true;
        if (best && len > best->length) return true;
        ForbiddenWitness w{WitnessKind::NonOrientedOddCycle, cyc};
        if (validate_witness(d, w)) {
            detail::WitnessRank r{len, VertexSet::from_list(cyc).bits(), cyc};
            if (!best || r < *best) best = r;
        }
        return true;
    });
    if (!best) return std::nullopt;
    return ForbiddenWitness{WitnessKind::NonOrientedOddCycle, best->rotation};
}

// ---------------------------------------------------------------------------
// Clique cuts.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_clique(const Graph& g, VertexSet b) {
    for (int v : b)
        if (!(b - VertexSet::single(v)).subset_of(g.adj(v))) return false;
    return true;
}

inline bool disconnects(const Graph& g, VertexSet b) {
    VertexSet rest = g.vertices() - b;
    if (rest.count() <= 1) return false;
    return !g.connected_within(rest);
}

template <typename F>
bool for_each_subset_by_size(VertexSet ground, int size, F&& f) {
    std::vector<int> elems = ground.to_list();
    int n = static_cast<int>(elems.size());
    if (size > n) return true;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    // Combinations in colex order over the sorted element list coincide with
    // ascending mask value for a fixed size.
    std::vector<VertexSet> all;
    for (;;) {
        VertexSet s;
        for (int i : idx) s.add(elems[i]);
        all.push_back(s);
        int j = size - 1;
        while (j >= 0 && idx[j] == n - size + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int k = j + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
    std::sort(all.begin(), all.end());
    for (VertexSet s : all)
        if (!f(s)) return false;
    return true;
}

}  // namespace detail

/// First clique of U(D) whose removal disconnects it, by (size, mask) order.
inline std::optional<VertexSet> find_clique_cut(const Digraph& d) {
    Graph g = underlying_graph(d);
    if (!g.connected()) throw std::invalid_argument("find_clique_cut: digraph is disconnected");
    std::optional<VertexSet> found;
    for (int size = 1; size <= g.n() - 2 && !found; ++size) {
        detail::for_each_subset_by_size(g.vertices(), size, [&](VertexSet b) {
            if (detail::is_clique(g, b) && detail::disconnects(g, b)) {
                found = b;
                return false;
            }
            return true;
        });
    }
    return found;
}

// ---------------------------------------------------------------------------
// Clique number, chromatic number, perfection.
// ---------------------------------------------------------------------------

inline int clique_number(const Graph& g) { return stability_number(g.complement()); }

namespace detail {

inline bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, std::size_t i, int k) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.adj(v))
            if (color[u] == c) { ok = false; break; }
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, order, color, i + 1, k)) return true;
        color[v] = -1;
        // vertex i gets only colors <= i as a symmetry break
        if (c >= static_cast<int>(i)) break;
    }
    return false;
}

}  // namespace detail

inline int chromatic_number(const Graph& g) {
    if (g.n() == 0) return 0;
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.adj(a).count(), db = g.adj(b).count();
        return da != db ? da > db : a < b;
    });
    for (int k = clique_number(g); k <= g.n(); ++k) {
        std::vector<int> color(g.n(), -1);
        if (detail::colorable(g, order, color, 0, k)) return k;
    }
    return g.n();
}

/// Odd hole: induced odd cycle of length >= 5.
inline std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
    std::optional<std::vector<int>> found;
    for_each_chordless_cycle(g, [&](const std::vector<int>& cyc) {
        if (cyc.size() >= 5 && cyc.size() % 2 == 1) {
            found = cyc;
            return false;
        }
        return true;
    });
    return found;
}

/// Perfection via the forbidden-hole characterization; cheap enough for the
/// builder's dispatch at desk scale.
inline bool is_perfect_graph(const Graph& g) {
    if (find_odd_hole(g)) return false;
    if (find_odd_hole(g.complement())) return false;
    return true;
}

/// Definitional perfection check of U(D), cross-checked against the hole
/// characterization; disagreement is a hard failure of one of the two routes.
inline bool is_diperfect(const Digraph& d) {
    if (d.n() > 24) throw std::invalid_argument("is_diperfect: size bound exceeded");
    Graph g = underlying_graph(d);
    bool definitional = true;
    std::uint64_t full = VertexSet::range(g.n()).bits();
    for (std::uint64_t m = 1; m <= full && definitional; ++m) {
        Graph h = g.induced(VertexSet(m & full));
        if (clique_number(h) != chromatic_number(h)) definitional = false;
        if ((m & full) == full) break;
    }
    bool by_holes = is_perfect_graph(g);
    if (definitional != by_holes)
        throw invariant_error("is_diperfect: definitional check disagrees with the odd-hole characterization");
    return definitional;
}

inline bool is_diperfect_fast(const Digraph& d) { return is_perfect_graph(underlying_graph(d)); }

}  // namespace dipart
