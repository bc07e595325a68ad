#pragma once

#include <random>
#include <vector>

#include "dipart/dipart.hpp"

namespace testutil {

using namespace dipart;

// Fig. 2(b): transitive triangle, source 0, sink 1.
inline Digraph tt3() { return Digraph(3, {{0, 1}, {0, 2}, {2, 1}}); }

// Fig. 1(a): anti-directed odd cycle on five vertices.
inline Digraph adc5() { return Digraph(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {0, 4}}); }

// Fig. 1(b): anti-directed odd cycle on seven vertices.
inline Digraph adc7() { return Digraph(7, {{0, 1}, {2, 1}, {0, 6}, {5, 6}, {5, 4}, {4, 3}, {2, 3}}); }

// Fig. 2(a): blocking odd cycle on five vertices with the 3-4 digon.
inline Digraph bc5() { return Digraph(5, {{0, 1}, {2, 1}, {2, 3}, {0, 4}, {4, 3}, {3, 4}}); }

/// Extended cycle with the given class sizes; vertices numbered class by
/// class in cyclic order.
inline Digraph extended_cycle(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    std::vector<std::pair<int, int>> bounds;
    int at = 0;
    for (int s : sizes) {
        bounds.push_back({at, at + s});
        at += s;
    }
    std::vector<Arc> arcs;
    int k = static_cast<int>(sizes.size());
    for (int i = 0; i < k; ++i) {
        auto [lo1, hi1] = bounds[i];
        auto [lo2, hi2] = bounds[(i + 1) % k];
        for (int u = lo1; u < hi1; ++u)
            for (int v = lo2; v < hi2; ++v) arcs.push_back({u, v});
    }
    return Digraph(n, arcs);
}

// Fig. 3: odd extended cycle with class sizes (2, 1, 3, 2, 1).
inline Digraph fig3() { return extended_cycle({2, 1, 3, 2, 1}); }
inline VertexSet fig3_max_stable() { return VertexSet::of({0, 1, 3, 4, 5}); }  // X1 ∪ X3

/// Independent stability oracle: full subset scan.
inline int alpha_brute(const Digraph& d) {
    int best = 0;
    std::uint64_t full = d.vertices().bits();
    for (std::uint64_t m = 0;; ++m) {
        VertexSet s(m);
        if (d.is_stable(s)) best = std::max(best, s.count());
        if (m == full) break;
    }
    return best;
}

inline std::vector<VertexSet> max_stable_brute(const Digraph& d) {
    int a = alpha_brute(d);
    std::vector<VertexSet> out;
    std::uint64_t full = d.vertices().bits();
    for (std::uint64_t m = 0;; ++m) {
        VertexSet s(m);
        if (s.count() == a && d.is_stable(s)) out.push_back(s);
        if (m == full) break;
    }
    return out;
}

/// Independent maximum-matching oracle on a bipartite view: recursive
/// assignment over the X side.
inline int matching_brute(const BipartiteView& g) {
    std::vector<int> xs = g.xs().to_list();
    std::function<int(std::size_t, VertexSet)> go = [&](std::size_t i, VertexSet used) -> int {
        if (i == xs.size()) return 0;
        int best = go(i + 1, used);
        for (int y : (g.adj(xs[i]) - used)) best = std::max(best, 1 + go(i + 1, used | VertexSet::single(y)));
        return best;
    };
    return go(0, VertexSet());
}

/// Per-size verdict tables for "D satisfies the property", indexed by the
/// labeled enumeration index; used to decide "every proper induced subdigraph
/// satisfies it" by table lookup.
struct PropertyTables {
    int top_n = 0;
    std::vector<std::vector<char>> be, alpha;  // [n][enumeration index]

    const std::vector<char>& table(PropertyMode mode, int n) const {
        return mode == PropertyMode::be ? be[n] : alpha[n];
    }
};

inline PropertyTables build_property_tables(int top_n) {
    PropertyTables t;
    t.top_n = top_n;
    t.be.resize(top_n + 1);
    t.alpha.resize(top_n + 1);
    for (int n = 0; n <= top_n; ++n) {
        t.be[n].resize(labeled_digraph_count(n));
        t.alpha[n].resize(labeled_digraph_count(n));
        enumerate_digraphs(n, {}, [&](const Digraph& d) {
            std::uint64_t idx = Enumerator::to_index(d);
            t.be[n][idx] = satisfies_property(d, PropertyMode::be).holds;
            t.alpha[n][idx] = satisfies_property(d, PropertyMode::alpha).holds;
            return true;
        });
    }
    return t;
}

/// True when every proper induced subdigraph of d satisfies the property,
/// looked up in the tables (which must cover sizes below d.n()).
inline bool proper_induced_all_satisfy(const Digraph& d, PropertyMode mode, const PropertyTables& t) {
    std::uint64_t full = d.vertices().bits();
    for (std::uint64_t m = full;; m = (m - 1) & full) {
        VertexSet xs(m);
        if (xs.count() < d.n() && xs.count() >= 1) {
            auto sub = induced_subdigraph(d, xs);
            if (!t.table(mode, sub.d.n())[Enumerator::to_index(sub.d)]) return false;
        }
        if (m == 0) break;
    }
    return true;
}

inline Digraph random_digraph(int n, std::mt19937_64& rng, double arc_prob = 0.3) {
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

}  // namespace testutil
