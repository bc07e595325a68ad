#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dipart/detect.hpp"
#include "dipart/digraph.hpp"

namespace dipart {

/// Arc-locally in-semicomplete: for every arc uv, all in-neighbors of u and
/// of v are pairwise adjacent or equal.
inline bool is_alis(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u) {
        for (int v : d.out(u)) {
            for (int a : d.in(u)) {
                VertexSet must = d.in(v) - d.adj(a) - VertexSet::single(a);
                if (!must.empty()) return false;
            }
        }
    }
    return true;
}

inline bool is_alos(const Digraph& d) { return is_alis(inverse(d)); }

// ---------------------------------------------------------------------------
// Extended cycles.
// ---------------------------------------------------------------------------

/// If D is exactly an extended cycle Q[X_1..X_k] (k >= 2), its classes in
/// cyclic order following the arcs, starting with the class of vertex 0.
inline std::optional<std::vector<VertexSet>> find_extended_cycle(const Digraph& d) {
    if (d.n() == 0) return std::nullopt;
    std::map<std::pair<std::uint64_t, std::uint64_t>, VertexSet> groups;
    for (int v = 0; v < d.n(); ++v) groups[{d.in(v).bits(), d.out(v).bits()}].add(v);
    int k = static_cast<int>(groups.size());
    if (k < 2) return std::nullopt;
    // Each group must be exactly dominated by one group and dominate one.
    std::map<std::uint64_t, int> by_mask;
    std::vector<VertexSet> cls;
    std::vector<std::uint64_t> ins, outs;
    for (auto& [sig, members] : groups) {
        by_mask[members.bits()] = static_cast<int>(cls.size());
        cls.push_back(members);
        ins.push_back(sig.first);
        outs.push_back(sig.second);
    }
    std::vector<int> succ(k, -1);
    for (int i = 0; i < k; ++i) {
        if (cls[i].intersects(VertexSet(ins[i]) | VertexSet(outs[i]))) return std::nullopt;
        auto it = by_mask.find(outs[i]);
        if (it == by_mask.end()) return std::nullopt;
        succ[i] = it->second;
        if (by_mask.find(ins[i]) == by_mask.end()) return std::nullopt;
    }
    // succ must be one k-cycle, with in-signatures matching the predecessor.
    std::vector<int> order;
    int cur = 0;
    for (int step = 0; step < k; ++step) {
        order.push_back(cur);
        cur = succ[cur];
    }
    if (cur != 0) return std::nullopt;
    {
        std::vector<bool> seen(k, false);
        for (int i : order) {
            if (seen[i]) return std::nullopt;
            seen[i] = true;
        }
    }
    for (int s = 0; s < k; ++s) {
        int i = order[s], prev = order[(s + k - 1) % k];
        if (ins[i] != cls[prev].bits()) return std::nullopt;
    }
    // Rotate so the class containing vertex 0 comes first.
    int pos0 = -1;
    for (int s = 0; s < k; ++s)
        if (cls[order[s]].contains(0)) pos0 = s;
    std::vector<VertexSet> out;
    for (int s = 0; s < k; ++s) out.push_back(cls[order[(pos0 + s) % k]]);
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition (V1, V2 = odd extended cycle classes, V3).
// ---------------------------------------------------------------------------

struct AlisDecomposition {
    VertexSet v1;
    std::vector<VertexSet> classes;  // cyclic order, X_{i} |-> X_{i+1}
    VertexSet v3;

    VertexSet v2() const {
        VertexSet s;
        for (VertexSet c : classes) s |= c;
        return s;
    }
    int k() const { return static_cast<int>(classes.size()); }
};

/// Re-checks every clause of the decomposition's definition.
inline bool validate_decomposition(const Digraph& d, const AlisDecomposition& dec, std::string* why = nullptr) {
    auto reject = [&](const std::string& r) {
        if (why) *why = r;
        return false;
    };
    int k = dec.k();
    if (k < 5 || k % 2 == 0) return reject("class count must be odd and >= 5");
    VertexSet v2 = dec.v2();
    VertexSet all = dec.v1 | v2 | dec.v3;
    int total = dec.v1.count() + dec.v3.count();
    for (VertexSet c : dec.classes) {
        if (c.empty()) return reject("empty class");
        total += c.count();
    }
    if (all != d.vertices() || total != d.n()) return reject("not a partition of V(D)");
    for (int u : dec.v1) {
        VertexSet others = dec.v1 - VertexSet::single(u);
        if (!others.subset_of(d.adj(u))) return reject("D[V1] is not semicomplete");
        if (!v2.subset_of(d.out(u))) return reject("V1 does not dominate V2");
    }
    for (int x : v2)
        if (d.out(x).intersects(dec.v1)) return reject("arc from V2 back to V1");
    for (int y : dec.v3)
        if (d.out(y).intersects(dec.v1 | v2)) return reject("arc from V3 back to V1 or V2");
    for (int i = 0; i < k; ++i) {
        VertexSet next = dec.classes[(i + 1) % k];
        VertexSet prev = dec.classes[(i + k - 1) % k];
        for (int x : dec.classes[i]) {
            if ((d.out(x) & v2) != next) return reject("class out-arcs are not exactly the next class");
            if ((d.in(x) & v2) != prev) return reject("class in-arcs are not exactly the previous class");
        }
    }
    if (!underlying_graph(d).bipartite_within(dec.v3)) return reject("U(D[V3]) is not bipartite");
    return true;
}

namespace detail {

/// Chordless odd cycles of U(D), length >= 5, that are directed cycles of D,
/// reported as directed vertex sequences.
inline std::vector<std::vector<int>> directed_seed_cycles(const Digraph& d) {
    Graph g = underlying_graph(d);
    std::vector<std::vector<int>> seeds;
    for_each_chordless_cycle(g, [&](const std::vector<int>& cyc) {
        if (cyc.size() < 5 || cyc.size() % 2 == 0) return true;
        int len = static_cast<int>(cyc.size());
        bool fwd = true, bwd = true;
        for (int i = 0; i < len; ++i) {
            fwd = fwd && d.has_arc(cyc[i], cyc[(i + 1) % len]);
            bwd = bwd && d.has_arc(cyc[(i + 1) % len], cyc[i]);
        }
        if (fwd == bwd) return true;  // digons or not a directed cycle
        std::vector<int> seq = cyc;
        if (bwd) std::reverse(seq.begin() + 1, seq.end());
        seeds.push_back(seq);
        return true;
    });
    std::sort(seeds.begin(), seeds.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        return VertexSet::from_list(a) < VertexSet::from_list(b);
    });
    return seeds;
}

inline AlisDecomposition canonical_rotation(const AlisDecomposition& dec) {
    AlisDecomposition out = dec;
    int k = dec.k();
    int low = dec.v2().lowest();
    int pos = 0;
    for (int i = 0; i < k; ++i)
        if (dec.classes[i].contains(low)) pos = i;
    out.classes.clear();
    for (int i = 0; i < k; ++i) out.classes.push_back(dec.classes[(pos + i) % k]);
    return out;
}

/// Classify all non-seed vertices against a directed seed cycle; nullopt when
/// some vertex fits no role.
inline std::optional<AlisDecomposition> grow_from_seed(const Digraph& d, const std::vector<int>& seed) {
    int k = static_cast<int>(seed.size());
    VertexSet seed_mask = VertexSet::from_list(seed);
    AlisDecomposition dec;
    dec.classes.assign(k, VertexSet());
    for (int i = 0; i < k; ++i) dec.classes[i].add(seed[i]);
    for (int v = 0; v < d.n(); ++v) {
        if (seed_mask.contains(v)) continue;
        VertexSet to = d.out(v) & seed_mask;
        VertexSet from = d.in(v) & seed_mask;
        if (to == seed_mask && from.empty()) {
            dec.v1.add(v);
            continue;
        }
        if (to.empty()) {
            dec.v3.add(v);
            continue;
        }
        if (to.count() == 1 && from.count() == 1) {
            int nxt = to.lowest(), prv = from.lowest();
            int i_from_next = -1, i_from_prev = -1;
            for (int i = 0; i < k; ++i) {
                if (seed[(i + 1) % k] == nxt) i_from_next = i;
                if (seed[(i + k - 1) % k] == prv) i_from_prev = i;
            }
            if (i_from_next >= 0 && i_from_next == i_from_prev) {
                dec.classes[i_from_next].add(v);
                continue;
            }
        }
        return std::nullopt;
    }
    return canonical_rotation(dec);
}

}  // namespace detail

/// Attempts the (V1, V2, V3) partition. Seeds are induced directed odd cycles
/// of length >= 5; the winner is the valid decomposition with the least V2.
inline std::optional<AlisDecomposition> try_decompose(const Digraph& d) {
    std::optional<AlisDecomposition> best;
    for (const auto& seed : detail::directed_seed_cycles(d)) {
        auto dec = detail::grow_from_seed(d, seed);
        if (!dec || !validate_decomposition(d, *dec)) continue;
        if (!best || dec->v2() < best->v2()) best = dec;
    }
    return best;
}

inline AlisDecomposition decompose(const Digraph& d) {
    if (!underlying_graph(d).connected()) throw std::invalid_argument("decompose: digraph is disconnected");
    if (!is_alis(d)) throw std::invalid_argument("decompose: digraph is not arc-locally in-semicomplete");
    auto dec = try_decompose(d);
    if (!dec)
        throw invariant_error("decompose: no valid partition found; input is diperfect, has a clique cut, or the recognizer is wrong");
    return *dec;
}

// ---------------------------------------------------------------------------
// Distance layers and the L/I/R/W apparatus.
// ---------------------------------------------------------------------------

struct LayerStructure {
    std::vector<VertexSet> layers;  // N_0 = V2, N_1, ...
    VertexSet unreachable;          // V3 vertices at no finite distance from V2
    std::vector<VertexSet> L, I, R, Iplus, W;  // per class

    int depth() const { return static_cast<int>(layers.size()) - 1; }
    VertexSet layer(int i) const { return i < static_cast<int>(layers.size()) ? layers[i] : VertexSet(); }
};

inline LayerStructure layer_structure(const Digraph& d, const AlisDecomposition& dec) {
    std::string why;
    if (!validate_decomposition(d, dec, &why)) throw std::invalid_argument("layer_structure: invalid decomposition: " + why);
    LayerStructure ls;
    VertexSet v2 = dec.v2();
    VertexSet seen = v2;
    ls.layers.push_back(v2);
    for (;;) {
        VertexSet next;
        for (int v : ls.layers.back()) next |= d.out(v);
        next -= seen;
        if (next.empty()) break;
        if (!next.subset_of(dec.v3)) throw invariant_error("layer_structure: forward layer escapes V3");
        ls.layers.push_back(next);
        seen |= next;
    }
    ls.unreachable = dec.v3 - seen;
    int k = dec.k();
    VertexSet n1 = ls.layer(1), n2 = ls.layer(2);
    std::vector<VertexSet> nplus(k);
    for (int i = 0; i < k; ++i) nplus[i] = d.out_of(dec.classes[i]) & n1;
    ls.L.assign(k, VertexSet());
    ls.I.assign(k, VertexSet());
    ls.R.assign(k, VertexSet());
    ls.Iplus.assign(k, VertexSet());
    ls.W.assign(k, VertexSet());
    for (int i = 0; i < k; ++i) {
        VertexSet next = nplus[(i + 1) % k], prev = nplus[(i + k - 1) % k];
        for (int v : nplus[i]) {
            if (d.out(v).intersects(next)) ls.R[i].add(v);
            if (d.in(v).intersects(prev)) ls.L[i].add(v);
        }
        ls.I[i] = nplus[i] - ls.L[i] - ls.R[i];
        ls.W[i] = d.out_of(ls.L[i] | ls.I[i] | ls.R[i]) & n2;
        for (int v : ls.I[i])
            if (d.out(v).intersects(ls.W[i])) ls.Iplus[i].add(v);
    }
    return ls;
}

struct StructureViolation {
    int fact;  // 1..9
    std::string detail;
};

struct StructureReport {
    std::vector<StructureViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Direct audit of the nine structural facts of the decomposition layers.
inline StructureReport verify_structure_facts(const Digraph& d, const AlisDecomposition& dec,
                                              const LayerStructure& ls) {
    StructureReport rep;
    auto bad = [&](int fact, std::string detail) { rep.violations.push_back({fact, std::move(detail)}); };
    int k = dec.k();
    std::vector<VertexSet> nplus(k);
    for (int i = 0; i < k; ++i) nplus[i] = ls.L[i] | ls.I[i] | ls.R[i];

    for (int dd = 2; dd <= ls.depth(); ++dd)
        if (!d.is_stable(ls.layer(dd))) bad(1, "N_" + std::to_string(dd) + " is not stable");

    for (int y : dec.v3) {
        int classes_in = 0;
        for (int i = 0; i < k; ++i)
            if (d.in(y).intersects(dec.classes[i])) ++classes_in;
        if (classes_in > 1) bad(2, "vertex " + std::to_string(y) + " dominated from two classes");
    }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            int diff = (j - i + k) % k;
            if (diff == 1 || diff == k - 1) continue;  // adjacent classes
            for (int u : nplus[i])
                if (d.out(u).intersects(nplus[j]))
                    bad(3, "arc between out-neighborhoods of non-adjacent classes " + std::to_string(i) + "," + std::to_string(j));
        }

    for (int i = 0; i < k; ++i) {
        VertexSet nxt = nplus[(i + 1) % k];
        for (int v : nxt)
            if (d.out(v).intersects(nplus[i]))
                bad(4, "back arc from N+(X_" + std::to_string(i + 1) + ") to N+(X_" + std::to_string(i) + ")");
    }

    for (int dd = 1; dd <= ls.depth(); ++dd) {
        VertexSet allowed = ls.layer(dd - 1) | dec.v1;
        if (!d.in_of(ls.layer(dd)).subset_of(allowed))
            bad(5, "in-neighbors of N_" + std::to_string(dd) + " escape N_" + std::to_string(dd - 1) + " and V1");
    }

    {
        VertexSet n1 = ls.layer(1);
        for (int v : n1) {
            VertexSet a = d.in(v) & n1, b = d.out(v) & n1;
            if (!a.empty() && !b.empty() && (a | b).count() >= 2) bad(6, "path of length two inside N_1 through " + std::to_string(v));
        }
    }

    for (int i = 0; i < k; ++i)
        if (!d.is_stable(nplus[i])) bad(7, "N+(X_" + std::to_string(i) + ") is not stable");

    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k, next = (i + 1) % k;
        if (ls.L[i].intersects(ls.R[i]) || ls.L[i].intersects(ls.I[i]) || ls.I[i].intersects(ls.R[i]))
            bad(8, "L/I/R overlap at class " + std::to_string(i));
        if (!d.in_of(ls.L[i]).subset_of(ls.R[prev] | dec.classes[i] | dec.v1))
            bad(8, "in-neighbors of L_" + std::to_string(i) + " escape");
        if (!d.in_of(ls.I[i] | ls.R[i]).subset_of(dec.classes[i] | dec.v1))
            bad(8, "in-neighbors of I_/R_" + std::to_string(i) + " escape");
        if (!d.out_of(ls.R[i]).subset_of(ls.W[i] | ls.L[next]))
            bad(8, "out-neighbors of R_" + std::to_string(i) + " escape");
        if (!d.out_of(ls.L[i] | ls.I[i]).subset_of(ls.W[i]))
            bad(8, "out-neighbors of L_/I_" + std::to_string(i) + " escape");
        if (!ls.R[i].empty() && !maps_to(d, dec.classes[i], ls.R[i]))
            bad(8, "X_" + std::to_string(i) + " does not map onto R_" + std::to_string(i));
    }

    for (int i = 0; i < k; ++i)
        if (!d.in_of(ls.W[i]).subset_of(ls.L[i] | ls.I[i] | ls.R[i] | dec.v1))
            bad(9, "in-neighbors of W_" + std::to_string(i) + " escape");

    return rep;
}

// ---------------------------------------------------------------------------
// Hamiltonian paths in semicomplete digraphs.
// ---------------------------------------------------------------------------

/// Insertion construction: each vertex goes before the first path vertex it
/// dominates, else to the back.
inline Path hamiltonian_path_semicomplete(const Digraph& d) {
    if (d.n() < 1) throw std::invalid_argument("hamiltonian_path_semicomplete: empty digraph");
    if (!is_semicomplete(d)) throw std::invalid_argument("hamiltonian_path_semicomplete: digraph is not semicomplete");
    std::vector<int> path{0};
    for (int v = 1; v < d.n(); ++v) {
        std::size_t pos = path.size();
        for (std::size_t i = 0; i < path.size(); ++i)
            if (d.has_arc(v, path[i])) { pos = i; break; }
        path.insert(path.begin() + pos, v);
    }
    Path p{path};
    if (!p.valid_in(d)) throw invariant_error("hamiltonian_path_semicomplete: insertion produced a non-path");
    return p;
}

}  // namespace dipart
