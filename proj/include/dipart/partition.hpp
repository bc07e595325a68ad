#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dipart/detect.hpp"
#include "dipart/digraph.hpp"

namespace dipart {

enum class PartitionMode { plain, orthogonal, be };
enum class PropertyMode { alpha, be };

inline PartitionMode partition_mode(PropertyMode m) {
    return m == PropertyMode::alpha ? PartitionMode::orthogonal : PartitionMode::be;
}

struct ValidationReport {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
};

inline ValidationReport fail(std::string why) { return ValidationReport{false, std::move(why)}; }

/// Checks that P is a genuine path partition of D; `orthogonal` additionally
/// requires exactly one S vertex per path, `be` that this vertex starts or
/// ends its path.
inline ValidationReport validate(const Digraph& d, const PathPartition& pp, VertexSet s,
                                 PartitionMode mode) {
    VertexSet seen;
    for (const auto& p : pp.paths) {
        if (!p.valid_in(d)) return fail("not a directed path: " + (p.vertices.empty() ? std::string("<empty>") : std::to_string(p.vertices.front())));
        VertexSet vs = p.vertex_set();
        if (vs.intersects(seen)) return fail("paths overlap");
        seen |= vs;
        if (mode == PartitionMode::plain) continue;
        VertexSet hit = vs & s;
        if (hit.count() != 1) return fail("path misses orthogonality at " + std::to_string(p.vertices.front()));
        if (mode == PartitionMode::be) {
            int v = hit.lowest();
            if (p.start() != v && p.finish() != v)
                return fail("stable vertex " + std::to_string(v) + " is interior");
        }
    }
    if (seen != d.vertices()) return fail("paths do not cover all vertices");
    return {};
}

/// Exact existence oracle: a partition of the requested mode anchored on S
/// (exactly one S vertex per path), found by backtracking with memoization on
/// the remaining-vertex set; absence is proof by exhausted search.
inline std::optional<PathPartition> find_partition(const Digraph& d, VertexSet s, PartitionMode mode) {
    if (mode == PartitionMode::plain) throw std::invalid_argument("find_partition: mode must anchor on S");
    if (!d.is_stable(s)) throw std::invalid_argument("find_partition: S is not stable");
    if (d.n() == 0) return PathPartition{};
    if (s.empty()) return std::nullopt;  // some vertex would lie on no anchored path

    std::unordered_map<std::uint64_t, bool> feasible;
    std::vector<Path> acc;

    // Grows the current path forward from its tail, then recurses.
    std::function<bool(VertexSet)> solve = [&](VertexSet remaining) -> bool {
        if (remaining.empty()) return true;
        VertexSet anchors = remaining & s;
        if (anchors.empty()) return false;
        auto it = feasible.find(remaining.bits());
        if (it != feasible.end() && !it->second) return false;

        int a = anchors.lowest();
        VertexSet allowed = (remaining - s) | VertexSet::single(a);
        std::vector<int> fwd, bwd;

        // Enumerate forward extensions of a; for each, enumerate backward
        // extensions (skipped in BE mode unless the forward part is empty,
        // since the anchor must sit at an end).
        std::function<bool()> grow_back = [&]() -> bool {
            VertexSet used = VertexSet::from_list(fwd) | VertexSet::from_list(bwd) | VertexSet::single(a);
            Path p;
            for (auto rit = bwd.rbegin(); rit != bwd.rend(); ++rit) p.vertices.push_back(*rit);
            p.vertices.push_back(a);
            for (int v : fwd) p.vertices.push_back(v);
            acc.push_back(p);
            if (solve(remaining - used)) return true;
            acc.pop_back();
            int head = bwd.empty() ? a : bwd.back();
            for (int u : (d.in(head) & allowed)) {
                if (used.contains(u)) continue;
                bwd.push_back(u);
                if (grow_back()) return true;
                bwd.pop_back();
            }
            return false;
        };
        std::function<bool()> grow_fwd = [&]() -> bool {
            if (mode == PartitionMode::orthogonal || fwd.empty()) {
                if (grow_back()) return true;
            } else {
                // BE with nonempty forward part: anchor starts the path.
                VertexSet used = VertexSet::from_list(fwd) | VertexSet::single(a);
                Path p;
                p.vertices.push_back(a);
                for (int v : fwd) p.vertices.push_back(v);
                acc.push_back(p);
                if (solve(remaining - used)) return true;
                acc.pop_back();
            }
            int tail = fwd.empty() ? a : fwd.back();
            VertexSet used = VertexSet::from_list(fwd) | VertexSet::single(a);
            for (int v : (d.out(tail) & allowed)) {
                if (used.contains(v)) continue;
                fwd.push_back(v);
                if (grow_fwd()) return true;
                fwd.pop_back();
            }
            return false;
        };
        bool ok = grow_fwd();
        if (!ok) feasible[remaining.bits()] = false;
        return ok;
    };

    if (!solve(d.vertices())) return std::nullopt;
    PathPartition pp;
    pp.paths = acc;
    return pp;
}

struct PropertyVerdict {
    bool holds = true;
    std::optional<VertexSet> failing_stable_set;
    // retained only under the verbose flag
    std::vector<std::pair<VertexSet, PathPartition>> certificates;
};

/// Does every maximum stable set admit the requested partition?
inline PropertyVerdict satisfies_property(const Digraph& d, PropertyMode mode, bool keep_certificates = false) {
    PropertyVerdict v;
    StableSets ss = alpha_and_max_stable_sets(d);
    for (VertexSet s : ss.witnesses) {
        auto pp = find_partition(d, s, partition_mode(mode));
        if (!pp) {
            v.holds = false;
            v.failing_stable_set = s;
            return v;
        }
        if (keep_certificates) v.certificates.push_back({s, *pp});
    }
    return v;
}

struct HereditaryVerdict {
    bool holds = true;
    std::optional<VertexSet> failing_subset;      // in D labels
    std::optional<VertexSet> failing_stable_set;  // in D labels
};

/// α-/BE-diperfection decision: the property must hold on every induced
/// subdigraph. Subsets are scanned by decreasing size, then mask order; the
/// first failure is reported. Verdicts are cached per subset.
inline HereditaryVerdict is_diperfect_property(const Digraph& d, PropertyMode mode) {
    if (d.n() > 20) throw std::invalid_argument("is_diperfect_property: size bound exceeded");
    HereditaryVerdict out;
    std::vector<VertexSet> subsets;
    std::uint64_t full = d.vertices().bits();
    for (std::uint64_t m = full;; --m) {
        if (m == 0) break;
        subsets.push_back(VertexSet(m & full));
        if (m == 1) break;
    }
    std::sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a < b;
    });
    subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    for (VertexSet xs : subsets) {
        auto sub = induced_subdigraph(d, xs);
        auto verdict = satisfies_property(sub.d, mode);
        if (!verdict.holds) {
            out.holds = false;
            out.failing_subset = xs;
            VertexSet lifted;
            for (int v : *verdict.failing_stable_set) lifted.add(sub.to_parent[v]);
            out.failing_stable_set = lifted;
            return out;
        }
    }
    return out;
}

}  // namespace dipart
