#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dipart/digraph.hpp"

namespace dipart {

struct Shard {
    std::uint64_t index = 0;
    std::uint64_t count = 1;
};

inline std::uint64_t labeled_digraph_count(int n) {
    int pairs = n * (n - 1) / 2;
    return std::uint64_t(1) << (2 * pairs);
}

/// Pairs in lexicographic order (0,1),(0,2),...,(1,2),...; the first pair is
/// the most significant base-4 digit. States: 0 none, 1 u->v, 2 v->u, 3 digon.
class Enumerator {
public:
    static Digraph from_index(int n, std::uint64_t idx) {
        Digraph d(n);
        write_index(d, n, idx);
        return d;
    }

    static std::uint64_t to_index(const Digraph& d) {
        std::uint64_t idx = 0;
        for (int u = 0; u < d.n(); ++u)
            for (int v = u + 1; v < d.n(); ++v) {
                int state = (d.has_arc(u, v) ? 1 : 0) | (d.has_arc(v, u) ? 2 : 0);
                idx = (idx << 2) | static_cast<std::uint64_t>(state);
            }
        return idx;
    }

    /// Streams shard `s` of the labeled enumeration in increasing index order.
    /// Returning false from the callback stops the stream.
    static void enumerate(int n, Shard s, const std::function<bool(const Digraph&)>& cb) {
        if (n > 7) throw std::invalid_argument("enumerate_digraphs: n > 7 labeled exhaustion refused");
        if (s.count == 0 || s.index >= s.count) throw std::invalid_argument("enumerate_digraphs: bad shard");
        std::uint64_t total = labeled_digraph_count(n);
        Digraph d(n);
        for (std::uint64_t idx = s.index; idx < total; idx += s.count) {
            write_index(d, n, idx);
            if (!cb(d)) return;
        }
    }

    /// Lexicographically-least labeled representative of the isomorphism class,
    /// by row-major adjacency bits. Brute force over all n! permutations.
    static bool is_canonical(const Digraph& d) {
        int n = d.n();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            int cmp = 0;  // -1: permuted smaller, 1: larger
            for (int i = 0; i < n && cmp == 0; ++i)
                for (int j = 0; j < n && cmp == 0; ++j) {
                    if (i == j) continue;
                    bool orig = d.has_arc(i, j);
                    bool perm_bit = d.has_arc(perm[i], perm[j]);
                    if (perm_bit != orig) cmp = perm_bit ? 1 : -1;
                }
            if (cmp == -1) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    }

private:
    static void write_index(Digraph& d, int n, std::uint64_t idx) {
        for (int v = 0; v < n; ++v) {
            d.out_[v] = 0;
            d.in_[v] = 0;
        }
        int pairs = n * (n - 1) / 2;
        int shift = 2 * (pairs - 1);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int state = (idx >> shift) & 3;
                shift -= 2;
                if (state & 1) {
                    d.out_[u] |= std::uint64_t(1) << v;
                    d.in_[v] |= std::uint64_t(1) << u;
                }
                if (state & 2) {
                    d.out_[v] |= std::uint64_t(1) << u;
                    d.in_[u] |= std::uint64_t(1) << v;
                }
            }
    }

    friend class AlisEnumerator;
    static void write_masks(Digraph& d, int n, const std::uint64_t* out, const std::uint64_t* in) {
        for (int v = 0; v < n; ++v) {
            d.out_[v] = out[v];
            d.in_[v] = in[v];
        }
    }
};

inline void enumerate_digraphs(int n, Shard s, const std::function<bool(const Digraph&)>& cb) {
    Enumerator::enumerate(n, s, cb);
}

/// Incremental generator of all labeled arc-locally in-semicomplete digraphs
/// on exactly n vertices. Extends vertex by vertex; a violated prefix prunes
/// its whole subtree (the property is hereditary on induced subdigraphs).
class AlisEnumerator {
public:
    explicit AlisEnumerator(int n) : n_(n) {
        if (n < 0 || n > 12) throw std::invalid_argument("alis enumeration: n out of supported range");
    }

    void run(const std::function<bool(const Digraph&)>& cb) {
        if (n_ == 0) {
            Digraph d(0);
            cb(d);
            return;
        }
        out_.fill(0);
        in_.fill(0);
        scratch_ = Digraph(n_);
        stop_ = false;
        descend(1, cb);
    }

    /// New constraints created by attaching vertex j (all pairs with 0..j-1
    /// decided): every in-semicompleteness instance involving j in any role.
    static bool vertex_ok(const std::uint64_t* out, const std::uint64_t* in, int j) {
        auto adjc = [&](int v) { return out[v] | in[v] | (std::uint64_t(1) << v); };
        std::uint64_t in_j = in[j];
        // j as arc head: arcs (u, j)
        for (std::uint64_t m = in_j; m; m &= m - 1) {
            int u = std::countr_zero(m);
            for (std::uint64_t a = in[u]; a; a &= a - 1)
                if (in_j & ~adjc(std::countr_zero(a))) return false;
        }
        // j as arc tail: arcs (j, v)
        for (std::uint64_t m = out[j]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            for (std::uint64_t a = in_j; a; a &= a - 1)
                if (in[v] & ~adjc(std::countr_zero(a))) return false;
        }
        std::uint64_t cj = adjc(j);
        // j as in-neighbor of the tail: arcs (u, v) with j -> u
        for (std::uint64_t m = out[j]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            for (std::uint64_t vv = out[u]; vv; vv &= vv - 1)
                if (in[std::countr_zero(vv)] & ~cj) return false;
        }
        // j as in-neighbor of the head: arcs (u, v) with j -> v
        for (std::uint64_t m = out[j]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            for (std::uint64_t uu = in[v]; uu; uu &= uu - 1)
                if (in[std::countr_zero(uu)] & ~cj) return false;
        }
        return true;
    }

private:
    void descend(int j, const std::function<bool(const Digraph&)>& cb) {
        if (stop_) return;
        std::uint64_t combos = std::uint64_t(1) << (2 * j);
        for (std::uint64_t c = 0; c < combos && !stop_; ++c) {
            for (int i = 0; i < j; ++i) {
                int state = (c >> (2 * i)) & 3;
                std::uint64_t bi = std::uint64_t(1) << i, bj = std::uint64_t(1) << j;
                if (state & 1) {
                    out_[i] |= bj;
                    in_[j] |= bi;
                }
                if (state & 2) {
                    out_[j] |= bi;
                    in_[i] |= bj;
                }
            }
            if (vertex_ok(out_.data(), in_.data(), j)) {
                if (j == n_ - 1) {
                    Enumerator::write_masks(scratch_, n_, out_.data(), in_.data());
                    if (!cb(scratch_)) stop_ = true;
                } else {
                    descend(j + 1, cb);
                }
            }
            for (int i = 0; i < j; ++i) {
                std::uint64_t bi = std::uint64_t(1) << i, bj = std::uint64_t(1) << j;
                out_[i] &= ~bj;
                in_[j] &= ~bi;
                out_[j] &= ~bi;
                in_[i] &= ~bj;
            }
        }
    }

    int n_;
    bool stop_ = false;
    std::array<std::uint64_t, 16> out_{}, in_{};
    Digraph scratch_;
};

inline void enumerate_alis_digraphs(int n, const std::function<bool(const Digraph&)>& cb) {
    AlisEnumerator(n).run(cb);
}

/// Random ALIS digraph: assigns pair states vertex by vertex, resampling a
/// vertex attachment until it keeps the property; `sparse` biases toward
/// missing pairs. Deterministic under a fixed seed.
inline Digraph random_alis_digraph(int n, std::mt19937_64& rng, bool sparse) {
    std::array<std::uint64_t, 16> out{}, in{};
    std::discrete_distribution<int> dist =
        sparse ? std::discrete_distribution<int>{11, 4, 4, 1} : std::discrete_distribution<int>{1, 1, 1, 1};
    for (int j = 1; j < n; ++j) {
        for (int attempt = 0;; ++attempt) {
            for (int i = 0; i < j; ++i) {
                std::uint64_t bi = std::uint64_t(1) << i, bj = std::uint64_t(1) << j;
                int state = dist(rng);
                if (state & 1) {
                    out[i] |= bj;
                    in[j] |= bi;
                }
                if (state & 2) {
                    out[j] |= bi;
                    in[i] |= bj;
                }
            }
            if (AlisEnumerator::vertex_ok(out.data(), in.data(), j)) break;
            for (int i = 0; i < j; ++i) {
                std::uint64_t bi = std::uint64_t(1) << i, bj = std::uint64_t(1) << j;
                out[i] &= ~bj;
                in[j] &= ~bi;
                out[j] &= ~bi;
                in[i] &= ~bj;
            }
            if (attempt > 200) {  // restart from an empty attachment (always valid)
                break;
            }
        }
    }
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v : VertexSet(out[u])) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

}  // namespace dipart
