#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dipart;

namespace {

/// 4x4 bipartite view from an edge mask; X = {0..3}, Y = {4..7}.
BipartiteView view44(std::uint32_t mask) {
    BipartiteView b(VertexSet::range(4), VertexSet(0xF0));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if ((mask >> (4 * x + y)) & 1) b.add_edge(x, 4 + y);
    return b;
}

bool hall_holds(const BipartiteView& g) {
    std::vector<int> xs = g.xs().to_list();
    for (std::uint32_t m = 1; m < (1u << xs.size()); ++m) {
        VertexSet w;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if ((m >> i) & 1) w.add(xs[i]);
        if (g.neighbors(w).count() < w.count()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("maximum matching basics", "[matching]") {
    BipartiteView one(VertexSet::of({0}), VertexSet::of({1}));
    one.add_edge(0, 1);
    REQUIRE(maximum_matching(one).size() == 1);

    BipartiteView shared(VertexSet::of({0, 1}), VertexSet::of({2}));
    shared.add_edge(0, 2);
    shared.add_edge(1, 2);
    REQUIRE(maximum_matching(shared).size() == 1);

    BipartiteView k33(VertexSet::range(3), VertexSet(0x38));
    for (int x = 0; x < 3; ++x)
        for (int y = 3; y < 6; ++y) k33.add_edge(x, y);
    REQUIRE(maximum_matching(k33).size() == 3);
}

TEST_CASE("matching and Hall violator agree with brute force over all 4x4 patterns",
          "[matching][oracle]") {
    std::uint64_t mismatches = 0;
    for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
        BipartiteView g = view44(mask);
        Matching m = maximum_matching(g);
        if (!matching_valid(g, m)) ++mismatches;
        if (m.size() != testutil::matching_brute(g)) ++mismatches;
        auto w = hall_violator(g);
        bool covers_x = m.covers(g.xs());
        if (w.has_value() == covers_x) ++mismatches;  // violator iff X uncovered
        if (w) {
            if (!w->subset_of(g.xs())) ++mismatches;
            if (g.neighbors(*w).count() >= w->count()) ++mismatches;
        }
        if (covers_x != hall_holds(g)) ++mismatches;  // Hall's theorem, both directions
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("hall violator example", "[matching]") {
    BipartiteView g(VertexSet::of({0, 1, 2}), VertexSet::of({3, 4}));
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    auto w = hall_violator(g);
    REQUIRE(w);
    REQUIRE(g.neighbors(*w).count() < w->count());

    BipartiteView perfect(VertexSet::of({0}), VertexSet::of({1}));
    perfect.add_edge(0, 1);
    REQUIRE_FALSE(hall_violator(perfect));
}

TEST_CASE("deficiency core", "[matching]") {
    BipartiteView g(VertexSet::of({0, 1}), VertexSet::of({2}));
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    auto core = deficiency_core(g);
    REQUIRE(core);
    REQUIRE_FALSE(core->size_zero);
    REQUIRE(core->core == VertexSet::of({0}));
    REQUIRE(core->matching.edges == std::vector<std::array<int, 2>>{{0, 2}});

    BipartiteView coverable(VertexSet::of({0}), VertexSet::of({1}));
    coverable.add_edge(0, 1);
    REQUIRE_FALSE(deficiency_core(coverable));

    BipartiteView isolated(VertexSet::of({0, 1, 2}), VertexSet());
    auto deg = deficiency_core(isolated);
    REQUIRE(deg);
    REQUIRE(deg->size_zero);
    REQUIRE(deg->core == VertexSet::of({0}));
    REQUIRE(deg->matching.edges.empty());
}

TEST_CASE("deficiency core invariants over random views", "[matching][property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 3000; ++trial) {
        std::uint32_t mask = static_cast<std::uint32_t>(rng());
        BipartiteView g = view44(mask & 0xFFFF);
        auto core = deficiency_core(g);
        if (!core) continue;
        if (core->size_zero) {
            REQUIRE(g.neighbors(core->core).empty());
            continue;
        }
        REQUIRE_FALSE(core->core.empty());
        VertexSet nx = g.neighbors(core->core);
        REQUIRE(core->core.count() == nx.count());
        REQUIRE(core->matching.covers(nx));
        for (auto [a, b] : core->matching.edges) {
            VertexSet pair = VertexSet::of({a, b});
            REQUIRE(pair.subset_of(core->core | nx));
        }
    }
}

TEST_CASE("matching against a maximum stable set", "[matching]") {
    Digraph d = testutil::bc5();
    VertexSet s = VertexSet::of({1, 4});
    Matching m = matching_against_stable(d, s, VertexSet::of({2}));
    REQUIRE(m.edges == std::vector<std::array<int, 2>>{{1, 2}});

    REQUIRE(matching_against_stable(d, s, VertexSet()).edges.empty());

    // out-star: center 0, leaves 1..3; lex-least leaf is chosen
    Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Matching ms = matching_against_stable(star, VertexSet::of({1, 2, 3}), VertexSet::of({0}));
    REQUIRE(ms.edges == std::vector<std::array<int, 2>>{{0, 1}});

    REQUIRE_THROWS_AS(matching_against_stable(d, VertexSet::of({1}), VertexSet::of({2})),
                      std::invalid_argument);
}

TEST_CASE("matching against stable never fails when premises hold, exhaustively at n<=5",
          "[matching][property]") {
    std::uint64_t failures = 0;
    for (int n = 3; n <= 5; ++n) {
        enumerate_digraphs(n, {}, [&](const Digraph& d) {
            auto ss = alpha_and_max_stable_sets(d);
            for (VertexSet s : ss.witnesses) {
                std::uint64_t full = d.vertices().bits() & ~s.bits();
                for (std::uint64_t m = full;; m = (m - 1) & full) {
                    if (m != 0) {
                        VertexSet x(m);
                        if (d.is_stable(x)) {
                            try {
                                Matching mm = matching_against_stable(d, s, x);
                                if (!mm.covers(x)) ++failures;
                            } catch (const std::exception&) {
                                ++failures;
                            }
                        }
                    }
                    if (m == 0) break;
                }
            }
            return true;
        });
    }
    REQUIRE(failures == 0);
}

TEST_CASE("constrained matching", "[matching]") {
    // Yp empty: any X-covering matching qualifies
    BipartiteView g(VertexSet::of({0}), VertexSet::of({1, 2}));
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    Matching m0 = constrained_matching(g, VertexSet());
    REQUIRE(m0.covers(VertexSet::of({0})));

    // Yp = {2}: the restriction to ({0}, {2}) must be maximum there
    Matching m1 = constrained_matching(g, VertexSet::of({2}));
    REQUIRE(m1.edges == std::vector<std::array<int, 2>>{{0, 2}});

    // Yp = Y: a maximum matching that covers X
    Matching m2 = constrained_matching(g, VertexSet::of({1, 2}));
    REQUIRE(m2.covers(VertexSet::of({0})));

    BipartiteView bad(VertexSet::of({0, 1}), VertexSet::of({2}));
    bad.add_edge(0, 2);
    bad.add_edge(1, 2);
    REQUIRE_THROWS_AS(constrained_matching(bad, VertexSet()), std::invalid_argument);
}

TEST_CASE("constrained matching restriction is maximum in the subview", "[matching][property]") {
    std::mt19937_64 rng(19);
    int nontrivial = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        BipartiteView g = view44(static_cast<std::uint32_t>(rng()) & 0xFFFF);
        if (hall_violator(g)) continue;
        std::uint64_t yp_mask = rng() & g.ys().bits();
        VertexSet yp(yp_mask);
        Matching m = constrained_matching(g, yp);
        REQUIRE(m.covers(g.xs()));
        VertexSet xp = g.neighbors(yp) & g.xs();
        BipartiteView sub = g.restricted(xp, yp);
        Matching restricted;
        for (auto [a, b] : m.edges)
            if ((xp | yp).contains(a) && (xp | yp).contains(b)) restricted.edges.push_back({a, b});
        int best = testutil::matching_brute(sub);
        REQUIRE(restricted.size() == best);
        if (best > 0) ++nontrivial;
    }
    REQUIRE(nontrivial > 50);
}
