#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dipart;
using testutil::adc5;
using testutil::bc5;
using testutil::tt3;

TEST_CASE("induced subdigraph restricts and relabels", "[digraph]") {
    Digraph d = tt3();
    auto sub = induced_subdigraph(d, VertexSet::of({0, 1}));
    REQUIRE(sub.d.n() == 2);
    REQUIRE(sub.d.arc_count() == 1);
    REQUIRE(sub.d.has_arc(0, 1));
    REQUIRE(sub.to_parent == std::vector<int>{0, 1});

    auto empty = induced_subdigraph(d, VertexSet());
    REQUIRE(empty.d.n() == 0);

    auto digon = induced_subdigraph(bc5(), VertexSet::of({3, 4}));
    REQUIRE(digon.d.arc_count() == 2);
    REQUIRE(digon.d.has_arc(0, 1));
    REQUIRE(digon.d.has_arc(1, 0));

    REQUIRE_THROWS_AS(induced_subdigraph(d, VertexSet::of({0, 5})), std::invalid_argument);
}

TEST_CASE("underlying graph collapses digons", "[digraph]") {
    Graph k3 = underlying_graph(tt3());
    REQUIRE(k3.edge_count() == 3);
    Graph c5 = underlying_graph(bc5());
    REQUIRE(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) REQUIRE(c5.adj(v).count() == 2);
    Graph iso = underlying_graph(Digraph(3));
    REQUIRE(iso.edge_count() == 0);
}

TEST_CASE("inverse reverses arcs and is an involution", "[digraph]") {
    Digraph inv = inverse(tt3());
    REQUIRE(inv.has_arc(1, 0));
    REQUIRE(inv.has_arc(2, 0));
    REQUIRE(inv.has_arc(1, 2));
    REQUIRE(inv.arc_count() == 3);

    Digraph digon(2, {{0, 1}, {1, 0}});
    REQUIRE(inverse(digon).arcs() == digon.arcs());

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Digraph d = testutil::random_digraph(6, rng);
        REQUIRE(inverse(inverse(d)).arcs() == d.arcs());
        REQUIRE(underlying_graph(d).edge_count() == underlying_graph(inverse(d)).edge_count());
    }
}

TEST_CASE("neighborhoods split into in, out, all", "[digraph]") {
    auto nb = neighborhoods(tt3(), VertexSet::of({1}));
    REQUIRE(nb.in == VertexSet::of({0, 2}));
    REQUIRE(nb.out.empty());
    REQUIRE(nb.all == nb.in);

    auto nb2 = neighborhoods(bc5(), VertexSet::of({4}));
    REQUIRE(nb2.in == VertexSet::of({0, 3}));
    REQUIRE(nb2.out == VertexSet::of({3}));

    Digraph d = bc5();
    auto nb3 = neighborhoods(d, d.vertices());
    REQUIRE(nb3.all.empty());
}

TEST_CASE("neighborhood monotonicity", "[digraph][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Digraph d = testutil::random_digraph(7, rng);
        std::uniform_int_distribution<std::uint64_t> mask(0, d.vertices().bits());
        VertexSet big(mask(rng));
        VertexSet small = big & VertexSet(mask(rng));
        REQUIRE(d.neighbors(small).subset_of(d.neighbors(big) | big));
    }
}

TEST_CASE("domination relation", "[digraph]") {
    Digraph fig3 = testutil::fig3();
    auto rel = domination_relation(fig3, VertexSet::of({0, 1}), VertexSet::of({2}));
    REQUIRE(rel.maps_to);

    auto rel2 = domination_relation(tt3(), VertexSet::of({0}), VertexSet::of({1}));
    REQUIRE(rel2.arrow);
    REQUIRE(rel2.no_back);

    Digraph digon(2, {{0, 1}, {1, 0}});
    auto rel3 = domination_relation(digon, VertexSet::of({0}), VertexSet::of({1}));
    REQUIRE(rel3.arrow);
    REQUIRE_FALSE(rel3.no_back);
    REQUIRE_FALSE(rel3.maps_to);

    REQUIRE_THROWS_AS(domination_relation(digon, VertexSet::of({0}), VertexSet::of({0, 1})), std::invalid_argument);
}

TEST_CASE("directed distance", "[digraph]") {
    Digraph path(3, {{0, 1}, {1, 2}});
    REQUIRE(distance(path, VertexSet::of({0}), VertexSet::of({2})) == 2);
    REQUIRE(distance(path, VertexSet::of({0}), VertexSet::of({0})) == 0);
    REQUIRE_FALSE(distance(bc5(), VertexSet::of({1}), VertexSet::of({0})).has_value());
    REQUIRE_THROWS_AS(distance(path, VertexSet(), VertexSet::of({0})), std::invalid_argument);
}

TEST_CASE("semicomplete, sources, sinks", "[digraph]") {
    REQUIRE(is_semicomplete(tt3()));
    REQUIRE(sources(tt3()) == VertexSet::of({0}));
    REQUIRE(sinks(tt3()) == VertexSet::of({1}));

    REQUIRE_FALSE(is_semicomplete(adc5()));
    REQUIRE(sources(adc5()) == VertexSet::of({0, 2}));
    REQUIRE(sinks(adc5()) == VertexSet::of({1, 3}));

    Digraph single(1);
    REQUIRE(is_semicomplete(single));
    REQUIRE(sources(single) == VertexSet::of({0}));
    REQUIRE(sinks(single) == VertexSet::of({0}));
}

TEST_CASE("induced on the full vertex set is the identity", "[digraph][property]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Digraph d = testutil::random_digraph(6, rng);
        auto sub = induced_subdigraph(d, d.vertices());
        REQUIRE(sub.d.arcs() == d.arcs());
        for (int v = 0; v < d.n(); ++v) REQUIRE(sub.to_parent[v] == v);
    }
}

TEST_CASE("maps_to implies arrow and no_back on random digraphs", "[digraph][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Digraph d = testutil::random_digraph(6, rng, 0.4);
        std::uniform_int_distribution<std::uint64_t> mask(0, d.vertices().bits());
        VertexSet xs(mask(rng));
        VertexSet ys = VertexSet(mask(rng)) - xs;
        auto rel = domination_relation(d, xs, ys);
        REQUIRE(rel.maps_to == (rel.arrow && rel.no_back));
    }
}
