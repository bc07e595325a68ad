#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dipart;
using testutil::adc5;
using testutil::bc5;
using testutil::tt3;

TEST_CASE("partition validation modes", "[partition]") {
    Digraph d = tt3();
    PathPartition ham{{Path{{0, 2, 1}}}};
    REQUIRE(validate(d, ham, VertexSet(), PartitionMode::plain).ok);
    REQUIRE(validate(d, ham, VertexSet::of({1}), PartitionMode::be).ok);
    REQUIRE(validate(d, ham, VertexSet::of({2}), PartitionMode::orthogonal).ok);
    REQUIRE_FALSE(validate(d, ham, VertexSet::of({2}), PartitionMode::be).ok);

    // singleton paths on an edgeless digraph: orthogonal and BE with S = V
    Digraph edgeless(3);
    PathPartition singles{{Path{{0}}, Path{{1}}, Path{{2}}}};
    REQUIRE(validate(edgeless, singles, edgeless.vertices(), PartitionMode::orthogonal).ok);
    REQUIRE(validate(edgeless, singles, edgeless.vertices(), PartitionMode::be).ok);

    PathPartition missing{{Path{{0, 2}}}};
    REQUIRE_FALSE(validate(d, missing, VertexSet::of({0}), PartitionMode::plain).ok);
    PathPartition overlap{{Path{{0, 2}}, Path{{2, 1}}}};
    REQUIRE_FALSE(validate(d, overlap, VertexSet::of({0}), PartitionMode::plain).ok);
    PathPartition notpath{{Path{{1, 0}}, Path{{2}}}};
    REQUIRE_FALSE(validate(d, notpath, VertexSet::of({1}), PartitionMode::plain).ok);
}

TEST_CASE("exact partition search on the named instances", "[partition][oracle]") {
    // ADC5: S = {0,3} admits no orthogonal partition; S = {1,3} does.
    REQUIRE_FALSE(find_partition(adc5(), VertexSet::of({0, 3}), PartitionMode::orthogonal));
    auto p13 = find_partition(adc5(), VertexSet::of({1, 3}), PartitionMode::orthogonal);
    REQUIRE(p13);
    REQUIRE(validate(adc5(), *p13, VertexSet::of({1, 3}), PartitionMode::orthogonal).ok);

    // BC5: S = {0,3} has no BE partition; S = {1,4} has one.
    REQUIRE_FALSE(find_partition(bc5(), VertexSet::of({0, 3}), PartitionMode::be));
    auto p14 = find_partition(bc5(), VertexSet::of({1, 4}), PartitionMode::be);
    REQUIRE(p14);
    REQUIRE(validate(bc5(), *p14, VertexSet::of({1, 4}), PartitionMode::be).ok);
}

TEST_CASE("property verdicts on the named instances", "[partition]") {
    auto tt_alpha = satisfies_property(tt3(), PropertyMode::alpha);
    REQUIRE(tt_alpha.holds);
    auto tt_be = satisfies_property(tt3(), PropertyMode::be);
    REQUIRE_FALSE(tt_be.holds);
    REQUIRE(tt_be.failing_stable_set == VertexSet::of({2}));

    auto adc_alpha = satisfies_property(adc5(), PropertyMode::alpha);
    REQUIRE_FALSE(adc_alpha.holds);
    REQUIRE(adc_alpha.failing_stable_set == VertexSet::of({0, 3}));

    auto bc_be = satisfies_property(bc5(), PropertyMode::be);
    REQUIRE_FALSE(bc_be.holds);
    REQUIRE(bc_be.failing_stable_set == VertexSet::of({0, 3}));

    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    REQUIRE(satisfies_property(c3, PropertyMode::alpha).holds);
    REQUIRE(satisfies_property(c3, PropertyMode::be).holds);

    REQUIRE(satisfies_property(testutil::fig3(), PropertyMode::be).holds);
}

TEST_CASE("hereditary property verdicts", "[partition]") {
    auto tt = is_diperfect_property(tt3(), PropertyMode::be);
    REQUIRE_FALSE(tt.holds);
    REQUIRE(tt.failing_subset == tt3().vertices());
    REQUIRE(tt.failing_stable_set == VertexSet::of({2}));
    REQUIRE(is_diperfect_property(tt3(), PropertyMode::alpha).holds);

    // any digraph containing an induced BC5 is not BE-diperfect
    Digraph host(6, {{0, 1}, {2, 1}, {2, 3}, {0, 4}, {4, 3}, {3, 4}, {5, 0}});
    REQUIRE_FALSE(is_diperfect_property(host, PropertyMode::be).holds);

    Digraph edgeless(4);
    REQUIRE(is_diperfect_property(edgeless, PropertyMode::alpha).holds);
    REQUIRE(is_diperfect_property(edgeless, PropertyMode::be).holds);
}

TEST_CASE("search results always validate; orthogonal partitions have |S| paths",
          "[partition][property]") {
    std::mt19937_64 rng(29);
    int found = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        Digraph d = testutil::random_digraph(6, rng, 0.3);
        auto ss = alpha_and_max_stable_sets(d);
        for (VertexSet s : ss.witnesses) {
            auto orth = find_partition(d, s, PartitionMode::orthogonal);
            if (orth) {
                ++found;
                REQUIRE(validate(d, *orth, s, PartitionMode::orthogonal).ok);
                REQUIRE(static_cast<int>(orth->paths.size()) == s.count());
            }
            auto be = find_partition(d, s, PartitionMode::be);
            if (be) {
                REQUIRE(validate(d, *be, s, PartitionMode::be).ok);
                REQUIRE(validate(d, *be, s, PartitionMode::orthogonal).ok);
                REQUIRE(orth.has_value());  // BE strengthens orthogonal
            }
        }
    }
    REQUIRE(found > 100);
}

TEST_CASE("uncoverable stable sets admit BE partitions when proper subdigraphs do, n<=5",
          "[partition][lemma]") {
    testutil::PropertyTables tables = testutil::build_property_tables(4);
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t violations = 0;
        enumerate_digraphs(n, {}, [&](const Digraph& d) {
            auto ss = alpha_and_max_stable_sets(d);
            bool subs_checked = false, subs_ok = false;
            for (VertexSet s : ss.witnesses) {
                auto bip = BipartiteView::from_digraph(d, s, d.neighbors(s));
                if (!hall_violator(bip)) continue;  // matching covers S
                if (!subs_checked) {
                    subs_ok = testutil::proper_induced_all_satisfy(d, PropertyMode::be, tables);
                    subs_checked = true;
                }
                if (!subs_ok) continue;
                if (!find_partition(d, s, PartitionMode::be)) ++violations;
            }
            return true;
        });
        REQUIRE(violations == 0);
    }
}

TEST_CASE("large stability number forces the property, n<=4", "[partition][theorem]") {
    testutil::PropertyTables tables = testutil::build_property_tables(3);
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t violations = 0;
        enumerate_digraphs(n, {}, [&](const Digraph& d) {
            if (2 * stability_number(d) < d.n()) return true;
            for (PropertyMode mode : {PropertyMode::be, PropertyMode::alpha}) {
                if (!testutil::proper_induced_all_satisfy(d, mode, tables)) continue;
                if (!satisfies_property(d, mode).holds) ++violations;
            }
            return true;
        });
        REQUIRE(violations == 0);
    }
}
