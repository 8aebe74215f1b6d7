#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pisz/algorithms.hpp"
#include "pisz/canonical.hpp"
#include "pisz/enumerate.hpp"
#include "pisz/families.hpp"
#include "pisz/report.hpp"

namespace pisz {
namespace {

TEST(Generate, ClassCounts) {
    const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    Enumerator e;
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(e.generate(n).size(), all[n - 1]) << "n=" << n;
        EXPECT_EQ(e.generate(n, {.connected = true}).size(), connected[n - 1]) << "n=" << n;
    }
}

TEST(Generate, IsomorphFreeAgainstLabeledBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> expected;
        for (const auto& [key, a] : oracle::labeled_classes(n)) expected.insert(key);
        std::set<std::string> got;
        for (const Graph& g : generate_graphs(n)) {
            auto [it, fresh] = got.insert(oracle::brute_canonical(oracle::adjacency(g)));
            ASSERT_TRUE(fresh) << "duplicate class " << write_graph6(g);
        }
        EXPECT_EQ(got, expected) << "n=" << n;
    }
}

TEST(Generate, DistinctCertificatesAtOrderEight) {
    std::set<Certificate> seen;
    for (const Graph& g : generate_graphs(8)) ASSERT_TRUE(seen.insert(canonical_form(g)).second);
}

TEST(Generate, FiltersMatchPredicates) {
    const auto all = generate_graphs(7);
    const GraphFilter filters[] = {
        {.connected = true},
        {.min_degree = 2},
        {.bipartite = true},
        {.triangle_free = true},
        {.connected = true, .min_degree = 2, .triangle_free = true},
    };
    for (const GraphFilter& f : filters) {
        std::size_t expected = 0;
        for (const Graph& g : all) {
            bool ok = true;
            if (f.connected) ok &= is_connected(g);
            if (f.min_degree > 0) ok &= min_degree(g) >= f.min_degree;
            if (f.bipartite) ok &= is_bipartite(g);
            if (f.triangle_free) ok &= triangles_total(g) == 0;
            expected += ok;
        }
        EXPECT_EQ(generate_graphs(7, f).size(), expected);
    }
}

TEST(Generate, DeterministicAcrossWorkersAndShards) {
    const auto serial = generate_graphs(8, {.connected = true});
    const auto parallel = generate_graphs(8, {.connected = true}, {.workers = 4});
    EXPECT_EQ(serial, parallel);
    std::vector<Graph> stitched;
    for (int i = 0; i < 3; ++i) {
        auto part = generate_graphs(8, {.connected = true}, {.workers = 2, .shard = {i, 3}});
        stitched.insert(stitched.end(), part.begin(), part.end());
    }
    EXPECT_EQ(stitched, serial);
}

TEST(Generate, OrderBounds) {
    EXPECT_THROW(generate_graphs(0), EnumerationError);
    EXPECT_THROW(generate_graphs(11), EnumerationError);
}

TEST(Shard, Parse) {
    const Shard s = Shard::parse("2/5");
    EXPECT_EQ(s.index, 2);
    EXPECT_EQ(s.count, 5);
    EXPECT_THROW(Shard::parse("5/5"), std::invalid_argument);
    EXPECT_THROW(Shard::parse("x"), std::invalid_argument);
    EXPECT_THROW(Shard::parse("1/0"), std::invalid_argument);
}

TEST(PackedGraph, RoundTrip) {
    for (const Graph& g : generate_graphs(6)) EXPECT_EQ(PackedGraph::pack(g).unpack(), g);
}

TEST(Table1, PaperRow) {
    Enumerator e;
    for (int n = 3; n <= 8; ++n) EXPECT_EQ(table1(n, {.workers = 4}, &e), table1_expected(n)) << "n=" << n;
    EXPECT_EQ(table1_expected(9), 25U);
    EXPECT_EQ(table1_expected(10), 36U);
}

TEST(Table1, ExtremalGraphsAvoidInducedPaw) {
    Enumerator e;
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& g : extremal_nonbipartite(n, {}, &e)) {
            ASSERT_FALSE(has_induced(g, InducedPattern::kC3Prime)) << write_graph6(g);
            ASSERT_FALSE(is_bipartite(g));
        }
    }
}

TEST(Table1, ExtremalDiameter) {
    Enumerator e;
    for (int n = 3; n <= 8; ++n) EXPECT_TRUE(extremal_diameter_check(n, &e)) << "n=" << n;
    EXPECT_THROW(extremal_diameter_check(9, &e), EnumerationError);
}

TEST(YnCensus, MatchesFormulaAndGenerator) {
    const std::uint64_t expected[] = {1, 1, 2, 2, 3, 2, 3};
    Enumerator e;
    for (int n = 3; n <= 9; ++n) {
        const YnCensus c = yn_census(n, {.workers = 4}, &e);
        EXPECT_EQ(c.brute_force, expected[n - 3]) << "n=" << n;
        EXPECT_EQ(c.formula, expected[n - 3]) << "n=" << n;
        EXPECT_EQ(c.generated, expected[n - 3]) << "n=" << n;
        EXPECT_TRUE(c.sets_match) << "n=" << n;
    }
}

TEST(Survey, CheckedCounts) {
    Enumerator e;
    const std::pair<int, std::uint64_t> cases[] = {{3, 2}, {5, 21}, {7, 853}};
    for (const auto& [n, connected] : cases) {
        const EnumerationSummary s = survey(n, {}, &e);
        EXPECT_EQ(s.connected_graphs, connected);
        EXPECT_EQ(s.per_theorem[0].checked, connected);
        EXPECT_TRUE(s.clean()) << "n=" << n;
    }
}

TEST(Survey, Caps) {
    EXPECT_THROW(survey(2), EnumerationError);
    EXPECT_THROW(survey(9), EnumerationError);
}

TEST(Survey, SummaryIndependentOfWorkers) {
    Enumerator e;
    const std::string one = summary_json(survey(6, {.workers = 1}, &e)).dump();
    const std::string many = summary_json(survey(6, {.workers = 8}, &e)).dump();
    EXPECT_EQ(one, many);
}

}  // namespace
}  // namespace pisz
