#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pisz/algorithms.hpp"
#include "pisz/enumerate.hpp"
#include "pisz/invariants.hpp"

namespace pisz {
namespace {

std::vector<Graph> connected_up_to(int max_n, int min_n = 1) {
    std::vector<Graph> out;
    for (int n = min_n; n <= max_n; ++n) {
        auto level = generate_graphs(n, {.connected = true});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

TEST(VertexSplit, Examples) {
    EXPECT_EQ(vertex_split(fixtures::load(fixtures::kC5), {0, 1}), (EdgeVertexSplit{2, 2, 1, 0}));
    for (int n = 2; n <= 7; ++n) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
        }
        const Graph kn(n, edges);
        const auto s = vertex_split(kn, {0, n - 1});
        EXPECT_EQ(s.nu, 1U);
        EXPECT_EQ(s.nv, 1U);
        EXPECT_EQ(s.eq, static_cast<std::uint32_t>(n - 2));
    }
    const auto bull = vertex_split(fixtures::load(fixtures::kBull), {0, 2});
    EXPECT_EQ(bull.nu, 2U);
    EXPECT_EQ(bull.nv, 1U);
    EXPECT_EQ(bull.eq, 2U);
    EXPECT_EQ(bull.te, 1U);
}

TEST(VertexSplit, Errors) {
    EXPECT_THROW(vertex_split(Graph(3, {{0, 1}}), {0, 1}), GraphError);
    EXPECT_THROW(vertex_split(fixtures::load(fixtures::kC5), {0, 2}), GraphError);
    EXPECT_THROW(edge_split(Graph(3, {{0, 1}}), {0, 1}), GraphError);
}

TEST(EdgeSplit, Examples) {
    EXPECT_EQ(edge_split(fixtures::load(fixtures::kC4), {0, 1}), (EdgeEdgeSplit{1, 1, 1}));
    EXPECT_EQ(edge_split(fixtures::load(fixtures::kStar3), {0, 2}), (EdgeEdgeSplit{2, 0, 0}));
    EXPECT_EQ(edge_split(fixtures::load(fixtures::kC5), {3, 4}), (EdgeEdgeSplit{2, 2, 0}));
}

TEST(ComputeInvariants, Examples) {
    const InvariantVector p4 = compute_invariants(fixtures::load(fixtures::kP4));
    EXPECT_EQ(p4, (InvariantVector{10, 6, 12, 10, 1, 10, 8, 0, 3, 1}));
    const InvariantVector k4 = compute_invariants(fixtures::load(fixtures::kK4));
    EXPECT_EQ(k4.vertex_pi, 12U);
    EXPECT_EQ(k4.szeged, 6U);
    EXPECT_EQ(k4.pi, 24U);
    EXPECT_EQ(k4.edge_szeged, 24U);
    EXPECT_EQ(k4.zagreb1, 36U);
    EXPECT_EQ(k4.zagreb2, 54U);
    EXPECT_EQ(k4.triangles, 4U);
    const InvariantVector c5 = compute_invariants(fixtures::load(fixtures::kC5));
    EXPECT_EQ(c5, (InvariantVector{15, 20, 20, 20, 20, 20, 20, 0, 2, 2}));
    EXPECT_THROW(compute_invariants(Graph(2)), GraphError);
    EXPECT_EQ(compute_invariants(Graph(1)), InvariantVector{});
}

TEST(ComputeInvariants, MatchesNaiveOracleThroughOrderSeven) {
    for (const Graph& g : connected_up_to(7)) {
        const oracle::Matrix a = oracle::adjacency(g);
        const oracle::Indices want = oracle::indices(a);
        const InvariantVector got = compute_invariants(g);
        ASSERT_EQ(got.wiener, want.W);
        ASSERT_EQ(got.pi, want.PI);
        ASSERT_EQ(got.vertex_pi, want.PIv);
        ASSERT_EQ(got.szeged, want.Sz);
        ASSERT_EQ(got.edge_szeged, want.SzE);
        ASSERT_EQ(got.zagreb1, want.M1);
        ASSERT_EQ(got.zagreb2, want.M2);
        ASSERT_EQ(got.triangles, want.t);
        ASSERT_EQ(static_cast<int>(got.diameter), want.diam);
        ASSERT_EQ(static_cast<int>(got.min_degree), want.delta);
    }
}

TEST(Splits, MatchOracleAndCountInvariants) {
    for (const Graph& g : connected_up_to(6, 2)) {
        const oracle::Matrix a = oracle::adjacency(g);
        const auto m = static_cast<std::uint32_t>(g.size());
        const auto n = static_cast<std::uint32_t>(g.order());
        const EdgeSplits all = all_splits(g, DistanceTable(g));
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge e = g.edges()[i];
            const oracle::Splits want = oracle::split(a, e.u, e.v);
            const EdgeVertexSplit vs = vertex_split(g, e);
            const EdgeEdgeSplit es = edge_split(g, e);
            ASSERT_EQ(vs, (EdgeVertexSplit{static_cast<std::uint32_t>(want.nu), static_cast<std::uint32_t>(want.nv),
                                           static_cast<std::uint32_t>(want.eq), static_cast<std::uint32_t>(want.te)}));
            ASSERT_EQ(es, (EdgeEdgeSplit{static_cast<std::uint32_t>(want.mu), static_cast<std::uint32_t>(want.mv),
                                         static_cast<std::uint32_t>(want.meq)}));
            ASSERT_EQ(all.vertex[i], vs);
            ASSERT_EQ(all.edge[i], es);
            ASSERT_EQ(vs.nu + vs.nv + vs.eq, n);
            ASSERT_GE(vs.nu, 1U);
            ASSERT_GE(vs.nv, 1U);
            ASSERT_EQ(es.mu + es.mv + es.eq, m - 1);
        }
    }
}

TEST(Identities, TreesHaveWienerEqualSzeged) {
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& g : generate_graphs(n, {.connected = true})) {
            if (g.size() != static_cast<std::size_t>(n - 1)) continue;
            const InvariantVector iv = compute_invariants(g);
            ASSERT_EQ(iv.wiener, iv.szeged);
        }
    }
}

TEST(Identities, BipartiteVertexPiIsNm) {
    for (const Graph& g : connected_up_to(7)) {
        if (!is_bipartite(g)) continue;
        const InvariantVector iv = compute_invariants(g);
        ASSERT_EQ(iv.vertex_pi, g.order() * g.size());
        for (const Edge& e : g.edges()) ASSERT_EQ(vertex_split(g, e).eq, 0U);
    }
}

TEST(Identities, ZagrebBoundOnVertexPi) {
    for (const Graph& g : connected_up_to(7)) {
        const InvariantVector iv = compute_invariants(g);
        const auto piv = static_cast<std::int64_t>(iv.vertex_pi);
        const auto bound = static_cast<std::int64_t>(iv.zagreb1) - 6 * static_cast<std::int64_t>(iv.triangles);
        ASSERT_GE(piv, bound);
        if (iv.diameter == 2) ASSERT_EQ(piv, bound) << write_graph6(g);
    }
}

TEST(DistanceBalanced, Examples) {
    EXPECT_TRUE(is_distance_balanced(fixtures::load(fixtures::kC4)));
    EXPECT_TRUE(is_distance_balanced(fixtures::load(fixtures::kPetersen)));
    EXPECT_FALSE(is_distance_balanced(fixtures::load(fixtures::kBull)));
    const auto pendant = vertex_split(fixtures::load(fixtures::kBull), {0, 3});
    EXPECT_EQ(pendant.nu, 4U);
    EXPECT_EQ(pendant.nv, 1U);
}

TEST(DistanceBalanced, BipartiteBalancedIffSzegedIsQuarterN2m) {
    for (const Graph& g : connected_up_to(7, 2)) {
        if (!is_bipartite(g)) continue;
        const InvariantVector iv = compute_invariants(g);
        const bool formula = 4 * iv.szeged == g.order() * g.order() * g.size();
        ASSERT_EQ(is_distance_balanced(g), formula) << write_graph6(g);
    }
}

}  // namespace
}  // namespace pisz
