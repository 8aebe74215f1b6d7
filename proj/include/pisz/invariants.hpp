#pragma once

#include <cstdint>
#include <vector>

#include "pisz/algorithms.hpp"
#include "pisz/graph.hpp"

namespace pisz {

/// How the vertices of a connected graph split across an edge uv.
struct EdgeVertexSplit {
    std::uint32_t nu = 0;  // strictly closer to u
    std::uint32_t nv = 0;  // strictly closer to v
    std::uint32_t eq = 0;  // equidistant
    std::uint32_t te = 0;  // triangles through uv

    friend bool operator==(const EdgeVertexSplit&, const EdgeVertexSplit&) = default;
};

/// How the other edges split across uv. An edge xy is at distance
/// min(d(x,w), d(y,w)) from a vertex w; uv itself is not counted.
struct EdgeEdgeSplit {
    std::uint32_t mu = 0;
    std::uint32_t mv = 0;
    std::uint32_t eq = 0;

    friend bool operator==(const EdgeEdgeSplit&, const EdgeEdgeSplit&) = default;
};

struct InvariantVector {
    std::uint64_t wiener = 0;      // W, unordered pairs
    std::uint64_t pi = 0;          // PI
    std::uint64_t vertex_pi = 0;   // PI_v
    std::uint64_t szeged = 0;      // Sz
    std::uint64_t edge_szeged = 0; // Sz_e
    std::uint64_t zagreb1 = 0;     // M1
    std::uint64_t zagreb2 = 0;     // M2
    std::uint64_t triangles = 0;   // t
    std::uint32_t diameter = 0;
    std::uint32_t min_degree = 0;

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Splits of one edge, from two BFS runs. Throws GraphError when g is
/// disconnected or e is not an edge.
EdgeVertexSplit vertex_split(const Graph& g, Edge e);
EdgeEdgeSplit edge_split(const Graph& g, Edge e);

/// Per-edge splits for every edge, in g.edges() order, from one distance table.
struct EdgeSplits {
    std::vector<EdgeVertexSplit> vertex;
    std::vector<EdgeEdgeSplit> edge;
};
EdgeSplits all_splits(const Graph& g, const DistanceTable& d);

/// Throws GraphError on disconnected input or n == 0.
InvariantVector compute_invariants(const Graph& g);

/// Same, reusing splits already computed for g.
InvariantVector compute_invariants(const Graph& g, const DistanceTable& d, const EdgeSplits& splits);

std::uint64_t zagreb1(const Graph& g);
std::uint64_t zagreb2(const Graph& g);

/// nu == nv on every edge. Throws GraphError on disconnected input.
bool is_distance_balanced(const Graph& g);

}  // namespace pisz
