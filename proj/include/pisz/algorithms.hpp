#pragma once

#include <cstdint>
#include <vector>

#include "pisz/graph.hpp"

namespace pisz {

using Distance = std::uint8_t;

/// Marks a pair with no connecting path. Never used in arithmetic.
inline constexpr Distance kUnreachable = 0xFF;

/// BFS distances from `source`; unreachable vertices get kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Symmetric n x n hop-distance matrix.
class DistanceTable {
public:
    explicit DistanceTable(const Graph& g);

    int order() const { return n_; }
    Distance at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    const Distance* row(Vertex u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }
    bool connected() const;

private:
    int n_;
    std::vector<Distance> d_;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Minimum vertex degree; 0 for the empty graph.
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// Throws GraphError on disconnected input.
int diameter(const Graph& g);

/// |N(u) ∩ N(v)| for an edge uv; throws GraphError if e is not an edge.
int triangles_per_edge(const Graph& g, Edge e);
std::uint64_t triangles_total(const Graph& g);

enum class InducedPattern {
    kP4,
    kC4,
    kC3Prime,  // triangle with one pendant edge (paw)
    kOddHole,  // induced odd cycle of length >= 5
};

bool has_induced(const Graph& g, InducedPattern pattern);

bool is_tree(const Graph& g);
bool is_cycle(const Graph& g);
bool is_regular(const Graph& g);

/// True iff non-adjacency is an equivalence relation on V, i.e. g is K_{n1,...,nk}.
bool is_complete_multipartite(const Graph& g);

}  // namespace pisz
