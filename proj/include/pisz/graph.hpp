#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisz {

using Vertex = int;

/// Largest supported order. Adjacency rows are single 64-bit words.
inline constexpr int kMaxOrder = 64;

using VertexSet = std::uint64_t;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Each vertex owns a bit row of its neighbors, so
/// adjacency tests and neighborhood intersections are single word operations.
/// The edge list is kept in lexicographic order with u < v.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph of order n.
    explicit Graph(int order);

    /// Throws GraphError on loops, duplicate edges or endpoints out of range.
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges)
        : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(int order, std::span<const VertexSet> rows);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }
    VertexSet all_vertices() const { return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1; }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

    bool has_edge(Edge e) const;

    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    /// Appends vertex n adjacent to every vertex in `neighborhood`.
    Graph with_vertex(VertexSet neighborhood) const;

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    Graph induced(VertexSet keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void rebuild_edges();

    int n_ = 0;
    std::array<VertexSet, kMaxOrder> rows_{};
    std::vector<Edge> edges_;
};

std::string to_string(const Edge& e);

}  // namespace pisz
