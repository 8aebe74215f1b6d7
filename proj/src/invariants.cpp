#include "pisz/invariants.hpp"

#include <algorithm>

namespace pisz {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (g.order() == 0) throw GraphError(std::string(what) + ": empty graph");
    if (!is_connected(g)) throw GraphError(std::string(what) + ": graph is disconnected");
}

void require_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw GraphError(to_string(e) + " is not an edge");
}

EdgeVertexSplit split_vertices(const Graph& g, Edge e, const Distance* du, const Distance* dv) {
    EdgeVertexSplit s;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (du[w] < dv[w]) {
            ++s.nu;
        } else if (dv[w] < du[w]) {
            ++s.nv;
        } else {
            ++s.eq;
        }
    }
    s.te = static_cast<std::uint32_t>(std::popcount(g.neighbors(e.u) & g.neighbors(e.v)));
    return s;
}

EdgeEdgeSplit split_edges(const Graph& g, Edge e, const Distance* du, const Distance* dv) {
    EdgeEdgeSplit s;
    for (const Edge& f : g.edges()) {
        if (f == e) continue;
        const Distance to_u = std::min(du[f.u], du[f.v]);
        const Distance to_v = std::min(dv[f.u], dv[f.v]);
        if (to_u < to_v) {
            ++s.mu;
        } else if (to_v < to_u) {
            ++s.mv;
        } else {
            ++s.eq;
        }
    }
    return s;
}

}  // namespace

EdgeVertexSplit vertex_split(const Graph& g, Edge e) {
    require_connected(g, "vertex_split");
    require_edge(g, e);
    const auto du = bfs_distances(g, e.u);
    const auto dv = bfs_distances(g, e.v);
    return split_vertices(g, e, du.data(), dv.data());
}

EdgeEdgeSplit edge_split(const Graph& g, Edge e) {
    require_connected(g, "edge_split");
    require_edge(g, e);
    const auto du = bfs_distances(g, e.u);
    const auto dv = bfs_distances(g, e.v);
    return split_edges(g, e, du.data(), dv.data());
}

EdgeSplits all_splits(const Graph& g, const DistanceTable& d) {
    EdgeSplits out;
    out.vertex.reserve(g.size());
    out.edge.reserve(g.size());
    for (const Edge& e : g.edges()) {
        out.vertex.push_back(split_vertices(g, e, d.row(e.u), d.row(e.v)));
        out.edge.push_back(split_edges(g, e, d.row(e.u), d.row(e.v)));
    }
    return out;
}

std::uint64_t zagreb1(const Graph& g) {
    std::uint64_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::uint64_t deg = g.degree(v);
        sum += deg * deg;
    }
    return sum;
}

std::uint64_t zagreb2(const Graph& g) {
    std::uint64_t sum = 0;
    for (const Edge& e : g.edges()) {
        sum += static_cast<std::uint64_t>(g.degree(e.u)) * static_cast<std::uint64_t>(g.degree(e.v));
    }
    return sum;
}

InvariantVector compute_invariants(const Graph& g) {
    require_connected(g, "compute_invariants");
    const DistanceTable d(g);
    return compute_invariants(g, d, all_splits(g, d));
}

InvariantVector compute_invariants(const Graph& g, const DistanceTable& d, const EdgeSplits& splits) {
    InvariantVector iv;
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            iv.wiener += d.at(u, v);
            iv.diameter = std::max<std::uint32_t>(iv.diameter, d.at(u, v));
        }
    }
    for (const auto& s : splits.vertex) {
        iv.vertex_pi += s.nu + s.nv;
        iv.szeged += static_cast<std::uint64_t>(s.nu) * s.nv;
        iv.triangles += s.te;
    }
    iv.triangles /= 3;
    for (const auto& s : splits.edge) {
        iv.pi += s.mu + s.mv;
        iv.edge_szeged += static_cast<std::uint64_t>(s.mu) * s.mv;
    }
    iv.zagreb1 = zagreb1(g);
    iv.zagreb2 = zagreb2(g);
    iv.min_degree = static_cast<std::uint32_t>(min_degree(g));
    return iv;
}

bool is_distance_balanced(const Graph& g) {
    require_connected(g, "is_distance_balanced");
    const DistanceTable d(g);
    for (const Edge& e : g.edges()) {
        const auto s = split_vertices(g, e, d.row(e.u), d.row(e.v));
        if (s.nu != s.nv) return false;
    }
    return true;
}

}  // namespace pisz
