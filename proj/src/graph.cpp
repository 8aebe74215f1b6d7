#include "pisz/graph.hpp"

namespace pisz {

namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxOrder) {
        throw GraphError("graph order " + std::to_string(order) + " outside 0.." +
                         std::to_string(kMaxOrder));
    }
}

}  // namespace

Graph::Graph(int order) : n_(order) { check_order(order); }

Graph::Graph(int order, std::span<const Edge> edges) : n_(order) {
    check_order(order);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
            throw GraphError("edge " + to_string(e) + " has an endpoint out of range");
        }
        if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
        if (adjacent(e.u, e.v)) throw GraphError("duplicate edge " + to_string(e));
        rows_[e.u] |= bit(e.v);
        rows_[e.v] |= bit(e.u);
    }
    rebuild_edges();
}

Graph Graph::from_rows(int order, std::span<const VertexSet> rows) {
    check_order(order);
    if (rows.size() != static_cast<std::size_t>(order)) {
        throw GraphError("row count does not match order");
    }
    Graph g(order);
    const VertexSet universe = g.all_vertices();
    for (int v = 0; v < order; ++v) {
        if (rows[v] & ~universe) throw GraphError("row " + std::to_string(v) + " exceeds order");
        if (rows[v] & bit(v)) throw GraphError("loop at vertex " + std::to_string(v));
        g.rows_[v] = rows[v];
    }
    for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) {
            if (g.adjacent(u, v) != g.adjacent(v, u)) {
                throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                 std::to_string(v));
            }
        }
    }
    g.rebuild_edges();
    return g;
}

bool Graph::has_edge(Edge e) const {
    return e.u >= 0 && e.v >= 0 && e.u < n_ && e.v < n_ && e.u != e.v && adjacent(e.u, e.v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw GraphError("permutation size mismatch");
    std::array<VertexSet, kMaxOrder> out{};
    VertexSet seen = 0;
    for (int v = 0; v < n_; ++v) {
        if (perm[v] < 0 || perm[v] >= n_ || (seen & bit(perm[v]))) {
            throw GraphError("not a permutation");
        }
        seen |= bit(perm[v]);
    }
    for (const Edge& e : edges_) {
        out[perm[e.u]] |= bit(perm[e.v]);
        out[perm[e.v]] |= bit(perm[e.u]);
    }
    return from_rows(n_, {out.data(), static_cast<std::size_t>(n_)});
}

Graph Graph::with_vertex(VertexSet neighborhood) const {
    if (n_ == kMaxOrder) throw GraphError("graph already at maximum order");
    if (neighborhood & ~all_vertices()) throw GraphError("neighborhood exceeds order");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.rows_[n_] = neighborhood;
    for (VertexSet s = neighborhood; s; s &= s - 1) {
        g.rows_[std::countr_zero(s)] |= bit(n_);
    }
    g.rebuild_edges();
    return g;
}

Graph Graph::induced(VertexSet keep) const {
    keep &= all_vertices();
    std::array<int, kMaxOrder> index{};
    int k = 0;
    for (VertexSet s = keep; s; s &= s - 1) index[std::countr_zero(s)] = k++;
    std::array<VertexSet, kMaxOrder> out{};
    for (VertexSet s = keep; s; s &= s - 1) {
        const int v = std::countr_zero(s);
        for (VertexSet t = rows_[v] & keep; t; t &= t - 1) {
            out[index[v]] |= bit(index[std::countr_zero(t)]);
        }
    }
    return from_rows(k, {out.data(), static_cast<std::size_t>(k)});
}

void Graph::rebuild_edges() {
    edges_.clear();
    for (int u = 0; u < n_; ++u) {
        for (VertexSet s = rows_[u] & ~((bit(u) << 1) - 1); s; s &= s - 1) {
            edges_.push_back({u, std::countr_zero(s)});
        }
    }
}

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace pisz
