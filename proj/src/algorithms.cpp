#include "pisz/algorithms.hpp"

#include <algorithm>

namespace pisz {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

template <class Row>
void fill_bfs(const Graph& g, Vertex source, Row& out) {
    VertexSet seen = bit(source);
    VertexSet frontier = seen;
    Distance level = 0;
    out[source] = 0;
    while (frontier) {
        ++level;
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(std::countr_zero(s));
        next &= ~seen;
        for (VertexSet s = next; s; s &= s - 1) out[std::countr_zero(s)] = level;
        seen |= next;
        frontier = next;
    }
}

// Searches induced paths rooted at their smallest vertex for a chordless odd
// closing edge. `path` holds the current path in order.
bool odd_hole_from(const Graph& g, Vertex root, std::vector<Vertex>& path, VertexSet on_path) {
    const Vertex last = path.back();
    const VertexSet above_root = ~((bit(root) << 1) - 1);
    for (VertexSet s = g.neighbors(last) & ~on_path & above_root; s; s &= s - 1) {
        const Vertex x = std::countr_zero(s);
        const VertexSet touches = g.neighbors(x) & on_path & ~bit(last);
        if (touches == 0) {
            path.push_back(x);
            if (odd_hole_from(g, root, path, on_path | bit(x))) return true;
            path.pop_back();
        } else if (touches == bit(root) && path.size() >= 2) {
            const std::size_t length = path.size() + 1;
            if (length >= 5 && length % 2 == 1) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    check_vertex(g, source);
    std::vector<Distance> row(g.order(), kUnreachable);
    fill_bfs(g, source, row);
    return row;
}

DistanceTable::DistanceTable(const Graph& g)
    : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
    for (Vertex s = 0; s < n_; ++s) {
        Distance* r = d_.data() + static_cast<std::size_t>(s) * n_;
        fill_bfs(g, s, r);
    }
}

bool DistanceTable::connected() const {
    return std::none_of(d_.begin(), d_.end(), [](Distance d) { return d == kUnreachable; });
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet seen = bit(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(std::countr_zero(s));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all_vertices();
}

bool is_bipartite(const Graph& g) {
    const VertexSet all = g.all_vertices();
    VertexSet seen = 0;
    while (seen != all) {
        const Vertex start = std::countr_zero(all & ~seen);
        VertexSet side[2] = {bit(start), 0};
        VertexSet frontier = bit(start);
        int parity = 0;
        seen |= frontier;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(std::countr_zero(s));
            // A neighbor on the frontier's own side closes an odd cycle.
            if (next & side[parity]) return false;
            next &= ~seen;
            parity ^= 1;
            side[parity] |= next;
            seen |= next;
            frontier = next;
        }
    }
    return true;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.order();
    for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw GraphError("diameter of a disconnected graph");
    int diam = 0;
    std::array<Distance, kMaxOrder> row{};
    for (Vertex s = 0; s < g.order(); ++s) {
        fill_bfs(g, s, row);
        for (Vertex v = 0; v < g.order(); ++v) diam = std::max<int>(diam, row[v]);
    }
    return diam;
}

int triangles_per_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw GraphError("triangles_per_edge: " + to_string(e) + " is not an edge");
    return std::popcount(g.neighbors(e.u) & g.neighbors(e.v));
}

std::uint64_t triangles_total(const Graph& g) {
    std::uint64_t sum = 0;
    for (const Edge& e : g.edges()) sum += std::popcount(g.neighbors(e.u) & g.neighbors(e.v));
    return sum / 3;
}

bool has_induced(const Graph& g, InducedPattern pattern) {
    const int n = g.order();
    if (pattern == InducedPattern::kOddHole) {
        std::vector<Vertex> path;
        for (Vertex root = 0; root < n; ++root) {
            path.assign(1, root);
            if (odd_hole_from(g, root, path, bit(root))) return true;
        }
        return false;
    }
    // Four-vertex patterns are told apart by edge count and degree profile:
    // P4 has 3 edges with two leaves, C4 has 4 edges all of degree 2, the paw
    // has 4 edges with one leaf.
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                for (Vertex d = c + 1; d < n; ++d) {
                    const VertexSet sub = bit(a) | bit(b) | bit(c) | bit(d);
                    int edges2 = 0;
                    int leaves = 0;
                    for (Vertex v : {a, b, c, d}) {
                        const int deg = std::popcount(g.neighbors(v) & sub);
                        edges2 += deg;
                        leaves += deg == 1;
                    }
                    const int m = edges2 / 2;
                    switch (pattern) {
                        case InducedPattern::kP4:
                            if (m == 3 && leaves == 2) return true;
                            break;
                        case InducedPattern::kC4:
                            if (m == 4 && leaves == 0) return true;
                            break;
                        case InducedPattern::kC3Prime:
                            if (m == 4 && leaves == 1) return true;
                            break;
                        case InducedPattern::kOddHole:
                            break;
                    }
                }
            }
        }
    }
    return false;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_cycle(const Graph& g) {
    if (g.order() < 3 || g.size() != static_cast<std::size_t>(g.order())) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return is_connected(g);
}

bool is_regular(const Graph& g) {
    return g.order() == 0 || min_degree(g) == max_degree(g);
}

bool is_complete_multipartite(const Graph& g) {
    const VertexSet all = g.all_vertices();
    for (Vertex v = 0; v < g.order(); ++v) {
        // The part of v is its closed non-neighborhood; it must be independent
        // and every member must see exactly the complement.
        const VertexSet part = all & ~g.neighbors(v);
        for (VertexSet s = part; s; s &= s - 1) {
            if (g.neighbors(std::countr_zero(s)) != (all & ~part)) return false;
        }
    }
    return true;
}

}  // namespace pisz
