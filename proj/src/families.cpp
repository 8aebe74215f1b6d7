#include "pisz/families.hpp"

#include <string>

#include "pisz/algorithms.hpp"
#include "pisz/invariants.hpp"

namespace pisz {

SrgParams::SrgParams(int v, int k, int lambda, int mu) : v_(v), k_(k), lambda_(lambda), mu_(mu) {
    const std::string desc = "SRG(" + std::to_string(v) + "," + std::to_string(k) + "," +
                             std::to_string(lambda) + "," + std::to_string(mu) + ")";
    if (!(v > k && k >= 1) || lambda < 0 || mu < 0) throw GraphError(desc + ": need v > k >= 1");
    if (static_cast<long long>(k) * (k - lambda - 1) != static_cast<long long>(v - k - 1) * mu) {
        throw GraphError(desc + ": k(k - lambda - 1) != (v - k - 1) mu");
    }
}

SrgIndices srg_closed_forms(const SrgParams& p) {
    const std::uint64_t v = p.v();
    const std::uint64_t k = p.k();
    const std::uint64_t lambda = p.lambda();
    if ((v * k) % 2 != 0) throw GraphError("SRG with v*k odd has no edge set");
    const std::uint64_t m = v * k / 2;
    // lambda <= k - 1 by feasibility, so both differences are nonnegative.
    SrgIndices out;
    out.vertex_pi = v * k * k - k * v * lambda;
    out.szeged = m * k * k - 2 * m * k * lambda + m * lambda * lambda;
    return out;
}

Graph YnMember::build() const {
    std::vector<Edge> edges;
    if (kind == Kind::kK2k) {
        if (paths < 3) throw GraphError("K_{2,k} member needs k >= 3");
        for (int i = 0; i < paths; ++i) {
            edges.push_back({0, 2 + i});
            edges.push_back({1, 2 + i});
        }
        return Graph(order(), edges);
    }
    if (triangles < 0 || squares < 0 || triangles + squares < 1) {
        throw GraphError("bouquet member needs at least one cycle");
    }
    int next = 1;
    for (int i = 0; i < triangles; ++i, next += 2) {
        edges.push_back({0, next});
        edges.push_back({0, next + 1});
        edges.push_back({next, next + 1});
    }
    for (int i = 0; i < squares; ++i, next += 3) {
        edges.push_back({0, next});
        edges.push_back({next, next + 1});
        edges.push_back({next + 1, next + 2});
        edges.push_back({0, next + 2});
    }
    return Graph(order(), edges);
}

bool in_Xn(const Graph& g) {
    if (!is_connected(g) || g.order() == 0) throw GraphError("in_Xn: graph is disconnected");
    const DistanceTable d(g);
    for (const auto& s : all_splits(g, d).vertex) {
        if (std::min(s.nu, s.nv) != 1) return false;
    }
    return true;
}

bool xn_characterization(const Graph& g) {
    if (!is_connected(g) || g.order() == 0) throw GraphError("xn_characterization: graph is disconnected");
    return diameter(g) <= 2 && !has_induced(g, InducedPattern::kP4) &&
           !has_induced(g, InducedPattern::kC4);
}

bool xn_universal_vertex(const Graph& g) {
    return g.order() > 0 && max_degree(g) == g.order() - 1;
}

bool in_Yn(const Graph& g) {
    if (!is_connected(g) || g.order() == 0) throw GraphError("in_Yn: graph is disconnected");
    if (g.size() == 0) return true;
    const DistanceTable d(g);
    for (const auto& s : all_splits(g, d).edge) {
        if (std::min(s.mu, s.mv) != 1) return false;
    }
    return true;
}

std::uint64_t yn_count_formula(int n) {
    if (n < 1) throw GraphError("yn_count_formula: n must be positive");
    if (n <= 2) return 0;
    if (n <= 4) return 1;
    const std::uint64_t base = static_cast<std::uint64_t>(n - 1) / 6;
    return n % 6 == 2 ? base + 1 : base + 2;
}

std::vector<YnMember> yn_members(int n) {
    std::vector<YnMember> out;
    if (n < 3) return out;
    for (int squares = 0; 3 * squares <= n - 1; ++squares) {
        const int rest = n - 1 - 3 * squares;
        if (rest % 2 != 0) continue;
        const int triangles = rest / 2;
        if (triangles + squares == 0) continue;
        out.push_back({YnMember::Kind::kBouquet, triangles, squares, 0});
    }
    if (n >= 5) out.push_back({YnMember::Kind::kK2k, 0, 0, n - 2});
    return out;
}

std::vector<Graph> generate_Yn(int n) {
    std::vector<Graph> out;
    for (const auto& member : yn_members(n)) out.push_back(member.build());
    return out;
}

Graph complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw GraphError("complete_multipartite: no parts");
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw GraphError("complete_multipartite: parts must be positive");
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    }
    const int n = static_cast<int>(part_of.size());
    if (n > kMaxOrder) throw GraphError("complete_multipartite: too many vertices");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

std::optional<std::uint64_t> prop_sz_diam2(const Graph& g) {
    if (!is_connected(g) || g.order() == 0) throw GraphError("prop_sz_diam2: graph is disconnected");
    if (g.size() == 0 || diameter(g) != 2) return std::nullopt;
    const auto& edges = g.edges();
    const int t = triangles_per_edge(g, edges.front());
    for (const Edge& e : edges) {
        if (triangles_per_edge(g, e) != t) return std::nullopt;
    }
    const std::uint64_t tt = static_cast<std::uint64_t>(t);
    // M2 - t M1 + m t^2 is a sum of per-edge (deg u - t)(deg v - t) >= 0.
    return zagreb2(g) + g.size() * tt * tt - tt * zagreb1(g);
}

}  // namespace pisz
