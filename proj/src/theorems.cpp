#include "pisz/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pisz/algorithms.hpp"
#include "pisz/families.hpp"
#include "pisz/invariants.hpp"

namespace pisz {

namespace {

constexpr std::pair<TheoremId, std::string_view> kKeys[] = {
    {TheoremId::kVertexPiVsSzeged, "piv_le_sz_plus_m"},
    {TheoremId::kPiVsEdgeSzeged, "pi_le_sze_plus_m"},
    {TheoremId::kVertexPiVsTriangles, "piv_le_nm_minus_3t"},
    {TheoremId::kSzegedVsTriangles, "sz_le_n2m_over_4_minus_3t"},
    {TheoremId::kSzegedVsZagreb, "sz_ge_m2"},
    {TheoremId::kPiVsEdgeSzegedRatio, "pi_ge_4sze_over_m_minus_1"},
    {TheoremId::kSzegedVsVertexPiSquare, "piv_sq_bounds_sz"},
};

// Everything the checks need, computed once per graph.
struct Facts {
    explicit Facts(const Graph& graph)
        : g(graph),
          n(graph.order()),
          m(static_cast<std::int64_t>(graph.size())),
          table(graph),
          splits(all_splits(graph, table)),
          iv(compute_invariants(graph, table, splits)) {}

    const Graph& g;
    std::int64_t n;
    std::int64_t m;
    DistanceTable table;
    EdgeSplits splits;
    InvariantVector iv;
};

void require_connected(const Graph& g, const char* what) {
    if (g.order() == 0 || !is_connected(g)) {
        throw GraphError(std::string(what) + ": graph is disconnected");
    }
}

Comparison compare(Relation rel, std::int64_t lhs, std::int64_t rhs, bool predicted) {
    Comparison c;
    c.relation = rel;
    c.lhs = lhs;
    c.rhs = rhs;
    c.holds = rel == Relation::kLessEqual ? lhs <= rhs : lhs >= rhs;
    c.equality = lhs == rhs;
    c.predicted_equality = predicted;
    c.consistent = c.equality == predicted;
    return c;
}

std::int64_t as_signed(std::uint64_t x) { return static_cast<std::int64_t>(x); }

TheoremVerdict check_pivsz(const Facts& f) {
    const bool member = std::all_of(f.splits.vertex.begin(), f.splits.vertex.end(),
                                    [](const EdgeVertexSplit& s) { return std::min(s.nu, s.nv) == 1; });
    Comparison c = compare(Relation::kLessEqual, as_signed(f.iv.vertex_pi),
                           as_signed(f.iv.szeged) + f.m, member);
    const bool structural = xn_characterization(f.g);
    const bool universal = xn_universal_vertex(f.g);
    c.side_flags = {{"structural_characterization", structural}, {"universal_vertex", universal}};
    c.consistent = c.consistent && structural == member && (!member || universal);
    return {TheoremId::kVertexPiVsSzeged, c};
}

TheoremVerdict check_pisze(const Facts& f) {
    if (f.iv.min_degree < 2) return {TheoremId::kPiVsEdgeSzeged, std::nullopt};
    const bool member = std::all_of(f.splits.edge.begin(), f.splits.edge.end(),
                                    [](const EdgeEdgeSplit& s) { return std::min(s.mu, s.mv) == 1; });
    return {TheoremId::kPiVsEdgeSzeged,
            compare(Relation::kLessEqual, as_signed(f.iv.pi), as_signed(f.iv.edge_szeged) + f.m, member)};
}

TheoremVerdict check_piv_nm(const Facts& f) {
    const auto n = static_cast<std::uint32_t>(f.n);
    const bool per_edge = std::all_of(f.splits.vertex.begin(), f.splits.vertex.end(),
                                      [n](const EdgeVertexSplit& s) { return s.nu + s.nv == n - s.te; });
    Comparison c = compare(Relation::kLessEqual, as_signed(f.iv.vertex_pi),
                           f.n * f.m - 3 * as_signed(f.iv.triangles), per_edge);
    const bool bipartite = is_bipartite(f.g);
    const bool multipartite = is_complete_multipartite(f.g);
    const bool paw = has_induced(f.g, InducedPattern::kC3Prime);
    c.side_flags = {{"bipartite", bipartite}, {"complete_multipartite", multipartite}, {"induced_c3prime", paw}};
    c.consistent = c.consistent && (!bipartite || c.equality) && (!multipartite || c.equality) &&
                   (!paw || !c.equality);
    return {TheoremId::kVertexPiVsTriangles, c};
}

TheoremVerdict check_sz_n2m(const Facts& f) {
    if (f.m < 1) return {TheoremId::kSzegedVsTriangles, std::nullopt};
    const bool bipartite = is_bipartite(f.g);
    const bool regular = is_regular(f.g);
    const bool even = f.n % 2 == 0;
    const bool min_degree_above_one = f.iv.min_degree > 1;
    const bool necessary = bipartite && regular && even && min_degree_above_one;
    Comparison c = compare(Relation::kLessEqual, 4 * as_signed(f.iv.szeged),
                           f.n * f.n * f.m - 12 * as_signed(f.iv.triangles), necessary);
    const bool balanced = std::all_of(f.splits.vertex.begin(), f.splits.vertex.end(),
                                      [](const EdgeVertexSplit& s) { return s.nu == s.nv; });
    c.side_flags = {{"bipartite", bipartite},
                    {"regular", regular},
                    {"even_order", even},
                    {"min_degree_above_one", min_degree_above_one},
                    {"distance_balanced", balanced}};
    // Only necessity is claimed. For bipartite graphs (t = 0) equality is
    // additionally equivalent to being distance-balanced.
    c.consistent = (!c.equality || necessary) && (!bipartite || balanced == c.equality);
    return {TheoremId::kSzegedVsTriangles, c};
}

TheoremVerdict check_sz_m2(const Facts& f) {
    if (f.n < 3 || f.iv.triangles != 0) return {TheoremId::kSzegedVsZagreb, std::nullopt};
    return {TheoremId::kSzegedVsZagreb, compare(Relation::kGreaterEqual, as_signed(f.iv.szeged),
                                                as_signed(f.iv.zagreb2), f.iv.diameter == 2)};
}

TheoremVerdict check_pi_sze(const Facts& f) {
    if (f.m < 2) return {TheoremId::kPiVsEdgeSzegedRatio, std::nullopt};
    const bool odd_cycle = is_cycle(f.g) && f.m % 2 == 1;
    Comparison c = compare(Relation::kGreaterEqual, (f.m - 1) * as_signed(f.iv.pi),
                           4 * as_signed(f.iv.edge_szeged), odd_cycle);
    const bool tree = is_tree(f.g);
    c.side_flags = {{"tree", tree}};
    c.consistent = c.consistent && !(tree && c.equality);
    return {TheoremId::kPiVsEdgeSzegedRatio, c};
}

TheoremVerdict check_32mn(std::int64_t n, std::int64_t m, std::uint64_t szeged, std::uint64_t vertex_pi) {
    const std::int64_t piv = as_signed(vertex_pi);
    return {TheoremId::kSzegedVsVertexPiSquare,
            compare(Relation::kLessEqual, 32 * m * n * as_signed(szeged), (n + 2) * (n + 2) * piv * piv,
                    m == 0 || n == 2)};
}

}  // namespace

std::string_view theorem_key(TheoremId id) {
    for (const auto& [key_id, key] : kKeys) {
        if (key_id == id) return key;
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_key(std::string_view key) {
    for (const auto& [id, name] : kKeys) {
        if (name == key) return id;
    }
    return std::nullopt;
}

TheoremVerdict thm_pivsz(const Graph& g) {
    require_connected(g, "thm_pivsz");
    return check_pivsz(Facts(g));
}

TheoremVerdict thm_pisze(const Graph& g) {
    require_connected(g, "thm_pisze");
    return check_pisze(Facts(g));
}

TheoremVerdict thm_piv_nm(const Graph& g) {
    require_connected(g, "thm_piv_nm");
    return check_piv_nm(Facts(g));
}

TheoremVerdict thm_sz_n2m(const Graph& g) {
    require_connected(g, "thm_sz_n2m");
    return check_sz_n2m(Facts(g));
}

TheoremVerdict thm_sz_m2(const Graph& g) {
    if (g.order() < 3 || !is_connected(g) || triangles_total(g) != 0) {
        return {TheoremId::kSzegedVsZagreb, std::nullopt};
    }
    return check_sz_m2(Facts(g));
}

TheoremVerdict thm_pi_sze(const Graph& g) {
    require_connected(g, "thm_pi_sze");
    return check_pi_sze(Facts(g));
}

TheoremVerdict thm_32mn(const Graph& g) {
    if (g.size() == 0) return check_32mn(g.order(), 0, 0, 0);
    require_connected(g, "thm_32mn");
    const InvariantVector iv = compute_invariants(g);
    return check_32mn(g.order(), static_cast<std::int64_t>(g.size()), iv.szeged, iv.vertex_pi);
}

std::vector<TheoremVerdict> run_all(const Graph& g) {
    require_connected(g, "run_all");
    const Facts f(g);
    return {check_pivsz(f),  check_pisze(f),  check_piv_nm(f), check_sz_n2m(f),
            check_sz_m2(f),  check_pi_sze(f), check_32mn(f.n, f.m, f.iv.szeged, f.iv.vertex_pi)};
}

PolyaReport polya_szego(const PolyaInput& x) {
    if (x.a.empty() || x.a.size() != x.b.size()) {
        throw std::invalid_argument("polya_szego: sequences must be nonempty and of equal length");
    }
    if (!(x.a_lo > 0 && x.b_lo > 0 && x.a_lo <= x.a_hi && x.b_lo <= x.b_hi)) {
        throw std::invalid_argument("polya_szego: bounds must satisfy 0 < lo <= hi");
    }
    double sa2 = 0;
    double sb2 = 0;
    double sab = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        const double a = x.a[i];
        const double b = x.b[i];
        if (!(a > 0 && b > 0)) throw std::invalid_argument("polya_szego: entries must be positive");
        if (a < x.a_lo || a > x.a_hi || b < x.b_lo || b > x.b_hi) {
            throw std::invalid_argument("polya_szego: entry outside its bounds");
        }
        sa2 += a * a;
        sb2 += b * b;
        sab += a * b;
    }
    const double tol = kPolyaRelativeTolerance;
    const double ratio = (x.a_hi * x.b_hi) / (x.a_lo * x.b_lo);
    const double factor = 0.25 * std::pow(std::sqrt(ratio) + std::sqrt(1.0 / ratio), 2);

    PolyaReport r;
    r.lhs_product = sa2 * sb2;
    r.rhs_bound = factor * sab * sab;
    r.holds = r.lhs_product <= r.rhs_bound * (1 + tol);
    r.equality = std::abs(r.lhs_product - r.rhs_bound) <= tol * r.rhs_bound;

    const double len = static_cast<double>(x.a.size());
    const double ra = x.a_hi / x.a_lo;
    const double rb = x.b_hi / x.b_lo;
    r.p = ra / (ra + rb) * len;
    r.q = rb / (ra + rb) * len;

    auto near = [tol](double u, double v) { return std::abs(u - v) <= tol * std::max(std::abs(u), std::abs(v)); };
    if (near(ratio, 1.0)) {
        // a = A and b = B: both sequences constant.
        r.equality_predicted = true;
        return r;
    }
    const double p_int = std::round(r.p);
    const double q_int = std::round(r.q);
    if (!near(r.p, p_int) || !near(r.q, q_int)) return r;
    // Blocks: p pairs equal to (a, B), q pairs equal to (A, b).
    std::size_t low_high = 0;
    std::size_t high_low = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        if (near(x.a[i], x.a_lo) && near(x.b[i], x.b_hi)) {
            ++low_high;
        } else if (near(x.a[i], x.a_hi) && near(x.b[i], x.b_lo)) {
            ++high_low;
        } else {
            return r;
        }
    }
    r.equality_predicted = static_cast<double>(low_high) == p_int && static_cast<double>(high_low) == q_int;
    return r;
}

}  // namespace pisz
