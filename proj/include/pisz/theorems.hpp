#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pisz/graph.hpp"

namespace pisz {

/// The inequalities checked by this library, in run_all order.
enum class TheoremId {
    kVertexPiVsSzeged,       // PI_v <= Sz + m, equality iff every edge has min(n_u, n_v) = 1
    kPiVsEdgeSzeged,         // PI <= Sz_e + m for min degree >= 2, equality iff min(m_u, m_v) = 1
    kVertexPiVsTriangles,    // PI_v <= nm - 3t, equality iff n_u + n_v = n - t(e) on every edge
    kSzegedVsTriangles,      // 4 Sz <= n^2 m - 12 t; equality forces bipartite, regular, n even, min degree > 1
    kSzegedVsZagreb,         // Sz >= M2 for triangle-free n >= 3, equality iff diameter 2
    kPiVsEdgeSzegedRatio,    // (m - 1) PI >= 4 Sz_e, equality iff g is an odd cycle
    kSzegedVsVertexPiSquare, // 32 m n Sz <= (n + 2)^2 PI_v^2, equality iff m = 0 or n = 2
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kVertexPiVsSzeged,     TheoremId::kPiVsEdgeSzeged,     TheoremId::kVertexPiVsTriangles,
    TheoremId::kSzegedVsTriangles,    TheoremId::kSzegedVsZagreb,     TheoremId::kPiVsEdgeSzegedRatio,
    TheoremId::kSzegedVsVertexPiSquare,
};

/// Stable identifier used in JSON output.
std::string_view theorem_key(TheoremId id);
std::optional<TheoremId> theorem_from_key(std::string_view key);

enum class Relation { kLessEqual, kGreaterEqual };

/// Result of checking one inequality on one graph. Both sides are exact
/// integers; fractional bounds are cross-multiplied.
struct Comparison {
    Relation relation = Relation::kLessEqual;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    bool equality = false;
    /// Characterized equality. For kSzegedVsTriangles this is the conjunction
    /// of the necessary conditions and `consistent` only checks equality => it.
    bool predicted_equality = false;
    bool consistent = false;
    /// Auxiliary claims evaluated alongside, e.g. {"bipartite", true}.
    std::vector<std::pair<std::string, bool>> side_flags;
};

struct TheoremVerdict {
    TheoremId id{};
    /// Absent when the hypotheses of the inequality do not hold for the graph.
    std::optional<Comparison> outcome;

    bool applicable() const { return outcome.has_value(); }
};

/// Each check throws GraphError on disconnected input unless noted.
TheoremVerdict thm_pivsz(const Graph& g);
TheoremVerdict thm_pisze(const Graph& g);
TheoremVerdict thm_piv_nm(const Graph& g);
/// Applicable when m >= 1.
TheoremVerdict thm_sz_n2m(const Graph& g);
/// Never throws; inapplicable unless connected, triangle-free and n >= 3.
TheoremVerdict thm_sz_m2(const Graph& g);
/// Applicable when m >= 2.
TheoremVerdict thm_pi_sze(const Graph& g);
/// Accepts connected graphs and edgeless graphs.
TheoremVerdict thm_32mn(const Graph& g);

/// All verdicts in kAllTheorems order, computing distances once.
std::vector<TheoremVerdict> run_all(const Graph& g);

/// Input to the Polya-Szego bound. Every a_i in [a_lo, a_hi], b_i in [b_lo, b_hi], all positive.
struct PolyaInput {
    std::vector<double> a;
    std::vector<double> b;
    double a_lo = 0;
    double a_hi = 0;
    double b_lo = 0;
    double b_hi = 0;
};

struct PolyaReport {
    double lhs_product = 0;  // (sum a_i^2)(sum b_i^2)
    double rhs_bound = 0;    // 1/4 (sqrt(AB/ab) + sqrt(ab/AB))^2 (sum a_i b_i)^2
    bool holds = false;
    bool equality = false;   // |lhs - rhs| <= tol * rhs
    double p = 0;
    double q = 0;
    bool equality_predicted = false;
};

inline constexpr double kPolyaRelativeTolerance = 1e-9;

/// Throws std::invalid_argument on empty, mismatched, nonpositive or out-of-bound input.
PolyaReport polya_szego(const PolyaInput& x);

}  // namespace pisz
