#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pisz/graph.hpp"

namespace pisz {

/// Parameters of a strongly regular graph. Construction checks
/// v > k >= 1 and k(k - lambda - 1) == (v - k - 1) mu.
class SrgParams {
public:
    SrgParams(int v, int k, int lambda, int mu);

    int v() const { return v_; }
    int k() const { return k_; }
    int lambda() const { return lambda_; }
    int mu() const { return mu_; }

private:
    int v_;
    int k_;
    int lambda_;
    int mu_;
};

struct SrgIndices {
    std::uint64_t vertex_pi = 0;
    std::uint64_t szeged = 0;
};

/// Closed forms valid for any connected SRG (diameter <= 2, every edge in
/// lambda triangles). Throws GraphError when v*k is odd.
SrgIndices srg_closed_forms(const SrgParams& p);

/// Member of the family where every edge has min(m_u, m_v) = 1.
struct YnMember {
    enum class Kind { kBouquet, kK2k };
    Kind kind = Kind::kBouquet;
    int triangles = 0;  // bouquet: triangles sharing the hub
    int squares = 0;    // bouquet: 4-cycles sharing the hub
    int paths = 0;      // K_{2,k}: number of length-2 paths between the two branching vertices

    int order() const { return kind == Kind::kBouquet ? 1 + 2 * triangles + 3 * squares : paths + 2; }
    Graph build() const;
};

/// Every edge has min(n_u, n_v) = 1. K_n is a member. Throws on disconnected input.
bool in_Xn(const Graph& g);

/// Diameter <= 2 with no induced P4 and no induced C4.
bool xn_characterization(const Graph& g);

/// Some vertex is adjacent to all others.
bool xn_universal_vertex(const Graph& g);

/// Every edge has min(m_u, m_v) = 1. Throws on disconnected input.
bool in_Yn(const Graph& g);

/// Closed-form count of the members of order n (0 for n = 1, 2).
std::uint64_t yn_count_formula(int n);

/// Structural parametrization of the members of order n.
std::vector<YnMember> yn_members(int n);
std::vector<Graph> generate_Yn(int n);

/// K_{n1,...,nk}; parts are consecutive vertex ranges in the given order.
Graph complete_multipartite(std::span<const int> parts);

/// Closed form M2 - t*M1 + m*t^2 when g has diameter 2 and every edge lies
/// in the same number t of triangles; nullopt otherwise.
std::optional<std::uint64_t> prop_sz_diam2(const Graph& g);

}  // namespace pisz
