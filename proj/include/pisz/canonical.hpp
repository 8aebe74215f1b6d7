#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pisz/graph.hpp"

namespace pisz {

/// Isomorphism certificate: order byte followed by the canonically relabeled
/// adjacency rows, eight little-endian bytes each. Equal iff isomorphic.
using Certificate = std::vector<std::uint8_t>;

/// Canonical labeling of a (possibly vertex-colored) graph.
struct CanonicalLabeling {
    int order = 0;
    /// position[v] is the canonical label of vertex v.
    std::array<std::uint8_t, kMaxOrder> position{};
    /// Adjacency rows of the canonically relabeled graph.
    std::array<VertexSet, kMaxOrder> rows{};

    Certificate certificate() const;
    Graph canonical_graph() const;

    /// Compares the relabeled graphs only; total order on isomorphism classes.
    friend bool operator<(const CanonicalLabeling& a, const CanonicalLabeling& b);
    friend bool same_class(const CanonicalLabeling& a, const CanonicalLabeling& b);
};

/// Canonical labeling of g. `colors` is an ordered vertex partition (each
/// mask one color class, classes must cover V exactly); empty means uncolored.
/// Isomorphisms are required to map each class onto the class at the same index.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> colors = {});

Certificate canonical_form(const Graph& g);

/// Canonical form of g with vertex v singled out; equal for v and w iff some
/// automorphism of g maps v to w.
CanonicalLabeling canonical_labeling_rooted(const Graph& g, Vertex v);

}  // namespace pisz
