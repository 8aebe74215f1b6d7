#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "pisz/graph.hpp"
#include "pisz/theorems.hpp"

namespace pisz {

/// Largest order the generator accepts.
inline constexpr int kMaxEnumerationOrder = 10;
/// Largest order surveyed without an explicit override.
inline constexpr int kDefaultSurveyCap = 8;

class EnumerationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Emission-time predicates. Augmentation always runs over all parents so
/// that disconnected parents still produce connected children.
struct GraphFilter {
    bool connected = false;
    int min_degree = 0;
    bool bipartite = false;
    bool triangle_free = false;

    bool accepts(const Graph& g) const;
};

/// Deterministic slice `index` of `count` contiguous parent ranges.
struct Shard {
    int index = 0;
    int count = 1;

    /// Parses "i/k" with 0 <= i < k.
    static Shard parse(std::string_view text);
};

struct ParallelOptions {
    int workers = 1;
    Shard shard;
    /// Permits surveys above kDefaultSurveyCap.
    bool allow_large = false;
};

/// Children of `parent` with one more vertex, one per isomorphism class whose
/// canonical deletion vertex returns `parent`'s class. Over isomorph-free
/// parents of order n-1 the union is isomorph-free and complete for order n.
std::vector<Graph> canonical_children(const Graph& parent);

/// Compact storage for generated levels (order <= kMaxEnumerationOrder).
struct PackedGraph {
    std::uint8_t order = 0;
    std::array<std::uint16_t, kMaxEnumerationOrder> rows{};

    static PackedGraph pack(const Graph& g);
    Graph unpack() const;
};

/// Holds the generated levels so repeated queries reuse them.
class Enumerator {
public:
    /// One representative per isomorphism class of order n (0 <= n <= 10).
    std::vector<Graph> level(int n, int workers = 1);
    std::size_t level_size(int n, int workers = 1);

    /// Visits every graph of order n passing `filter`, in a deterministic
    /// order independent of the worker count.
    void for_each(int n, const GraphFilter& filter, const ParallelOptions& options,
                  const std::function<void(const Graph&)>& visit);

    std::vector<Graph> generate(int n, const GraphFilter& filter = {}, const ParallelOptions& options = {});

    /// Applies `map` to the filtered children of every parent in the shard on
    /// `options.workers` threads and folds the results with `reduce` in parent
    /// order, so the result does not depend on the worker count. `map` runs
    /// concurrently and must not touch shared state.
    template <class Result, class Map, class Reduce>
    Result map_reduce(int n, const GraphFilter& filter, const ParallelOptions& options, Result init, Map map,
                      Reduce reduce);

private:
    const std::vector<PackedGraph>& packed_level(int n, int workers);
    std::span<const PackedGraph> shard_of(int n, const ParallelOptions& options);

    std::map<int, std::vector<PackedGraph>> levels_;
};

std::vector<Graph> generate_graphs(int n, const GraphFilter& filter = {}, const ParallelOptions& options = {});

struct TheoremTally {
    std::uint64_t checked = 0;
    std::uint64_t held = 0;
    std::uint64_t equality = 0;
    std::uint64_t inconsistent = 0;

    friend bool operator==(const TheoremTally&, const TheoremTally&) = default;
};

struct Counterexample {
    std::string graph6;
    std::string theorem;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct EnumerationSummary {
    int order = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t connected_graphs = 0;
    std::array<TheoremTally, std::size(kAllTheorems)> per_theorem{};
    /// Any violated or inconsistent verdict; expected empty.
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0;

    bool clean() const;
};

/// Runs every theorem check over all connected graphs of order n.
/// Throws EnumerationError for n < 3, n > 10, or n > 8 without allow_large.
EnumerationSummary survey(int n, const ParallelOptions& options = {}, Enumerator* enumerator = nullptr);

/// Connected non-bipartite graphs of order n with PI_v = nm - 3t.
std::vector<Graph> extremal_nonbipartite(int n, const ParallelOptions& options = {},
                                         Enumerator* enumerator = nullptr);
std::uint64_t table1(int n, const ParallelOptions& options = {}, Enumerator* enumerator = nullptr);

/// Published counts for n = 3..10.
std::uint64_t table1_expected(int n);

/// Every extremal non-bipartite graph of order n (3 <= n <= 8) has diameter <= 2.
bool extremal_diameter_check(int n, Enumerator* enumerator = nullptr);

struct YnCensus {
    std::uint64_t brute_force = 0;
    std::uint64_t formula = 0;
    std::uint64_t generated = 0;
    bool sets_match = false;
};

/// 3 <= n <= 9.
YnCensus yn_census(int n, const ParallelOptions& options = {}, Enumerator* enumerator = nullptr);

// -- implementation -------------------------------------------------------

namespace detail {
void check_order(int n);
std::vector<std::size_t> chunk_bounds(std::size_t count);
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);
std::vector<Graph> filtered_children(const PackedGraph& parent, const GraphFilter& filter);
}  // namespace detail

template <class Result, class Map, class Reduce>
Result Enumerator::map_reduce(int n, const GraphFilter& filter, const ParallelOptions& options, Result init,
                              Map map, Reduce reduce) {
    const std::span<const PackedGraph> parents = shard_of(n, options);
    const auto bounds = detail::chunk_bounds(parents.size());
    using Partial = std::invoke_result_t<Map&, std::span<const Graph>>;
    Result acc = std::move(init);
    std::vector<Partial> partial;
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        const auto chunk = parents.subspan(bounds[c], bounds[c + 1] - bounds[c]);
        partial.assign(chunk.size(), Partial{});
        detail::parallel_for(chunk.size(), options.workers, [&](std::size_t i) {
            const std::vector<Graph> kids = detail::filtered_children(chunk[i], filter);
            partial[i] = map(std::span<const Graph>(kids));
        });
        for (auto& r : partial) reduce(acc, std::move(r));
    }
    return acc;
}

}  // namespace pisz
