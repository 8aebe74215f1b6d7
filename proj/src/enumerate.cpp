#include "pisz/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "pisz/algorithms.hpp"
#include "pisz/canonical.hpp"
#include "pisz/families.hpp"
#include "pisz/graph6.hpp"
#include "pisz/invariants.hpp"

namespace pisz {

namespace {

constexpr std::size_t kChunkParents = 2048;

// Isomorphism-invariant vertex key used to shortlist the deletion vertex.
std::uint32_t deletion_key(const Graph& g, Vertex v) {
    std::uint32_t neighbor_degrees = 0;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) neighbor_degrees += g.degree(std::countr_zero(s));
    return (static_cast<std::uint32_t>(g.degree(v)) << 16) | neighbor_degrees;
}

// The canonical deletion orbit is the orbit of the shortlisted vertex whose
// rooted canonical form is smallest. Returns the rooted form of `added` when
// it lies in that orbit.
std::optional<CanonicalLabeling> accepted_as_last(const Graph& child, Vertex added) {
    const int n = child.order();
    std::array<std::uint32_t, kMaxOrder> key{};
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n; ++v) {
        key[v] = deletion_key(child, v);
        best = std::max(best, key[v]);
    }
    if (key[added] != best) return std::nullopt;
    CanonicalLabeling mine = canonical_labeling_rooted(child, added);
    for (Vertex v = 0; v < n; ++v) {
        if (v == added || key[v] != best) continue;
        if (canonical_labeling_rooted(child, v) < mine) return std::nullopt;
    }
    return mine;
}

void require_range(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi) {
        throw EnumerationError(std::string(what) + ": order " + std::to_string(n) + " outside " +
                               std::to_string(lo) + ".." + std::to_string(hi));
    }
}

}  // namespace

bool GraphFilter::accepts(const Graph& g) const {
    if (connected && !is_connected(g)) return false;
    if (min_degree > 0 && pisz::min_degree(g) < min_degree) return false;
    if (bipartite && !is_bipartite(g)) return false;
    if (triangle_free && triangles_total(g) != 0) return false;
    return true;
}

Shard Shard::parse(std::string_view text) {
    const auto slash = text.find('/');
    Shard s;
    if (slash == std::string_view::npos) throw std::invalid_argument("shard must look like I/K");
    const auto head = text.substr(0, slash);
    const auto tail = text.substr(slash + 1);
    const auto r1 = std::from_chars(head.data(), head.data() + head.size(), s.index);
    const auto r2 = std::from_chars(tail.data(), tail.data() + tail.size(), s.count);
    if (r1.ec != std::errc{} || r1.ptr != head.data() + head.size() || r2.ec != std::errc{} ||
        r2.ptr != tail.data() + tail.size() || s.count < 1 || s.index < 0 || s.index >= s.count) {
        throw std::invalid_argument("shard must be I/K with 0 <= I < K");
    }
    return s;
}

std::vector<Graph> canonical_children(const Graph& parent) {
    const int n = parent.order();
    if (n >= kMaxOrder) throw GraphError("canonical_children: parent already at maximum order");
    std::vector<Graph> out;
    std::vector<CanonicalLabeling> seen;
    const VertexSet subsets = n == 0 ? 1 : (VertexSet{1} << n);
    for (VertexSet s = 0; s < subsets; ++s) {
        Graph child = parent.with_vertex(s);
        auto form = accepted_as_last(child, n);
        if (!form) continue;
        // Neighborhoods in one orbit of Aut(parent) give isomorphic children.
        const bool duplicate =
            std::any_of(seen.begin(), seen.end(), [&](const CanonicalLabeling& c) { return same_class(c, *form); });
        if (duplicate) continue;
        seen.push_back(*form);
        out.push_back(std::move(child));
    }
    return out;
}

PackedGraph PackedGraph::pack(const Graph& g) {
    if (g.order() > kMaxEnumerationOrder) throw GraphError("PackedGraph holds at most 10 vertices");
    PackedGraph p;
    p.order = static_cast<std::uint8_t>(g.order());
    for (Vertex v = 0; v < g.order(); ++v) p.rows[v] = static_cast<std::uint16_t>(g.neighbors(v));
    return p;
}

Graph PackedGraph::unpack() const {
    std::array<VertexSet, kMaxEnumerationOrder> wide{};
    std::copy(rows.begin(), rows.end(), wide.begin());
    return Graph::from_rows(order, {wide.data(), order});
}

namespace detail {

void check_order(int n) { require_range(n, 0, kMaxEnumerationOrder, "enumeration"); }

std::vector<std::size_t> chunk_bounds(std::size_t count) {
    std::vector<std::size_t> bounds;
    for (std::size_t b = 0; b < count; b += kChunkParents) bounds.push_back(b);
    bounds.push_back(count);
    return bounds;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    const auto spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    threads.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) {
        threads.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count; i = next++) body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<Graph> filtered_children(const PackedGraph& parent, const GraphFilter& filter) {
    std::vector<Graph> kids = canonical_children(parent.unpack());
    std::erase_if(kids, [&](const Graph& g) { return !filter.accepts(g); });
    return kids;
}

}  // namespace detail

const std::vector<PackedGraph>& Enumerator::packed_level(int n, int workers) {
    detail::check_order(n);
    if (auto it = levels_.find(n); it != levels_.end()) return it->second;
    std::vector<PackedGraph> out;
    if (n == 0) {
        out.push_back(PackedGraph{});
    } else {
        const auto& parents = packed_level(n - 1, workers);
        const auto bounds = detail::chunk_bounds(parents.size());
        std::vector<std::vector<Graph>> kids;
        for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
            kids.assign(bounds[c + 1] - bounds[c], {});
            detail::parallel_for(kids.size(), workers, [&](std::size_t i) {
                kids[i] = canonical_children(parents[bounds[c] + i].unpack());
            });
            for (const auto& group : kids) {
                for (const Graph& g : group) out.push_back(PackedGraph::pack(g));
            }
        }
    }
    return levels_.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> Enumerator::level(int n, int workers) {
    std::vector<Graph> out;
    for (const auto& p : packed_level(n, workers)) out.push_back(p.unpack());
    return out;
}

std::size_t Enumerator::level_size(int n, int workers) { return packed_level(n, workers).size(); }

std::span<const PackedGraph> Enumerator::shard_of(int n, const ParallelOptions& options) {
    require_range(n, 1, kMaxEnumerationOrder, "generate_graphs");
    if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");
    const auto& parents = packed_level(n - 1, options.workers);
    const std::size_t total = parents.size();
    const auto k = static_cast<std::size_t>(options.shard.count);
    const auto i = static_cast<std::size_t>(options.shard.index);
    if (i >= k) throw std::invalid_argument("shard index out of range");
    const std::size_t begin = total * i / k;
    const std::size_t end = total * (i + 1) / k;
    return std::span<const PackedGraph>(parents).subspan(begin, end - begin);
}

void Enumerator::for_each(int n, const GraphFilter& filter, const ParallelOptions& options,
                          const std::function<void(const Graph&)>& visit) {
    map_reduce(
        n, filter, options, 0,
        [](std::span<const Graph> kids) { return std::vector<Graph>(kids.begin(), kids.end()); },
        [&visit](int&, std::vector<Graph> kids) {
            for (const Graph& g : kids) visit(g);
        });
}

std::vector<Graph> Enumerator::generate(int n, const GraphFilter& filter, const ParallelOptions& options) {
    std::vector<Graph> out;
    for_each(n, filter, options, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> generate_graphs(int n, const GraphFilter& filter, const ParallelOptions& options) {
    Enumerator e;
    return e.generate(n, filter, options);
}

bool EnumerationSummary::clean() const {
    return counterexamples.empty() &&
           std::all_of(per_theorem.begin(), per_theorem.end(), [](const TheoremTally& t) {
               return t.inconsistent == 0 && t.held == t.checked;
           });
}

EnumerationSummary survey(int n, const ParallelOptions& options, Enumerator* enumerator) {
    require_range(n, 3, kMaxEnumerationOrder, "survey");
    if (n > kDefaultSurveyCap && !options.allow_large) {
        throw EnumerationError("survey: order " + std::to_string(n) + " needs allow_large");
    }
    Enumerator local;
    Enumerator& e = enumerator ? *enumerator : local;
    const auto start = std::chrono::steady_clock::now();

    EnumerationSummary init;
    init.order = n;
    EnumerationSummary summary = e.map_reduce(
        n, GraphFilter{}, options, std::move(init),
        [](std::span<const Graph> kids) {
            EnumerationSummary part;
            part.total_graphs = kids.size();
            for (const Graph& g : kids) {
                if (!is_connected(g)) continue;
                ++part.connected_graphs;
                const auto verdicts = run_all(g);
                for (std::size_t i = 0; i < verdicts.size(); ++i) {
                    const auto& v = verdicts[i];
                    if (!v.applicable()) continue;
                    auto& tally = part.per_theorem[i];
                    ++tally.checked;
                    tally.held += v.outcome->holds;
                    tally.equality += v.outcome->equality;
                    tally.inconsistent += !v.outcome->consistent;
                    if (!v.outcome->holds || !v.outcome->consistent) {
                        part.counterexamples.push_back({write_graph6(g), std::string(theorem_key(v.id))});
                    }
                }
            }
            return part;
        },
        [](EnumerationSummary& acc, EnumerationSummary part) {
            acc.total_graphs += part.total_graphs;
            acc.connected_graphs += part.connected_graphs;
            for (std::size_t i = 0; i < acc.per_theorem.size(); ++i) {
                acc.per_theorem[i].checked += part.per_theorem[i].checked;
                acc.per_theorem[i].held += part.per_theorem[i].held;
                acc.per_theorem[i].equality += part.per_theorem[i].equality;
                acc.per_theorem[i].inconsistent += part.per_theorem[i].inconsistent;
            }
            acc.counterexamples.insert(acc.counterexamples.end(), part.counterexamples.begin(),
                                       part.counterexamples.end());
        });
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

std::vector<Graph> extremal_nonbipartite(int n, const ParallelOptions& options, Enumerator* enumerator) {
    require_range(n, 3, kMaxEnumerationOrder, "table1");
    Enumerator local;
    Enumerator& e = enumerator ? *enumerator : local;
    GraphFilter filter;
    filter.connected = true;
    return e.map_reduce(
        n, filter, options, std::vector<Graph>{},
        [](std::span<const Graph> kids) {
            std::vector<Graph> hits;
            for (const Graph& g : kids) {
                if (is_bipartite(g)) continue;
                const InvariantVector iv = compute_invariants(g);
                if (iv.vertex_pi == g.order() * g.size() - 3 * iv.triangles) hits.push_back(g);
            }
            return hits;
        },
        [](std::vector<Graph>& acc, std::vector<Graph> part) {
            acc.insert(acc.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        });
}

std::uint64_t table1(int n, const ParallelOptions& options, Enumerator* enumerator) {
    return extremal_nonbipartite(n, options, enumerator).size();
}

std::uint64_t table1_expected(int n) {
    static constexpr std::uint64_t kCounts[] = {1, 2, 4, 7, 11, 17, 25, 36};
    require_range(n, 3, 10, "table1_expected");
    return kCounts[n - 3];
}

bool extremal_diameter_check(int n, Enumerator* enumerator) {
    require_range(n, 3, 8, "extremal_diameter_check");
    const auto graphs = extremal_nonbipartite(n, {}, enumerator);
    return std::all_of(graphs.begin(), graphs.end(), [](const Graph& g) { return diameter(g) <= 2; });
}

YnCensus yn_census(int n, const ParallelOptions& options, Enumerator* enumerator) {
    require_range(n, 3, 9, "yn_census");
    Enumerator local;
    Enumerator& e = enumerator ? *enumerator : local;
    GraphFilter filter;
    filter.connected = true;
    filter.min_degree = 2;

    std::set<Certificate> census;
    for (const Graph& g : e.generate(n, filter, options)) {
        if (in_Yn(g)) census.insert(canonical_form(g));
    }
    std::set<Certificate> built;
    const auto members = generate_Yn(n);
    for (const Graph& g : members) {
        if (in_Yn(g)) built.insert(canonical_form(g));
    }

    YnCensus out;
    out.brute_force = census.size();
    out.formula = yn_count_formula(n);
    out.generated = members.size();
    out.sets_match = census == built && built.size() == members.size();
    return out;
}

}  // namespace pisz
