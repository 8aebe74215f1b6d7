#include "pisz/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace pisz {

namespace {

using Perm = std::array<std::uint8_t, kMaxOrder>;

// Ordered partition of V into cells, each a vertex mask.
struct Partition {
    std::array<VertexSet, kMaxOrder> cells{};
    int count = 0;

    bool discrete(int n) const { return count == n; }

    void replace(int index, std::span<const VertexSet> parts) {
        const int extra = static_cast<int>(parts.size()) - 1;
        std::copy_backward(cells.begin() + index + 1, cells.begin() + count,
                           cells.begin() + count + extra);
        std::copy(parts.begin(), parts.end(), cells.begin() + index);
        count += extra;
    }
};

// Splits cells by neighbor counts into each splitter cell until equitable.
// Every step depends only on adjacency and cell order, so the result commutes
// with relabeling.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    std::array<int, kMaxOrder> count{};
    std::array<VertexSet, kMaxOrder> groups{};
    while (changed) {
        changed = false;
        for (int s = 0; s < p.count; ++s) {
            const VertexSet splitter = p.cells[s];
            for (int t = 0; t < p.count; ++t) {
                const VertexSet cell = p.cells[t];
                if (std::popcount(cell) == 1) continue;
                int lo = kMaxOrder;
                int hi = -1;
                for (VertexSet c = cell; c; c &= c - 1) {
                    const int v = std::countr_zero(c);
                    count[v] = std::popcount(g.neighbors(v) & splitter);
                    lo = std::min(lo, count[v]);
                    hi = std::max(hi, count[v]);
                }
                if (lo == hi) continue;
                int parts = 0;
                for (int k = lo; k <= hi; ++k) {
                    VertexSet group = 0;
                    for (VertexSet c = cell; c; c &= c - 1) {
                        const int v = std::countr_zero(c);
                        if (count[v] == k) group |= bit(v);
                    }
                    if (group) groups[parts++] = group;
                }
                p.replace(t, {groups.data(), static_cast<std::size_t>(parts)});
                t += parts - 1;
                changed = true;
            }
        }
    }
}

struct Leaf {
    Perm position{};
    Perm vertex_at{};
    std::array<VertexSet, kMaxOrder> rows{};
};

int compare_rows(const std::array<VertexSet, kMaxOrder>& a, const std::array<VertexSet, kMaxOrder>& b,
                 int n) {
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run(Partition start) {
        refine(g_, start);
        descend(start, 0, -1);
        CanonicalLabeling out;
        out.order = n_;
        out.position = best_.position;
        out.rows = best_.rows;
        return out;
    }

private:
    static constexpr std::size_t kMaxStoredAutomorphisms = 128;

    // Returns -1 to continue normally, otherwise the depth of the first-path
    // node whose current child subtree has been shown equivalent to its first.
    int descend(const Partition& p, int depth, int diverged_at) {
        if (p.discrete(n_)) return visit_leaf(p, diverged_at);

        int target = -1;
        int target_size = kMaxOrder + 1;
        for (int i = 0; i < p.count; ++i) {
            const int size = std::popcount(p.cells[i]);
            if (size > 1 && size < target_size) {
                target = i;
                target_size = size;
            }
        }

        const bool on_first_path = diverged_at < 0;
        VertexSet explored = 0;
        for (VertexSet c = p.cells[target]; c; c &= c - 1) {
            const Vertex w = std::countr_zero(c);
            if (explored && equivalent_to_explored(w, explored)) continue;

            Partition child = p;
            const VertexSet rest = p.cells[target] & ~bit(w);
            const std::array<VertexSet, 2> split = {bit(w), rest};
            child.replace(target, split);
            refine(g_, child);

            prefix_.push_back(w);
            int child_diverged = diverged_at;
            if (on_first_path) child_diverged = have_first_ ? depth : -1;
            const int jump = descend(child, depth + 1, child_diverged);
            prefix_.pop_back();

            explored |= bit(w);
            if (jump >= 0 && jump < depth) return jump;
        }
        return -1;
    }

    int visit_leaf(const Partition& p, int diverged_at) {
        Leaf leaf;
        for (int i = 0; i < n_; ++i) {
            const int v = std::countr_zero(p.cells[i]);
            leaf.position[v] = static_cast<std::uint8_t>(i);
            leaf.vertex_at[i] = static_cast<std::uint8_t>(v);
        }
        for (Vertex v = 0; v < n_; ++v) {
            VertexSet row = 0;
            for (VertexSet s = g_.neighbors(v); s; s &= s - 1) row |= bit(leaf.position[std::countr_zero(s)]);
            leaf.rows[leaf.position[v]] = row;
        }

        if (!have_first_) {
            first_ = leaf;
            best_ = leaf;
            have_first_ = true;
            return -1;
        }
        if (compare_rows(leaf.rows, first_.rows, n_) == 0) {
            record_automorphism(first_, leaf);
            return diverged_at;
        }
        const int cmp = compare_rows(leaf.rows, best_.rows, n_);
        if (cmp < 0) {
            best_ = leaf;
        } else if (cmp == 0) {
            record_automorphism(best_, leaf);
        }
        return -1;
    }

    void record_automorphism(const Leaf& from, const Leaf& to) {
        if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
        Perm gamma{};
        for (Vertex v = 0; v < n_; ++v) gamma[v] = to.vertex_at[from.position[v]];
        automorphisms_.push_back(gamma);
    }

    // True if w shares an orbit with an explored sibling under the stored
    // automorphisms that fix every individualized vertex on the current path.
    bool equivalent_to_explored(Vertex w, VertexSet explored) const {
        if (automorphisms_.empty()) return false;
        std::array<std::uint8_t, kMaxOrder> parent{};
        std::iota(parent.begin(), parent.begin() + n_, std::uint8_t{0});
        auto find = [&parent](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const Perm& gamma : automorphisms_) {
            const bool fixes_prefix =
                std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex v) { return gamma[v] == v; });
            if (!fixes_prefix) continue;
            any = true;
            for (Vertex v = 0; v < n_; ++v) {
                const int a = find(v);
                const int b = find(gamma[v]);
                if (a != b) parent[a] = static_cast<std::uint8_t>(b);
            }
        }
        if (!any) return false;
        const int root = find(w);
        for (VertexSet s = explored; s; s &= s - 1) {
            if (find(std::countr_zero(s)) == root) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<Perm> automorphisms_;
    std::vector<Vertex> prefix_;
};

}  // namespace

Certificate CanonicalLabeling::certificate() const {
    Certificate out;
    out.reserve(1 + static_cast<std::size_t>(order) * 8);
    out.push_back(static_cast<std::uint8_t>(order));
    for (int i = 0; i < order; ++i) {
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(rows[i] >> (8 * b)));
    }
    return out;
}

Graph CanonicalLabeling::canonical_graph() const {
    return Graph::from_rows(order, {rows.data(), static_cast<std::size_t>(order)});
}

bool operator<(const CanonicalLabeling& a, const CanonicalLabeling& b) {
    if (a.order != b.order) return a.order < b.order;
    return compare_rows(a.rows, b.rows, a.order) < 0;
}

bool same_class(const CanonicalLabeling& a, const CanonicalLabeling& b) {
    return a.order == b.order && compare_rows(a.rows, b.rows, a.order) == 0;
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> colors) {
    Partition start;
    if (g.order() == 0) return CanonicalLabeling{};
    if (colors.empty()) {
        start.cells[0] = g.all_vertices();
        start.count = 1;
    } else {
        VertexSet covered = 0;
        for (VertexSet c : colors) {
            if (c == 0 || (c & covered) || (c & ~g.all_vertices())) {
                throw GraphError("color classes must be nonempty, disjoint and within range");
            }
            covered |= c;
            start.cells[start.count++] = c;
        }
        if (covered != g.all_vertices()) throw GraphError("color classes must cover every vertex");
    }
    return Search(g).run(start);
}

Certificate canonical_form(const Graph& g) { return canonical_labeling(g).certificate(); }

CanonicalLabeling canonical_labeling_rooted(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw GraphError("root vertex out of range");
    const VertexSet rest = g.all_vertices() & ~bit(v);
    if (rest == 0) return canonical_labeling(g);
    const std::array<VertexSet, 2> colors = {bit(v), rest};
    return canonical_labeling(g, colors);
}

}  // namespace pisz
