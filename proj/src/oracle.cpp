#include "bicontract/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bicontract/error.hpp"

namespace bicontract {

namespace {

class StepCounter {
   public:
    explicit StepCounter(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t steps) {
        used_ += steps;
        if (used_ > limit_)
            fail(Errc::budget_exceeded,
                 "exhaustive search exceeded its work limit of " + std::to_string(limit_) + " steps");
    }

   private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// Union-find that also tracks the parity of each element relative to its root.
class ParitySets {
   public:
    explicit ParitySets(std::size_t n) : parent_(n), parity_(n) { reset(); }

    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(parity_.begin(), parity_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        std::uint8_t acc = 0;
        std::size_t root = x;
        while (parent_[root] != root) {
            acc ^= parity_[root];
            root = parent_[root];
        }
        // compress
        while (parent_[x] != root) {
            auto next = parent_[x];
            auto p = parity_[x];
            parent_[x] = root;
            parity_[x] = acc;
            acc ^= p;
            x = next;
        }
        return root;
    }

    std::uint8_t parity(std::size_t x) {
        find(x);
        return parent_[x] == x ? 0 : parity_[x];
    }

    /// Records that a and b differ (odd = 1) or agree (odd = 0). Returns false
    /// on a contradiction.
    bool relate(std::size_t a, std::size_t b, std::uint8_t odd) {
        auto ra = find(a);
        auto rb = find(b);
        auto pa = parity(a);
        auto pb = parity(b);
        if (ra == rb) return (pa ^ pb) == odd;
        parent_[rb] = ra;
        parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ odd);
        return true;
    }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> parity_;
};

struct IndexedEdge {
    std::size_t a;
    std::size_t b;
};

std::vector<IndexedEdge> indexed_edges(const Graph& g) {
    std::vector<IndexedEdge> out;
    out.reserve(g.num_edges());
    for (const auto& e : g.edges()) out.push_back({g.index(e.u), g.index(e.v)});
    return out;
}

// Calls fn(chosen) for every size-s subset of {0..m-1} in lexicographic order
// until fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t m, std::size_t s, Fn&& fn) {
    if (s > m) return false;
    std::vector<std::size_t> chosen(s);
    std::iota(chosen.begin(), chosen.end(), 0);
    while (true) {
        if (fn(chosen)) return true;
        std::size_t i = s;
        while (i > 0 && chosen[i - 1] == m - s + (i - 1)) --i;
        if (i == 0) return false;
        ++chosen[i - 1];
        for (std::size_t j = i; j < s; ++j) chosen[j] = chosen[j - 1] + 1;
    }
}

void check_terminals(const Graph& g, std::span<const Vertex> t1, std::span<const Vertex> t2) {
    for (auto v : t1) g.index(v);
    for (auto v : t2) g.index(v);
    for (auto v : t1)
        if (std::find(t2.begin(), t2.end(), v) != t2.end())
            fail(Errc::invalid_terminals, "vertex " + std::to_string(v) + " is in both T1 and T2");
}

}  // namespace

std::optional<ContractionSet> brute_force_contraction(const Graph& g, std::size_t k,
                                                      std::uint64_t work_limit) {
    const auto n = g.num_vertices();
    const auto edges = indexed_edges(g);
    const auto m = edges.size();
    StepCounter steps(work_limit);
    ParitySets merged(n);
    ParitySets sides(n);

    std::optional<ContractionSet> found;
    for (std::size_t size = 0; size <= std::min(k, m) && !found; ++size) {
        for_each_combination(m, size, [&](const std::vector<std::size_t>& chosen) {
            steps.charge(n + m + 1);
            merged.reset();
            sides.reset();
            for (auto c : chosen) merged.relate(edges[c].a, edges[c].b, 0);
            for (const auto& e : edges) {
                auto ra = merged.find(e.a);
                auto rb = merged.find(e.b);
                if (ra != rb && !sides.relate(ra, rb, 1)) return false;
            }
            EdgeSet s;
            for (auto c : chosen) s.push_back(g.edges()[c]);
            found = ContractionSet::certify(g, std::move(s));
            return true;
        });
    }
    return found;
}

ColoringOptimum brute_force_coloring(const Graph& g, std::span<const Vertex> t1,
                                     std::span<const Vertex> t2, std::uint64_t work_limit) {
    check_terminals(g, t1, t2);
    const auto n = g.num_vertices();
    std::vector<std::uint8_t> base(n, 0);
    for (auto v : t1) base[g.index(v)] = 1;
    for (auto v : t2) base[g.index(v)] = 2;
    if (t1.empty() && t2.empty() && n > 0) base[0] = 1;

    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!base[i]) free.push_back(i);
    if (free.size() >= 63) fail(Errc::budget_exceeded, "too many free vertices to enumerate");

    const auto edges = indexed_edges(g);
    StepCounter steps(work_limit);
    ParitySets mono(n);
    std::vector<std::uint8_t> colors = base;
    std::vector<std::uint8_t> best_colors;
    std::size_t best = n + 1;

    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        steps.charge(n + edges.size() + 1);
        for (std::size_t b = 0; b < free.size(); ++b) colors[free[b]] = (mask >> b) & 1 ? 2 : 1;
        mono.reset();
        std::size_t cost = 0;
        for (const auto& e : edges) {
            if (colors[e.a] != colors[e.b]) continue;
            if (mono.find(e.a) != mono.find(e.b)) {
                mono.relate(e.a, e.b, 0);
                ++cost;
            }
        }
        if (cost < best) {
            best = cost;
            best_colors = colors;
        }
    }
    if (n == 0) best = 0;
    return {TwoColoring({g.vertices().begin(), g.vertices().end()}, best_colors), best};
}

std::vector<VertexSet> important_sets_oracle(const Graph& g, Vertex x, Vertex y, std::size_t p) {
    if (x == y) fail(Errc::invalid_argument, "x and y must differ");
    const auto n = g.num_vertices();
    if (n > 26) fail(Errc::budget_exceeded, "important_sets_oracle supports at most 26 vertices");
    const auto ix = g.index(x);
    const auto iy = g.index(y);

    // Bit positions for the vertices other than x and y.
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != ix && i != iy) others.push_back(i);
    const auto r = others.size();
    std::vector<std::uint32_t> adj(n, 0);  // over full index bits
    for (const auto& e : g.edges()) {
        auto a = g.index(e.u);
        auto b = g.index(e.v);
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }

    auto full_set = [&](std::uint32_t sub) {
        std::uint32_t set = 1u << ix;
        for (std::size_t b = 0; b < r; ++b)
            if (sub >> b & 1) set |= 1u << others[b];
        return set;
    };

    const std::uint32_t count = 1u << r;
    std::vector<int> boundary(count, -1);
    for (std::uint32_t sub = 0; sub < count; ++sub) {
        auto set = full_set(sub);
        // connectivity by repeated expansion from x
        std::uint32_t reached = 1u << ix;
        std::uint32_t frontier = reached;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (frontier >> i & 1) next |= adj[i];
            next &= set & ~reached;
            reached |= next;
            frontier = next;
        }
        if (reached != set) continue;
        int d = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (set >> i & 1) d += __builtin_popcount(adj[i] & ~set);
        boundary[sub] = d;
    }

    std::vector<VertexSet> out;
    const std::uint32_t all = count - 1;
    for (std::uint32_t sub = 0; sub < count; ++sub) {
        if (boundary[sub] < 0 || static_cast<std::size_t>(boundary[sub]) > p) continue;
        bool dominated = false;
        for (std::uint32_t sup = (sub + 1) | sub; sup <= all && sup > sub; sup = (sup + 1) | sub) {
            if (boundary[sup] >= 0 && boundary[sup] <= boundary[sub]) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        VertexSet members;
        auto set = full_set(sub);
        for (std::size_t i = 0; i < n; ++i)
            if (set >> i & 1) members.push_back(g.vertex_at(i));
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<EdgeSet> brute_force_edge_bipartization(const Graph& g, std::size_t k,
                                                      std::uint64_t work_limit) {
    const auto n = g.num_vertices();
    const auto edges = indexed_edges(g);
    const auto m = edges.size();
    StepCounter steps(work_limit);
    ParitySets sides(n);
    std::vector<char> removed(m, 0);

    std::optional<EdgeSet> found;
    for (std::size_t size = 0; size <= std::min(k, m) && !found; ++size) {
        for_each_combination(m, size, [&](const std::vector<std::size_t>& chosen) {
            steps.charge(n + m + 1);
            std::fill(removed.begin(), removed.end(), 0);
            for (auto c : chosen) removed[c] = 1;
            sides.reset();
            for (std::size_t i = 0; i < m; ++i)
                if (!removed[i] && !sides.relate(edges[i].a, edges[i].b, 1)) return false;
            EdgeSet s;
            for (auto c : chosen) s.push_back(g.edges()[c]);
            found = std::move(s);
            return true;
        });
    }
    return found;
}

ReducedInstance reduce_edge_bipartization(const Graph& g, std::size_t k) {
    const std::size_t interior = 2 * k + 2;
    std::vector<Vertex> vertices(g.vertices().begin(), g.vertices().end());
    std::vector<Edge> edges;
    Vertex next = g.max_vertex() + 1;
    for (const auto& e : g.edges()) {
        Vertex prev = e.u;
        for (std::size_t i = 0; i < interior; ++i) {
            vertices.push_back(next);
            edges.push_back(Edge::make(prev, next));
            prev = next++;
        }
        edges.push_back(Edge::make(prev, e.v));
    }
    return {Graph(std::move(vertices), std::move(edges)), k};
}

}  // namespace bicontract
