#include "bicontract/extension_dp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "bicontract/error.hpp"

namespace bicontract {

void ExtensionInstance::validate() const {
    if (!is_bipartite(graph)) fail(Errc::precondition_violated, "extension instance graph is not bipartite");
    for (auto v : t1) graph.index(v);
    for (auto v : t2) graph.index(v);
    for (auto v : t1)
        if (std::find(t2.begin(), t2.end(), v) != t2.end())
            fail(Errc::invalid_terminals, "vertex " + std::to_string(v) + " is in both T1 and T2");
}

namespace {

constexpr std::size_t no_parent = static_cast<std::size_t>(-1);

// Per bag position: color (1 or 2) and block label in first-occurrence order.
struct Key {
    std::vector<std::uint8_t> colors;
    std::vector<std::uint8_t> labels;

    std::string encode() const {
        std::string s;
        s.reserve(2 * colors.size());
        for (std::size_t i = 0; i < colors.size(); ++i) {
            s.push_back(static_cast<char>(colors[i]));
            s.push_back(static_cast<char>(labels[i]));
        }
        return s;
    }

    std::size_t blocks() const {
        std::uint8_t most = 0;
        for (auto l : labels) most = std::max<std::uint8_t>(most, l + 1);
        return most;
    }
};

void normalize(std::vector<std::uint8_t>& labels) {
    std::vector<int> rename(labels.size() + 1, -1);
    std::uint8_t next = 0;
    for (auto& l : labels) {
        if (rename[l] < 0) rename[l] = next++;
        l = static_cast<std::uint8_t>(rename[l]);
    }
}

struct Entry {
    Key key;
    std::size_t closed = 0;
    std::size_t left = no_parent;
    std::size_t right = no_parent;
};

struct Table {
    std::vector<Entry> entries;
    std::unordered_map<std::string, std::size_t> index;
    std::size_t processed = 0;

    // Keeps the entry with the most closed components per key.
    void offer(Entry e) {
        auto code = e.key.encode();
        auto [it, fresh] = index.try_emplace(std::move(code), entries.size());
        if (fresh) {
            entries.push_back(std::move(e));
        } else if (entries[it->second].closed < e.closed) {
            entries[it->second] = std::move(e);
        }
    }
};

class TableBuilder {
   public:
    TableBuilder(const ExtensionInstance& inst, const NiceTreeDecomposition& ntd, std::uint64_t work_limit)
        : inst_(inst), ntd_(ntd), work_limit_(work_limit) {
        for (auto v : inst.t1) forced_[v] = 1;
        for (auto v : inst.t2) forced_[v] = 2;
    }

    std::vector<Table> run(DpStats* stats) {
        std::vector<Table> tables(ntd_.nodes.size());
        for (std::size_t i = 0; i < ntd_.nodes.size(); ++i) {
            build(i, tables);
            stats_.largest_table = std::max(stats_.largest_table, tables[i].entries.size());
            stats_.states += tables[i].entries.size();
        }
        stats_.nodes = ntd_.nodes.size();
        if (stats) *stats = stats_;
        return tables;
    }

   private:
    bool within_budget(const Table& t, std::size_t closed, std::size_t blocks) {
        if (t.processed - closed - blocks > inst_.k) {
            ++stats_.pruned;
            return false;
        }
        if (++created_ > work_limit_) fail(Errc::budget_exceeded, "extension DP exceeded its state limit");
        return true;
    }

    void build(std::size_t i, std::vector<Table>& tables) {
        const auto& node = ntd_.nodes[i];
        auto& out = tables[i];
        auto position = [&](Vertex v) {
            return static_cast<std::size_t>(std::lower_bound(node.bag.begin(), node.bag.end(), v) -
                                            node.bag.begin());
        };
        switch (node.kind) {
            case NiceKind::leaf: {
                out.offer(Entry{});
                break;
            }
            case NiceKind::introduce_vertex: {
                const auto& child = tables[node.children[0]];
                out.processed = child.processed + 1;
                const auto p = position(node.vertex);
                auto forced = forced_.find(node.vertex);
                for (std::size_t ci = 0; ci < child.entries.size(); ++ci) {
                    const auto& e = child.entries[ci];
                    for (std::uint8_t c = 1; c <= 2; ++c) {
                        if (forced != forced_.end() && forced->second != c) continue;
                        Entry next;
                        next.key = e.key;
                        next.key.colors.insert(next.key.colors.begin() + static_cast<long>(p), c);
                        next.key.labels.insert(next.key.labels.begin() + static_cast<long>(p),
                                               static_cast<std::uint8_t>(e.key.blocks()));
                        normalize(next.key.labels);
                        next.closed = e.closed;
                        next.left = ci;
                        if (within_budget(out, next.closed, next.key.blocks())) out.offer(std::move(next));
                    }
                }
                break;
            }
            case NiceKind::forget_vertex: {
                const auto& child = tables[node.children[0]];
                out.processed = child.processed;
                const auto& child_bag = ntd_.nodes[node.children[0]].bag;
                const auto p = static_cast<std::size_t>(
                    std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
                for (std::size_t ci = 0; ci < child.entries.size(); ++ci) {
                    const auto& e = child.entries[ci];
                    Entry next;
                    next.key = e.key;
                    const auto label = e.key.labels[p];
                    const bool alone = std::count(e.key.labels.begin(), e.key.labels.end(), label) == 1;
                    next.key.colors.erase(next.key.colors.begin() + static_cast<long>(p));
                    next.key.labels.erase(next.key.labels.begin() + static_cast<long>(p));
                    normalize(next.key.labels);
                    next.closed = e.closed + (alone ? 1 : 0);
                    next.left = ci;
                    if (within_budget(out, next.closed, next.key.blocks())) out.offer(std::move(next));
                }
                break;
            }
            case NiceKind::introduce_edge: {
                const auto& child = tables[node.children[0]];
                out.processed = child.processed;
                const auto pu = position(node.edge.u);
                const auto pv = position(node.edge.v);
                for (std::size_t ci = 0; ci < child.entries.size(); ++ci) {
                    const auto& e = child.entries[ci];
                    Entry next;
                    next.key = e.key;
                    if (e.key.colors[pu] == e.key.colors[pv] && e.key.labels[pu] != e.key.labels[pv]) {
                        const auto from = e.key.labels[pv];
                        for (auto& l : next.key.labels)
                            if (l == from) l = e.key.labels[pu];
                        normalize(next.key.labels);
                    }
                    next.closed = e.closed;
                    next.left = ci;
                    if (within_budget(out, next.closed, next.key.blocks())) out.offer(std::move(next));
                }
                break;
            }
            case NiceKind::join: {
                const auto& a = tables[node.children[0]];
                const auto& b = tables[node.children[1]];
                out.processed = a.processed + b.processed - node.bag.size();
                std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> by_colors;
                for (std::size_t bi = 0; bi < b.entries.size(); ++bi)
                    by_colors[b.entries[bi].key.colors].push_back(bi);
                const auto width = node.bag.size();
                for (std::size_t ai = 0; ai < a.entries.size(); ++ai) {
                    const auto& ea = a.entries[ai];
                    auto match = by_colors.find(ea.key.colors);
                    if (match == by_colors.end()) continue;
                    for (auto bi : match->second) {
                        const auto& eb = b.entries[bi];
                        // union-find over bag positions, linked through both partitions
                        std::vector<std::size_t> root(width);
                        std::iota(root.begin(), root.end(), 0);
                        auto find = [&](std::size_t x) {
                            while (root[x] != x) x = root[x] = root[root[x]];
                            return x;
                        };
                        std::vector<std::size_t> first_a(width + 1, width), first_b(width + 1, width);
                        for (std::size_t p = 0; p < width; ++p) {
                            auto& fa = first_a[ea.key.labels[p]];
                            if (fa == width) fa = p; else root[find(p)] = find(fa);
                            auto& fb = first_b[eb.key.labels[p]];
                            if (fb == width) fb = p; else root[find(p)] = find(fb);
                        }
                        Entry next;
                        next.key.colors = ea.key.colors;
                        next.key.labels.resize(width);
                        for (std::size_t p = 0; p < width; ++p)
                            next.key.labels[p] = static_cast<std::uint8_t>(find(p));
                        normalize(next.key.labels);
                        next.closed = ea.closed + eb.closed;
                        next.left = ai;
                        next.right = bi;
                        if (within_budget(out, next.closed, next.key.blocks())) out.offer(std::move(next));
                    }
                }
                break;
            }
        }
    }

    const ExtensionInstance& inst_;
    const NiceTreeDecomposition& ntd_;
    std::uint64_t work_limit_;
    std::uint64_t created_ = 0;
    std::map<Vertex, std::uint8_t> forced_;
    DpStats stats_;
};

void require_nice(const ExtensionInstance& inst, const NiceTreeDecomposition& ntd) {
    inst.validate();
    auto report = validate_nice(inst.graph, ntd);
    if (!report.ok) fail(Errc::invalid_decomposition, report.message);
    for (const auto& node : ntd.nodes)
        if (node.bag.size() > 250) fail(Errc::invalid_argument, "decomposition bags are too large for the DP");
}

}  // namespace

std::optional<TwoColoring> solve_extension_dp(const ExtensionInstance& inst, const NiceTreeDecomposition& ntd,
                                              DpStats* stats, std::uint64_t work_limit) {
    require_nice(inst, ntd);
    TableBuilder builder(inst, ntd, work_limit);
    auto tables = builder.run(stats);
    const auto& top = tables[ntd.root];
    if (top.entries.empty()) return std::nullopt;
    const auto n = inst.graph.num_vertices();
    const auto closed = top.entries.front().closed;
    if (n - closed > inst.k) return std::nullopt;

    std::map<Vertex, int> colors;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{ntd.root, 0}};
    while (!stack.empty()) {
        auto [node_id, entry_id] = stack.back();
        stack.pop_back();
        const auto& node = ntd.nodes[node_id];
        const auto& entry = tables[node_id].entries[entry_id];
        if (node.kind == NiceKind::introduce_vertex) {
            auto p = std::lower_bound(node.bag.begin(), node.bag.end(), node.vertex) - node.bag.begin();
            colors[node.vertex] = entry.key.colors[static_cast<std::size_t>(p)];
        }
        if (!node.children.empty()) stack.emplace_back(node.children[0], entry.left);
        if (node.children.size() > 1) stack.emplace_back(node.children[1], entry.right);
    }
    return TwoColoring::from_map(colors);
}

DpAuditReport dp_table_audit(const ExtensionInstance& inst, const NiceTreeDecomposition& ntd) {
    require_nice(inst, ntd);
    const auto& g = inst.graph;
    if (g.num_vertices() > 12) fail(Errc::invalid_argument, "audit is limited to 12 vertices");
    TableBuilder builder(inst, ntd, static_cast<std::uint64_t>(-1));
    auto tables = builder.run(nullptr);

    DpAuditReport report;
    std::map<Vertex, int> forced;
    for (auto v : inst.t1) forced[v] = 1;
    for (auto v : inst.t2) forced[v] = 2;

    // processed vertices and introduced edges below each node
    std::vector<VertexSet> seen(ntd.nodes.size());
    std::vector<EdgeSet> edges(ntd.nodes.size());
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
        const auto& node = ntd.nodes[i];
        for (auto c : node.children) {
            seen[i].insert(seen[i].end(), seen[c].begin(), seen[c].end());
            edges[i].insert(edges[i].end(), edges[c].begin(), edges[c].end());
        }
        if (node.kind == NiceKind::introduce_vertex) seen[i].push_back(node.vertex);
        if (node.kind == NiceKind::introduce_edge) edges[i].push_back(node.edge);
        std::sort(seen[i].begin(), seen[i].end());
        seen[i].erase(std::unique(seen[i].begin(), seen[i].end()), seen[i].end());
        std::sort(edges[i].begin(), edges[i].end());
        edges[i].erase(std::unique(edges[i].begin(), edges[i].end()), edges[i].end());
    }

    for (std::size_t i = 0; i < ntd.nodes.size() && report.ok; ++i) {
        const auto& node = ntd.nodes[i];
        const auto& verts = seen[i];
        Graph partial(verts, edges[i]);
        std::map<std::string, std::size_t> expected;
        const auto count = std::size_t{1} << verts.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            std::map<Vertex, int> assignment;
            bool allowed = true;
            for (std::size_t j = 0; j < verts.size(); ++j) {
                int c = (mask >> j) & 1 ? 2 : 1;
                auto f = forced.find(verts[j]);
                if (f != forced.end() && f->second != c) allowed = false;
                assignment[verts[j]] = c;
            }
            if (!allowed) continue;
            ++report.colorings_enumerated;
            auto phi = TwoColoring::from_map(assignment);
            auto analysis = analyze(partial, phi);
            if (analysis.cost > inst.k) continue;
            Key key;
            std::size_t closed = 0;
            key.labels.assign(node.bag.size(), 0);
            for (std::size_t p = 0; p < node.bag.size(); ++p) key.colors.push_back(static_cast<std::uint8_t>(assignment[node.bag[p]]));
            for (std::size_t c = 0; c < analysis.monochromatic_components.size(); ++c) {
                const auto& comp = analysis.monochromatic_components[c];
                bool live = false;
                for (std::size_t p = 0; p < node.bag.size(); ++p)
                    if (std::binary_search(comp.begin(), comp.end(), node.bag[p])) {
                        key.labels[p] = static_cast<std::uint8_t>(c);
                        live = true;
                    }
                if (!live) ++closed;
            }
            // component indices can exceed the bag size, so relabel in first-occurrence order
            std::map<std::uint8_t, std::uint8_t> dense;
            for (auto& l : key.labels) l = dense.try_emplace(l, static_cast<std::uint8_t>(dense.size())).first->second;
            auto [it, fresh] = expected.try_emplace(key.encode(), closed);
            if (!fresh) it->second = std::max(it->second, closed);
        }
        const auto& table = tables[i];
        report.table_sizes.push_back(table.entries.size());
        if (expected.size() != table.entries.size()) {
            report.ok = false;
            report.message = "node " + std::to_string(i) + ": " + std::to_string(table.entries.size()) +
                             " entries, enumeration gives " + std::to_string(expected.size());
            break;
        }
        for (const auto& e : table.entries) {
            auto it = expected.find(e.key.encode());
            if (it == expected.end() || it->second != e.closed) {
                report.ok = false;
                report.message = "node " + std::to_string(i) + ": entry does not match any partial coloring";
                break;
            }
        }
    }
    return report;
}

}  // namespace bicontract
