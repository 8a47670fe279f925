#include <algorithm>
#include <set>

#include "bicontract/error.hpp"
#include "bicontract/treewidth.hpp"

namespace bicontract {

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

TreeDecomposition NiceTreeDecomposition::erase_kinds() const {
    TreeDecomposition td;
    for (const auto& node : nodes) td.bags.push_back(node.bag);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (auto c : nodes[i].children) td.tree_edges.emplace_back(c, i);
    return td;
}

namespace {

class NiceBuilder {
   public:
    explicit NiceBuilder(const Graph& g) : g_(g) {}

    std::size_t leaf() {
        NiceNode node;
        node.kind = NiceKind::leaf;
        return add(std::move(node));
    }

    std::size_t introduce(std::size_t child, Vertex v) {
        NiceNode node;
        node.kind = NiceKind::introduce_vertex;
        node.vertex = v;
        node.bag = nodes_[child].bag;
        node.bag.insert(std::upper_bound(node.bag.begin(), node.bag.end(), v), v);
        node.children = {child};
        return add(std::move(node));
    }

    // Introduces every pending edge between v and the rest of the bag, then
    // forgets v.
    std::size_t forget(std::size_t child, Vertex v) {
        auto current = child;
        const auto bag = nodes_[child].bag;
        for (auto w : bag) {
            if (w == v || !g_.has_edge(v, w)) continue;
            auto e = Edge::make(v, w);
            if (!introduced_.insert(e).second) continue;
            NiceNode node;
            node.kind = NiceKind::introduce_edge;
            node.edge = e;
            node.bag = bag;
            node.children = {current};
            current = add(std::move(node));
        }
        NiceNode node;
        node.kind = NiceKind::forget_vertex;
        node.vertex = v;
        node.bag = bag;
        node.bag.erase(std::find(node.bag.begin(), node.bag.end(), v));
        node.children = {current};
        return add(std::move(node));
    }

    std::size_t join(std::size_t left, std::size_t right) {
        NiceNode node;
        node.kind = NiceKind::join;
        node.bag = nodes_[left].bag;
        node.children = {left, right};
        return add(std::move(node));
    }

    const VertexSet& bag(std::size_t id) const { return nodes_[id].bag; }

    NiceTreeDecomposition finish(std::size_t root) {
        return {std::move(nodes_), root};
    }

   private:
    std::size_t add(NiceNode node) {
        nodes_.push_back(std::move(node));
        return nodes_.size() - 1;
    }

    const Graph& g_;
    std::vector<NiceNode> nodes_;
    std::set<Edge> introduced_;
};

}  // namespace

NiceTreeDecomposition to_nice(const TreeDecomposition& td, const Graph& g) {
    auto report = validate_decomposition(g, td);
    if (!report.ok) fail(Errc::invalid_decomposition, report.message);

    NiceBuilder builder(g);
    if (td.bags.empty()) return builder.finish(builder.leaf());

    const auto nb = td.bags.size();
    std::vector<std::vector<std::size_t>> tree(nb);
    for (auto [a, b] : td.tree_edges) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    // iterative DFS from bag 0 for parents and a post-order
    std::vector<std::size_t> parent(nb, nb);
    std::vector<std::size_t> preorder;
    std::vector<std::size_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        preorder.push_back(t);
        for (auto s : tree[t])
            if (parent[s] == nb) {
                parent[s] = t;
                stack.push_back(s);
            }
    }

    std::vector<std::size_t> top(nb);
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        const auto t = *it;
        const auto& here = td.bags[t];
        std::vector<std::size_t> branches;
        for (auto c : tree[t]) {
            if (c == parent[t] && t != 0) continue;
            if (parent[c] != t || c == t) continue;
            auto current = top[c];
            for (auto v : td.bags[c])
                if (!std::binary_search(here.begin(), here.end(), v)) current = builder.forget(current, v);
            for (auto v : here)
                if (!std::binary_search(builder.bag(current).begin(), builder.bag(current).end(), v))
                    current = builder.introduce(current, v);
            branches.push_back(current);
        }
        if (branches.empty()) {
            auto current = builder.leaf();
            for (auto v : here) current = builder.introduce(current, v);
            branches.push_back(current);
        }
        auto combined = branches.front();
        for (std::size_t i = 1; i < branches.size(); ++i) combined = builder.join(combined, branches[i]);
        top[t] = combined;
    }

    auto current = top[0];
    for (auto v : td.bags[0]) current = builder.forget(current, v);
    return builder.finish(current);
}

DecompositionReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    auto bad = [](std::string message) {
        DecompositionReport r;
        r.ok = false;
        r.violated = DecompositionProperty::nice_shape;
        r.message = std::move(message);
        return r;
    };
    if (ntd.nodes.empty() || ntd.root >= ntd.nodes.size()) return bad("no root");
    if (!ntd.nodes[ntd.root].bag.empty()) return bad("root bag is not empty");
    std::set<Edge> introduced;
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
        const auto& node = ntd.nodes[i];
        const auto where = "node " + std::to_string(i) + ": ";
        for (auto c : node.children)
            if (c >= i) return bad(where + "child does not precede its parent");
        auto child_bag = [&](std::size_t k) -> const VertexSet& { return ntd.nodes[node.children[k]].bag; };
        switch (node.kind) {
            case NiceKind::leaf:
                if (!node.children.empty() || !node.bag.empty()) return bad(where + "leaf must be empty");
                break;
            case NiceKind::introduce_vertex: {
                if (node.children.size() != 1) return bad(where + "introduce needs one child");
                auto expect = child_bag(0);
                if (std::binary_search(expect.begin(), expect.end(), node.vertex))
                    return bad(where + "introduced vertex already present");
                expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
                if (expect != node.bag) return bad(where + "introduce bag mismatch");
                break;
            }
            case NiceKind::forget_vertex: {
                if (node.children.size() != 1) return bad(where + "forget needs one child");
                auto expect = child_bag(0);
                auto pos = std::find(expect.begin(), expect.end(), node.vertex);
                if (pos == expect.end()) return bad(where + "forgotten vertex absent");
                expect.erase(pos);
                if (expect != node.bag) return bad(where + "forget bag mismatch");
                break;
            }
            case NiceKind::introduce_edge:
                if (node.children.size() != 1 || child_bag(0) != node.bag)
                    return bad(where + "introduce-edge must keep its child's bag");
                if (!g.has_edge(node.edge)) return bad(where + "introduced edge is not in the graph");
                if (!std::binary_search(node.bag.begin(), node.bag.end(), node.edge.u) ||
                    !std::binary_search(node.bag.begin(), node.bag.end(), node.edge.v))
                    return bad(where + "introduced edge endpoints not in bag");
                if (!introduced.insert(node.edge).second) return bad(where + "edge introduced twice");
                break;
            case NiceKind::join:
                if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag)
                    return bad(where + "join children must share its bag");
                break;
        }
    }
    if (introduced.size() != g.num_edges()) return bad("not every edge is introduced");
    return validate_decomposition(g, ntd.erase_kinds());
}

}  // namespace bicontract
