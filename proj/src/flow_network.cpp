#include "bicontract/flow_network.hpp"

#include <algorithm>
#include <queue>

namespace bicontract {

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    const auto id = to_.size();
    to_.push_back(to);
    capacity_.push_back(capacity);
    residual_.push_back(capacity);
    head_[from].push_back(id);
    to_.push_back(from);
    capacity_.push_back(0);
    residual_.push_back(0);
    head_[to].push_back(id + 1);
    return id;
}

std::size_t FlowNetwork::add_edge(std::size_t a, std::size_t b, std::int64_t capacity) {
    const auto id = to_.size();
    to_.push_back(b);
    capacity_.push_back(capacity);
    residual_.push_back(capacity);
    head_[a].push_back(id);
    to_.push_back(a);
    capacity_.push_back(capacity);
    residual_.push_back(capacity);
    head_[b].push_back(id + 1);
    return id;
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink) {
    level_.assign(head_.size(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        auto node = queue.front();
        queue.pop();
        for (auto arc : head_[node]) {
            auto next = to_[arc];
            if (residual_[arc] > 0 && level_[next] < 0) {
                level_[next] = level_[node] + 1;
                queue.push(next);
            }
        }
    }
    return level_[sink] >= 0;
}

std::int64_t FlowNetwork::push(std::size_t node, std::size_t sink, std::int64_t limit) {
    if (node == sink) return limit;
    for (auto& i = cursor_[node]; i < head_[node].size(); ++i) {
        auto arc = head_[node][i];
        auto next = to_[arc];
        if (residual_[arc] <= 0 || level_[next] != level_[node] + 1) continue;
        auto pushed = push(next, sink, std::min(limit, residual_[arc]));
        if (pushed > 0) {
            residual_[arc] -= pushed;
            residual_[arc ^ 1] += pushed;
            return pushed;
        }
    }
    return 0;
}

std::int64_t FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    if (source == sink) return 0;
    while (build_levels(source, sink)) {
        cursor_.assign(head_.size(), 0);
        while (auto pushed = push(source, sink, infinite)) total += pushed;
    }
    return total;
}

std::vector<char> FlowNetwork::residual_reachable_from(std::size_t source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        auto node = stack.back();
        stack.pop_back();
        for (auto arc : head_[node])
            if (residual_[arc] > 0 && !seen[to_[arc]]) {
                seen[to_[arc]] = 1;
                stack.push_back(to_[arc]);
            }
    }
    return seen;
}

std::vector<char> FlowNetwork::residual_reaching(std::size_t sink) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{sink};
    seen[sink] = 1;
    while (!stack.empty()) {
        auto node = stack.back();
        stack.pop_back();
        // arc^1 runs tail->node; it can be used if it has residual capacity.
        for (auto arc : head_[node]) {
            auto back = arc ^ 1;
            auto tail = to_[arc];
            if (residual_[back] > 0 && !seen[tail]) {
                seen[tail] = 1;
                stack.push_back(tail);
            }
        }
    }
    return seen;
}

}  // namespace bicontract
