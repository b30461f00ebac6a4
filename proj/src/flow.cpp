#include "stc/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace stc::flow {

MaxFlow::MaxFlow(int vertices) : adj_(static_cast<std::size_t>(vertices)) {}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    original_.push_back(capacity);
    original_.push_back(0);
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
}

std::int64_t MaxFlow::flow_on(int arc) const {
    return original_[static_cast<std::size_t>(arc)] - arcs_[static_cast<std::size_t>(arc)].cap;
}

bool MaxFlow::build_levels(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::deque<int> queue{source};
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int id : adj_[static_cast<std::size_t>(v)]) {
            const Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
                queue.push_back(a.to);
            }
        }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t MaxFlow::push(int v, int sink, std::int64_t limit) {
    if (v == sink) return limit;
    auto& it = next_[static_cast<std::size_t>(v)];
    const auto& out = adj_[static_cast<std::size_t>(v)];
    for (; it < out.size(); ++it) {
        const int id = out[it];
        Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1)
            continue;
        const std::int64_t got = push(a.to, sink, std::min(limit, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[static_cast<std::size_t>(id ^ 1)].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t MaxFlow::solve(int source, int sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
        next_.assign(adj_.size(), 0);
        while (std::int64_t f = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += f;
    }
    return total;
}

std::optional<std::vector<std::int64_t>> feasible_circulation(int vertices, const std::vector<BoundedArc>& arcs) {
    // Lower bounds become forced supply at the head and forced demand at the tail.
    const int super_source = vertices;
    const int super_sink = vertices + 1;
    MaxFlow net(vertices + 2);
    std::vector<std::int64_t> balance(static_cast<std::size_t>(vertices), 0);
    std::vector<int> ids;
    ids.reserve(arcs.size());
    for (const BoundedArc& a : arcs) {
        if (a.lower > a.upper) return std::nullopt;
        ids.push_back(net.add_arc(a.from, a.to, a.upper - a.lower));
        balance[static_cast<std::size_t>(a.to)] += a.lower;
        balance[static_cast<std::size_t>(a.from)] -= a.lower;
    }
    std::int64_t required = 0;
    for (int v = 0; v < vertices; ++v) {
        const std::int64_t b = balance[static_cast<std::size_t>(v)];
        if (b > 0) {
            net.add_arc(super_source, v, b);
            required += b;
        } else if (b < 0) {
            net.add_arc(v, super_sink, -b);
        }
    }
    if (net.solve(super_source, super_sink) != required) return std::nullopt;
    std::vector<std::int64_t> flow;
    flow.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) flow.push_back(net.flow_on(ids[i]) + arcs[i].lower);
    return flow;
}

}  // namespace stc::flow
