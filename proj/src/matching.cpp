#include "stc/matching.hpp"

#include <algorithm>
#include <functional>

namespace stc::matching {

BipartiteMatching maximum_matching(const std::vector<std::vector<int>>& adj, int right_count) {
    BipartiteMatching m;
    m.left_match.assign(adj.size(), -1);
    m.right_match.assign(static_cast<std::size_t>(right_count), -1);
    std::vector<char> visited;

    std::function<bool(int)> augment = [&](int left) {
        for (int right : adj[static_cast<std::size_t>(left)]) {
            if (visited[static_cast<std::size_t>(right)]) continue;
            visited[static_cast<std::size_t>(right)] = 1;
            const int owner = m.right_match[static_cast<std::size_t>(right)];
            if (owner < 0 || augment(owner)) {
                m.left_match[static_cast<std::size_t>(left)] = right;
                m.right_match[static_cast<std::size_t>(right)] = left;
                return true;
            }
        }
        return false;
    };

    for (std::size_t left = 0; left < adj.size(); ++left) {
        visited.assign(static_cast<std::size_t>(right_count), 0);
        if (augment(static_cast<int>(left))) ++m.size;
    }
    return m;
}

std::vector<int> hall_violator(const std::vector<std::vector<int>>& adj, const BipartiteMatching& m) {
    std::vector<char> seen_left(adj.size(), 0);
    std::vector<char> seen_right(m.right_match.size(), 0);
    std::vector<int> stack;
    for (std::size_t left = 0; left < adj.size(); ++left)
        if (m.left_match[left] < 0) {
            seen_left[left] = 1;
            stack.push_back(static_cast<int>(left));
        }
    while (!stack.empty()) {
        const int left = stack.back();
        stack.pop_back();
        for (int right : adj[static_cast<std::size_t>(left)]) {
            if (seen_right[static_cast<std::size_t>(right)]) continue;
            seen_right[static_cast<std::size_t>(right)] = 1;
            const int owner = m.right_match[static_cast<std::size_t>(right)];
            if (owner >= 0 && !seen_left[static_cast<std::size_t>(owner)]) {
                seen_left[static_cast<std::size_t>(owner)] = 1;
                stack.push_back(owner);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t left = 0; left < adj.size(); ++left)
        if (seen_left[left]) out.push_back(static_cast<int>(left));
    return out;
}

}  // namespace stc::matching
