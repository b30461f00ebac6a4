#ifndef STC_MATCHING_HPP
#define STC_MATCHING_HPP

#include <vector>

namespace stc::matching {

/// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices are
/// tried in index order and their neighbours in list order, so the result is
/// deterministic.
struct BipartiteMatching {
    std::vector<int> left_match;   // right vertex or -1
    std::vector<int> right_match;  // left vertex or -1
    int size = 0;
};

BipartiteMatching maximum_matching(const std::vector<std::vector<int>>& left_adjacency, int right_count);

/// Left vertices reachable from unmatched left vertices by alternating paths.
/// When the matching is maximum and not left-saturating this is a Hall
/// violator: its neighbourhood is strictly smaller than the set.
std::vector<int> hall_violator(const std::vector<std::vector<int>>& left_adjacency, const BipartiteMatching& m);

}  // namespace stc::matching

#endif  // STC_MATCHING_HPP
