#ifndef STC_TEST_FIXTURES_HPP
#define STC_TEST_FIXTURES_HPP

#include <vector>

#include "stc/system.hpp"

namespace fixtures {

// u feeds 1 and 3; cycles {1,2} and {3,5}; 3 -> 4.
inline stc::StructuredSystem two_cycle_tree(std::vector<stc::Node> targets = {1, 3, 4, 5}) {
    return stc::make_system(5, {{1, 3}}, {{1, 2}, {2, 1}, {3, 4}, {3, 5}, {5, 3}}, targets);
}

// Christmas tree with cycles of lengths 3, 2, 2, 1.
inline stc::StructuredSystem mixed_cycles() {
    std::vector<stc::Node> all;
    for (int i = 1; i <= 16; ++i) all.push_back(i);
    return stc::make_system(16, {{1}},
                            {{1, 2}, {2, 11}, {11, 1}, {3, 4}, {4, 3}, {4, 12}, {5, 6}, {6, 5}, {1, 13}, {13, 14},
                             {1, 3}, {2, 5}, {3, 8}, {4, 7}, {5, 9}, {6, 10}, {10, 10}, {2, 15}, {15, 16}},
                            all);
}

inline const std::vector<stc::Node> kTwinTargets{1, 2, 4, 5, 6, 11, 13, 14};
inline const std::vector<stc::Node> kSharedTargets{2, 6, 8, 12};

// u feeds 1 and 7; 2-cycles {2,3} and {8,9}.
inline stc::StructuredSystem twin_tree(std::vector<stc::Node> targets = kTwinTargets) {
    return stc::make_system(14, {{1, 7}},
                            {{1, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 5}, {5, 6}, {7, 8}, {8, 9}, {9, 8}, {9, 10},
                             {10, 11}, {11, 12}, {8, 13}, {13, 14}},
                            targets);
}

}  // namespace fixtures

#endif  // STC_TEST_FIXTURES_HPP
