#ifndef STC_TEST_PROPERTIES_HPP
#define STC_TEST_PROPERTIES_HPP

// Randomized property suites. Each returns how many instances it drew, how
// many exercised the property (e.g. had a passing criterion), and the first
// counterexample if any.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
    int instances = 0;
    int exercised = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

inline constexpr std::uint64_t kSeed = 0x5eed;

/// theorem1 and corollary1 passes on generated trees have full generic rank;
/// corollary1 never passes where theorem1 does not.
Outcome theorem1_soundness(int instances, std::uint64_t seed = kSeed);

/// k-walk and stem-cycle passes on generated trees have full generic rank.
Outcome kwalk_stem_soundness(int instances, std::uint64_t seed = kSeed);

/// Full generic rank never comes with a failed bipartite matching.
Outcome bipartite_necessity(int instances, std::uint64_t seed = kSeed);

/// block_decompose verifies every row of generated trees.
Outcome block_structure(int instances, std::uint64_t seed = kSeed);

/// rank R_k is the same for every k in n..2n.
Outcome rank_stabilization(int instances, std::uint64_t seed = kSeed);

/// stem_cycle_cover_check agrees with exhaustive enumeration (n <= 7), and its
/// witnesses re-validate.
Outcome stem_cycle_brute_force(int instances, std::uint64_t seed = kSeed);

}  // namespace props

#endif  // STC_TEST_PROPERTIES_HPP
