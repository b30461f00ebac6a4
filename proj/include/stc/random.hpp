#ifndef STC_RANDOM_HPP
#define STC_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace stc {

/// Deterministic random stream keyed by (seed, stream).
///
/// Only the engine (fully specified by the standard) is used; bounded draws
/// are done here so results do not depend on the library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [lo, hi], inclusive.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return lo + next();  // full 64-bit range
        const std::uint64_t threshold = (0 - span) % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x < threshold);
        return lo + x % span;
    }

    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
    }

    bool chance(int numerator, int denominator) { return uniform_int(0, denominator - 1) < numerator; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform(0, i - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, v.size() - 1))];
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace stc

#endif  // STC_RANDOM_HPP
