#pragma once

#include <cstdint>
#include <vector>

namespace arbor {

/// Deterministic splitmix64 generator. Sampling is specified to be
/// reproducible from the seed alone, so no standard-library distributions
/// (their streams are implementation-defined) are used anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n), exact via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ull) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates shuffled identity, i.e. a uniform permutation's images.
    std::vector<int> permutation_images(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        }
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace arbor
