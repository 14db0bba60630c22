#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace dpc {

// splitmix64; deterministic across platforms, unlike std::shuffle with a
// stdlib engine. Used everywhere randomness is needed so certificates and
// Monte Carlo runs are byte-reproducible from a seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % n;
    }

    // Fisher-Yates.
    void shuffle(std::vector<int>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<int> permutation(int k) {
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p);
        return p;
    }
};

// Derives an independent stream for (seed, index) pairs, so per-block
// sampling is order- and thread-independent.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 s(seed ^ (0x6a09e667f3bcc909ULL + index * 0x3c6ef372fe94f82bULL));
    return s.next();
}

}  // namespace dpc
