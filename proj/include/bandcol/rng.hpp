#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bandcol {

// Seedable random source used everywhere in the solver.  The core is the
// standard 64-bit Mersenne Twister; bounded draws are done with unbiased
// modulo rejection on the raw 64-bit stream rather than through
// std::uniform_int_distribution, whose output is implementation-defined.
// Identical seeds therefore reproduce identical runs on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

// Reusable k-of-n sampler without replacement: a partial Fisher-Yates over a
// persistent index array.  Successive calls stay O(k).
class DistinctSampler {
public:
    explicit DistinctSampler(std::int32_t n) : perm_(n) {
        for (std::int32_t i = 0; i < n; ++i) perm_[i] = i;
    }

    // Writes k distinct values from [0, n) into out.
    void sample(std::int32_t k, Rng& rng, std::vector<std::int32_t>& out) {
        const auto n = static_cast<std::int32_t>(perm_.size());
        out.resize(k);
        for (std::int32_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n - i)));
            std::swap(perm_[i], perm_[j]);
            out[i] = perm_[i];
        }
    }

private:
    std::vector<std::int32_t> perm_;
};

}  // namespace bandcol
