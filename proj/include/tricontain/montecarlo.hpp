#pragma once

#include <cstdint>

#include "tricontain/geometry.hpp"
#include "tricontain/region.hpp"

namespace tricontain::mc {

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;       // sqrt(p_hat (1 - p_hat) / n)
    long long n = 0;
    std::uint64_t seed = 0;
};

// SplitMix64: tiny, fast, and splittable by construction — substreams seeded
// from (seed, block) hashes are independent, which makes parallel estimates
// bit-for-bit reproducible regardless of thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Generator for sample block `block` of the stream identified by `seed`.
SplitMix64 substream(std::uint64_t seed, std::uint64_t block);

// One uniform point via rejection from the bounding box. Throws
// RejectionBudgetError when the acceptance rate is pathologically small.
Vec2 sample_point(const Region& region, SplitMix64& rng);

// Closed-triangle membership from the three edge orientations; collinear
// triangles degrade to the segment-span convention.
bool triangle_contains(Vec2 a, Vec2 b, Vec2 c, Vec2 o);

// Frequency of {anchor inside the triangle of 3 uniform points} over n trials.
McEstimate estimate_probability(const Region& region, AnchorPoint anchor, long long n,
                                std::uint64_t seed);

// Frequency of {first of 4 uniform points inside the triangle of the other
// three}; the complement of the Sylvester four-point convexity event.
McEstimate sylvester_nonconvex(const Region& region, long long n, std::uint64_t seed);

} // namespace tricontain::mc
