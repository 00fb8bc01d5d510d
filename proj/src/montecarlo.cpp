#include "tricontain/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "tricontain/errors.hpp"

namespace tricontain::mc {

namespace {

constexpr long long kBlockSize = 65536;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix_bits(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

McEstimate finish(long long hits, long long n, std::uint64_t seed) {
    McEstimate out;
    out.n = n;
    out.seed = seed;
    out.p_hat = static_cast<double>(hits) / static_cast<double>(n);
    out.std_err = std::sqrt(out.p_hat * (1.0 - out.p_hat) / static_cast<double>(n));
    return out;
}

// Runs `body(block_rng)` once per sample of every block in [first, last),
// returning the total event count. Deterministic for fixed seed.
template <class Body>
long long run_blocks(std::uint64_t seed, long long n, long long first, long long last,
                     Body body) {
    long long hits = 0;
    for (long long b = first; b < last; ++b) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(b));
        const long long in_block = std::min(kBlockSize, n - b * kBlockSize);
        for (long long i = 0; i < in_block; ++i)
            if (body(rng)) ++hits;
    }
    return hits;
}

template <class Body>
McEstimate estimate(const Region& region, long long n, std::uint64_t seed, Body body) {
    if (n < 1000) throw DomainError("Monte Carlo estimates need n >= 1000");
    (void)area(region); // reject degenerate regions before sampling
    const long long blocks = (n + kBlockSize - 1) / kBlockSize;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const long long workers = std::min<long long>(blocks, std::min<unsigned>(hw, 16));

    if (workers <= 1) return finish(run_blocks(seed, n, 0, blocks, body), n, seed);

    std::vector<std::future<long long>> parts;
    parts.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
        const long long first = blocks * w / workers;
        const long long last = blocks * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, [=, &region]() {
            return run_blocks(seed, n, first, last, body);
        }));
    }
    long long hits = 0;
    for (auto& p : parts) hits += p.get(); // ordered integer reduction
    return finish(hits, n, seed);
}

} // namespace

SplitMix64 substream(std::uint64_t seed, std::uint64_t block) {
    return SplitMix64(mix_bits(seed + kGolden * (block + 1)));
}

Vec2 sample_point(const Region& region, SplitMix64& rng) {
    const BoundingBox box = bounding_box(region);
    const double w = box.hi.x - box.lo.x;
    const double h = box.hi.y - box.lo.y;
    constexpr int kBudget = 200000; // acceptance 1e-4 => miss odds ~ exp(-20)
    for (int i = 0; i < kBudget; ++i) {
        const Vec2 p{box.lo.x + w * rng.next_double(), box.lo.y + h * rng.next_double()};
        if (contains(region, p)) return p;
    }
    throw RejectionBudgetError(
        "rejection sampling gave up: acceptance rate below ~1e-4 for this region");
}

bool triangle_contains(Vec2 a, Vec2 b, Vec2 c, Vec2 o) {
    const double d1 = cross(b - a, o - a);
    const double d2 = cross(c - b, o - b);
    const double d3 = cross(a - c, o - c);
    const bool has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
    const bool has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
    if (!has_pos && !has_neg) {
        // a, b, c, o all collinear: containment means o within the span.
        return std::min({a.x, b.x, c.x}) <= o.x && o.x <= std::max({a.x, b.x, c.x}) &&
               std::min({a.y, b.y, c.y}) <= o.y && o.y <= std::max({a.y, b.y, c.y});
    }
    return !(has_pos && has_neg);
}

McEstimate estimate_probability(const Region& region, AnchorPoint anchor, long long n,
                                std::uint64_t seed) {
    return estimate(region, n, seed, [&region, anchor](SplitMix64& rng) {
        const Vec2 a = sample_point(region, rng);
        const Vec2 b = sample_point(region, rng);
        const Vec2 c = sample_point(region, rng);
        return triangle_contains(a, b, c, anchor);
    });
}

McEstimate sylvester_nonconvex(const Region& region, long long n, std::uint64_t seed) {
    return estimate(region, n, seed, [&region](SplitMix64& rng) {
        const Vec2 o = sample_point(region, rng);
        const Vec2 a = sample_point(region, rng);
        const Vec2 b = sample_point(region, rng);
        const Vec2 c = sample_point(region, rng);
        return triangle_contains(a, b, c, o);
    });
}

} // namespace tricontain::mc
