// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_MONTECARLO_HPP
#define FAPCHAN_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "fapchan/cdf.hpp"
#include "fapchan/kernels.hpp"

namespace fapchan {

// Deterministic pseudo-random source: xoshiro256++ state seeded by
// splitmix64 expansion of a single 64-bit seed, with a cached-spare polar
// method for standard normals.  Identical seeds give identical streams on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform(); // in [0, 1), 53 random bits
    double normal();  // standard normal

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct McConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 1'000'000;
    std::size_t chunk = 65'536;

    void validate() const;
};

// First-passage time of the particle to the absorbing plane: inverse
// Gaussian with mean lambda/v for a drifted channel, the one-sided stable
// (Levy) law in the zero-drift limit.
double sample_first_passage_time(const ChannelParams& params, Rng& rng);

// One arrival-position sample: a lateral Brownian displacement evaluated at
// an independently drawn first-passage time.
double sample_fap(const ChannelParams& params, Rng& rng);

// Draws cfg.samples arrival positions.  The stream is split into chunks of
// cfg.chunk draws, chunk k using its own generator seeded with seed ^ k, so
// the output is independent of any parallel scheduling of chunks.
std::vector<double> sample_fap_many(const ChannelParams& params, const McConfig& cfg);

// Two-sided Kolmogorov-Smirnov statistic between sorted samples and a
// tabulated cdf.  By default the cdf must carry total mass 1 to within 1e-3
// and is rescaled to an exact probability law; with allow_unnormalized the
// raw (possibly mass-deficient) cdf values are compared as-is.
double ks_statistic(const std::vector<double>& sorted_samples, const TabulatedCdf& cdf,
                    bool allow_unnormalized = false);

struct SampleStats {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased (n - 1 denominator)
    double median_abs = 0.0; // median of |sample|
    std::vector<double> bin_edges;
    std::vector<std::uint64_t> bin_counts; // clamped: outliers land in the end bins
    std::vector<double> exceed_radii;
    std::vector<std::uint64_t> exceed_counts; // #{ |sample| > r } per radius
};

// Histogram plus summary moments; bin_counts always sum to count because
// out-of-range samples are clamped into the first/last bin.
SampleStats summarize(const std::vector<double>& samples, std::vector<double> bin_edges,
                      std::vector<double> exceed_radii);

} // namespace fapchan

#endif // FAPCHAN_MONTECARLO_HPP
