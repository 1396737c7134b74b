// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
//
// Exact sampling of arrival positions.  The arrival offset is a Brownian
// displacement subordinated to the first-passage time of the longitudinal
// motion, so a position sample needs one passage-time draw and one normal.

#include "fapchan/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fapchan {

namespace {

std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed)
{
    for (auto& word : s_)
        word = splitmix64(seed);
}

std::uint64_t Rng::next_u64()
{
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, q;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

void McConfig::validate() const
{
    if (samples == 0)
        throw std::domain_error("McConfig: samples must be positive");
    if (chunk == 0)
        throw std::domain_error("McConfig: chunk must be positive");
}

double sample_first_passage_time(const ChannelParams& params, Rng& rng)
{
    params.validate();
    const double shape = params.lambda * params.lambda / params.sigma2;

    if (params.v == 0.0) {
        // One-sided stable law: shape / Z^2 for a standard normal Z.
        double z;
        do {
            z = rng.normal();
        } while (z == 0.0);
        return shape / (z * z);
    }

    // Inverse Gaussian (mean mu, shape) by the transformation method of
    // Michael, Schucany and Haas, written in a cancellation-free form so the
    // small root stays accurate for large normal draws.
    const double mu = params.lambda / params.v;
    const double nu = rng.normal();
    const double s = mu * (nu * nu) / (2.0 * shape);
    const double x1 = mu * (1.0 - 2.0 / (1.0 + std::sqrt(1.0 + 2.0 / s)));
    if (rng.uniform() <= mu / (mu + x1))
        return x1;
    return mu * mu / x1;
}

double sample_fap(const ChannelParams& params, Rng& rng)
{
    const double t = sample_first_passage_time(params, rng);
    return std::sqrt(params.sigma2 * t) * rng.normal();
}

std::vector<double> sample_fap_many(const ChannelParams& params, const McConfig& cfg)
{
    params.validate();
    cfg.validate();
    std::vector<double> out(cfg.samples);
    const std::size_t chunks = (cfg.samples + cfg.chunk - 1) / cfg.chunk;
    for (std::size_t k = 0; k < chunks; ++k) {
        Rng rng(cfg.seed ^ static_cast<std::uint64_t>(k));
        const std::size_t begin = k * cfg.chunk;
        const std::size_t end = std::min(begin + cfg.chunk, cfg.samples);
        for (std::size_t i = begin; i < end; ++i)
            out[i] = sample_fap(params, rng);
    }
    return out;
}

double ks_statistic(const std::vector<double>& sorted_samples, const TabulatedCdf& cdf,
                    bool allow_unnormalized)
{
    if (sorted_samples.empty())
        throw std::domain_error("ks_statistic: sample set is empty");
    if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
        throw std::domain_error("ks_statistic: samples must be sorted ascending");
    double denom = 1.0;
    if (!allow_unnormalized) {
        if (std::fabs(cdf.total_mass - 1.0) > 1e-3)
            throw std::domain_error("ks_statistic: cdf mass deviates from 1 by more than "
                                    "1e-3; pass allow_unnormalized to compare raw values");
        denom = cdf.total_mass;
    }

    const double n = static_cast<double>(sorted_samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double f = cdf.eval(sorted_samples[i]) / denom;
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

SampleStats summarize(const std::vector<double>& samples, std::vector<double> bin_edges,
                      std::vector<double> exceed_radii)
{
    if (samples.empty())
        throw std::domain_error("summarize: sample set is empty");
    if (bin_edges.size() < 2 || !std::is_sorted(bin_edges.begin(), bin_edges.end()))
        throw std::domain_error("summarize: need at least two ascending bin edges");

    SampleStats st;
    st.count = samples.size();
    st.bin_edges = std::move(bin_edges);
    st.bin_counts.assign(st.bin_edges.size() - 1, 0);
    st.exceed_radii = std::move(exceed_radii);
    st.exceed_counts.assign(st.exceed_radii.size(), 0);

    double sum = 0.0;
    for (double x : samples)
        sum += x;
    st.mean = sum / static_cast<double>(st.count);

    double ss = 0.0;
    for (double x : samples) {
        const double d = x - st.mean;
        ss += d * d;
    }
    st.variance = st.count > 1 ? ss / static_cast<double>(st.count - 1) : 0.0;

    std::vector<double> magnitudes(st.count);
    for (std::size_t i = 0; i < st.count; ++i)
        magnitudes[i] = std::fabs(samples[i]);
    std::sort(magnitudes.begin(), magnitudes.end());
    st.median_abs = st.count % 2 == 1
        ? magnitudes[st.count / 2]
        : 0.5 * (magnitudes[st.count / 2 - 1] + magnitudes[st.count / 2]);

    const std::size_t bins = st.bin_counts.size();
    for (double x : samples) {
        const auto it = std::upper_bound(st.bin_edges.begin(), st.bin_edges.end(), x);
        std::size_t idx = it == st.bin_edges.begin()
            ? 0
            : static_cast<std::size_t>(it - st.bin_edges.begin()) - 1;
        if (idx >= bins)
            idx = bins - 1;
        ++st.bin_counts[idx];
        for (std::size_t j = 0; j < st.exceed_radii.size(); ++j)
            if (std::fabs(x) > st.exceed_radii[j])
                ++st.exceed_counts[j];
    }
    return st;
}

} // namespace fapchan
