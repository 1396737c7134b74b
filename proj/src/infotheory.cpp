// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
//
// Entropy, mutual-information and interference figures for the
// arrival-position channel.  Everything is numeric quadrature over the
// kernels; the heavy-tailed zero-drift limit additionally has closed forms
// which are used wherever they apply.

#include "fapchan/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fapchan/cdf.hpp"
#include "fapchan/errors.hpp"

namespace fapchan {

namespace {

constexpr double kPi = std::numbers::pi;

void check_amplitude(double amplitude)
{
    if (!std::isfinite(amplitude) || amplitude <= 0.0)
        throw std::domain_error("amplitude must be positive and finite");
}

// -f log f with the convention 0 log 0 = 0, safe against underflow.
double nlogn(double f)
{
    if (f <= 0.0)
        return 0.0;
    return -f * std::log(f);
}

// Two-sided integral of a symmetric integrand: a finite panel over the core
// plus a mapped tail, split at ten release distances.
double symmetric_integral(const std::function<double(double)>& g, double split,
                          const QuadConfig& cfg, const char* what)
{
    const double core = require_converged(integrate(g, 0.0, split, cfg), what);
    const double tail = require_converged(integrate_semi_infinite(g, split, cfg), what);
    return 2.0 * (core + tail);
}

} // namespace

double noise_entropy(const ChannelParams& params, Kernel kernel, const QuadConfig& cfg)
{
    params.validate();
    cfg.validate();
    if (kernel != Kernel::Subordination && kernel != Kernel::CauchyLimit)
        throw std::domain_error("noise_entropy: defined for normalized kernels only "
                                "(subordination or the zero-drift limit)");
    auto g = [&params, kernel](double n) { return nlogn(pdf(params, kernel, n)); };
    return symmetric_integral(g, 10.0 * params.lambda, cfg, "noise_entropy");
}

double noise_variance(const ChannelParams& params, Kernel kernel, const QuadConfig& cfg)
{
    params.validate();
    cfg.validate();
    if (kernel == Kernel::CauchyLimit)
        throw std::domain_error("noise_variance: the zero-drift limit has no finite variance");
    if (kernel != Kernel::Exact && kernel != Kernel::Subordination
        && kernel != Kernel::CoreAsymptotic)
        throw std::domain_error("noise_variance: kernel has no tabulated second moment");
    if (params.v <= 0.0)
        throw std::domain_error("noise_variance: requires positive drift (the zero-drift "
                                "density has no finite variance)");
    auto g = [&params, kernel](double n) { return n * n * pdf(params, kernel, n); };
    return symmetric_integral(g, 10.0 * params.lambda, cfg, "noise_variance");
}

double mutual_information_uniform(const ChannelParams& params, Kernel kernel,
                                  double amplitude, const QuadConfig& cfg, int cdf_nodes)
{
    params.validate();
    cfg.validate();
    check_amplitude(amplitude);

    const TabulatedCdf cdf = build_cdf(params, kernel, cfg, cdf_nodes);
    if (!cdf.is_normalized(1e-6))
        throw std::domain_error("mutual_information_uniform: kernel mass deviates from 1; "
                                "the printed exact form loses mass to absorption and has "
                                "no information rate (use the subordination kernel)");

    const double h_noise = noise_entropy(params, kernel, cfg);

    // Output density of Y = X + N for X uniform on [-A, A]: a smoothed
    // difference of noise cdf values.  Once both endpoints sit on the
    // positive half-line the difference is taken between survival values,
    // which stay relatively accurate far out in the tail where the cdf
    // itself has saturated to within rounding of its total.
    const double a = amplitude;
    auto output_entropy_integrand = [&cdf, a](double y) {
        const double lo = y - a;
        const double mass = lo >= 0.0
            ? cdf.survival_pos(lo) - cdf.survival_pos(y + a)
            : cdf.eval(y + a) - cdf.eval(lo);
        return nlogn(mass / (2.0 * a));
    };

    // Truncate where the noise itself is beyond its 1 - 1e-9 quantile; the
    // output entropy lost there is negligible.
    const double n_cut = std::min(quantile(cdf, 1.0 - 1e-9), cdf.n_max());
    const double y_max = a + n_cut;

    double h_out;
    if (y_max <= 2.0 * a) {
        h_out = 2.0 * require_converged(integrate(output_entropy_integrand, 0.0, y_max, cfg),
                                        "mutual_information_uniform: output entropy");
    } else {
        const double core =
            require_converged(integrate(output_entropy_integrand, 0.0, 2.0 * a, cfg),
                              "mutual_information_uniform: output entropy core");
        // Log substitution y = e^u tames the long algebraic reach of the tail.
        auto mapped = [&output_entropy_integrand](double u) {
            const double y = std::exp(u);
            return output_entropy_integrand(y) * y;
        };
        const double tail =
            require_converged(integrate(mapped, std::log(2.0 * a), std::log(y_max), cfg),
                              "mutual_information_uniform: output entropy tail");
        h_out = 2.0 * (core + tail);
    }
    return std::max(0.0, h_out - h_noise);
}

double gaussian_capacity(double amplitude, double noise_variance)
{
    check_amplitude(amplitude);
    if (std::isnan(noise_variance) || noise_variance <= 0.0)
        throw std::domain_error("gaussian_capacity: noise variance must be positive");
    return 0.5 * std::log1p(amplitude * amplitude / (3.0 * noise_variance));
}

double cauchy_capacity(const ChannelParams& params, double amplitude)
{
    params.validate();
    check_amplitude(amplitude);
    if (amplitude <= params.lambda)
        throw std::domain_error("cauchy_capacity: amplitude must exceed the release "
                                "distance lambda");
    return std::log(amplitude / params.lambda);
}

ShapingLoss shaping_loss(const ChannelParams& params, double amplitude, double mi_exact_nats)
{
    if (!std::isfinite(mi_exact_nats))
        throw std::domain_error("shaping_loss: mutual information must be finite");
    ShapingLoss loss;
    loss.asymptotic_nats = std::log(2.0 * kPi);
    loss.numeric_nats = cauchy_capacity(params, amplitude) - mi_exact_nats;
    return loss;
}

double interference_probability(const ChannelParams& params, Kernel kernel, double radius,
                                const QuadConfig& cfg)
{
    params.validate();
    cfg.validate();
    if (!std::isfinite(radius) || radius < 0.0)
        throw std::domain_error("interference_probability: radius must be >= 0");
    if (kernel == Kernel::BivariateCauchy)
        throw std::domain_error("interference_probability: use "
                                "bivariate_interference_probability for the planar kernel");
    if (kernel == Kernel::CauchyLimit)
        return 1.0 - 2.0 / kPi * std::atan(radius / params.lambda);
    auto f = [&params, kernel](double n) { return pdf(params, kernel, n); };
    return 2.0 * require_converged(integrate_semi_infinite(f, radius, cfg),
                                   "interference_probability");
}

double bivariate_interference_probability(const ChannelParams& params, double radius)
{
    params.validate();
    if (!std::isfinite(radius) || radius < 0.0)
        throw std::domain_error("bivariate_interference_probability: radius must be >= 0");
    return params.lambda / std::hypot(params.lambda, radius);
}

std::vector<CapacityPoint> capacity_sweep(const ChannelParams& params, Kernel kernel,
                                          const std::vector<double>& velocities,
                                          double amplitude, const QuadConfig& cfg)
{
    params.validate();
    cfg.validate();
    check_amplitude(amplitude);
    const double c_cauchy = cauchy_capacity(params, amplitude);

    // The zero-drift limit kernel ignores the drift, so its figures are
    // computed once and repeated across rows.
    double cauchy_mi = 0.0;
    if (kernel == Kernel::CauchyLimit)
        cauchy_mi = mutual_information_uniform(params, kernel, amplitude, cfg);

    if (!std::is_sorted(velocities.begin(), velocities.end()))
        throw std::domain_error("capacity_sweep: velocity grid must be ascending");

    std::vector<CapacityPoint> rows;
    rows.reserve(velocities.size());
    for (double v : velocities) {
        if (!std::isfinite(v) || v <= 0.0)
            throw std::domain_error("capacity_sweep: velocities must be positive (the "
                                    "zero-drift limit is the cauchy kernel itself)");
        ChannelParams p = params;
        p.v = v;

        CapacityPoint row;
        row.v = v;
        row.c_cauchy_nats = c_cauchy;
        row.n_c = p.sigma2 / v;
        if (kernel == Kernel::CauchyLimit) {
            row.mi_exact_nats = cauchy_mi;
            row.noise_variance = std::numeric_limits<double>::infinity();
            row.c_gauss_nats = 0.0;
        } else {
            row.mi_exact_nats = mutual_information_uniform(p, kernel, amplitude, cfg);
            row.noise_variance = noise_variance(p, kernel, cfg);
            row.c_gauss_nats = gaussian_capacity(amplitude, row.noise_variance);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<InterferencePoint> interference_sweep(const ChannelParams& params, Kernel kernel,
                                                  const std::vector<double>& velocities,
                                                  const std::vector<double>& radii,
                                                  bool include_zero_drift,
                                                  const QuadConfig& cfg)
{
    params.validate();
    cfg.validate();
    if (!std::is_sorted(radii.begin(), radii.end()))
        throw std::domain_error("interference_sweep: radius grid must be ascending");

    // A zero velocity selects the closed-form baseline; the switch prepends
    // it when the caller's list does not already start with it.
    std::vector<double> vs;
    vs.reserve(velocities.size() + 1);
    if (include_zero_drift && (velocities.empty() || velocities.front() != 0.0))
        vs.push_back(0.0);
    vs.insert(vs.end(), velocities.begin(), velocities.end());

    std::vector<InterferencePoint> rows;
    rows.reserve(vs.size() * radii.size());
    for (double v : vs) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::domain_error("interference_sweep: velocities must be >= 0");
        ChannelParams p = params;
        p.v = v;
        const Kernel k = v == 0.0 ? Kernel::CauchyLimit : kernel;
        for (double r : radii)
            rows.push_back({v, r, interference_probability(p, k, r, cfg)});
    }
    return rows;
}

} // namespace fapchan
