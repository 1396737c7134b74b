// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#include "fapchan/cdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fapchan/errors.hpp"

namespace fapchan {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSurvivalBound = 0.5e-9; // two-sided mass allowed beyond the grid

bool has_algebraic_tail(const ChannelParams& p, Kernel kernel)
{
    return kernel == Kernel::CauchyLimit || (kernel == Kernel::CoreAsymptotic && p.v == 0.0);
}

// Conservative bound on the two-sided mass beyond +-n.  The Cauchy survival
// is bounded by its leading term; for a drifted kernel the log-density falls
// at least as fast as -rate * n / s per unit offset once past n, giving
// survival <= f(n) * s / (rate * n) on each side.
double survival_bound(const ChannelParams& p, Kernel kernel, double rate, double n)
{
    if (has_algebraic_tail(p, kernel))
        return 2.0 * p.lambda / (kPi * n);
    return 2.0 * pdf(p, kernel, n) * std::hypot(n, p.lambda) / (rate * n);
}

double cauchy_one_sided_survival(double lambda, double n)
{
    return 0.5 - std::atan(n / lambda) / kPi;
}

// Cubic Hermite on one panel, with values g0/g1 and slopes d0/d1.
double hermite(double x0, double x1, double g0, double g1, double d0, double d1, double x)
{
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return g0 * (2.0 * t3 - 3.0 * t2 + 1.0) + h * d0 * (t3 - 2.0 * t2 + t)
         + g1 * (3.0 * t2 - 2.0 * t3) + h * d1 * (t3 - t2);
}

} // namespace

bool TabulatedCdf::is_normalized(double tol) const
{
    return std::fabs(total_mass - 1.0) <= tol;
}

double TabulatedCdf::eval(double n) const
{
    if (std::isnan(n))
        throw std::domain_error("TabulatedCdf::eval: n must not be NaN");

    const double a = std::fabs(n);
    const double half = 0.5 * total_mass;
    double g; // one-sided cumulative mass over [0, a]
    if (a >= pos_nodes.back()) {
        const double survival = algebraic_tail
            ? cauchy_one_sided_survival(params.lambda, a)
            : residual_tail * std::exp(-tail_rate * (a - pos_nodes.back()));
        g = pos_cum.back() + residual_tail - survival;
    } else {
        const auto it = std::upper_bound(pos_nodes.begin(), pos_nodes.end(), a);
        const std::size_t k = static_cast<std::size_t>(it - pos_nodes.begin());
        // a < pos_nodes.back() and pos_nodes[0] == 0 <= a, so 1 <= k < size.
        g = hermite(pos_nodes[k - 1], pos_nodes[k], pos_cum[k - 1], pos_cum[k],
                    pos_slope[k - 1], pos_slope[k], a);
    }
    return n >= 0.0 ? half + g : half - g;
}

double TabulatedCdf::survival_pos(double n) const
{
    if (std::isnan(n) || n < 0.0)
        throw std::domain_error("TabulatedCdf::survival_pos: n must be >= 0");
    if (n >= pos_nodes.back())
        return algebraic_tail
            ? cauchy_one_sided_survival(params.lambda, n)
            : residual_tail * std::exp(-tail_rate * (n - pos_nodes.back()));
    const auto it = std::upper_bound(pos_nodes.begin(), pos_nodes.end(), n);
    const std::size_t k = static_cast<std::size_t>(it - pos_nodes.begin());
    return hermite(pos_nodes[k - 1], pos_nodes[k], pos_surv[k - 1], pos_surv[k],
                   pos_surv_slope[k - 1], pos_surv_slope[k], n);
}

TabulatedCdf build_cdf(const ChannelParams& params, Kernel kernel,
                       const QuadConfig& cfg, int nodes)
{
    params.validate();
    cfg.validate();
    if (kernel != Kernel::Exact && kernel != Kernel::Subordination
        && kernel != Kernel::CauchyLimit && kernel != Kernel::CoreAsymptotic)
        throw std::domain_error("build_cdf: kernel must be a univariate density with "
                                "an integrable tail");
    if (nodes < 64 || nodes % 4 != 0)
        throw std::domain_error("build_cdf: nodes must be a multiple of 4 and >= 64");

    TabulatedCdf cdf;
    cdf.params = params;
    cdf.kernel = kernel;
    cdf.algebraic_tail = has_algebraic_tail(params, kernel);
    cdf.tail_rate = cdf.algebraic_tail ? 0.0 : tail_decay_rate(params, kernel);

    // Grow the half-width until the mass beyond the grid is negligible.
    double n_max = 20.0 * params.lambda;
    while (survival_bound(params, kernel, cdf.tail_rate, n_max) > kSurvivalBound)
        n_max *= 2.0;

    // Positive-half grid: linear through the core, log-spaced over the tail.
    const int half = nodes / 2;
    const int lin = half / 4;
    cdf.pos_nodes.resize(static_cast<std::size_t>(half));
    for (int i = 0; i < lin; ++i)
        cdf.pos_nodes[static_cast<std::size_t>(i)] =
            params.lambda * static_cast<double>(i) / static_cast<double>(lin - 1);
    const double log_span = std::log(n_max / params.lambda);
    for (int i = lin; i < half; ++i)
        cdf.pos_nodes[static_cast<std::size_t>(i)] =
            params.lambda * std::exp(log_span * static_cast<double>(i - lin + 1)
                                     / static_cast<double>(half - lin));
    cdf.pos_nodes.back() = n_max;

    auto f = [&params, kernel](double x) { return pdf(params, kernel, x); };

    // One quadrature panel per grid cell, accumulated forward into the
    // cumulative table and backward into the survival table.  The backward
    // sums keep full relative precision deep in the tail, where a forward
    // difference of two near-equal cumulative values would be pure noise.
    const std::size_t m = cdf.pos_nodes.size();
    std::vector<double> panel_mass(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        const QuadResult panel = integrate(f, cdf.pos_nodes[i - 1], cdf.pos_nodes[i], cfg);
        panel_mass[i] = require_converged(panel, "build_cdf: grid panel");
    }
    // The residual beyond the grid is orders of magnitude below the
    // quadrature's absolute tolerance, so in the algebraic case the exact
    // closed form is used instead of an integral that would be allowed to
    // stop with a comparable absolute error.
    cdf.residual_tail = cdf.algebraic_tail
        ? cauchy_one_sided_survival(params.lambda, n_max)
        : require_converged(integrate_semi_infinite(f, n_max, cfg),
                            "build_cdf: residual tail");
    cdf.pos_cum.resize(m);
    cdf.pos_cum[0] = 0.0;
    for (std::size_t i = 1; i < m; ++i)
        cdf.pos_cum[i] = cdf.pos_cum[i - 1] + panel_mass[i];
    cdf.pos_surv.resize(m);
    if (cdf.algebraic_tail) {
        // Exact nodal survivals keep the interpolated tail relatively
        // accurate many decades below the total mass.
        for (std::size_t i = 0; i < m; ++i)
            cdf.pos_surv[i] = cauchy_one_sided_survival(params.lambda, cdf.pos_nodes[i]);
    } else {
        cdf.pos_surv[m - 1] = cdf.residual_tail;
        for (std::size_t i = m - 1; i > 0; --i)
            cdf.pos_surv[i - 1] = cdf.pos_surv[i] + panel_mass[i];
    }
    cdf.total_mass = 2.0 * (cdf.pos_cum.back() + cdf.residual_tail);

    // Hermite slopes: the pdf itself, clamped to at most three times the
    // smaller adjacent secant slope so the interpolant is monotone.  The
    // survival table shares each panel's secant magnitude, so one clamp
    // serves both interpolants (with the sign flipped).
    std::vector<double> secant(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i)
        secant[i] = panel_mass[i + 1] / (cdf.pos_nodes[i + 1] - cdf.pos_nodes[i]);
    cdf.pos_slope.resize(m);
    cdf.pos_surv_slope.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double left = secant[i == 0 ? 0 : i - 1];
        const double right = secant[i + 1 == m ? m - 2 : i];
        cdf.pos_slope[i] = std::min(f(cdf.pos_nodes[i]), 3.0 * std::min(left, right));
        cdf.pos_surv_slope[i] = -cdf.pos_slope[i];
    }

    // Public mirrored view of the table.
    cdf.nodes.resize(2 * m - 1);
    cdf.values.resize(2 * m - 1);
    cdf.density.resize(2 * m - 1);
    const double half_mass = 0.5 * cdf.total_mass;
    for (std::size_t i = 0; i < m; ++i) {
        const double fn = f(cdf.pos_nodes[i]);
        cdf.nodes[m - 1 + i] = cdf.pos_nodes[i];
        cdf.values[m - 1 + i] = half_mass + cdf.pos_cum[i];
        cdf.density[m - 1 + i] = fn;
        cdf.nodes[m - 1 - i] = -cdf.pos_nodes[i];
        cdf.values[m - 1 - i] = half_mass - cdf.pos_cum[i];
        cdf.density[m - 1 - i] = fn;
    }
    return cdf;
}

double quantile(const TabulatedCdf& cdf, double p)
{
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("quantile: p must lie strictly inside (0, 1)");
    if (cdf.pos_nodes.empty() || cdf.total_mass <= 0.0)
        throw std::domain_error("quantile: cdf table is empty");
    if (!cdf.is_normalized(1e-3))
        throw std::domain_error("quantile: cdf is not normalized; rescale the mass-deficient "
                                "table before inverting it");

    const double bracket = cdf.n_max()
        + (cdf.tail_rate > 0.0 ? 60.0 / cdf.tail_rate : 9.0 * cdf.n_max());
    double lo = -bracket;
    double hi = bracket;
    constexpr double p_tol = 1e-8;
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = cdf.eval(mid) / cdf.total_mass;
        // Accept only when the cdf value matches and the abscissa itself is
        // pinned down: where the density is tiny the first test alone would
        // stop arbitrarily far from the true quantile.
        const double x_tol = 1e-7 * std::max(cdf.params.lambda, std::fabs(mid));
        if (std::fabs(fm - p) < p_tol && hi - lo <= x_tol)
            return mid;
        if (fm < p)
            lo = mid;
        else
            hi = mid;
        if (!(lo < hi) || hi - lo < 1e-300)
            return 0.5 * (lo + hi);
    }
    throw NumericalError("quantile: bisection failed to reach the requested accuracy");
}

} // namespace fapchan
