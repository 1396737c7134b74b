// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
//
// Arrival-position densities for the drift-diffusion channel.  All kernels
// are even in n; everything is computed through s = sqrt(n^2 + lambda^2) so
// the symmetry is exact in floating point.

#include "fapchan/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fapchan/bessel.hpp"
#include "fapchan/errors.hpp"

namespace fapchan {

namespace {

constexpr double kPi = std::numbers::pi;

void check_offset(double n)
{
    if (std::isnan(n))
        throw std::domain_error("log_pdf: offset n must not be NaN");
}

void require_positive_drift(const ChannelParams& p, const char* what)
{
    if (p.v <= 0.0)
        throw std::domain_error(std::string(what) + " requires a strictly positive drift");
}

// ln pdf of the mixture (subordination) form:
//   f(n) = (v lambda / (pi sigma2 s)) * e^{v lambda / sigma2} * K1(z),
// with s = sqrt(n^2+lambda^2) and z = (v/sigma2) s.  The printed closed form
// carries an extra factor e^{-z}; both share this helper.
double log_pdf_drifted(const ChannelParams& p, double n, bool damped)
{
    const double s = std::hypot(n, p.lambda);
    const double z = p.v / p.sigma2 * s;
    double lp = std::log(p.v * p.lambda / (kPi * p.sigma2)) - std::log(s)
              + p.v * p.lambda / p.sigma2 + log_bessel_k1(z);
    if (damped) lp -= z;
    return lp;
}

double log_pdf_cauchy(const ChannelParams& p, double n)
{
    const double s = std::hypot(n, p.lambda);
    return std::log(p.lambda / kPi) - 2.0 * std::log(s);
}

// Tail form C (n^2+lambda^2)^{-3/4} e^{-2z}; the constant makes it continuous
// with the printed exact form where z(n) reaches z_hi (default 3.0).  When the
// whole line already sits beyond z_hi the anchor falls back to n = lambda.
double log_pdf_tail(const ChannelParams& p, double n)
{
    const double z_hi = RegimeThresholds{}.z_hi;
    const double z0 = p.v * p.lambda / p.sigma2;
    double n_anchor;
    if (z_hi > z0) {
        // Offset where z(n) first reaches z_hi.
        n_anchor = p.sigma2 / p.v * std::sqrt(z_hi * z_hi - z0 * z0);
    } else {
        n_anchor = p.lambda;
    }
    const double s_anchor = std::hypot(n_anchor, p.lambda);
    const double z_anchor = p.v / p.sigma2 * s_anchor;
    const double log_c = log_pdf_drifted(p, n_anchor, /*damped=*/true)
                       + 1.5 * std::log(s_anchor) + 2.0 * z_anchor;
    const double s = std::hypot(n, p.lambda);
    return log_c - 1.5 * std::log(s) - 2.0 * (p.v / p.sigma2) * s;
}

} // namespace

void ChannelParams::validate() const
{
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::domain_error("ChannelParams: lambda must be positive and finite");
    if (!std::isfinite(sigma2) || sigma2 <= 0.0)
        throw std::domain_error("ChannelParams: sigma2 must be positive and finite");
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error("ChannelParams: drift v must be finite and >= 0");
}

double critical_scale(const ChannelParams& p)
{
    p.validate();
    if (p.v == 0.0) return std::numeric_limits<double>::infinity();
    return p.sigma2 / p.v;
}

double z_argument(const ChannelParams& p, double n)
{
    p.validate();
    check_offset(n);
    return p.v / p.sigma2 * std::hypot(n, p.lambda);
}

Regime classify_regime(const ChannelParams& p, double n, RegimeThresholds th)
{
    p.validate();
    check_offset(n);
    if (!(th.z_lo > 0.0) || !(th.z_hi > th.z_lo) || !std::isfinite(th.z_hi))
        throw std::domain_error("classify_regime: thresholds must satisfy 0 < z_lo < z_hi");
    if (p.v == 0.0)
        throw ZeroDriftError("classify_regime: zero drift puts the whole line in the Cauchy core");
    const double z = z_argument(p, n);
    if (z < th.z_lo) return Regime::CauchyCore;
    if (z > th.z_hi) return Regime::ExponentialTail;
    return Regime::Transition;
}

double tail_decay_rate(const ChannelParams& p, Kernel kernel)
{
    p.validate();
    require_positive_drift(p, "tail_decay_rate");
    switch (kernel) {
    case Kernel::Exact: return 2.0 * p.v / p.sigma2;
    case Kernel::Subordination: return p.v / p.sigma2;
    default:
        throw std::domain_error("tail_decay_rate: defined for the exact and subordination kernels only");
    }
}

double log_pdf(const ChannelParams& p, Kernel kernel, double n)
{
    p.validate();
    check_offset(n);
    switch (kernel) {
    case Kernel::CauchyLimit:
        return log_pdf_cauchy(p, n);
    case Kernel::CoreAsymptotic:
        // Cauchy times the slowly varying factor e^{v(lambda - s)/sigma2};
        // reduces to the plain Cauchy limit at v = 0.
        return log_pdf_cauchy(p, n) + p.v / p.sigma2 * (p.lambda - std::hypot(n, p.lambda));
    case Kernel::Exact:
        require_positive_drift(p, "log_pdf(Exact)");
        return log_pdf_drifted(p, n, /*damped=*/true);
    case Kernel::Subordination:
        require_positive_drift(p, "log_pdf(Subordination)");
        return log_pdf_drifted(p, n, /*damped=*/false);
    case Kernel::TailAsymptotic:
        require_positive_drift(p, "log_pdf(TailAsymptotic)");
        return log_pdf_tail(p, n);
    case Kernel::BivariateCauchy:
        throw std::domain_error("log_pdf: the bivariate kernel takes two offsets; use bivariate_cauchy_pdf");
    }
    throw std::domain_error("log_pdf: unknown kernel");
}

double pdf(const ChannelParams& p, Kernel kernel, double n)
{
    return std::exp(log_pdf(p, kernel, n));
}

double bivariate_cauchy_pdf(const ChannelParams& p, double n1, double n2)
{
    p.validate();
    check_offset(n1);
    check_offset(n2);
    const double s2 = n1 * n1 + n2 * n2 + p.lambda * p.lambda;
    return p.lambda / (2.0 * kPi * s2 * std::sqrt(s2));
}

std::string regime_name(Regime r)
{
    switch (r) {
    case Regime::CauchyCore: return "CauchyCore";
    case Regime::Transition: return "Transition";
    case Regime::ExponentialTail: return "ExponentialTail";
    }
    return "?";
}

} // namespace fapchan
