// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
#ifndef FAPCHAN_KERNELS_HPP
#define FAPCHAN_KERNELS_HPP

#include <string>

namespace fapchan {

/// Physical channel parameters.  A molecule is released a distance lambda
/// from an absorbing receiver plane, drifts toward it at speed v >= 0, and
/// diffuses with total noise power sigma2 = 2D.  Units follow the README
/// convention (micrometers and seconds).
struct ChannelParams {
    double lambda = 10.0; ///< transmitter-receiver distance (> 0)
    double sigma2 = 200.0; ///< diffusion scale sigma^2 = 2D (> 0)
    double v = 0.0;       ///< drift speed toward the receiver (>= 0)

    /// Throws std::domain_error if any field is non-finite or out of range
    /// (lambda <= 0, sigma2 <= 0, v < 0).
    void validate() const;

    double diffusion() const { return 0.5 * sigma2; }
};

/// Families of arrival-position densities and approximations.
enum class Kernel {
    Exact,           ///< printed closed form with the trailing exponential damping
    Subordination,   ///< first-passage mixture form (integrates to 1)
    CauchyLimit,     ///< zero-drift limit lambda/(pi (n^2+lambda^2))
    CoreAsymptotic,  ///< small-z form: Cauchy times exp(v(lambda-sqrt(n^2+lambda^2))/sigma2)
    TailAsymptotic,  ///< large-z form: C (n^2+lambda^2)^{-3/4} exp(-2z), anchored to Exact
    BivariateCauchy, ///< two-receiver zero-drift limit (2-argument; see bivariate_cauchy_pdf)
};

/// Position regimes relative to the critical scale n_c = sigma2/v.
enum class Regime { CauchyCore, Transition, ExponentialTail };

/// Regime boundaries in the dimensionless argument z = (v/sigma2)*sqrt(n^2+lambda^2).
struct RegimeThresholds {
    double z_lo = 0.3;
    double z_hi = 3.0;
};

/// n_c = sigma2 / v; +infinity when v == 0.
double critical_scale(const ChannelParams& p);

/// The Bessel argument z(n) = (v/sigma2) * sqrt(n^2 + lambda^2).
double z_argument(const ChannelParams& p, double n);

/// Classifies position n by z(n) against the thresholds.  Throws
/// ZeroDriftError when v == 0 (everything is Cauchy core) and
/// std::domain_error for invalid thresholds.
Regime classify_regime(const ChannelParams& p, double n, RegimeThresholds th = {});

/// Exponential decay rate of the far tail: 2v/sigma2 for Kernel::Exact,
/// v/sigma2 for Kernel::Subordination.  Requires v > 0 and one of those two
/// kernels; throws std::domain_error otherwise.
double tail_decay_rate(const ChannelParams& p, Kernel kernel);

/// Natural log of the selected one-dimensional density at lateral offset n.
/// Exact in the symmetry log_pdf(n) == log_pdf(-n).  Kernel::Exact,
/// Kernel::Subordination and Kernel::TailAsymptotic require v > 0;
/// Kernel::BivariateCauchy is rejected here (two-argument).
double log_pdf(const ChannelParams& p, Kernel kernel, double n);

/// exp(log_pdf); underflows gracefully to 0 deep in the tail.
double pdf(const ChannelParams& p, Kernel kernel, double n);

/// Zero-drift joint arrival density for two orthogonal lateral coordinates:
/// lambda / (2 pi (n1^2 + n2^2 + lambda^2)^{3/2}).  Ignores v.
double bivariate_cauchy_pdf(const ChannelParams& p, double n1, double n2);

/// Display token for a regime ("CauchyCore", "Transition", "ExponentialTail").
std::string regime_name(Regime r);

} // namespace fapchan

#endif // FAPCHAN_KERNELS_HPP
