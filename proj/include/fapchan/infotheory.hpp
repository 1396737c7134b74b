// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_INFOTHEORY_HPP
#define FAPCHAN_INFOTHEORY_HPP

#include <vector>

#include "fapchan/kernels.hpp"
#include "fapchan/quadrature.hpp"

namespace fapchan {

// Differential entropy of the arrival-position noise, in nats.  Defined for
// the normalized kernels (Subordination, CauchyLimit) only.
double noise_entropy(const ChannelParams& params, Kernel kernel, const QuadConfig& cfg = {});

// Second moment of the kernel as printed (equals the variance for a
// normalized, symmetric kernel).  Requires a kernel with a finite second
// moment: Exact, Subordination or CoreAsymptotic with positive drift.  The
// heavy-tailed zero-drift limit is rejected.
double noise_variance(const ChannelParams& params, Kernel kernel, const QuadConfig& cfg = {});

// Mutual information in nats between a uniform input on [-amplitude,
// amplitude] and the received position, for an additive noise drawn from
// the given kernel.  The kernel must integrate to 1 (within 1e-6); the
// mass-deficient printed exact form is rejected.
double mutual_information_uniform(const ChannelParams& params, Kernel kernel,
                                  double amplitude, const QuadConfig& cfg = {},
                                  int cdf_nodes = 4096);

// Capacity of an average-power-matched AWGN channel: the uniform input on
// [-amplitude, amplitude] carries power amplitude^2 / 3.
double gaussian_capacity(double amplitude, double noise_variance);

// Zero-drift capacity baseline log(amplitude / lambda); requires the
// amplitude to exceed the release distance.
double cauchy_capacity(const ChannelParams& params, double amplitude);

// Gap between the zero-drift capacity baseline and the rate achieved by a
// uniform input, together with its large-amplitude limit log(2*pi).
struct ShapingLoss {
    double asymptotic_nats = 0.0;
    double numeric_nats = 0.0;
};

// mi_exact_nats is the achieved uniform-input rate, typically
// mutual_information_uniform with the zero-drift limit kernel.
ShapingLoss shaping_loss(const ChannelParams& params, double amplitude,
                         double mi_exact_nats);

// P(|N| > radius) for a univariate kernel; closed form in the zero-drift
// (Cauchy) limit, numeric tail integral otherwise.
double interference_probability(const ChannelParams& params, Kernel kernel, double radius,
                                const QuadConfig& cfg = {});

// P(sqrt(N1^2 + N2^2) > radius) when two lateral dimensions are resolved:
// the radial survival lambda / sqrt(lambda^2 + radius^2).
double bivariate_interference_probability(const ChannelParams& params, double radius);

struct CapacityPoint {
    double v = 0.0;
    double mi_exact_nats = 0.0;
    double c_gauss_nats = 0.0;
    double c_cauchy_nats = 0.0;
    double noise_variance = 0.0;
    double n_c = 0.0;
};

struct InterferencePoint {
    double v = 0.0;
    double r = 0.0;
    double p_int = 0.0;
};

// Capacity figures across drift velocities (all strictly positive).  The
// zero-drift limit kernel yields drift-independent rows with infinite noise
// variance and a vanishing matched-AWGN baseline.
std::vector<CapacityPoint> capacity_sweep(const ChannelParams& params, Kernel kernel,
                                          const std::vector<double>& velocities,
                                          double amplitude, const QuadConfig& cfg = {});

// Interference probabilities over a radius grid for each drift velocity;
// optionally prepends the zero-drift closed-form rows as a baseline.
std::vector<InterferencePoint> interference_sweep(const ChannelParams& params, Kernel kernel,
                                                  const std::vector<double>& velocities,
                                                  const std::vector<double>& radii,
                                                  bool include_zero_drift,
                                                  const QuadConfig& cfg = {});

} // namespace fapchan

#endif // FAPCHAN_INFOTHEORY_HPP
