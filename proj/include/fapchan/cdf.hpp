// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_CDF_HPP
#define FAPCHAN_CDF_HPP

#include <vector>

#include "fapchan/kernels.hpp"
#include "fapchan/quadrature.hpp"

namespace fapchan {

// Tabulated cumulative distribution of an arrival-position kernel.  The
// table covers a symmetric grid [-n_max, n_max]; beyond the last node the
// cdf is closed analytically, either with the exact arctangent survival of
// the Cauchy density or with an exponential tail at the kernel's decay
// rate.  eval() returns the *unnormalised* cdf: for a mass-deficient kernel
// it tends to total_mass (< 1), not 1, as n -> +inf.
struct TabulatedCdf {
    ChannelParams params{};
    Kernel kernel = Kernel::Subordination;

    std::vector<double> nodes;    // full mirrored grid, ascending, middle node at 0
    std::vector<double> values;   // unnormalised cdf at each node
    std::vector<double> density;  // pdf at each node

    double total_mass = 0.0;     // integral of the pdf over the whole line
    double residual_tail = 0.0;  // one-sided mass beyond the last node
    double tail_rate = 0.0;      // exponential closure rate (0 when algebraic)
    bool algebraic_tail = false; // true => arctangent closure instead

    // Interpolation tables for the positive half: cumulative mass from 0
    // (forward sums), one-sided survival mass (backward sums, so the far
    // tail keeps full relative precision), and pdf slopes clamped for
    // monotone cubic Hermite evaluation.
    std::vector<double> pos_nodes;
    std::vector<double> pos_cum;
    std::vector<double> pos_slope;
    std::vector<double> pos_surv;
    std::vector<double> pos_surv_slope;

    double n_max() const { return nodes.empty() ? 0.0 : nodes.back(); }
    bool is_normalized(double tol = 1e-6) const;

    // Unnormalised cdf at n: piecewise-cubic on the grid, analytic closure
    // beyond it.  Exactly symmetric: eval(-n) == total_mass - eval(n).
    double eval(double n) const;

    // One-sided survival mass over [n, +inf) for n >= 0, accurate in a
    // *relative* sense even where the survival is many orders of magnitude
    // below the total mass (eval() differences would cancel there).
    double survival_pos(double n) const;
};

// Builds the table for one of the univariate kernels with integrable tails
// (Exact, Subordination, CauchyLimit, CoreAsymptotic).  The grid half-width
// grows by doubling until a conservative bound on the two-sided survival
// falls below 0.5e-9; `nodes` is the nominal grid size across both halves
// (the origin is shared, so the stored array has nodes - 1 entries), with a
// quarter of each half linear on [0, lambda] and the rest log-spaced.
TabulatedCdf build_cdf(const ChannelParams& params, Kernel kernel,
                       const QuadConfig& cfg = {}, int nodes = 4096);

// Value q with cdf.eval(q) / total_mass within 1e-8 of p, found by
// bisection.  For a mass-deficient kernel this is a quantile of the
// *shape* (the density rescaled to unit mass).
double quantile(const TabulatedCdf& cdf, double p);

} // namespace fapchan

#endif // FAPCHAN_CDF_HPP
