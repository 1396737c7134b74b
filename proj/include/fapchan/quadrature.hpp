// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_QUADRATURE_HPP
#define FAPCHAN_QUADRATURE_HPP

#include <functional>
#include <string>

namespace fapchan {

// Tolerances for the adaptive integrator.  A panel sum is accepted once the
// accumulated error estimate drops below max(abs_tol, rel_tol * |value|).
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b],
// always bisecting the interval with the largest error estimate.  Throws
// std::domain_error for an invalid interval and NumericalError if the
// integrand produces NaN or infinity.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg = {});

// Integral of f over [a, +inf) via the rational substitution
// x = a + t/(1-t), which maps (0, 1) onto (a, +inf).  Quadrature nodes are
// interior, so f is never evaluated at infinity.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                   const QuadConfig& cfg = {});

// Unwraps a result, throwing NumericalError with a message naming the
// offending quantity when the integrator failed to converge.
double require_converged(const QuadResult& result, const std::string& what);

} // namespace fapchan

#endif // FAPCHAN_QUADRATURE_HPP
