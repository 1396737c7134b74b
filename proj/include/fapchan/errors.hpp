// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
#ifndef FAPCHAN_ERRORS_HPP
#define FAPCHAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fapchan {

/// Thrown when an iterative numerical routine cannot reach its accuracy
/// target (adaptive quadrature running out of subdivisions, a bisection
/// stalling, a non-finite integrand value).  Callers that map errors to
/// process exit codes treat this class distinctly from domain errors.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by classify_regime when the drift is zero: there is no finite
/// critical scale, the whole line sits in the Cauchy core, and callers
/// usually want to special-case that instead of receiving a regime value.
class ZeroDriftError : public std::domain_error {
public:
    explicit ZeroDriftError(const std::string& what) : std::domain_error(what) {}
};

} // namespace fapchan

#endif // FAPCHAN_ERRORS_HPP
