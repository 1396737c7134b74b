// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
#ifndef FAPCHAN_BESSEL_HPP
#define FAPCHAN_BESSEL_HPP

namespace fapchan {

/// One K1 evaluation in the three representations callers need.  Computing
/// them together costs a single series evaluation plus an exp.
struct BesselEval {
    double z;            ///< argument
    double value;        ///< K1(z); underflows gracefully to 0 for z >~ 705
    double log_value;    ///< ln K1(z); finite for z in [1e-8, 1e8] and beyond
    double scaled_value; ///< e^z * K1(z); safe for very large z
};

/// Modified Bessel function of the second kind, order one.
/// Domain: z > 0 and finite; otherwise throws std::domain_error.
/// Relative accuracy ~1e-15 across [1e-8, 700]; returns 0 once e^{-z}
/// underflows (z >~ 745).
double bessel_k1(double z);

/// Exponentially scaled variant e^z * K1(z).  Same domain checks; remains
/// accurate for z up to 1e8 and beyond (the large-z form only involves 1/z).
double bessel_k1_scaled(double z);

/// ln K1(z) computed without overflow or underflow across [1e-8, 1e8].
double log_bessel_k1(double z);

/// All three representations at once.
BesselEval bessel_k1_eval(double z);

namespace detail {
/// Internal branch evaluators, exposed so tests can measure the jump between
/// adjacent approximation branches at the switch points (z=2 and z=8).
double k1_small(double z);      ///< series branch, valid on (0, 2]
double k1e_mid(double z);       ///< scaled Chebyshev branch, valid on (2, 8]
double k1e_large(double z);     ///< scaled Chebyshev branch, valid on (8, inf)
} // namespace detail

} // namespace fapchan

#endif // FAPCHAN_BESSEL_HPP
