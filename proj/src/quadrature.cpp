// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
//
// Globally adaptive Gauss-Kronrod quadrature.  The 15-point panel rule and
// its error estimate follow the classic QUADPACK DQK15 routine (Piessens,
// de Doncker-Kapenga, Ueberhuber, Kahaner; public domain); the driver keeps
// a priority queue of panels and always bisects the one with the largest
// estimated error.

#include "fapchan/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "fapchan/errors.hpp"
#include "fapchan/format.hpp"

namespace fapchan {

namespace {

// Abscissae of the 15-point Kronrod rule on [-1, 1].  Even-indexed entries
// are Kronrod-only points; odd-indexed entries (plus the centre) coincide
// with the 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

// Weights of the 15-point Kronrod rule, matching xgk.
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Weights of the embedded 7-point Gauss rule; wg[3] is the centre weight.
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

// One 15-point Gauss-Kronrod panel over [a, b], including the QUADPACK
// error estimate that sharpens the raw Gauss/Kronrod difference using the
// panel's deviation-from-mean integral resasc.
Panel qk15(const std::function<double(double)>& f, double a, double b)
{
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::fabs(hlgth);

    double fv1[7];
    double fv2[7];

    const double fc = f(centr);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::fabs(resk);

    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * xgk[jtw];
        const double fval1 = f(centr - absc);
        const double fval2 = f(centr + absc);
        fv1[jtw] = fval1;
        fv2[jtw] = fval2;
        const double fsum = fval1 + fval2;
        resg += wg[j] * fsum;
        resk += wgk[jtw] * fsum;
        resabs += wgk[jtw] * (std::fabs(fval1) + std::fabs(fval2));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * xgk[jtwm1];
        const double fval1 = f(centr - absc);
        const double fval2 = f(centr + absc);
        fv1[jtwm1] = fval1;
        fv2[jtwm1] = fval2;
        const double fsum = fval1 + fval2;
        resk += wgk[jtwm1] * fsum;
        resabs += wgk[jtwm1] * (std::fabs(fval1) + std::fabs(fval2));
    }

    const double reskh = 0.5 * resk;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;

    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > DBL_MIN / (50.0 * DBL_EPSILON))
        abserr = std::max(50.0 * DBL_EPSILON * resabs, abserr);
    p.error = abserr;

    if (!std::isfinite(p.value))
        throw NumericalError("integrate: integrand produced NaN or infinity");
    return p;
}

QuadResult adaptive(const std::function<double(double)>& f, double a, double b,
                    const QuadConfig& cfg)
{
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> panels;

    QuadResult res;
    Panel first = qk15(f, a, b);
    res.value = first.value;
    res.error_estimate = first.error;
    panels.push(first);

    while (res.error_estimate > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(res.value))) {
        if (res.subdivisions >= cfg.max_subdivisions) {
            res.converged = false;
            return res;
        }
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval no longer bisectable at double precision.
            res.converged = false;
            return res;
        }
        panels.pop();
        const Panel left = qk15(f, worst.a, mid);
        const Panel right = qk15(f, mid, worst.b);
        res.value += left.value + right.value - worst.value;
        res.error_estimate += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++res.subdivisions;
    }
    res.converged = true;
    return res;
}

} // namespace

void QuadConfig::validate() const
{
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
        throw std::domain_error("QuadConfig: tolerances must be nonnegative");
    if (abs_tol == 0.0 && rel_tol == 0.0)
        throw std::domain_error("QuadConfig: at least one tolerance must be positive");
    if (max_subdivisions < 1)
        throw std::domain_error("QuadConfig: max_subdivisions must be at least 1");
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg)
{
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::domain_error("integrate: requires finite bounds with a < b");
    return adaptive(f, a, b, cfg);
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                   const QuadConfig& cfg)
{
    cfg.validate();
    if (!std::isfinite(a))
        throw std::domain_error("integrate_semi_infinite: lower bound must be finite");
    auto g = [&f, a](double t) {
        const double u = 1.0 - t;
        return f(a + t / u) / (u * u);
    };
    return adaptive(g, 0.0, 1.0, cfg);
}

double require_converged(const QuadResult& result, const std::string& what)
{
    if (!result.converged)
        throw NumericalError(what + ": quadrature failed to converge (error estimate "
                             + compact(result.error_estimate) + " after "
                             + std::to_string(result.subdivisions) + " subdivisions)");
    return result.value;
}

} // namespace fapchan
