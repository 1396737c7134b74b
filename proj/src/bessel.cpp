// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
//
// K1 from the classical SLATEC FNLIB Chebyshev expansions (Fullerton, LANL;
// public domain).  Series branch on (0,2] built from the BK1 table plus the
// log(x/2)*I1(x) term; exponentially scaled branches on (2,8] and (8,inf)
// from the AK1/AK12 tables.  Weighted series errors are ~1e-31, so double
// precision results are correct to a few ulps.

#include "fapchan/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fapchan {

namespace {

// Series for BK1 on (0, 4) in the variable x^2/2 - 1.
const double bk1cs[16] = {
    0.025300227338947770532531120868533,
    -0.35315596077654487566723831691801,
    -0.12261118082265714823479067930042,
    -0.0069757238596398643501812920296083,
    -1.7302889575130520630176507368979e-4,
    -2.4334061415659682349600735030164e-6,
    -2.2133876307347258558315252545126e-8,
    -1.4114883926335277610958330212608e-10,
    -6.6669016941993290060853751264373e-13,
    -2.4274498505193659339263196864853e-15,
    -7.023863479386287597178379712e-18,
    -1.6543275155100994675491029333333e-20,
    -3.2338347459944491991893333333333e-23,
    -5.3312750529265274999466666666666e-26,
    -7.5130407162157226666666666666666e-29,
    -9.1550857176541866666666666666666e-32,
};

// Series for AK1 on (2, 8) in the variable (16/x - 5)/3.
const double ak1cs[38] = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
    -1.6284168738284380035666620115626e-18,
    2.7501536496752623718284120337066e-19,
    -4.7289666463953250924281069568e-20,
    8.2681500028109932722392050346666e-21,
    -1.4681405136624956337193964885333e-21,
    2.6447639269208245978085894826666e-22,
    -4.82901575648563878979698688e-23,
    8.9293020743610130180656332799999e-24,
    -1.6708397168972517176997751466666e-24,
    3.1616456034040694931368618666666e-25,
    -6.0462055312274989106506410666666e-26,
    1.1678798942042732700718421333333e-26,
    -2.277374158265399623286784e-27,
    4.4811097300773675795305813333333e-28,
    -8.8932884769020194062336e-29,
    1.7794680018850275131392e-29,
    -3.5884555967329095821994666666666e-30,
    7.2906290492694257991679999999999e-31,
    -1.4918449845546227073024e-31,
    3.0736573872934276300799999999999e-32,
};

// Series for AK12 on (8, inf) in the variable 16/x - 1.
const double ak12cs[33] = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
    -3.07675264126846318762109817344e-18,
    3.851487721280491597094896844799e-19,
    -5.0447948976415289771172825088e-20,
    6.888673850418544237018292223999e-21,
    -9.77504154195011830300213248e-22,
    1.437416218523836461001659733333e-22,
    -2.185059497344347373499733333333e-23,
    3.4262456218092206316453888e-24,
    -5.531064394246408232501248e-25,
    9.176601505685995403782826666666e-26,
    -1.562287203618024911448746666666e-26,
    2.725419375484333132349439999999e-27,
    -4.865674910074827992378026666666e-28,
    8.879388552723502587357866666666e-29,
    -1.654585918039257548936533333333e-29,
    3.145111321357848674303999999999e-30,
    -6.092998312193127612416e-31,
    1.202021939369815834623999999999e-31,
    -2.412930801459408841386666666666e-32,
};

// Series for BI1 on (0, 9) in the variable x^2/4.5 - 1; used for the
// log(x/2)*I1(x) part of the small-argument branch.
const double bi1cs[17] = {
    -0.0019717132610998597316138503218149,
    0.40734887667546480608155393652014,
    0.034838994299959455866245037783787,
    0.0015453945563001236038598401058489,
    4.188852109837778412945883200412e-5,
    7.6490267648362114741959703966069e-7,
    1.0042493924741178689179808037238e-8,
    9.9322077919238106481371298054863e-11,
    7.6638017918447637275200171681349e-13,
    4.741418923816739498038809194816e-15,
    2.4041144040745181799863172032e-17,
    1.0171505007093713649121100799999e-19,
    3.6450935657866949458491733333333e-22,
    1.1205749502562039344810666666666e-24,
    2.9875441934468088832e-27,
    6.9732310939194709333333333333333e-30,
    1.43679482206208e-32,
};

// Term counts for double precision (initds at 0.1*eps).
const int ntk1 = 11;
const int ntak1 = 18;
const int ntak12 = 14;
const int nti1 = 11;

// Clenshaw evaluation of a Chebyshev series on [-1, 1].
double dcsevl(double x, const double* cs, int n)
{
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double twox = 2.0 * x;
    for (int i = n - 1; i >= 0; --i) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[i];
    }
    return 0.5 * (b0 - b2);
}

// I1(x) for 0 < x <= 3 (all that the K1 small branch needs).
double i1_small(double x)
{
    const double xsml = std::sqrt(std::numeric_limits<double>::epsilon() * 4.5);
    if (x < xsml) return 0.5 * x;
    return x * (dcsevl(x * x / 4.5 - 1.0, bi1cs, nti1) + 0.875);
}

void check_domain(double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("bessel_k1: argument must be positive and finite");
    if (z < 1.01 * std::numeric_limits<double>::min())
        throw std::domain_error("bessel_k1: argument so small that K1 overflows");
}

} // namespace

namespace detail {

double k1_small(double z)
{
    const double xsml = 2.0 * std::sqrt(std::numeric_limits<double>::epsilon());
    const double y = (z > xsml) ? z * z : 0.0;
    return std::log(0.5 * z) * i1_small(z) + (dcsevl(0.5 * y - 1.0, bk1cs, ntk1) + 0.75) / z;
}

double k1e_mid(double z)
{
    return (dcsevl((16.0 / z - 5.0) / 3.0, ak1cs, ntak1) + 1.25) / std::sqrt(z);
}

double k1e_large(double z)
{
    return (dcsevl(16.0 / z - 1.0, ak12cs, ntak12) + 1.25) / std::sqrt(z);
}

} // namespace detail

double bessel_k1_scaled(double z)
{
    check_domain(z);
    if (z <= 2.0) return std::exp(z) * detail::k1_small(z);
    if (z <= 8.0) return detail::k1e_mid(z);
    return detail::k1e_large(z);
}

double bessel_k1(double z)
{
    check_domain(z);
    if (z <= 2.0) return detail::k1_small(z);
    // e^{-z} underflows past z ~ 745; the product then underflows gracefully.
    const double scaled = (z <= 8.0) ? detail::k1e_mid(z) : detail::k1e_large(z);
    return std::exp(-z) * scaled;
}

double log_bessel_k1(double z)
{
    check_domain(z);
    // Below ~1e-7 the correction terms are < 1 ulp of 1/z, so ln K1 = -ln z.
    if (z < 1e-7) return -std::log(z);
    if (z <= 2.0) return std::log(detail::k1_small(z));
    const double scaled = (z <= 8.0) ? detail::k1e_mid(z) : detail::k1e_large(z);
    return std::log(scaled) - z;
}

BesselEval bessel_k1_eval(double z)
{
    check_domain(z);
    BesselEval out;
    out.z = z;
    if (z <= 2.0) {
        out.value = detail::k1_small(z);
        out.log_value = (z < 1e-7) ? -std::log(z) : std::log(out.value);
        out.scaled_value = std::exp(z) * out.value;
    } else {
        out.scaled_value = (z <= 8.0) ? detail::k1e_mid(z) : detail::k1e_large(z);
        out.log_value = std::log(out.scaled_value) - z;
        out.value = std::exp(-z) * out.scaled_value;
    }
    return out;
}

} // namespace fapchan
