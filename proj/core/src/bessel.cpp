#include <cmath>
#include <numbers>

#include "dcheb/errors.hpp"
#include "dcheb/specfun.hpp"
#include "mpfr_util.hpp"

namespace dcheb {
namespace {

using detail::Mpfr;

constexpr double kSeriesLimit = 25.0;

// J0 = sum (-1)^k (z/2)^{2k} / (k!)^2,  J1 = (z/2) sum (-1)^k (z/2)^{2k} / (k! (k+1)!)
BesselPair bessel_series(double zd) {
    // terms peak near e^z; keep 80 bits beyond the peak to resolve values near zeros
    const auto p = static_cast<mpfr_prec_t>(96 + zd * std::numbers::log2e);
    Mpfr h(p, zd / 2), h2(p), t0(p, 1.0), t1(p), s0(p, 1.0), s1(p);
    mpfr_mul(h2, h, h, MPFR_RNDN);
    mpfr_set(t1, h, MPFR_RNDN);
    mpfr_set(s1, h, MPFR_RNDN);
    for (unsigned long k = 1; k < 2000; ++k) {
        mpfr_mul(t0, t0, h2, MPFR_RNDN);
        mpfr_div_ui(t0, t0, k * k, MPFR_RNDN);
        mpfr_neg(t0, t0, MPFR_RNDN);
        mpfr_mul(t1, t1, h2, MPFR_RNDN);
        mpfr_div_ui(t1, t1, k * (k + 1), MPFR_RNDN);
        mpfr_neg(t1, t1, MPFR_RNDN);
        mpfr_add(s0, s0, t0, MPFR_RNDN);
        mpfr_add(s1, s1, t1, MPFR_RNDN);
        if (mpfr_zero_p(t0)) break;
        if (static_cast<double>(k) > zd && mpfr_get_exp(t0) < -static_cast<long>(p) &&
            mpfr_get_exp(t1) < -static_cast<long>(p))
            break;
    }
    return {s0.to_signed_log(), s1.to_signed_log()};
}

// Hankel expansion J_nu = sqrt(2/(pi z)) (P cos chi - Q sin chi), chi = z - (nu/2 + 1/4) pi.
double bessel_hankel(int nu, double z) {
    const double mu = 4.0 * nu * nu;
    double t = 1.0, P = 1.0, Q = 0.0, prev = INFINITY;
    for (int k = 1; k < 200; ++k) {
        t *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * z);
        if (std::fabs(t) > prev) break;
        prev = std::fabs(t);
        // P takes even k with signs +,-,+...; Q takes odd k with signs +,-,+...
        const double sgn = ((k / 2) % 2) ? -1.0 : 1.0;
        if (k % 2 == 0)
            P += sgn * t;
        else
            Q += sgn * t;
        if (prev < 1e-18) break;
    }
    const double cz = std::cos(z), sz = std::sin(z);
    const double r2 = std::numbers::sqrt2 / 2.0;
    double c, s;
    if (nu == 0) {
        c = r2 * (cz + sz);  // cos(z - pi/4)
        s = r2 * (sz - cz);
    } else {
        c = r2 * (sz - cz);  // cos(z - 3pi/4)
        s = -r2 * (sz + cz);
    }
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (P * c - Q * s);
}

}  // namespace

BesselPair bessel_j01(double z) {
    if (!(z >= 0)) throw DomainError("bessel_j01 requires z >= 0");
    if (z == 0) return {SignedLog::from_double(1.0), SignedLog::zero()};
    if (z <= kSeriesLimit) return bessel_series(z);
    return {SignedLog::from_double(bessel_hankel(0, z)), SignedLog::from_double(bessel_hankel(1, z))};
}

double bessel_j0_leading_asymptotic(double z) {
    return std::sqrt(2.0 / (std::numbers::pi * z)) * std::cos(z - std::numbers::pi / 4);
}

}  // namespace dcheb
