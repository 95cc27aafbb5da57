#include <cmath>
#include <numbers>

#include "dcheb/specfun.hpp"
#include "mpfr_util.hpp"

namespace dcheb {
namespace {

using detail::Mpfr;

constexpr double kSeriesLimit = 8.0;
constexpr mpfr_prec_t kSeriesBits = 256;

// Ai = c1 f - c2 g, Bi = sqrt3 (c1 f + c2 g), with the two Maclaurin solutions f, g.
AiryQuad airy_maclaurin(double zd) {
    const mpfr_prec_t p = kSeriesBits;
    Mpfr z(p, zd), z3(p), c1(p), c2(p), tmp(p), eps(p);
    mpfr_pow_ui(z3, z, 3, MPFR_RNDN);

    // c1 = 3^{-2/3} / Gamma(2/3), c2 = 3^{-1/3} / Gamma(1/3)
    Mpfr three(p, 3.0), ex(p);
    mpfr_set_si(ex, -2, MPFR_RNDN);
    mpfr_div_ui(ex, ex, 3, MPFR_RNDN);
    mpfr_pow(c1, three, ex, MPFR_RNDN);
    mpfr_set_ui(tmp, 2, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, 3, MPFR_RNDN);
    mpfr_gamma(tmp, tmp, MPFR_RNDN);
    mpfr_div(c1, c1, tmp, MPFR_RNDN);
    mpfr_set_si(ex, -1, MPFR_RNDN);
    mpfr_div_ui(ex, ex, 3, MPFR_RNDN);
    mpfr_pow(c2, three, ex, MPFR_RNDN);
    mpfr_set_ui(tmp, 1, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, 3, MPFR_RNDN);
    mpfr_gamma(tmp, tmp, MPFR_RNDN);
    mpfr_div(c2, c2, tmp, MPFR_RNDN);

    // running terms and sums: f, g, f', g'
    Mpfr tf(p, 1.0), tg(p), tf1(p), tg1(p, 1.0);
    mpfr_set(tg, z, MPFR_RNDN);
    mpfr_mul(tf1, z, z, MPFR_RNDN);
    mpfr_div_ui(tf1, tf1, 2, MPFR_RNDN);
    Mpfr sf(p), sg(p), sf1(p), sg1(p);
    mpfr_set(sf, tf, MPFR_RNDN);
    mpfr_set(sg, tg, MPFR_RNDN);
    mpfr_set(sf1, tf1, MPFR_RNDN);
    mpfr_set(sg1, tg1, MPFR_RNDN);
    for (unsigned long k = 1; k < 400; ++k) {
        mpfr_mul(tf, tf, z3, MPFR_RNDN);
        mpfr_div_ui(tf, tf, (3 * k - 1) * (3 * k), MPFR_RNDN);
        mpfr_mul(tg, tg, z3, MPFR_RNDN);
        mpfr_div_ui(tg, tg, (3 * k) * (3 * k + 1), MPFR_RNDN);
        mpfr_mul(tg1, tg1, z3, MPFR_RNDN);
        mpfr_div_ui(tg1, tg1, (3 * k - 2) * (3 * k), MPFR_RNDN);
        mpfr_add(sf, sf, tf, MPFR_RNDN);
        mpfr_add(sg, sg, tg, MPFR_RNDN);
        mpfr_add(sg1, sg1, tg1, MPFR_RNDN);
        if (k >= 2) {
            mpfr_mul(tf1, tf1, z3, MPFR_RNDN);
            mpfr_div_ui(tf1, tf1, (3 * k - 3) * (3 * k - 1), MPFR_RNDN);
            mpfr_add(sf1, sf1, tf1, MPFR_RNDN);
        }
        if (mpfr_zero_p(z)) break;
        // all terms decrease once 9k^2 > |z|^3; stop when they no longer register
        const double lim = mpfr_get_exp(sf) - static_cast<double>(p) - 8;
        if (9.0 * k * k > std::fabs(zd * zd * zd) && !mpfr_zero_p(tf) && mpfr_get_exp(tf) < lim &&
            mpfr_get_exp(tg) < lim && mpfr_get_exp(tg1) < lim)
            break;
    }

    Mpfr a(p), b(p), ap(p), bp(p), sq3(p);
    mpfr_sqrt_ui(sq3, 3, MPFR_RNDN);
    mpfr_mul(a, c1, sf, MPFR_RNDN);
    mpfr_mul(tmp, c2, sg, MPFR_RNDN);
    mpfr_add(b, a, tmp, MPFR_RNDN);
    mpfr_sub(a, a, tmp, MPFR_RNDN);
    mpfr_mul(b, b, sq3, MPFR_RNDN);
    mpfr_mul(ap, c1, sf1, MPFR_RNDN);
    mpfr_mul(tmp, c2, sg1, MPFR_RNDN);
    mpfr_add(bp, ap, tmp, MPFR_RNDN);
    mpfr_sub(ap, ap, tmp, MPFR_RNDN);
    mpfr_mul(bp, bp, sq3, MPFR_RNDN);
    return {a.to_signed_log(), ap.to_signed_log(), b.to_signed_log(), bp.to_signed_log()};
}

// Coefficients u_k, v_k of the large-argument expansions, truncated at the smallest term.
struct AsymSums {
    double u_all = 0, v_all = 0;      // sum_k (+-1)^k c_k / zeta^k with the caller's sign pattern
    double u_even = 0, u_odd = 0;     // sum (-1)^k u_{2k}/zeta^{2k}, sum (-1)^k u_{2k+1}/zeta^{2k+1}
    double v_even = 0, v_odd = 0;
};

AsymSums airy_asym_sums(double zeta, bool alternate) {
    AsymSums s;
    double u = 1.0;
    double prev = INFINITY;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) u *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
        const double v = -(6.0 * k + 1) / (6.0 * k - 1) * u;
        const double zk = std::pow(zeta, -k);
        const double tu = u * zk, tv = v * zk;
        if (std::fabs(tv) > prev) break;  // asymptotic series started diverging
        prev = std::fabs(tv);
        const double sgn_alt = (k % 2) ? -1.0 : 1.0;
        s.u_all += (alternate ? sgn_alt : 1.0) * tu;
        s.v_all += (alternate ? sgn_alt : 1.0) * tv;
        const double sgn_pair = ((k / 2) % 2) ? -1.0 : 1.0;
        if (k % 2 == 0) {
            s.u_even += sgn_pair * tu;
            s.v_even += sgn_pair * tv;
        } else {
            s.u_odd += sgn_pair * tu;
            s.v_odd += sgn_pair * tv;
        }
        if (prev < 1e-18 * std::fabs(s.v_all)) break;
    }
    return s;
}

AiryQuad airy_positive_asym(double z) {
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double lq = 0.25 * std::log(z);
    const double lsp = 0.5 * std::log(std::numbers::pi);
    const AsymSums dec = airy_asym_sums(zeta, true);
    const AsymSums grow = airy_asym_sums(zeta, false);
    AiryQuad q;
    q.ai = SignedLog::from_log(1, -zeta - std::log(2.0) - lsp - lq) * dec.u_all;
    q.ai_prime = SignedLog::from_log(-1, -zeta - std::log(2.0) - lsp + lq) * dec.v_all;
    q.bi = SignedLog::from_log(1, zeta - lsp - lq) * grow.u_all;
    q.bi_prime = SignedLog::from_log(1, zeta - lsp + lq) * grow.v_all;
    return q;
}

AiryQuad airy_negative_asym(double z) {
    const double x = -z;
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const AsymSums s = airy_asym_sums(zeta, true);
    // cos/sin of (zeta - pi/4) assembled from cos/sin of zeta to keep the reduction exact
    const double cz = std::cos(zeta), sz = std::sin(zeta);
    const double r2 = std::numbers::sqrt2 / 2.0;
    const double c = r2 * (cz + sz), sn = r2 * (sz - cz);
    const double amp = 1.0 / (std::sqrt(std::numbers::pi) * std::pow(x, 0.25));
    const double ampd = std::pow(x, 0.25) / std::sqrt(std::numbers::pi);
    AiryQuad q;
    q.ai = SignedLog::from_double(amp * (c * s.u_even + sn * s.u_odd));
    q.ai_prime = SignedLog::from_double(ampd * (sn * s.v_even - c * s.v_odd));
    q.bi = SignedLog::from_double(amp * (-sn * s.u_even + c * s.u_odd));
    q.bi_prime = SignedLog::from_double(ampd * (c * s.v_even + sn * s.v_odd));
    return q;
}

}  // namespace

AiryQuad airy(double z) {
    if (std::fabs(z) <= kSeriesLimit) return airy_maclaurin(z);
    return z > 0 ? airy_positive_asym(z) : airy_negative_asym(z);
}

}  // namespace dcheb
