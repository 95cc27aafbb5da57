#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dcheb/errors.hpp"
#include "dcheb/specfun.hpp"
#include "mpfr_util.hpp"

namespace dcheb {
namespace {

using detail::Mpfr;

constexpr mpfr_prec_t kStartBits = 128;
constexpr mpfr_prec_t kGuardBits = 64;
constexpr mpfr_prec_t kMaxBits = 1 << 22;
const double kDegradedLog2 = std::log2(1e6);

struct SeriesOut {
    SignedLog m, d;  // d = sum s T_s = z M'
    double amp_log2;
    bool resolved;
};

// M = sum_s T_s with T_s = (alpha)_s z^s / (s!)^2; tracks the largest |T_s| to measure cancellation.
SeriesOut kummer_series(double alpha, double zd, mpfr_prec_t p) {
    Mpfr a(p, alpha), z(p, zd), t(p, 1.0), st(p), m(p, 1.0), d(p), num(p);
    double max_log2 = 0.0;
    bool terminated = false;
    const double reach = std::fabs(zd) + std::fabs(alpha);
    const unsigned long s_max = static_cast<unsigned long>(20 * reach + 2 * std::sqrt(reach * std::fabs(zd)) + 200);
    for (unsigned long s = 0; s < s_max; ++s) {
        // T_{s+1} = T_s (alpha + s) z / (s + 1)^2
        mpfr_add_ui(num, a, s, MPFR_RNDN);
        if (mpfr_zero_p(num)) {  // terminating series
            terminated = true;
            break;
        }
        mpfr_mul(t, t, num, MPFR_RNDN);
        mpfr_mul(t, t, z, MPFR_RNDN);
        mpfr_div_ui(t, t, (s + 1) * (s + 1), MPFR_RNDN);
        mpfr_add(m, m, t, MPFR_RNDN);
        mpfr_mul_ui(st, t, s + 1, MPFR_RNDN);
        mpfr_add(d, d, st, MPFR_RNDN);
        const double tl = st.log2_abs();
        if (tl > max_log2) max_log2 = tl;
        const double ratio = std::fabs((alpha + s) * zd) / ((s + 1.0) * (s + 1.0));
        if (ratio < 0.5 && tl < max_log2 - static_cast<double>(p) - 8) break;
        if (mpfr_zero_p(t)) break;
    }
    // an exactly vanishing terminated sum carries no cancellation information
    double amp = 0.0;
    for (const Mpfr* v : {&m, &d}) {
        if (mpfr_zero_p(v->get()) && terminated) continue;
        amp = std::max(amp, max_log2 - v->log2_abs());
    }
    return {m.to_signed_log(), d.to_signed_log(), amp,
            amp + static_cast<double>(kGuardBits) <= static_cast<double>(p)};
}

}  // namespace

KummerPair kummer_reg(double alpha, double z) {
    if (!std::isfinite(alpha) || !std::isfinite(z)) throw DomainError("kummer_reg requires finite arguments");
    KummerPair out;
    if (z == 0.0) {
        out.m_val = SignedLog::from_double(1.0);
        out.m_prime = SignedLog::from_double(alpha);
        out.working_bits = 53;
        return out;
    }
    mpfr_prec_t p = kStartBits;
    for (;;) {
        const SeriesOut r = kummer_series(alpha, z, p);
        out.amplification_log2 = r.amp_log2;
        out.working_bits = p;
        if (r.resolved || p >= kMaxBits) {
            out.m_val = r.m;
            out.m_prime = r.d * (1.0 / z);
            out.precision_degraded = r.amp_log2 > kDegradedLog2;
            if (!r.resolved) throw ConvergenceError("kummer_reg: cancellation beyond the precision cap");
            return out;
        }
        p = std::isfinite(r.amp_log2) ? static_cast<mpfr_prec_t>(r.amp_log2) + 2 * kGuardBits : 4 * p;
        p = std::min(p, kMaxBits);
    }
}

SignedLog kummer_reg_large_negative(double alpha, double z) {
    if (!(z < 0)) throw DomainError("kummer_reg_large_negative requires z < 0");
    // 1/Gamma(1-alpha) = Gamma(alpha) sin(pi alpha) / pi
    const double s = std::sin(std::numbers::pi * alpha);
    if (alpha == std::floor(alpha) && alpha >= 1) return SignedLog::zero();
    if (alpha <= 0) {
        const double lg = log_gamma(1.0 - alpha);
        return SignedLog::from_log(1, -alpha * std::log(-z) - lg);
    }
    return SignedLog::from_log(s > 0 ? 1 : -1,
                               -alpha * std::log(-z) + log_gamma(alpha) + std::log(std::fabs(s)) -
                                   std::log(std::numbers::pi));
}

}  // namespace dcheb
