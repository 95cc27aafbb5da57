#include "dcheb/asymptotic.hpp"

#include <cmath>
#include <numbers>

#include "dcheb/errors.hpp"
#include "dcheb/specfun.hpp"
#include "phase.hpp"

namespace dcheb {
namespace {

using detail::csqrt;
using detail::Phase;
using detail::positive_real_root;

constexpr double kImagTol = 1e-10;
constexpr double kConfluentZeta = 1e-4;
constexpr double kHalfOffset = 1e-9;
constexpr double kZeroOffset = 1e-8;

double real_part_checked(cplx z, const char* what) {
    if (std::fabs(z.imag()) > kImagTol * std::max(1.0, std::fabs(z.real())))
        throw BranchError(std::string(what) + " is not real (imaginary part " + std::to_string(z.imag()) + ")");
    return z.real();
}

// a0 + b0 u = h at both saddles.
LeadingCoeffs two_saddle_solve(cplx u_hi, cplx h_hi, cplx u_lo, cplx h_lo, int sign) {
    const cplx det = u_hi - u_lo;
    if (std::abs(det) == 0) throw DomainError("coalescing saddles: two-saddle system is singular");
    const cplx b0 = (h_hi - h_lo) / det;
    const cplx a0 = h_lo - b0 * u_lo;
    LeadingCoeffs c;
    c.c0 = sign * real_part_checked(a0, "a0");
    c.d0 = sign * real_part_checked(b0, "b0");
    c.condition = (1.0 + std::max(std::abs(u_hi), std::abs(u_lo))) *
                  std::max(2.0, std::abs(u_hi) + std::abs(u_lo)) / std::abs(det);
    return c;
}

double parity(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// ln Gamma(n+N+2) - ln Gamma(N-n+1) - (n+1) ln N
double gamma_ratio_log(double n, double N) {
    return log_gamma(n + N + 2.0) - log_gamma(N - n + 1.0) - (n + 1.0) * std::log(N);
}

SignedLog kummer_kernel(const KummerPair& kp, const LeadingCoeffs& c) { return kp.m_val * c.c0 + kp.m_prime * c.d0; }

template <class T>
const T& expect(const RegimeConstants& rc, Regime r) {
    if (const T* p = std::get_if<T>(&rc)) return *p;
    throw DomainError("constants do not match regime " + std::string(regime_name(r)));
}

void note_kummer(ApproxResult& out, const KummerPair& kp) {
    if (kp.precision_degraded)
        out.diagnostics.push_back("kummer series cancellation 2^" + std::to_string(kp.amplification_log2) +
                                  ", evaluated at " + std::to_string(kp.working_bits) + " bits");
}

}  // namespace

int calibration_sign(Regime r) {
    switch (r) {
        case Regime::BesselSmallB: return -1;
        case Regime::GammaNegSmallB: return -1;
        default: return 1;
    }
}

PolyTriple calibration_point(Regime r) {
    switch (r) {
        case Regime::KummerSmallB: return {125, 5, 1000};
        case Regime::AirySmallB: return {100, 5, 2000};
        case Regime::BesselSmallB: return {36, 2000, 8000};
        case Regime::GammaNegSmallB: return {63, -3, 1000};
        case Regime::KummerFixedB: return {100, 25, 200};
        default: return {1, 0, 1};
    }
}

std::pair<PolyTriple, bool> fold_symmetric(const PolyTriple& p) {
    if (2 * p.x > p.capN) return {PolyTriple(p.n, mpq_class(p.capN - p.x), p.capN), true};
    return {p, false};
}

double bessel_delta(double a) {
    const double r = std::sqrt(a / (1.0 - a));
    return 2.0 * std::atan(r) - r;
}

LeadingCoeffs leading_coeffs_bessel(double a, double b, const BesselConstants& k) {
    const double D = 4.0 * a - 4.0 * a * a - b * b;
    if (!(D > 0)) throw DomainError("Bessel coefficients need 4a - 4a^2 - b^2 > 0");
    const double sD = std::sqrt(D);
    // v at u = i; t = t0(v) in the v = 1/w variables
    const cplx v = cplx(b * b, b * sD) / (2.0 * a * (1.0 - a));
    const cplx t = (2.0 - v + csqrt(4.0 * b * b - 4.0 * b * b * v + v * v)) / (2.0 * (1.0 + b));
    const cplx h = csqrt(2.0 * k.m * t * (1.0 - t) * (t + v - 1.0) / (b * b * v * (1.0 - v) * sD));
    const int s = calibration_sign(Regime::BesselSmallB);
    LeadingCoeffs c;
    c.c0 = s * h.real();
    c.d0 = -s * h.imag();
    return c;
}

LeadingCoeffs leading_coeffs_bessel_tau0(double a, double b, double m) {
    const double D = 4.0 * a - 4.0 * a * a - b * b;
    if (!(D > 0)) throw DomainError("Bessel coefficients need 4a - 4a^2 - b^2 > 0");
    if (!(a < 0.5)) throw DomainError("tau = 0 Bessel form needs a < 1/2");
    const double sD = std::sqrt(D);
    const auto [v_plus, v_minus] = saddles_v(a, b);
    const double delta = bessel_delta(a);
    auto h = [&](cplx v, double sgn) {
        return (-(1.0 - a) * v / b) * csqrt(2.0 * (1.0 - 2.0 * a) * m / (b * sD * (1.0 - v))) *
               std::exp(cplx(0.0, sgn * delta));
    };
    const cplx hp = h(v_minus, 1.0), hm = h(v_plus, -1.0);
    LeadingCoeffs c;
    c.c0 = real_part_checked(0.5 * (hp + hm), "c0");
    c.d0 = real_part_checked(cplx(0.0, 0.5) * (hp - hm), "d0");
    return c;
}

LeadingCoeffs leading_coeffs_kummer(double a, double b, const KummerConstants& k) {
    if (!(a > 0)) throw DomainError("Kummer coefficients degenerate at a = 0");
    const Phase ph{a, b};
    auto h = [&](cplx u, cplx w) {
        const cplx psi2 = -a / (u * u) + a / ((u - 1.0) * (u - 1.0));
        const cplx dwdu = positive_real_root(psi2 / ph.F2(w));
        return (u - 1.0) / (w - 1.0) * dwdu * ph.dtdtau_b(w);
    };
    return two_saddle_solve(k.u_hi, h(k.u_hi, k.w_hi), k.u_lo, h(k.u_lo, k.w_lo),
                            calibration_sign(Regime::KummerSmallB));
}

LeadingCoeffs leading_coeffs_fixed_b(double a, double b, const KummerConstants& k) {
    if (!(a > 0)) throw DomainError("fixed-b coefficients degenerate at a = 0");
    const Phase ph{a, b};
    auto h = [&](cplx u, cplx w) {
        const cplx psi2 = -a / (u * u) + a / ((u - 1.0) * (u - 1.0));
        const cplx dwdu = positive_real_root(psi2 / ph.F2(w));
        return (u - 1.0) / (w - 1.0) * dwdu * ph.dtdtau_0(w);
    };
    LeadingCoeffs c = two_saddle_solve(k.u_hi, h(k.u_hi, k.w_hi), k.u_lo, h(k.u_lo, k.w_lo),
                                       calibration_sign(Regime::KummerFixedB));
    const double sqrt_pi = std::sqrt(std::numbers::pi);  // Gamma(1/2)
    c.c0 *= sqrt_pi;
    c.d0 *= sqrt_pi;
    return c;
}

namespace {

LeadingCoeffs airy_two_saddle(double a, double b, const AiryConstants& k) {
    const Phase ph{a, b};
    const cplx rz = csqrt(cplx(k.zeta));
    auto h = [&](cplx u, cplx w) {
        const cplx dwdu = positive_real_root(2.0 * u / ph.F2(w));
        return ph.dtdtau_b(w) * dwdu / (w - 1.0);
    };
    const cplx hp = h(rz, k.w_hi), hm = h(-rz, k.w_lo);
    const int s = calibration_sign(Regime::AirySmallB);
    LeadingCoeffs c;
    c.c0 = s * real_part_checked(0.5 * (hp + hm), "Airy a0");
    c.d0 = s * real_part_checked((hp - hm) / (2.0 * rz), "Airy b0");
    c.condition = std::max(1.0, 1.0 / std::abs(rz));
    return c;
}

}  // namespace

LeadingCoeffs leading_coeffs_airy(double a, double b, const AiryConstants& k) {
    if (std::fabs(k.zeta) >= kConfluentZeta) return airy_two_saddle(a, b, k);
    // Near coalescence the two saddle equations collide: evaluate on both sides of the
    // turning curve and interpolate linearly in zeta.
    const double bc = std::sqrt(4.0 * a * (1.0 - a));
    for (double d = 1e-3; d < 0.5; d *= 2) {
        const double b1 = bc * (1 + d), b2 = bc * (1 - d);
        if (!(b1 < 1)) break;
        const AiryConstants k1 = solve_airy_constants(a, b1), k2 = solve_airy_constants(a, b2);
        if (std::fabs(k1.zeta) < 2 * kConfluentZeta || std::fabs(k2.zeta) < 2 * kConfluentZeta) continue;
        const LeadingCoeffs c1 = airy_two_saddle(a, b1, k1), c2 = airy_two_saddle(a, b2, k2);
        const double w = (k.zeta - k1.zeta) / (k2.zeta - k1.zeta);
        LeadingCoeffs c;
        c.c0 = c1.c0 + w * (c2.c0 - c1.c0);
        c.d0 = c1.d0 + w * (c2.d0 - c1.d0);
        c.condition = std::max(c1.condition, c2.condition);
        c.confluent = true;
        return c;
    }
    throw DomainError("Airy coefficients: cannot step off the coalescence point");
}

LeadingCoeffs leading_coeff_gamma_neg(double a, double b, const GammaNegConstants& k) {
    if (!(a < 0)) throw DomainError("gamma-type coefficient needs a < 0");
    const Phase ph{a, b};
    const double w = k.w_minus;
    const double dtdtau = ph.dtdtau_b(w).real();
    const double dwdu = std::sqrt((1.0 - a) * (1.0 - 2.0 * a) / (b * b * b * std::sqrt(b * b - 4.0 * a + 4.0 * a * a)));
    LeadingCoeffs c;
    c.c0 = calibration_sign(Regime::GammaNegSmallB) * a / (w - 1.0) * dtdtau * dwdu;
    c.has_d0 = false;
    return c;
}

ApproxResult approx(const PolyTriple& p_in, Regime r, const RegimeConstants& consts, const LeadingCoeffs& coeffs) {
    const auto [p, folded] = fold_symmetric(p_in);
    if (p.n < 1 || p.n >= p.capN) throw DomainError("asymptotic forms need 1 <= n < capN");
    const double N = static_cast<double>(p.capN);
    const double n = static_cast<double>(p.n);
    const double x = p.x_double();
    const double b = n / N;

    ApproxResult out;
    out.regime = r;
    out.constants = consts;
    out.coeffs = coeffs;
    if (folded) out.diagnostics.push_back("folded x -> capN - x");

    CompensatedSum e;
    int sign = 1;
    switch (r) {
        case Regime::KummerSmallB:
        case Regime::KummerFixedB: {
            const auto& k = expect<KummerConstants>(consts, r);
            const KummerPair kp = kummer_reg(x + 1.0, k.eta * N);
            note_kummer(out, kp);
            out.kernel_values = {{"M", kp.m_val}, {"M_prime", kp.m_prime}};
            out.kernel = kummer_kernel(kp, coeffs);
            if (r == Regime::KummerSmallB) {
                sign = -static_cast<int>(parity(p.n));
                e += gamma_ratio_log(n, N);
                e += n;
                e -= n * std::log(b);
                e += N * k.gamma;
            } else {
                sign = static_cast<int>(parity(p.n));
                e += log_gamma(n + N + 2.0);
                e -= log_gamma(n + 1.0);
                e -= log_gamma(N - n + 1.0);
                e -= 0.5 * std::log(N);
                e += N * k.gamma;
            }
            break;
        }
        case Regime::AirySmallB: {
            const auto& k = expect<AiryConstants>(consts, r);
            const AiryQuad q = airy(std::pow(N, 2.0 / 3.0) * k.zeta);
            const double s1 = std::pow(N, -1.0 / 3.0), s2 = std::pow(N, -2.0 / 3.0);
            const SignedLog ai_part = q.ai * (coeffs.c0 * s1) + q.ai_prime * (-coeffs.d0 * s2);
            SignedLog bi_part = SignedLog::zero();
            double cosx, sinx;
            if (p.integer_x()) {
                // aN = x integer: cos(x pi) = (-1)^x and the Bi branch drops out exactly
                cosx = parity(p.x.get_num().get_si());
                sinx = 0.0;
            } else {
                out.diagnostics.push_back("non-integer x in the Airy regime is experimental");
                const double fr = std::fmod(x, 2.0);
                cosx = std::cos(std::numbers::pi * fr);
                sinx = std::sin(std::numbers::pi * fr);
                bi_part = q.bi * (coeffs.c0 * s1) + q.bi_prime * (-coeffs.d0 * s2);
            }
            out.kernel_values = {{"Ai", q.ai}, {"Ai_prime", q.ai_prime}, {"Bi", q.bi}, {"Bi_prime", q.bi_prime},
                                 {"Ai_branch", ai_part * cosx}, {"Bi_branch", bi_part * sinx}};
            out.kernel = ai_part * cosx + bi_part * sinx;
            sign = static_cast<int>(parity(p.n));
            e += gamma_ratio_log(n, N);
            e += n;
            e -= n * std::log(b);
            e += N * k.A;
            break;
        }
        case Regime::BesselSmallB: {
            expect<BesselConstants>(consts, r);
            const auto& k = std::get<BesselConstants>(consts);
            const BesselPair j = bessel_j01(2.0 * N * k.m);
            out.kernel_values = {{"J0", j.j0}, {"J1", j.j1}};
            out.kernel = j.j0 * coeffs.c0 + j.j1 * coeffs.d0;
            sign = -static_cast<int>(parity(p.n));
            e += gamma_ratio_log(n, N);
            // n - n ln b + N gamma with the n ln b terms cancelled analytically
            e += n;
            e += 0.5 * N * (std::log1p(-b) - std::log1p(b));
            e -= 0.5 * n * std::log1p(-b * b);
            break;
        }
        case Regime::GammaNegSmallB: {
            const auto& k = expect<GammaNegConstants>(consts, r);
            out.kernel_values = {};
            out.kernel = SignedLog::from_double(coeffs.c0);
            sign = static_cast<int>(parity(p.n));
            e += log_gamma(n + N + 2.0);
            e -= log_gamma(N - n + 1.0);
            e -= log_gamma(-x + 1.0);
            e -= (x + n + 1.0) * std::log(N);
            e += n;
            e -= n * std::log(b);
            e += N * k.gamma;
            break;
        }
        default:
            throw DomainError("approx: regime " + std::string(regime_name(r)) + " has no asymptotic form");
    }
    if (folded && p.n % 2) sign = -sign;
    out.prefactor = SignedLog::from_log(sign, e.value());
    out.value = out.prefactor * out.kernel;
    return out;
}

SeriesPartial approx_series_partial(const PolyTriple& p, long K) {
    if (K < 1) throw DomainError("series truncation needs K >= 1");
    if (p.n > p.capN || p.n < 0) throw DomainError("series needs 0 <= n <= capN");
    const long terms = std::min(K, p.n + 1);
    // phi_{k+1} / phi_k = (k-n)(k-x)(n+1+k) / ((k-capN)(k+1)^2)
    auto ratio = [&](long k) {
        mpq_class r(mpz_class(k - p.n) * (k + 1 + p.n), mpz_class(k - p.capN) * (k + 1) * (k + 1));
        r.canonicalize();
        return mpq_class(r * (k - p.x));
    };
    mpq_class term = 1, sum = 1;
    for (long k = 0; k + 1 < terms; ++k) {
        term *= ratio(k);
        sum += term;
    }
    SeriesPartial out;
    out.terms = terms;
    out.value = to_signed_log(mpq_class(sum * series_prefactor(p.n, p.capN)));
    if (terms <= p.n) {
        const long k = terms - 1;
        term *= ratio(k);
        out.omitted_ratio = std::fabs(term.get_d());
    }
    return out;
}

ApproxResult approximate(const PolyTriple& p_in, const Thresholds& t, const ApproxOptions& opt) {
    if (p_in.n > p_in.capN || p_in.n < 0) throw DomainError("approximate needs 0 <= n <= capN");
    const Regime r = opt.regime ? *opt.regime : classify(p_in, t);
    auto [p, folded] = fold_symmetric(p_in);

    if (r == Regime::ExactFallback || r == Regime::SeriesAsymptotic || p.n == 0) {
        ApproxResult out;
        out.regime = r;
        if (r == Regime::SeriesAsymptotic) {
            const long K = opt.series_terms < 0 ? p_in.n + 1 : opt.series_terms;
            const SeriesPartial s = approx_series_partial(p_in, K);
            out.value = s.value;
            out.diagnostics.push_back("series terms " + std::to_string(s.terms) + ", first omitted ratio " +
                                      std::to_string(s.omitted_ratio));
        } else {
            out.value = to_signed_log(eval_exact_series(p_in));
            out.diagnostics.push_back("exact evaluation");
        }
        out.prefactor = SignedLog::from_double(1.0);
        out.kernel = out.value;
        return out;
    }

    const double N = static_cast<double>(p.capN);
    double a = p.x_double() / N;
    const double b = static_cast<double>(p.n) / N;
    std::vector<std::string> notes;
    if (a == 0.5 && (r == Regime::BesselSmallB || r == Regime::AirySmallB)) {
        a -= kHalfOffset;
        notes.push_back("a = 1/2 evaluated as a one-sided limit");
    }
    RegimeConstants consts;
    LeadingCoeffs coeffs;
    switch (r) {
        case Regime::KummerSmallB: {
            const KummerConstants k = solve_kummer_constants(a, b, true);
            if (a == 0.0) {
                // the coefficients have a finite limit as a -> 0 but the formula divides by a
                coeffs = leading_coeffs_kummer(kZeroOffset, b, solve_kummer_constants(kZeroOffset, b, true));
                notes.push_back("a = 0 coefficients evaluated as a one-sided limit");
            } else {
                coeffs = leading_coeffs_kummer(a, b, k);
            }
            consts = k;
            if (k.conjugate) notes.push_back("Kummer constants from complex-conjugate saddles");
            break;
        }
        case Regime::KummerFixedB: {
            const KummerConstants k = solve_kummer_constants(a, b, true);
            if (a == 0.0) {
                coeffs = leading_coeffs_fixed_b(kZeroOffset, b, solve_kummer_constants(kZeroOffset, b, true));
                notes.push_back("a = 0 coefficients evaluated as a one-sided limit");
            } else {
                coeffs = leading_coeffs_fixed_b(a, b, k);
            }
            consts = k;
            break;
        }
        case Regime::AirySmallB: {
            const AiryConstants k = solve_airy_constants(a, b);
            coeffs = leading_coeffs_airy(a, b, k);
            if (coeffs.confluent) notes.push_back("Airy coefficients interpolated across coalescence");
            consts = k;
            break;
        }
        case Regime::BesselSmallB: {
            const BesselConstants k = bessel_constants(a, b);
            coeffs = leading_coeffs_bessel(a, b, k);
            consts = k;
            break;
        }
        case Regime::GammaNegSmallB: {
            const GammaNegConstants k = gamma_neg_constant(a, b);
            coeffs = leading_coeff_gamma_neg(a, b, k);
            consts = k;
            break;
        }
        default: break;
    }
    ApproxResult out = approx(p_in, r, consts, coeffs);
    out.diagnostics.insert(out.diagnostics.end(), notes.begin(), notes.end());
    return out;
}

}  // namespace dcheb
