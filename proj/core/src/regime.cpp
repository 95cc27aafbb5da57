#include "dcheb/regime.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "dcheb/errors.hpp"
#include "phase.hpp"

namespace dcheb {
namespace {

using detail::cln;
using detail::csqrt;
using detail::Phase;
using detail::xln;

constexpr double kImagTol = 1e-10;

double real_or_throw(cplx z, const char* what) {
    if (std::fabs(z.imag()) > kImagTol * std::max(1.0, std::fabs(z.real())))
        throw BranchError(std::string(what) + " has imaginary part " + std::to_string(z.imag()));
    return z.real();
}

void check_b(double b) {
    if (!(b > 0 && b < 1)) throw DomainError("b = n/capN must lie in (0, 1)");
}

// a ln u - a ln(u - 1) + eta u
cplx psi(double a, double eta, cplx u) { return xln(a, u) - xln(a, u - 1.0) + eta * u; }

}  // namespace

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::SeriesAsymptotic: return "SeriesAsymptotic";
        case Regime::KummerSmallB: return "KummerSmallB";
        case Regime::AirySmallB: return "AirySmallB";
        case Regime::BesselSmallB: return "BesselSmallB";
        case Regime::GammaNegSmallB: return "GammaNegSmallB";
        case Regime::KummerFixedB: return "KummerFixedB";
        case Regime::ExactFallback: return "ExactFallback";
    }
    return "?";
}

std::optional<Regime> parse_regime(std::string_view s) {
    static constexpr std::pair<std::string_view, Regime> names[] = {
        {"series", Regime::SeriesAsymptotic},   {"kummer", Regime::KummerSmallB},
        {"airy", Regime::AirySmallB},           {"bessel", Regime::BesselSmallB},
        {"gamma-neg", Regime::GammaNegSmallB},  {"fixed-b", Regime::KummerFixedB},
        {"exact", Regime::ExactFallback},
    };
    for (const auto& [alias, r] : names)
        if (s == alias || s == regime_name(r)) return r;
    return std::nullopt;
}

void Thresholds::validate() const {
    const double all[] = {rho_lo, rho_hi, x_lo, x_hi, b_hi, eta_n_min};
    for (double v : all)
        if (!(v > 0) || !std::isfinite(v)) throw DomainError("thresholds must be finite and positive");
    if (!(rho_lo < rho_hi)) throw DomainError("thresholds: rho_lo must be < rho_hi");
    if (!(x_lo < x_hi)) throw DomainError("thresholds: x_lo must be < x_hi");
}

Thresholds parse_thresholds(std::istream& in) {
    Thresholds t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("thresholds line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        double v = 0;
        try {
            std::size_t used = 0;
            v = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw DomainError("thresholds line " + std::to_string(lineno) + ": bad number '" + val + "'");
        }
        if (key == "rho_lo") t.rho_lo = v;
        else if (key == "rho_hi") t.rho_hi = v;
        else if (key == "x_lo") t.x_lo = v;
        else if (key == "x_hi") t.x_hi = v;
        else if (key == "b_hi") t.b_hi = v;
        else if (key == "eta_n_min") t.eta_n_min = v;
        else throw DomainError("thresholds line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    t.validate();
    return t;
}

Thresholds load_thresholds(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::ios_base::failure("cannot open thresholds file " + file.string());
    return parse_thresholds(in);
}

ScaledParams scaled_params(const PolyTriple& p) {
    if (p.capN < 1) throw DomainError("capN must be >= 1");
    if (p.n < 1) throw DomainError("degenerate input: scaled parameters need n >= 1");
    const double N = static_cast<double>(p.capN);
    const double n = static_cast<double>(p.n);
    const double x = p.x_double();
    return {x / N, n / N, x * N / (n * n)};
}

Regime classify(const PolyTriple& p, const Thresholds& t) {
    if (p.n > p.capN || p.n < 0 || p.capN < 1) throw DomainError("classify requires 0 <= n <= capN");
    if (p.n == 0) return Regime::ExactFallback;
    PolyTriple q = p;
    if (2 * q.x > q.capN) q.x = q.capN - q.x;
    const ScaledParams s = scaled_params(q);
    const double x = q.x_double();
    if (x < 0) return s.b <= t.b_hi ? Regime::GammaNegSmallB : Regime::ExactFallback;
    if (s.b > t.b_hi) return Regime::KummerFixedB;
    if (s.rho > t.rho_hi) return x >= t.x_hi ? Regime::BesselSmallB : Regime::SeriesAsymptotic;
    if (s.rho >= t.rho_lo) return x >= t.x_hi ? Regime::AirySmallB : Regime::ExactFallback;
    const double eta_n = static_cast<double>(q.n) * static_cast<double>(q.n) / static_cast<double>(q.capN);
    return eta_n >= t.eta_n_min ? Regime::KummerSmallB : Regime::SeriesAsymptotic;
}

std::pair<cplx, cplx> saddles_w(double a, double b) {
    check_b(b);
    const cplx r = csqrt(1.0 - 4.0 * a * (1.0 - a) / (b * b));
    return {0.5 + 0.5 * r, 0.5 - 0.5 * r};
}

cplx saddle_t0(cplx w, double b) {
    check_b(b);
    if (w == cplx(0.0)) throw DomainError("saddle_t0 requires w != 0");
    return Phase{0.0, b}.t0(w);
}

std::pair<cplx, cplx> saddles_v(double a, double b) {
    check_b(b);
    const double D = 4.0 * a - 4.0 * a * a - b * b;
    if (!(D > 0)) throw DomainError("saddles_v requires 4a - 4a^2 - b^2 > 0");
    const double den = 2.0 * a * (1.0 - a);
    const double im = b * std::sqrt(D);
    return {cplx(b * b, -im) / den, cplx(b * b, im) / den};
}

KummerConstants solve_kummer_constants(double a, double b, bool allow_conjugate) {
    check_b(b);
    if (!(a >= 0)) throw DomainError("Kummer constants need a >= 0");
    const double disc = 1.0 - 4.0 * a * (1.0 - a) / (b * b);
    KummerConstants k;
    k.conjugate = disc < 0;
    if (k.conjugate && !allow_conjugate)
        throw DomainError("Kummer constants need a/b^2 < 1/(4(1-a)) (real saddles)");
    const Phase ph{a, b};
    std::tie(k.w_hi, k.w_lo) = saddles_w(a, b);
    const cplx F_hi = ph.F(k.w_hi), F_lo = ph.F(k.w_lo);
    const cplx lhs = F_hi - F_lo;

    using boost::math::tools::eps_tolerance;
    using boost::math::tools::toms748_solve;
    std::uintmax_t iters = 200;
    const eps_tolerance<double> tol(50);

    if (a == 0.0) {
        // psi reduces to eta u with saddles u = 1, 0
        k.eta = real_or_throw(lhs, "F(w_hi) - F(w_lo)");
        k.u_hi = 1.0;
        k.u_lo = 0.0;
    } else if (!k.conjugate) {
        // eta = -4a/(1 - r^2), r in [0, 1): difference 4a atanh(r) - 4a r/(1-r^2), decreasing in r.
        // Solve in s = 1 - r^2 in (0, 1] so eta = -4a/s is never formed from a cancelling difference.
        const double target = real_or_throw(lhs, "F(w_hi) - F(w_lo)");
        if (target > 0) throw ConvergenceError("Kummer solve: saddle-value difference is positive");
        auto g = [&](double s) {
            const double r = std::sqrt(1.0 - s);
            const double one_minus_r = s / (1.0 + r);
            const double atanh_r = 0.5 * (std::log1p(r) - std::log(one_minus_r));
            return 4.0 * a * atanh_r - 4.0 * a * r / s - target;
        };
        double lo = 0.5;
        while (g(lo) >= 0) {
            lo *= 0.5;
            if (lo < 1e-300) throw ConvergenceError("Kummer solve: cannot bracket eta");
        }
        if (target == 0) {
            k.eta = -4.0 * a;
        } else {
            const auto [s0, s1] = toms748_solve(g, lo, 1.0, g(lo), g(1.0), tol, iters);
            const double s = 0.5 * (s0 + s1);
            k.eta = -4.0 * a / s;
        }
        const double r = std::sqrt(1.0 + 4.0 * a / k.eta);
        k.u_hi = 0.5 + 0.5 * r;
        k.u_lo = 0.5 - 0.5 * r;
    } else {
        // conjugate saddles: eta = -4a/(1+s^2), u = (1 +- i s)/2; match the imaginary parts.
        const double target = lhs.imag();
        auto g = [&](double s) {
            const double eta = -4.0 * a / (1.0 + s * s);
            const cplx uh(0.5, 0.5 * s), ul(0.5, -0.5 * s);
            return (psi(a, eta, uh) - psi(a, eta, ul)).imag() - target;
        };
        double lo = 1.0, hi = 1.0;
        while (g(lo) > 0 && lo > 1e-300) lo *= 0.5;
        while (g(hi) < 0 && hi < 1e300) hi *= 2.0;
        if (g(lo) > 0 || g(hi) < 0) throw ConvergenceError("Kummer solve: cannot bracket eta (conjugate saddles)");
        const auto [s0, s1] = toms748_solve(g, lo, hi, g(lo), g(hi), tol, iters);
        const double s = 0.5 * (s0 + s1);
        k.eta = -4.0 * a / (1.0 + s * s);
        k.u_hi = cplx(0.5, 0.5 * s);
        k.u_lo = cplx(0.5, -0.5 * s);
    }
    const cplx gam = F_lo - psi(a, k.eta, k.u_lo);
    k.gamma = real_or_throw(gam, "Kummer gamma");
    const cplx rhs = psi(a, k.eta, k.u_hi) - psi(a, k.eta, k.u_lo);
    k.residual = std::max(std::abs(rhs - lhs), std::abs(F_hi - psi(a, k.eta, k.u_hi) - k.gamma));
    return k;
}

AiryConstants solve_airy_constants(double a, double b) {
    check_b(b);
    if (!(a > 0)) throw DomainError("Airy constants need a > 0");
    const Phase ph{a, b};
    AiryConstants c;
    std::tie(c.w_hi, c.w_lo) = saddles_w(a, b);
    const cplx F_hi = ph.Fbar(c.w_hi), F_lo = ph.Fbar(c.w_lo);
    const double disc = 1.0 - 4.0 * a * (1.0 - a) / (b * b);
    cplx u;
    if (disc >= 0) {
        // (4/3) zeta^{3/2} = Fbar(w_lo) - Fbar(w_hi), A the mean of the two saddle values
        const double D = real_or_throw(F_lo - F_hi, "Airy saddle difference");
        c.zeta = std::copysign(std::cbrt(0.75 * std::fabs(D) * 0.75 * std::fabs(D)), D);
        c.A = real_or_throw(0.5 * (F_lo + F_hi), "Airy A");
        u = std::sqrt(std::fabs(c.zeta));
    } else {
        // u = i s at w_hi: Fbar(w_hi) = A + (2/3) i s^3
        const double s3 = 1.5 * F_hi.imag();
        if (!(s3 > 0)) throw BranchError("Airy: Im Fbar(w_hi) must be positive for conjugate saddles");
        const double s = std::cbrt(s3);
        c.zeta = -s * s;
        c.A = F_hi.real();
        u = cplx(0.0, s);
    }
    auto model = [&](cplx v) { return v * v * v / 3.0 - c.zeta * v + c.A; };
    c.residual = std::max(std::abs(model(u) - F_hi), std::abs(model(-u) - F_lo));
    return c;
}

BesselConstants bessel_constants(double a, double b) {
    check_b(b);
    const double D = 4.0 * a - 4.0 * a * a - b * b;
    if (!(D > 0)) throw DomainError("Bessel constants need 4a - 4a^2 - b^2 > 0");
    const double sD = std::sqrt(D);
    BesselConstants c;
    c.gamma = 0.5 * (std::log1p(-b) - std::log1p(b)) + 0.5 * b * (2.0 * std::log(b) - std::log1p(-b * b));
    c.m = -0.5 * ((1.0 - b) * std::atan2(b * sD, 2.0 - 2.0 * a - b * b) -
                  a * std::atan2(b * sD, 2.0 * a - 2.0 * a * a - b * b) - 2.0 * b * std::atan2(sD, 2.0 + b - 2.0 * a));
    return c;
}

GammaNegConstants gamma_neg_constant(double a, double b) {
    check_b(b);
    if (!(a < 0)) throw DomainError("gamma_neg_constant needs a < 0");
    GammaNegConstants c;
    c.w_minus = 0.5 - 0.5 * std::sqrt(1.0 - 4.0 * a * (1.0 - a) / (b * b));
    const double w = c.w_minus;
    const double t = Phase{a, b}.t0(w).real();
    const double ft = b * std::log1p(-t) + (1.0 - b) * std::log(t) + a * std::log(-w) - a * std::log1p(-w) +
                      b * std::log(1.0 - (1.0 - t) * w);
    c.gamma = ft - (a * std::log(-a) - a);
    c.residual = std::fabs(ft - (a * std::log(-a) - a) - c.gamma);
    return c;
}

}  // namespace dcheb
