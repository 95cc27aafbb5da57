#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "dcheb/exact.hpp"

namespace dcheb {

using cplx = std::complex<double>;

// a = x/capN, b = n/capN, rho = a/b^2 = x capN / n^2.
struct ScaledParams {
    double a = 0, b = 0, rho = 0;
};

enum class Regime {
    SeriesAsymptotic,
    KummerSmallB,
    AirySmallB,
    BesselSmallB,
    GammaNegSmallB,
    KummerFixedB,
    ExactFallback,
};

std::string_view regime_name(Regime r);
// Accepts the tag names above and the CLI spellings (kummer, airy, bessel, gamma-neg, fixed-b, series, exact).
std::optional<Regime> parse_regime(std::string_view s);

struct Thresholds {
    double rho_lo = 0.05;
    double rho_hi = 20.0;
    double x_lo = 1.0;
    double x_hi = 30.0;
    double b_hi = 0.1;
    double eta_n_min = 10.0;

    void validate() const;  // throws DomainError
    friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// key=value lines (keys rho_lo, rho_hi, x_lo, x_hi, b_hi, eta_n_min); '#' starts a comment.
// Unset keys keep their defaults.
Thresholds parse_thresholds(std::istream& in);
Thresholds load_thresholds(const std::filesystem::path& file);

struct KummerConstants {
    double eta = 0, gamma = 0;
    cplx w_hi, w_lo;  // w-saddles, w_hi = 1/2 + sqrt(disc)/2
    cplx u_hi, u_lo;  // matching u-saddles of a ln u - a ln(u-1) + eta u
    bool conjugate = false;  // complex-conjugate saddle pair
    double residual = 0;
};

struct AiryConstants {
    double zeta = 0, A = 0;
    cplx w_hi, w_lo;  // w_hi <-> +sqrt(zeta), w_lo <-> -sqrt(zeta)
    double residual = 0;
};

struct BesselConstants {
    double m = 0, gamma = 0;
};

struct GammaNegConstants {
    double gamma = 0;
    double w_minus = 0;
    double residual = 0;
};

using RegimeConstants = std::variant<std::monostate, KummerConstants, AiryConstants, BesselConstants, GammaNegConstants>;

ScaledParams scaled_params(const PolyTriple& p);

// x > capN/2 is first folded to capN - x (t_n is (-1)^n-symmetric about capN/2).
Regime classify(const PolyTriple& p, const Thresholds& t);

std::pair<cplx, cplx> saddles_w(double a, double b);
cplx saddle_t0(cplx w, double b);
std::pair<cplx, cplx> saddles_v(double a, double b);

// Without allow_conjugate the real-saddle side b^2 >= 4a(1-a) is required.
KummerConstants solve_kummer_constants(double a, double b, bool allow_conjugate = false);
AiryConstants solve_airy_constants(double a, double b);
BesselConstants bessel_constants(double a, double b);
GammaNegConstants gamma_neg_constant(double a, double b);

}  // namespace dcheb
