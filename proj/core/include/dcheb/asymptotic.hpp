#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcheb/exact.hpp"
#include "dcheb/regime.hpp"
#include "dcheb/signed_log.hpp"

namespace dcheb {

struct LeadingCoeffs {
    double c0 = 0;
    double d0 = 0;
    bool has_d0 = true;    // false for the single-saddle gamma-type expansion
    double condition = 0;  // condition number of the two-saddle linear system, when there is one
    bool confluent = false;  // Airy only: interpolated across the coalescence point
};

struct NamedValue {
    std::string name;
    SignedLog value;
};

struct ApproxResult {
    SignedLog value;
    Regime regime = Regime::ExactFallback;
    RegimeConstants constants;
    LeadingCoeffs coeffs;
    SignedLog prefactor;  // sign and log-magnitude of the gamma-ratio factor
    SignedLog kernel;     // special-function combination; value = prefactor * kernel
    std::vector<NamedValue> kernel_values;
    std::vector<std::string> diagnostics;
};

// Overall sign fixed once per regime against the exact oracle (see calibration_point).
int calibration_sign(Regime r);
PolyTriple calibration_point(Regime r);

// t_n(x, capN+1) = (-1)^n t_n(capN - x, capN+1); returns the folded point and whether it moved.
std::pair<PolyTriple, bool> fold_symmetric(const PolyTriple& p);

// Saddle value of h0 at u = i, tau = b, in closed form.
LeadingCoeffs leading_coeffs_bessel(double a, double b, const BesselConstants& k);
// The tau = 0 closed form with the phase correction Delta; kept as a cross-check.
LeadingCoeffs leading_coeffs_bessel_tau0(double a, double b, double m);
double bessel_delta(double a);

LeadingCoeffs leading_coeffs_kummer(double a, double b, const KummerConstants& k);
LeadingCoeffs leading_coeffs_airy(double a, double b, const AiryConstants& k);
LeadingCoeffs leading_coeff_gamma_neg(double a, double b, const GammaNegConstants& k);
LeadingCoeffs leading_coeffs_fixed_b(double a, double b, const KummerConstants& k);

// Assembles the leading-order approximation. p is folded first; consts and coeffs must belong to
// the folded (a, b).
ApproxResult approx(const PolyTriple& p, Regime r, const RegimeConstants& consts, const LeadingCoeffs& coeffs);

struct SeriesPartial {
    SignedLog value;
    double omitted_ratio = 0;  // |phi_K / phi_0|, zero once the sum is complete
    long terms = 0;
};

// First K terms of the terminating hypergeometric sum, times the exact prefactor.
SeriesPartial approx_series_partial(const PolyTriple& p, long K);

struct ApproxOptions {
    std::optional<Regime> regime;  // bypass the classifier
    long series_terms = -1;        // K for SeriesAsymptotic; -1 means the full sum
};

// fold -> classify (or override) -> constants -> coefficients -> approx.
ApproxResult approximate(const PolyTriple& p, const Thresholds& t, const ApproxOptions& opt = {});

}  // namespace dcheb
