#include <doctest.h>

#include <cmath>

#include "dcheb/asymptotic.hpp"
#include "dcheb/errors.hpp"
#include "dcheb/exact.hpp"
#include "oracle_values.hpp"

using namespace dcheb;

namespace {

double rel(double got, double want) { return std::fabs(got / want - 1); }

const SignedLog* find(const ApproxResult& r, const std::string& name) {
    for (const auto& v : r.kernel_values)
        if (v.name == name) return &v.value;
    return nullptr;
}

}  // namespace

TEST_CASE("Kummer coefficients") {
    const KummerConstants k = solve_kummer_constants(1e-4, 0.1);
    const LeadingCoeffs c = leading_coeffs_kummer(1e-4, 0.1, k);
    CHECK(rel(c.c0, oracle::kummer_c0) < 1e-12);
    CHECK(rel(c.d0, oracle::kummer_d0) < 1e-12);
    CHECK(std::abs(k.u_hi - k.u_lo) > 0.1);
    CHECK(std::isfinite(c.condition));
    CHECK_THROWS_AS(leading_coeffs_kummer(0.0, 0.3, solve_kummer_constants(0.0, 0.3)), DomainError);
}

TEST_CASE("fixed-b coefficients") {
    const KummerConstants k = solve_kummer_constants(0.125, 0.5, true);
    const LeadingCoeffs c = leading_coeffs_fixed_b(0.125, 0.5, k);
    CHECK(rel(c.c0, oracle::fixedb_c0) < 1e-12);
    CHECK(rel(c.d0, oracle::fixedb_d0) < 1e-12);
    CHECK(std::abs(k.u_hi - k.u_lo) > 0.1);
}

TEST_CASE("Airy coefficients") {
    for (const auto& r : oracle::airy_const_rows) {
        CAPTURE(r.a);
        const LeadingCoeffs c = leading_coeffs_airy(r.a, r.b, solve_airy_constants(r.a, r.b));
        CHECK(rel(c.c0, r.c0) < 1e-11);
        CHECK(rel(c.d0, r.d0) < 1e-11);
        CHECK_FALSE(c.confluent);
    }
    // at the coalescence point the coefficients are interpolated and stay finite
    const double a = 0.01, b = std::sqrt(4 * a * (1 - a));
    const LeadingCoeffs c = leading_coeffs_airy(a, b, solve_airy_constants(a, b));
    CHECK(c.confluent);
    CHECK(std::isfinite(c.c0));
    CHECK(std::isfinite(c.d0));
}

TEST_CASE("Bessel coefficients") {
    CHECK(calibration_sign(Regime::BesselSmallB) == -1);
    for (const auto& r : oracle::bessel_const_rows) {
        CAPTURE(r.b);
        const BesselConstants k = bessel_constants(r.a, r.b);
        const LeadingCoeffs c = leading_coeffs_bessel(r.a, r.b, k);
        // c0 = s Re h, d0 = -s Im h: s (c0 - i d0) reconstructs h
        const cplx h = -1.0 * cplx(c.c0, -c.d0);
        CHECK(rel(h.real(), r.h_re) < 1e-12);
        CHECK(rel(h.imag(), r.h_im) < 1e-12);
        const LeadingCoeffs t0 = leading_coeffs_bessel_tau0(r.a, r.b, k.m);
        CHECK(rel(t0.c0, r.tau0_c0) < 1e-12);
        CHECK(rel(t0.d0, r.tau0_d0) < 1e-12);
    }
    CHECK(rel(bessel_delta(0.25), oracle::bessel_delta_quarter) < 1e-15);
}

TEST_CASE("gamma-type coefficient") {
    CHECK(calibration_sign(Regime::GammaNegSmallB) == -1);
    for (const auto& r : oracle::gamma_neg_rows) {
        const LeadingCoeffs c = leading_coeff_gamma_neg(r.a, r.b, gamma_neg_constant(r.a, r.b));
        CHECK_FALSE(c.has_d0);
        CHECK(rel(c.c0, -r.c0) < 1e-12);
    }
    const int s0 = leading_coeff_gamma_neg(-0.001, 0.01, gamma_neg_constant(-0.001, 0.01)).c0 > 0 ? 1 : -1;
    for (double b = 0.01; b <= 0.1; b += 0.0025) {
        const double c0 = leading_coeff_gamma_neg(-0.001, b, gamma_neg_constant(-0.001, b)).c0;
        CHECK((c0 > 0 ? 1 : -1) == s0);
    }
}

TEST_CASE("calibration points reproduce the exact sign") {
    for (Regime r : {Regime::KummerSmallB, Regime::AirySmallB, Regime::BesselSmallB, Regime::GammaNegSmallB,
                     Regime::KummerFixedB}) {
        CAPTURE(regime_name(r));
        const PolyTriple p = calibration_point(r);
        const ApproxResult a = approximate(p, Thresholds{}, {r});
        const SignedLog e = to_signed_log(eval_exact_series(p));
        CHECK(a.value.sign == e.sign);
        CHECK(relative_error(a.value, e) < 0.1);
    }
}

TEST_CASE("fold symmetry") {
    const auto [q, moved] = fold_symmetric({7, 90, 100});
    CHECK(moved);
    CHECK(q.x == 10);
    CHECK_FALSE(fold_symmetric({7, 50, 100}).second);
    // approximation is folded consistently with the exact symmetry
    const ApproxResult lo = approximate({40, 1800, 8000}, Thresholds{});
    const ApproxResult hi = approximate({40, 6200, 8000}, Thresholds{});
    CHECK(lo.value.sign == hi.value.sign);
    CHECK(lo.value.log_abs == doctest::Approx(hi.value.log_abs).epsilon(1e-12));
}

TEST_CASE("series truncation") {
    const PolyTriple p{5, 1, 1000000};
    const SignedLog e = to_signed_log(eval_exact_series(p));
    const SeriesPartial s1 = approx_series_partial(p, 1);
    CHECK(s1.value == to_signed_log(series_prefactor(5, 1000000)));
    // |(-n)(-x)(n+1) / (-capN)|
    CHECK(s1.omitted_ratio == doctest::Approx(5.0 * 6.0 / 1000000.0).epsilon(1e-12));
    const double e1 = relative_error(s1.value, e);
    CHECK(e1 < 3 * s1.omitted_ratio);
    CHECK(e1 > s1.omitted_ratio / 3);
    CHECK(relative_error(approx_series_partial(p, 2).value, e) < e1);
    const SeriesPartial full = approx_series_partial(p, 6);
    CHECK(full.omitted_ratio == 0);
    CHECK(relative_error(full.value, e) < 1e-15);
    CHECK_THROWS_AS(approx_series_partial(p, 0), DomainError);
}

TEST_CASE("routing") {
    const ApproxResult r = approximate({1, 3, 10}, Thresholds{});
    CHECK(r.regime == Regime::SeriesAsymptotic);
    CHECK(r.value == to_signed_log(mpq_class(-4)));
    CHECK(approximate({0, 3, 10}, Thresholds{}).value.to_double() == 1.0);
    // regime override that does not fit the point surfaces an error
    CHECK_THROWS_AS(approximate({63, -3, 1000}, Thresholds{}, {Regime::KummerSmallB}), DomainError);
    CHECK_THROWS_AS(approximate({200, 1, 1000}, Thresholds{}, {Regime::BesselSmallB}), DomainError);
    CHECK_THROWS_AS(approximate({4, 1, 3}, Thresholds{}), DomainError);
}

TEST_CASE("x = 0 uses the a -> 0 limit of the coefficients") {
    for (const PolyTriple& p : {PolyTriple{400, 0, 10000}, PolyTriple{100, 0, 200}}) {
        const ApproxResult a = approximate(p, Thresholds{});
        CHECK((a.regime == Regime::KummerSmallB || a.regime == Regime::KummerFixedB));
        const SignedLog e = to_signed_log(eval_exact_series(p));
        CHECK(a.value.sign == e.sign);
        CHECK(relative_error(a.value, e) < 0.01);
        CHECK(a.diagnostics.size() >= 1);
    }
}

TEST_CASE("Bessel point against the exact value") {
    const PolyTriple p{10, 2500, 10000};
    const ApproxResult a = approximate(p, Thresholds{});
    CHECK(a.regime == Regime::BesselSmallB);
    const SignedLog e = to_signed_log(eval_exact_series(p));
    CHECK(a.value.sign == e.sign);
    CHECK(relative_error(a.value, e) < 0.05);
}

TEST_CASE("Airy integer x: only the Ai branch survives") {
    const PolyTriple p{400, 160, 10000};
    const ApproxResult a = approximate(p, Thresholds{});
    REQUIRE(a.regime == Regime::AirySmallB);
    REQUIRE(find(a, "Bi_branch"));
    CHECK(find(a, "Bi_branch")->is_zero());
    CHECK(a.kernel == *find(a, "Ai_branch"));
    const SignedLog e = to_signed_log(eval_exact_series(p));
    CHECK(a.value.sign == e.sign);

    // non-integer x keeps both branches and is flagged
    const ApproxResult q = approximate({400, mpq_class(321, 2), 10000}, Thresholds{});
    CHECK_FALSE(find(q, "Bi_branch")->is_zero());
    CHECK(q.diagnostics.size() >= 1);
}

TEST_CASE("audit: value is prefactor times the recorded kernel combination") {
    for (Regime r : {Regime::KummerSmallB, Regime::AirySmallB, Regime::BesselSmallB, Regime::GammaNegSmallB,
                     Regime::KummerFixedB}) {
        CAPTURE(regime_name(r));
        const ApproxResult a = approximate(calibration_point(r), Thresholds{}, {r});
        const SignedLog pk = a.prefactor * a.kernel;
        CHECK(pk.sign == a.value.sign);
        CHECK(std::fabs(pk.log_abs - a.value.log_abs) < 1e-12);

        SignedLog k = SignedLog::zero();
        const double c0 = a.coeffs.c0, d0 = a.coeffs.d0;
        if (r == Regime::KummerSmallB || r == Regime::KummerFixedB)
            k = *find(a, "M") * c0 + *find(a, "M_prime") * d0;
        else if (r == Regime::BesselSmallB)
            k = *find(a, "J0") * c0 + *find(a, "J1") * d0;
        else if (r == Regime::AirySmallB)
            k = *find(a, "Ai_branch") + *find(a, "Bi_branch");
        else
            k = SignedLog::from_double(c0);
        CHECK(k.sign == a.kernel.sign);
        CHECK(std::fabs(k.log_abs - a.kernel.log_abs) < 1e-12);
    }
}

TEST_CASE("Bessel and Airy agree at rho = rho_hi") {
    // x = rho_hi n^2 / capN = 80
    const PolyTriple p{400, 80, 40000};
    const SignedLog e = to_signed_log(eval_exact_series(p));
    const ApproxResult b = approximate(p, Thresholds{}, {Regime::BesselSmallB});
    const ApproxResult a = approximate(p, Thresholds{}, {Regime::AirySmallB});
    const double eb = relative_error(b.value, e), ea = relative_error(a.value, e);
    CHECK(a.value.sign == b.value.sign);
    CHECK(relative_error(a.value, b.value) < 3 * std::max(eb, ea));
}
