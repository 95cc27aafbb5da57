#include <doctest.h>

#include <cmath>

#include "dcheb/errors.hpp"
#include "dcheb/exact.hpp"
#include "oracle_values.hpp"

using namespace dcheb;

TEST_CASE("series: small values") {
    CHECK(eval_exact_series({0, 7, 10}) == 1);
    CHECK(eval_exact_series({1, 3, 10}) == -4);
    CHECK(eval_exact_series({2, 1, 3}) == -6);
    CHECK(eval_exact_series({3, 0, 9}) == -504);
    CHECK(eval_exact_series({3, -1, 5}) == -504);
}

TEST_CASE("series: t_1 is 2x - N") {
    for (long N = 1; N <= 12; ++N)
        for (long x = -4; x <= N + 4; ++x) CHECK(eval_exact_series({1, x, N}) == 2 * x - N);
}

TEST_CASE("series: frozen large values") {
    CHECK(eval_exact_series({5, 1, 1000000}) == mpq_class(oracle::t5_x1_N1e6));
    CHECK(eval_exact_series({40, 17, 40}) == mpq_class(oracle::t40_x17_N40));
}

TEST_CASE("recurrence: small values") {
    CHECK(eval_exact_recurrence({0, 5, 6}) == 1);
    CHECK(eval_exact_recurrence({1, 3, 10}) == -4);
    CHECK(eval_exact_recurrence({2, 2, 3}) == -6);
}

TEST_CASE("recurrence agrees with series, including rational x") {
    for (long N = 1; N <= 14; ++N)
        for (long n = 0; n <= N; ++n) {
            for (long x = -3; x <= N + 3; ++x) REQUIRE(eval_exact_series({n, x, N}) == eval_exact_recurrence({n, x, N}));
            const mpq_class q(7, 3);
            REQUIRE(eval_exact_series({n, q, N}) == eval_exact_recurrence({n, q, N}));
        }
}

TEST_CASE("domain") {
    CHECK_THROWS_AS(eval_exact_series({4, 1, 3}), DomainError);
    CHECK_THROWS_AS(eval_exact_series({-1, 1, 3}), DomainError);
    CHECK_THROWS_AS(eval_exact_recurrence({4, 1, 3}), DomainError);
    CHECK_THROWS_AS(eval_exact_series({0, 1, 0}), DomainError);
}

TEST_CASE("to_signed_log") {
    CHECK(to_signed_log(mpq_class(1)) == SignedLog{1, 0.0});
    CHECK(to_signed_log(mpq_class(0)).sign == 0);
    CHECK(std::isinf(to_signed_log(mpq_class(0)).log_abs));
    const SignedLog m6 = to_signed_log(mpq_class(-6));
    CHECK(m6.sign == -1);
    CHECK(m6.log_abs == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    // far outside double range
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 5000);
    CHECK(to_signed_log(big).log_abs == doctest::Approx(5000 * std::log(10.0)).epsilon(1e-15));
    CHECK(to_signed_log(mpq_class(1, 3)).log_abs == doctest::Approx(-std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("degree_check") {
    CHECK(degree_check(1, 5));
    CHECK(degree_check(3, 8));
    CHECK(degree_check(0, 2));
    CHECK(degree_check(12, 30));
}

TEST_CASE("series_prefactor") {
    CHECK(series_prefactor(3, 9) == -504);
    CHECK(series_prefactor(0, 9) == 1);
}

TEST_CASE("symmetry and degree") {
    for (long N = 1; N <= 20; ++N)
        for (long n = 0; n <= N; ++n) {
            REQUIRE(degree_check(n, N));
            for (long x = -2; x <= N + 2; ++x)
                REQUIRE(eval_exact_series({n, x, N}) == (n % 2 ? -1 : 1) * eval_exact_series({n, N - x, N}));
        }
}

// Observation only: every value computed at integer x has been an integer.
TEST_CASE("integer values at integer x (observational)") {
    for (long N = 1; N <= 30; ++N)
        for (long n = 0; n <= N; ++n)
            for (long x = -3; x <= N + 3; ++x) CHECK(eval_exact_series({n, x, N}).get_den() == 1);
}
