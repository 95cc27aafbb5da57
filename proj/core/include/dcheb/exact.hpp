#pragma once

#include <gmpxx.h>

#include "dcheb/signed_log.hpp"

namespace dcheb {

// Evaluation point for t_n(x, capN + 1): the polynomial of degree n orthogonal on x = 0..capN.
struct PolyTriple {
    long n = 0;
    mpq_class x;
    long capN = 1;

    PolyTriple() = default;
    PolyTriple(long n_, mpq_class x_, long capN_) : n(n_), x(std::move(x_)), capN(capN_) {}
    PolyTriple(long n_, long x_, long capN_) : n(n_), x(x_), capN(capN_) {}

    bool integer_x() const { return x.get_den() == 1; }
    double x_double() const { return x.get_d(); }
};

using ExactValue = mpq_class;

// Terminating hypergeometric sum, one rational term update per k.
ExactValue eval_exact_series(const PolyTriple& p);

// Three-term recurrence in the degree (Hahn, alpha = beta = 0), rescaled to t_n.
ExactValue eval_exact_recurrence(const PolyTriple& p);

SignedLog to_signed_log(const mpq_class& v);
SignedLog to_signed_log(const mpz_class& v);

// (n+1)-th forward difference of x -> t_n(x, capN+1) at x = 0 vanishes.
bool degree_check(long n, long capN);

// (-1)^n (capN+1-n)_n, the scale between t_n and the monic-in-k hypergeometric sum.
mpz_class series_prefactor(long n, long capN);

}  // namespace dcheb
