#include "dcheb/exact.hpp"

#include <cmath>
#include <string>

#include "dcheb/errors.hpp"

namespace dcheb {
namespace {

void check_triple(const PolyTriple& p) {
    if (p.capN < 1) throw DomainError("capN must be >= 1");
    if (p.n < 0) throw DomainError("n must be >= 0");
    if (p.n > p.capN)
        throw DomainError("degenerate input: n = " + std::to_string(p.n) + " exceeds capN = " +
                          std::to_string(p.capN));
}

}  // namespace

mpz_class series_prefactor(long n, long capN) {
    mpz_class pre = 1;
    for (long j = 0; j < n; ++j) pre *= capN + 1 - n + j;
    if (n % 2) pre = -pre;
    return pre;
}

ExactValue eval_exact_series(const PolyTriple& p) {
    check_triple(p);
    const long n = p.n;
    const mpz_class xn = p.x.get_num();
    const mpz_class xd = p.x.get_den();

    // Sum = A / B with B the running denominator of the current term, so every step is a few
    // integer multiplies and the single canonicalization happens at the end.
    mpz_class term_num = 1, den = 1, acc = 1;
    for (long k = 0; k < n; ++k) {
        // ratio = (k-n)(k-x)(n+1+k) / ((k-capN)(k+1)^2), with k - x = (k*xd - xn)/xd
        mpz_class num_factor = mpz_class(k - n) * (k * xd - xn) * (n + 1 + k);
        mpz_class den_factor = mpz_class(k - p.capN) * (k + 1) * (k + 1) * xd;
        term_num *= num_factor;
        acc = acc * den_factor + term_num;
        den *= den_factor;
        if (term_num == 0) break;  // x a non-negative integer < n terminates early
    }
    mpq_class s(acc, den);
    s.canonicalize();
    return s * series_prefactor(n, p.capN);
}

ExactValue eval_exact_recurrence(const PolyTriple& p) {
    check_triple(p);
    // -x Q_k = A_k Q_{k+1} - (A_k + C_k) Q_k + C_k Q_{k-1}
    // A_k = (k+1)(capN-k) / (2(2k+1)),  C_k = k(k+capN+1) / (2(2k+1))
    mpq_class q_prev = 0, q_cur = 1;
    for (long k = 0; k < p.n; ++k) {
        mpq_class A(mpz_class(k + 1) * (p.capN - k), mpz_class(2) * (2 * k + 1));
        mpq_class C(mpz_class(k) * (k + p.capN + 1), mpz_class(2) * (2 * k + 1));
        A.canonicalize();
        C.canonicalize();
        mpq_class q_next = ((A + C - p.x) * q_cur - C * q_prev) / A;
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    return q_cur * series_prefactor(p.n, p.capN);
}

SignedLog to_signed_log(const mpz_class& v) {
    const int s = sgn(v);
    if (s == 0) return SignedLog::zero();
    long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return {s, std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0)};
}

SignedLog to_signed_log(const mpq_class& v) {
    const int s = sgn(v);
    if (s == 0) return SignedLog::zero();
    long en = 0, ed = 0;
    const double dn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
    const double dd = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
    const double l = std::log(std::fabs(dn) / dd) + static_cast<double>(en - ed) * std::log(2.0);
    return {s, l};
}

bool degree_check(long n, long capN) {
    if (n > capN) throw DomainError("degree_check requires n <= capN");
    mpq_class diff = 0;
    mpz_class binom = 1;  // C(n+1, j)
    for (long j = 0; j <= n + 1; ++j) {
        const mpq_class v = eval_exact_series(PolyTriple(n, j, capN));
        if ((n + 1 - j) % 2)
            diff -= binom * v;
        else
            diff += binom * v;
        binom = binom * (n + 1 - j) / (j + 1);
    }
    return diff == 0;
}

}  // namespace dcheb
