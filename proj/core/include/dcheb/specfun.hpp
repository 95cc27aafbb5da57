#pragma once

#include "dcheb/signed_log.hpp"

namespace dcheb {

struct AiryQuad {
    SignedLog ai, ai_prime, bi, bi_prime;
};

// Ai, Ai', Bi, Bi' at real z. Maclaurin series (multiprecision) for |z| <= 8, asymptotic forms beyond.
AiryQuad airy(double z);

struct BesselPair {
    SignedLog j0, j1;
};

// J0, J1 for z >= 0. Power series (multiprecision) for z <= 25, Hankel expansion beyond.
BesselPair bessel_j01(double z);

// Leading large-argument form sqrt(2/(pi z)) cos(z - pi/4); used as a cross-check only.
double bessel_j0_leading_asymptotic(double z);

struct KummerPair {
    SignedLog m_val;    // M(alpha, 1, z)  (regularized; Gamma(1) = 1)
    SignedLog m_prime;  // d/dz M(alpha, 1, z) = alpha M(alpha + 1, 2, z)
    // Series cancellation exceeded 1e6; the value was recomputed at working_bits of precision.
    bool precision_degraded = false;
    long working_bits = 0;
    double amplification_log2 = 0.0;
};

// Convergent power series at whatever precision the cancellation demands.
KummerPair kummer_reg(double alpha, double z);

// Leading algebraic term (-z)^{-alpha} / Gamma(1 - alpha) for z -> -inf.
// Vanishes identically when alpha is a positive integer.
SignedLog kummer_reg_large_negative(double alpha, double z);

// ln Gamma(x), x > 0.
double log_gamma(double x);

}  // namespace dcheb
