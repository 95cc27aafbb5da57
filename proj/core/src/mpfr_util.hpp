#pragma once

#include <mpfr.h>

#include <cmath>
#include <limits>

#include "dcheb/signed_log.hpp"

namespace dcheb::detail {

// Minimal owning handle; arithmetic goes through the C API with explicit rounding.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mpfr(mpfr_prec_t prec, double d) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    // several mpfr "functions" are macros that dereference their argument
    mpfr_ptr operator->() { return v_; }
    mpfr_srcptr operator->() const { return v_; }
    operator mpfr_ptr() { return v_; }
    operator mpfr_srcptr() const { return v_; }

    // log2 |v|, -inf for zero.
    double log2_abs() const {
        if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
        long e = 0;
        const double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log2(std::fabs(d)) + static_cast<double>(e);
    }

    SignedLog to_signed_log() const {
        if (mpfr_zero_p(v_)) return SignedLog::zero();
        long e = 0;
        const double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return {mpfr_sgn(v_) > 0 ? 1 : -1, std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0)};
    }

private:
    mpfr_t v_;
};

}  // namespace dcheb::detail
