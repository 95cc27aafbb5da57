#include "dcheb/signed_log.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcheb {

SignedLog SignedLog::from_double(double v) {
    if (std::isnan(v)) throw std::domain_error("SignedLog: NaN");
    if (v == 0.0) return zero();
    return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
}

SignedLog SignedLog::from_log(int sign, double log_abs) {
    if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity()) return zero();
    return {sign > 0 ? 1 : -1, log_abs};
}

double SignedLog::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return SignedLog::zero();
    return {a.sign * b.sign, a.log_abs + b.log_abs};
}

SignedLog operator*(const SignedLog& a, double s) { return a * SignedLog::from_double(s); }

SignedLog operator-(const SignedLog& a) { return {-a.sign, a.log_abs}; }

SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLog& big = a.log_abs >= b.log_abs ? a : b;
    const SignedLog& small = a.log_abs >= b.log_abs ? b : a;
    const double r = std::exp(small.log_abs - big.log_abs);
    if (big.sign == small.sign) return {big.sign, big.log_abs + std::log1p(r)};
    if (r == 1.0) return SignedLog::zero();
    return {big.sign, big.log_abs + std::log1p(-r)};
}

double relative_error(const SignedLog& approx, const SignedLog& exact) {
    if (exact.sign == 0) return approx.sign == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    if (approx.sign == 0) return 1.0;
    const double d = approx.log_abs - exact.log_abs;
    if (approx.sign == exact.sign) return std::fabs(std::expm1(d));
    return std::exp(d) + 1.0;
}

CompensatedSum& CompensatedSum::operator+=(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
        comp_ += (sum_ - t) + v;
    else
        comp_ += (v - t) + sum_;
    sum_ = t;
    return *this;
}

}  // namespace dcheb
