#pragma once

#include <cmath>
#include <limits>

namespace dcheb {

// Real number stored as sign * exp(log_abs); zero is (0, -inf).
struct SignedLog {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    static SignedLog zero() { return {}; }
    static SignedLog from_double(double v);
    static SignedLog from_log(int sign, double log_abs);

    bool is_zero() const { return sign == 0; }
    // Overflows to +-inf / underflows to 0 outside the double range.
    double to_double() const;

    friend bool operator==(const SignedLog&, const SignedLog&) = default;
};

SignedLog operator*(const SignedLog& a, const SignedLog& b);
SignedLog operator*(const SignedLog& a, double s);
SignedLog operator+(const SignedLog& a, const SignedLog& b);
SignedLog operator-(const SignedLog& a);

// Relative error |approx/exact - 1| evaluated in log space.
double relative_error(const SignedLog& approx, const SignedLog& exact);

// Neumaier-compensated running sum; used wherever large exponent terms cancel.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double v);
    CompensatedSum& operator-=(double v) { return *this += -v; }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace dcheb
