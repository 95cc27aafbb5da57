#include <cmath>
#include <numbers>

#include "dcheb/errors.hpp"
#include "dcheb/specfun.hpp"

namespace dcheb {

// Shift the argument past 15 with the recurrence, then Stirling's series with Bernoulli terms.
double log_gamma(double x) {
    if (!(x > 0)) throw DomainError("log_gamma requires x > 0");
    if (x == 1.0 || x == 2.0) return 0.0;
    double shift = 0.0;
    if (x < 15.0) {
        double prod = 1.0;
        while (x < 15.0) {
            prod *= x;
            x += 1.0;
        }
        shift = std::log(prod);
    }
    // B_{2k} / (2k (2k-1)), k = 1..8
    static constexpr double c[] = {1.0 / 12,          -1.0 / 360,     1.0 / 1260,      -1.0 / 1680,
                                   1.0 / 1188,        -691.0 / 360360, 1.0 / 156,       -3617.0 / 122400};
    const double r = 1.0 / x, r2 = r * r;
    double series = 0.0, pw = r;
    for (double ck : c) {
        series += ck * pw;
        pw *= r2;
    }
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (x - 0.5) * std::log(x) - x + half_log_2pi + series - shift;
}

}  // namespace dcheb
