#pragma once

#include <complex>

namespace dcheb::detail {

using cplx = std::complex<double>;

// Principal branches, with a negative zero imaginary part treated as +0 so that real
// arguments on a cut always land on the same (upper) edge.
inline cplx cln(cplx z) { return std::log(cplx(z.real(), z.imag() == 0.0 ? 0.0 : z.imag())); }
inline cplx csqrt(cplx z) { return std::sqrt(cplx(z.real(), z.imag() == 0.0 ? 0.0 : z.imag())); }

// c * ln(z), with 0 * ln(0) = 0 so that a = 0 drops the terms entirely.
inline cplx xln(double c, cplx z) { return c == 0.0 ? cplx(0.0) : c * cln(z); }

// Phase function of the double integral for t_n(aN, N+1) with b = n/N, and its saddle geometry.
struct Phase {
    double a, b;

    cplx S(cplx w) const { return csqrt(1.0 + 4.0 * b * b * (w - 1.0) * w); }

    // stationary point in t for fixed w
    cplx t0(cplx w) const {
        if (w == cplx(0.0)) return 1.0 - b;
        return (2.0 * w - 1.0 + S(w)) / (2.0 * (1.0 + b) * w);
    }

    cplx f(cplx t, cplx w) const {
        return b * cln(1.0 - t) + (1.0 - b) * cln(t) + xln(a, w) - xln(a, w - 1.0) + b * cln(1.0 - (1.0 - t) * w);
    }

    // same phase with the cut of ln(w - 1) moved: -a ln(1 - w)
    cplx fbar(cplx t, cplx w) const {
        return b * cln(1.0 - t) + (1.0 - b) * cln(t) + xln(a, w) - xln(a, 1.0 - w) + b * cln(1.0 - (1.0 - t) * w);
    }

    cplx F(cplx w) const { return f(t0(w), w); }
    cplx Fbar(cplx w) const { return fbar(t0(w), w); }

    cplx ftt(cplx t, cplx w) const {
        const cplx q = 1.0 - (1.0 - t) * w;
        return -b / ((1.0 - t) * (1.0 - t)) - (1.0 - b) / (t * t) - b * w * w / (q * q);
    }

    // d^2/dw^2 of f(t0(w), w) = f_ww - f_tw^2 / f_tt
    cplx F2(cplx w) const {
        const cplx t = t0(w);
        const cplx q = 1.0 - (1.0 - t) * w;
        const cplx fww = -a / (w * w) + a / ((w - 1.0) * (w - 1.0)) - b * (1.0 - t) * (1.0 - t) / (q * q);
        const cplx ftw = b / (q * q);
        return fww - ftw * ftw / ftt(t, w);
    }

    // dt/dtau of the logarithmic t-mapping at its weight peak tau = b; t decreases as tau grows.
    cplx dtdtau_b(cplx w) const {
        const cplx t = t0(w);
        const cplx q = 1.0 - (1.0 - t) * w;
        return -csqrt(t * (1.0 - t) * q / (b * S(w)));
    }

    // dt/dtau of the quadratic t-mapping at tau = 0, descent orientation (Re > 0).
    cplx dtdtau_0(cplx w) const {
        const cplx t = t0(w);
        cplx r = csqrt(-2.0 / ftt(t, w));
        return r.real() < 0 ? -r : r;
    }
};

inline cplx positive_real_root(cplx z) {
    const cplx r = csqrt(z);
    return r.real() < 0 ? -r : r;
}

}  // namespace dcheb::detail
