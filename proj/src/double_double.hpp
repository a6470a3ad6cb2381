#pragma once

// Error-free transformations and a minimal complex double-double type used
// for compensated polynomial evaluation during root polishing.

#include <cmath>
#include <vector>

#include "rootshift/poly.hpp"

namespace rootshift::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD x, DD y) {
    DD s = two_sum(x.hi, y.hi);
    s.lo += x.lo + y.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD x) { return {-x.hi, -x.lo}; }
inline DD operator-(DD x, DD y) { return x + (-y); }

inline DD operator*(DD x, DD y) {
    DD p = two_prod(x.hi, y.hi);
    p.lo += x.hi * y.lo + x.lo * y.hi;
    return quick_two_sum(p.hi, p.lo);
}

struct CDD {
    DD re;
    DD im;
};

inline CDD operator+(CDD a, CDD b) { return {a.re + b.re, a.im + b.im}; }
inline CDD operator-(CDD a, CDD b) { return {a.re - b.re, a.im - b.im}; }
inline CDD operator*(CDD a, CDD b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline CDD lift(Complex z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }
inline CDD make(Complex hi, Complex lo) {
    return {quick_two_sum(hi.real(), lo.real()), quick_two_sum(hi.imag(), lo.imag())};
}
inline Complex hi(CDD z) { return {z.re.hi, z.im.hi}; }
inline Complex lo(CDD z) { return {z.re.lo, z.im.lo}; }
inline Complex collapse(CDD z) { return {z.re.hi + z.re.lo, z.im.hi + z.im.lo}; }

/// Horner evaluation in double-double; coefficients are taken as exact.
inline CDD horner(const std::vector<Complex>& coeffs, CDD x) {
    CDD acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + lift(*it);
    return acc;
}

}  // namespace rootshift::detail
