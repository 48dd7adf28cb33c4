#pragma once

#include <cmath>
#include <utility>

// Adaptive Simpson integration with Richardson correction. Used as the
// numeric fallback for the closed-form phase integrals and as the reference
// route in their tests.

namespace qgem::quadrature {

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double refine(F&& f, double a, double fa, double b, double fb, double fm, double whole,
              double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return refine(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           refine(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = detail::simpson(a, fa, b, fb, fm);
    return detail::refine(std::forward<F>(f), a, fa, b, fb, fm, whole, tol, max_depth);
}

} // namespace qgem::quadrature
