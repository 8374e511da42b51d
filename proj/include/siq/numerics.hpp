#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "siq/errors.hpp"

namespace siq::numerics {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr int max_root_iterations = 200;

/// Sign-change bracket for root finding: lo < hi, f_lo and f_hi of opposite sign.
struct Bracket {
    double lo = 0;
    double hi = 0;
    double f_lo = 0;
    double f_hi = 0;

    bool valid() const {
        return lo < hi && std::isfinite(f_lo) && std::isfinite(f_hi) &&
               ((f_lo < 0 && f_hi > 0) || (f_lo > 0 && f_hi < 0));
    }
};

template <class F>
Bracket make_bracket(F&& f, double lo, double hi) {
    Bracket br{lo, hi, f(lo), f(hi)};
    if (!br.valid())
        throw NoSignChange("make_bracket: f does not change sign on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    return br;
}

struct RootResult {
    double x = 0;
    int iterations = 0;
    double residual = 0;
};

/// Brent's method: bisection with secant / inverse-quadratic acceleration.
/// Stops when the bracket shrinks below rel_tol * max(1, |x|).
template <class F>
RootResult find_root_diag(F&& f, const Bracket& bracket, double rel_tol) {
    if (!bracket.valid())
        throw NoSignChange("find_root: invalid bracket [" + std::to_string(bracket.lo) + ", " +
                           std::to_string(bracket.hi) + "]");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.f_lo, fb = bracket.f_hi;
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 1; it <= max_root_iterations; ++it) {
        if ((fb > 0 && fc > 0) || (fb < 0 && fc < 0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * rel_tol * std::max(1.0, std::abs(b));
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return {b, it, fb};
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double q1 = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q1 * (q1 - r) - (b - a) * (r - 1.0));
                q = (q1 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw MaxIterations("find_root: no convergence in " + std::to_string(max_root_iterations) +
                        " iterations");
}

template <class F>
double find_root(F&& f, const Bracket& bracket, double rel_tol = 1e-10) {
    return find_root_diag(std::forward<F>(f), bracket, rel_tol).x;
}

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 60;

    void validate() const {
        if (!(rel_tol > 0) || !(abs_tol > 0) || max_subdivisions < 1)
            throw Error("QuadratureSpec: tolerances must be positive, max_subdivisions >= 1");
    }
};

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double m, double b, double fa, double fm, double fb,
                       double whole, double eps, int depth) {
    constexpr double mach = std::numeric_limits<double>::epsilon();
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double s2 = left + right;
    const double err = s2 - whole;
    // roundoff floor: splitting [a,b] at the rounded midpoint perturbs panel
    // widths by ~ulp(|x|), so err cannot drop below ~mach |x| max|f|
    const double fmax = std::max({std::abs(fa), std::abs(flm), std::abs(fm), std::abs(frm),
                                  std::abs(fb)});
    const double floor_err = 32.0 * mach * (std::abs(a) + std::abs(b)) * fmax;
    if (std::abs(err) <= 15.0 * eps || std::abs(err) <= floor_err ||
        std::abs(err) <= 32.0 * mach * std::abs(s2) ||
        b - a <= 8.0 * mach * (std::abs(a) + std::abs(b)))
        return s2 + err / 15.0;
    if (depth <= 0) throw NonConvergence("integrate: subdivision limit reached");
    return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a smooth integrand on [a, b].
template <class F>
double integrate_adaptive(F&& f, double a, double b, QuadratureSpec spec = {}) {
    spec.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    constexpr int n0 = 16;  // initial panels; adaptivity refines from here
    const double h = (b - a) / n0;
    double fv[2 * n0 + 1];
    double scale = 0.0;
    for (int i = 0; i <= 2 * n0; ++i) {
        fv[i] = f(a + 0.5 * h * i);
        scale += std::abs(fv[i]) * 0.5 * h;
    }
    const double eps = std::max(spec.abs_tol, spec.rel_tol * scale) / n0;
    double total = 0.0;
    for (int i = 0; i < n0; ++i) {
        const double xa = a + h * i, xb = xa + h;
        const double fa = fv[2 * i], fm = fv[2 * i + 1], fb = fv[2 * i + 2];
        const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
        total += detail::simpson_recurse(f, xa, 0.5 * (xa + xb), xb, fa, fm, fb, whole, eps,
                                         spec.max_subdivisions);
    }
    return sign * total;
}

/// Quadrature for integrands vanishing like a square root at both endpoints
/// (turning-point integrals).  Applies x = a + (b-a) sin^2(theta), which maps the
/// sqrt endpoint behaviour onto a smooth integrand in theta.
template <class F>
double integrate_turning(F&& f, double a, double b, QuadratureSpec spec = {}) {
    spec.validate();
    if (!(a <= b)) throw Error("integrate_turning: require a <= b");
    if (a == b) return 0.0;
    const double width = b - a;
    auto g = [&](double theta) {
        const double s = std::sin(theta);
        const double v = f(a + width * s * s);
        if (v < -spec.abs_tol)
            throw NegativeIntegrand("integrate_turning: integrand below -abs_tol");
        return v * width * std::sin(2.0 * theta);
    };
    return integrate_adaptive(g, 0.0, 0.5 * pi, spec);
}

/// Central difference (f(x+h) - f(x-h)) / 2h.  Step choice is the caller's problem.
template <class F>
double derivative(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// k smallest eigenvalues of the symmetric tridiagonal matrix, ascending.
std::vector<double> tridiag_eigen_lowest(const std::vector<double>& diag,
                                         const std::vector<double>& offdiag, int k);

}  // namespace siq::numerics
