#pragma once

#include "siq/numerics.hpp"

namespace siq::integrals {

/// Validated pair of integration limits a <= b (a == b is the degenerate case
/// and every integral returns 0 there).  Per-integral domain constraints are
/// checked by the integral itself.
struct IntegralLimits {
    double a = 0;
    double b = 0;
};

enum class Kind { i1, i2, i3, i4, i5 };

/// int_a^b dy sqrt((y-a)(b-y))                  = pi (b-a)^2 / 8
double i1(IntegralLimits lim);
/// int_a^b dy/y sqrt((y-a)(b-y)),   0 < a       = pi (a+b)/2 - pi sqrt(ab)
double i2(IntegralLimits lim);
/// int_a^b dy/(y^2+1) sqrt((y-a)(b-y))          = pi/sqrt2 [sqrt(1+a^2)sqrt(1+b^2) - ab + 1]^(1/2) - pi
double i3(IntegralLimits lim);
/// int_a^b dy/(1-y^2) sqrt((y-a)(b-y)), -1<a, b<1 = pi/2 [2 - sqrt((1-a)(1-b)) - sqrt((1+a)(1+b))]
double i4(IntegralLimits lim);
/// int_a^b dy/(y^2-1) sqrt((y-a)(b-y)), 1 < a   = pi/2 [sqrt((a+1)(b+1)) - sqrt((a-1)(b-1)) - 2]
double i5(IntegralLimits lim);

double closed_form(Kind kind, IntegralLimits lim);

/// Adaptive quadrature of the defining integral.  Shares no algebra with the
/// closed forms; used to cross-check them.
double quadrature_reference(Kind kind, IntegralLimits lim, numerics::QuadratureSpec spec = {});

}  // namespace siq::integrals
