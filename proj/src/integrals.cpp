#include "siq/integrals.hpp"

#include <cmath>
#include <string>

namespace siq::integrals {

namespace {

using numerics::pi;

void require_ordered(const IntegralLimits& lim, const char* name) {
    if (!(lim.a <= lim.b))
        throw DomainViolation(std::string(name) + ": require a <= b, got a=" +
                              std::to_string(lim.a) + " b=" + std::to_string(lim.b));
}

}  // namespace

double i1(IntegralLimits lim) {
    require_ordered(lim, "i1");
    const double d = lim.b - lim.a;
    return pi * d * d / 8.0;
}

double i2(IntegralLimits lim) {
    require_ordered(lim, "i2");
    if (!(lim.a > 0)) throw DomainViolation("i2: require 0 < a");
    if (lim.a == lim.b) return 0.0;
    return 0.5 * pi * (lim.a + lim.b) - pi * std::sqrt(lim.a * lim.b);
}

double i3(IntegralLimits lim) {
    require_ordered(lim, "i3");
    if (lim.a == lim.b) return 0.0;
    const double inner =
        std::sqrt(1.0 + lim.a * lim.a) * std::sqrt(1.0 + lim.b * lim.b) - lim.a * lim.b + 1.0;
    return pi / std::sqrt(2.0) * std::sqrt(inner) - pi;
}

double i4(IntegralLimits lim) {
    require_ordered(lim, "i4");
    if (!(lim.a > -1.0 && lim.b < 1.0)) throw DomainViolation("i4: require -1 < a <= b < 1");
    if (lim.a == lim.b) return 0.0;
    return 0.5 * pi *
           (2.0 - std::sqrt((1.0 - lim.a) * (1.0 - lim.b)) -
            std::sqrt((1.0 + lim.a) * (1.0 + lim.b)));
}

double i5(IntegralLimits lim) {
    require_ordered(lim, "i5");
    if (!(lim.a > 1.0)) throw DomainViolation("i5: require 1 < a");
    if (lim.a == lim.b) return 0.0;
    return 0.5 * pi *
           (std::sqrt((lim.a + 1.0) * (lim.b + 1.0)) -
            std::sqrt((lim.a - 1.0) * (lim.b - 1.0)) - 2.0);
}

double closed_form(Kind kind, IntegralLimits lim) {
    switch (kind) {
        case Kind::i1: return i1(lim);
        case Kind::i2: return i2(lim);
        case Kind::i3: return i3(lim);
        case Kind::i4: return i4(lim);
        case Kind::i5: return i5(lim);
    }
    throw Error("closed_form: unknown kind");
}

double quadrature_reference(Kind kind, IntegralLimits lim, numerics::QuadratureSpec spec) {
    // validate exactly like the closed form, then integrate the definition
    closed_form(kind, lim);
    if (lim.a == lim.b) return 0.0;
    auto weight = [kind](double y) -> double {
        switch (kind) {
            case Kind::i1: return 1.0;
            case Kind::i2: return 1.0 / y;
            case Kind::i3: return 1.0 / (y * y + 1.0);
            case Kind::i4: return 1.0 / (1.0 - y * y);
            case Kind::i5: return 1.0 / (y * y - 1.0);
        }
        return 0.0;
    };
    const double a = lim.a, b = lim.b;
    auto integrand = [&](double y) {
        const double r = (y - a) * (b - y);
        return weight(y) * std::sqrt(std::max(r, 0.0));
    };
    return numerics::integrate_turning(integrand, a, b, spec);
}

}  // namespace siq::integrals
