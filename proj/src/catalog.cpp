#include "siq/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "siq/numerics.hpp"

namespace siq::catalog {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double sq(double x) { return x * x; }

using Fn = std::function<double(double)>;

struct FamilyDef {
    FamilyInfo info;
    std::function<void(const ParamSet&)> validate;
    std::function<std::map<std::string, double>(const ParamSet&)> step_map;
    std::function<std::pair<double, double>(const ParamSet&)> domain;
    std::function<Fn(const ParamSet&)> bind_w;        // extracts parameters once
    std::function<Fn(const ParamSet&)> bind_w_prime;
    std::function<double(const ParamSet&)> r_value;   // R(a0) at the given parameters
    std::function<std::pair<double, double>(const ParamSet&)> w_limits;
    bool has_closed_min = false;
    std::function<std::pair<double, double>(const ParamSet&)> closed_min;  // (x_at_min, v_minus_min)
};

void require(bool cond, const std::string& family, const std::string& text) {
    if (!cond) throw ParamViolation(family + ": constraint violated: " + text);
}

std::vector<FamilyDef> build_registry() {
    std::vector<FamilyDef> fams;

    {  // (omega/2) x - c on the full line; parameters do not translate
        FamilyDef f;
        f.info = {FamilyId::harmonic_oscillator,
                  "harmonic_oscillator",
                  "shifted harmonic oscillator (1D)",
                  "(omega/2)*x - c",
                  "(-inf, inf)",
                  {{"omega", 2.0}, {"c", 0.0}},
                  {"omega > 0"},
                  "none"};
        f.validate = [](const ParamSet& p) {
            require(p.get("omega") > 0, "harmonic_oscillator", "omega > 0");
        };
        f.step_map = [](const ParamSet&) { return std::map<std::string, double>{}; };
        f.domain = [](const ParamSet&) { return std::pair{-inf, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double om = p.get("omega"), c = p.get("c");
            return Fn([=](double x) { return 0.5 * om * x - c; });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double om = p.get("omega");
            return Fn([=](double) { return 0.5 * om; });
        };
        f.r_value = [](const ParamSet& p) { return p.get("omega"); };
        f.w_limits = [](const ParamSet&) { return std::pair{-inf, inf}; };
        f.has_closed_min = true;
        f.closed_min = [](const ParamSet& p) {
            return std::pair{2.0 * p.get("c") / p.get("omega"), -0.5 * p.get("omega")};
        };
        fams.push_back(std::move(f));
    }

    {  // (omega/2) r - (l+1)/r on (0, inf); l -> l+1
        FamilyDef f;
        f.info = {FamilyId::radial_oscillator_3d,
                  "radial_oscillator_3d",
                  "radial harmonic oscillator (3D)",
                  "(omega/2)*r - (l+1)/r",
                  "(0, inf)",
                  {{"omega", 2.0}, {"l", 1.0}},
                  {"omega > 0", "l > 0"},
                  "l -> l + 1"};
        f.validate = [](const ParamSet& p) {
            require(p.get("omega") > 0, "radial_oscillator_3d", "omega > 0");
            require(p.get("l") > 0, "radial_oscillator_3d", "l > 0");
        };
        f.step_map = [](const ParamSet&) { return std::map<std::string, double>{{"l", 1.0}}; };
        f.domain = [](const ParamSet&) { return std::pair{0.0, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double om = p.get("omega"), l1 = p.get("l") + 1.0;
            return Fn([=](double r) { return 0.5 * om * r - l1 / r; });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double om = p.get("omega"), l1 = p.get("l") + 1.0;
            return Fn([=](double r) { return 0.5 * om + l1 / (r * r); });
        };
        f.r_value = [](const ParamSet& p) { return 2.0 * p.get("omega"); };
        f.w_limits = [](const ParamSet&) { return std::pair{-inf, inf}; };
        fams.push_back(std::move(f));
    }

    {  // e2/(2(l+1)) - (l+1)/r on (0, inf); l -> l+1
        FamilyDef f;
        f.info = {FamilyId::coulomb,
                  "coulomb",
                  "Coulomb (radial)",
                  "e2/(2*(l+1)) - (l+1)/r",
                  "(0, inf)",
                  {{"e2", 2.0}, {"l", 1.0}},
                  {"e2 > 0", "l > 0"},
                  "l -> l + 1"};
        f.validate = [](const ParamSet& p) {
            require(p.get("e2") > 0, "coulomb", "e2 > 0");
            require(p.get("l") > 0, "coulomb", "l > 0");
        };
        f.step_map = [](const ParamSet&) { return std::map<std::string, double>{{"l", 1.0}}; };
        f.domain = [](const ParamSet&) { return std::pair{0.0, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double q = p.get("e2") / (2.0 * (p.get("l") + 1.0)), l1 = p.get("l") + 1.0;
            return Fn([=](double r) { return q - l1 / r; });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double l1 = p.get("l") + 1.0;
            return Fn([=](double r) { return l1 / (r * r); });
        };
        f.r_value = [](const ParamSet& p) {
            const double e2 = p.get("e2"), l = p.get("l");
            return 0.25 * e2 * e2 * (1.0 / sq(l + 1.0) - 1.0 / sq(l + 2.0));
        };
        f.w_limits = [](const ParamSet& p) {
            return std::pair{-inf, p.get("e2") / (2.0 * (p.get("l") + 1.0))};
        };
        fams.push_back(std::move(f));
    }

    {  // A - B exp(-alpha x) on the full line; A -> A - alpha
        FamilyDef f;
        f.info = {FamilyId::morse,
                  "morse",
                  "Morse",
                  "A - B*exp(-alpha*x)",
                  "(-inf, inf)",
                  {{"A", 10.0}, {"B", 1.0}, {"alpha", 1.0}},
                  {"A > 0", "B > 0", "alpha > 0"},
                  "A -> A - alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("A") > 0, "morse", "A > 0");
            require(p.get("B") > 0, "morse", "B > 0");
            require(p.get("alpha") > 0, "morse", "alpha > 0");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", -p.get("alpha")}};
        };
        f.domain = [](const ParamSet&) { return std::pair{-inf, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double x) { return a - b * std::exp(-al * x); });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double b = p.get("B"), al = p.get("alpha");
            return Fn([=](double x) { return al * b * std::exp(-al * x); });
        };
        f.r_value = [](const ParamSet& p) {
            return sq(p.get("A")) - sq(p.get("A") - p.get("alpha"));
        };
        f.w_limits = [](const ParamSet& p) { return std::pair{-inf, p.get("A")}; };
        fams.push_back(std::move(f));
    }

    {  // A tanh(ax) + B sech(ax) on the full line; A -> A - alpha
        FamilyDef f;
        f.info = {FamilyId::scarf_2,
                  "scarf_2",
                  "Scarf II (hyperbolic)",
                  "A*tanh(alpha*x) + B*sech(alpha*x)",
                  "(-inf, inf)",
                  {{"A", 4.0}, {"B", 1.0}, {"alpha", 1.0}},
                  {"A > 0", "alpha > 0"},
                  "A -> A - alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("A") > 0, "scarf_2", "A > 0");
            require(p.get("alpha") > 0, "scarf_2", "alpha > 0");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", -p.get("alpha")}};
        };
        f.domain = [](const ParamSet&) { return std::pair{-inf, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double x) {
                const double u = al * x;
                return a * std::tanh(u) + b / std::cosh(u);
            });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double x) {
                const double u = al * x;
                const double s = 1.0 / std::cosh(u);
                return al * s * (a * s - b * std::tanh(u));
            });
        };
        f.r_value = [](const ParamSet& p) {
            return sq(p.get("A")) - sq(p.get("A") - p.get("alpha"));
        };
        f.w_limits = [](const ParamSet& p) { return std::pair{-p.get("A"), p.get("A")}; };
        fams.push_back(std::move(f));
    }

    {  // A tanh(ax) + B/A on the full line; A -> A - alpha
        FamilyDef f;
        f.info = {FamilyId::rosen_morse_2,
                  "rosen_morse_2",
                  "Rosen-Morse II (hyperbolic)",
                  "A*tanh(alpha*x) + B/A",
                  "(-inf, inf)",
                  {{"A", 4.0}, {"B", 1.0}, {"alpha", 1.0}},
                  {"A > 0", "alpha > 0", "0 < B < A^2"},
                  "A -> A - alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("A") > 0, "rosen_morse_2", "A > 0");
            require(p.get("alpha") > 0, "rosen_morse_2", "alpha > 0");
            require(p.get("B") > 0 && p.get("B") < sq(p.get("A")), "rosen_morse_2",
                    "0 < B < A^2");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", -p.get("alpha")}};
        };
        f.domain = [](const ParamSet&) { return std::pair{-inf, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), boa = p.get("B") / p.get("A"), al = p.get("alpha");
            return Fn([=](double x) { return a * std::tanh(al * x) + boa; });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double a = p.get("A"), al = p.get("alpha");
            return Fn([=](double x) { return a * al * sq(1.0 / std::cosh(al * x)); });
        };
        f.r_value = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), a1 = a - p.get("alpha");
            return sq(a) - sq(a1) + sq(b) / sq(a) - sq(b) / sq(a1);
        };
        f.w_limits = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B");
            return std::pair{b / a - a, b / a + a};
        };
        fams.push_back(std::move(f));
    }

    {  // -A coth(ar) + B/A on (0, inf); A -> A + alpha
        FamilyDef f;
        f.info = {FamilyId::eckart,
                  "eckart",
                  "Eckart",
                  "-A*coth(alpha*r) + B/A",
                  "(0, inf)",
                  {{"A", 5.0}, {"B", 72.0}, {"alpha", 1.0}},
                  {"alpha > 0", "A > alpha", "B > A^2"},
                  "A -> A + alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("alpha") > 0, "eckart", "alpha > 0");
            require(p.get("A") > p.get("alpha"), "eckart", "A > alpha");
            require(p.get("B") > sq(p.get("A")), "eckart", "B > A^2");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", p.get("alpha")}};
        };
        f.domain = [](const ParamSet&) { return std::pair{0.0, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), boa = p.get("B") / p.get("A"), al = p.get("alpha");
            return Fn([=](double r) { return -a / std::tanh(al * r) + boa; });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double a = p.get("A"), al = p.get("alpha");
            return Fn([=](double r) { return a * al * sq(1.0 / std::sinh(al * r)); });
        };
        f.r_value = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), a1 = a + p.get("alpha");
            return sq(a) + sq(b) / sq(a) - sq(a1) - sq(b) / sq(a1);
        };
        f.w_limits = [](const ParamSet& p) {
            return std::pair{-inf, p.get("B") / p.get("A") - p.get("A")};
        };
        fams.push_back(std::move(f));
    }

    {  // A tan(ax) - B sec(ax) on (-pi/2a, pi/2a); A -> A + alpha
        FamilyDef f;
        f.info = {FamilyId::scarf_1,
                  "scarf_1",
                  "Scarf I (trigonometric)",
                  "A*tan(alpha*x) - B*sec(alpha*x)",
                  "(-pi/(2*alpha), pi/(2*alpha))",
                  {{"A", 3.0}, {"B", 1.0}, {"alpha", 1.0}},
                  {"alpha > 0", "B > 0", "A - B > alpha"},
                  "A -> A + alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("alpha") > 0, "scarf_1", "alpha > 0");
            require(p.get("B") > 0, "scarf_1", "B > 0");
            require(p.get("A") - p.get("B") > p.get("alpha"), "scarf_1", "A - B > alpha");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", p.get("alpha")}};
        };
        f.domain = [](const ParamSet& p) {
            const double half = 0.5 * numerics::pi / p.get("alpha");
            return std::pair{-half, half};
        };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double x) {
                const double u = al * x;
                return (a * std::sin(u) - b) / std::cos(u);
            });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double x) {
                const double u = al * x;
                const double s = 1.0 / std::cos(u);
                return al * s * (a * s - b * std::tan(u));
            });
        };
        f.r_value = [](const ParamSet& p) {
            return sq(p.get("A") + p.get("alpha")) - sq(p.get("A"));
        };
        f.w_limits = [](const ParamSet&) { return std::pair{-inf, inf}; };
        fams.push_back(std::move(f));
    }

    {  // -A cot(ax) - B/A on (0, pi/a); A -> A + alpha
        FamilyDef f;
        f.info = {FamilyId::rosen_morse_1,
                  "rosen_morse_1",
                  "Rosen-Morse I (trigonometric)",
                  "-A*cot(alpha*x) - B/A",
                  "(0, pi/alpha)",
                  {{"A", 2.0}, {"B", 1.0}, {"alpha", 1.0}},
                  {"alpha > 0", "A > alpha", "B > 0"},
                  "A -> A + alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("alpha") > 0, "rosen_morse_1", "alpha > 0");
            require(p.get("A") > p.get("alpha"), "rosen_morse_1", "A > alpha");
            require(p.get("B") > 0, "rosen_morse_1", "B > 0");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", p.get("alpha")}};
        };
        f.domain = [](const ParamSet& p) {
            return std::pair{0.0, numerics::pi / p.get("alpha")};
        };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), boa = p.get("B") / p.get("A"), al = p.get("alpha");
            return Fn([=](double x) {
                const double u = al * x;
                return -a * std::cos(u) / std::sin(u) - boa;
            });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double a = p.get("A"), al = p.get("alpha");
            return Fn([=](double x) {
                const double s = std::sin(al * x);
                return a * al / (s * s);
            });
        };
        f.r_value = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), a1 = a + p.get("alpha");
            return sq(a1) - sq(a) + sq(b) / sq(a) - sq(b) / sq(a1);
        };
        f.w_limits = [](const ParamSet&) { return std::pair{-inf, inf}; };
        fams.push_back(std::move(f));
    }

    {  // A coth(ar) - B csch(ar) on (0, inf); A -> A - alpha
        FamilyDef f;
        f.info = {FamilyId::poschl_teller,
                  "poschl_teller",
                  "generalized Poschl-Teller",
                  "A*coth(alpha*r) - B*csch(alpha*r)",
                  "(0, inf)",
                  {{"A", 3.0}, {"B", 5.0}, {"alpha", 1.0}},
                  {"alpha > 0", "A > 0", "B > A + alpha"},
                  "A -> A - alpha"};
        f.validate = [](const ParamSet& p) {
            require(p.get("alpha") > 0, "poschl_teller", "alpha > 0");
            require(p.get("A") > 0, "poschl_teller", "A > 0");
            require(p.get("B") > p.get("A") + p.get("alpha"), "poschl_teller", "B > A + alpha");
        };
        f.step_map = [](const ParamSet& p) {
            return std::map<std::string, double>{{"A", -p.get("alpha")}};
        };
        f.domain = [](const ParamSet&) { return std::pair{0.0, inf}; };
        f.bind_w = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double r) {
                const double v = al * r;
                return (a * std::cosh(v) - b) / std::sinh(v);
            });
        };
        f.bind_w_prime = [](const ParamSet& p) {
            const double a = p.get("A"), b = p.get("B"), al = p.get("alpha");
            return Fn([=](double r) {
                const double v = al * r;
                const double cs = 1.0 / std::sinh(v);
                return al * cs * (b / std::tanh(v) - a * cs);
            });
        };
        f.r_value = [](const ParamSet& p) {
            return sq(p.get("A")) - sq(p.get("A") - p.get("alpha"));
        };
        f.w_limits = [](const ParamSet& p) { return std::pair{-inf, p.get("A")}; };
        fams.push_back(std::move(f));
    }

    return fams;
}

const std::vector<FamilyDef>& registry() {
    static const std::vector<FamilyDef> fams = build_registry();
    return fams;
}

const FamilyDef& def_of(FamilyId id) { return registry()[static_cast<std::size_t>(id)]; }

// maps t in (0,1) onto the open domain, with infinite sides stretched by `scale`
double domain_point_scaled(double lo, double hi, double t, double scale) {
    if (std::isinf(lo) && std::isinf(hi)) return scale * std::tan(numerics::pi * (t - 0.5));
    if (std::isinf(hi)) return lo + scale * t / (1.0 - t);
    if (std::isinf(lo)) return hi - scale * (1.0 - t) / t;
    return lo + t * (hi - lo);
}

double locate_w_zero(const Fn& w, double lo, double hi, const std::string& name) {
    const int n = 4096;
    for (double scale : {1.0, 64.0, 4096.0, 262144.0, 16777216.0}) {
        double prev_x = 0, prev_f = std::numeric_limits<double>::quiet_NaN();
        for (int i = 1; i <= n; ++i) {
            const double x = domain_point_scaled(lo, hi, static_cast<double>(i) / (n + 1), scale);
            const double fx = w(x);
            if (std::isnan(fx)) continue;
            if (fx == 0.0) return x;
            if (!std::isnan(prev_f) && prev_f < 0.0 && fx > 0.0) {
                // shrink infinite endpoint values before handing over to Brent
                double a = prev_x, b = x, fa = prev_f, fb = fx;
                for (int j = 0; j < 200 && (!std::isfinite(fa) || !std::isfinite(fb)); ++j) {
                    const double m = 0.5 * (a + b), fm = w(m);
                    if ((fm < 0) == (fa < 0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                        fb = fm;
                    }
                }
                return numerics::find_root(w, numerics::Bracket{a, b, fa, fb}, 1e-13);
            }
            prev_x = x;
            prev_f = fx;
        }
        if (!std::isinf(lo) && !std::isinf(hi)) break;  // bounded domains need no rescale
    }
    throw ParamViolation(name + ": superpotential has no sign change on the domain "
                                "(supersymmetry not unbroken at these parameters)");
}

double toward(double from, double limit, double step) {
    if (std::isinf(limit)) return limit > 0 ? from + step : from - step;
    return from + (limit - from) * std::min(0.5, step / (std::abs(limit - from) + step));
}

struct MinResult {
    double x;
    double f;
};

// golden-section on a bracketed minimum; tracks the best point seen
MinResult golden_min(const Fn& f, double a, double b, double rel_tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    MinResult best = f1 < f2 ? MinResult{x1, f1} : MinResult{x2, f2};
    for (int it = 0; it < 400; ++it) {
        if (b - a <= rel_tol * std::max(1.0, std::abs(a) + std::abs(b))) break;
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
        const MinResult cand = f1 < f2 ? MinResult{x1, f1} : MinResult{x2, f2};
        if (cand.f < best.f) best = cand;
    }
    return best;
}

// walk downhill from x0 until the minimum of f sits strictly inside [a, b]
std::pair<double, double> bracket_min(const Fn& f, double x0, double lo, double hi) {
    double h = 0.1 * std::max(1.0, std::abs(x0));
    if (!std::isinf(lo)) h = std::min(h, 0.25 * (x0 - lo));
    if (!std::isinf(hi)) h = std::min(h, 0.25 * (hi - x0));
    double m = x0, fm = f(m);
    for (int it = 0; it < 400; ++it) {
        const double xl = toward(m, lo, h), xr = toward(m, hi, h);
        const double fl = f(xl), fr = f(xr);
        if (fl < fm && fl <= fr) {
            m = xl;
            fm = fl;
            h *= 1.7;
            continue;
        }
        if (fr < fm) {
            m = xr;
            fm = fr;
            h *= 1.7;
            continue;
        }
        return {xl, xr};
    }
    throw NonConvergence("bracket_min: could not bracket the minimum of V-");
}

int scan_max_level(const ParamSet& params, const FamilyDef& def, double continuum_minus) {
    // margin only guards floating-point equality for marginally-bound levels
    const double margin =
        std::isinf(continuum_minus) ? 0.0 : 1e-9 * std::max(1.0, continuum_minus);
    double e = 0.0;
    const int cap = 10000;
    for (int k = 0; k < cap; ++k) {
        const ParamSet pk = params.at_level(k);
        double r;
        try {
            def.validate(pk);
            r = def.r_value(pk);
        } catch (const ParamViolation&) {
            return k + 1;  // levels 0..k exist
        }
        if (!(r > 0)) return k + 1;
        e += r;
        if (!(e < continuum_minus - margin)) return k + 1;
    }
    return unbounded_levels;
}

}  // namespace

// --- ParamSet ---

double ParamSet::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw ParamViolation("unknown parameter: " + name);
    return it->second;
}

ParamSet ParamSet::at_level(int k) const {
    ParamSet out = *this;
    for (const auto& [name, step] : translation_step) out.values[name] += k * step;
    return out;
}

// --- registry access ---

std::vector<FamilyId> list_families() {
    std::vector<FamilyId> ids;
    ids.reserve(registry().size());
    for (const auto& f : registry()) ids.push_back(f.info.id);
    return ids;
}

const FamilyInfo& family_info(FamilyId id) { return def_of(id).info; }

const FamilyInfo* find_family(const std::string& name) {
    for (const auto& f : registry())
        if (f.info.name == name) return &f.info;
    return nullptr;
}

std::vector<std::string> family_names() {
    std::vector<std::string> names;
    for (const auto& f : registry()) names.push_back(f.info.name);
    return names;
}

// --- spec construction ---

PotentialSpec make_spec(FamilyId id) { return make_spec(id, {}); }

PotentialSpec make_spec(FamilyId id, const std::map<std::string, double>& overrides) {
    const FamilyDef& def = def_of(id);

    ParamSet params;
    for (const auto& [name, value] : def.info.defaults) params.values[name] = value;
    for (const auto& [name, value] : overrides) {
        if (params.values.find(name) == params.values.end()) {
            std::string valid;
            for (const auto& [n, v] : def.info.defaults) valid += (valid.empty() ? "" : ", ") + n;
            throw ParamViolation(def.info.name + ": unknown parameter '" + name +
                                 "' (valid: " + valid + ")");
        }
        params.values[name] = value;
    }
    def.validate(params);
    params.translation_step = def.step_map(params);

    PotentialSpec spec;
    spec.family = id;
    spec.family_name = def.info.name;
    spec.params = params;
    std::tie(spec.x_lo, spec.x_hi) = def.domain(params);
    spec.w = def.bind_w(params);
    spec.w_prime = def.bind_w_prime(params);
    std::tie(spec.w_lim_left, spec.w_lim_right) = def.w_limits(params);

    spec.w_zero = locate_w_zero(spec.w, spec.x_lo, spec.x_hi, def.info.name);

    if (def.has_closed_min) {
        std::tie(spec.x_at_min, spec.v_minus_min) = def.closed_min(params);
    } else {
        const Fn& w = spec.w;
        const Fn& wp = spec.w_prime;
        Fn vm = [&w, &wp](double x) { return w(x) * w(x) - wp(x); };
        const auto [a, b] = bracket_min(vm, spec.w_zero, spec.x_lo, spec.x_hi);
        const MinResult m = golden_min(vm, a, b, 1e-12);
        spec.x_at_min = m.x;
        spec.v_minus_min = m.f;
    }

    const double left_term = std::isinf(spec.x_lo) ? sq(spec.w_lim_left) : inf;
    const double right_term = std::isinf(spec.x_hi) ? sq(spec.w_lim_right) : inf;
    spec.continuum_minus = std::min(left_term, right_term);

    spec.max_level = scan_max_level(params, def, spec.continuum_minus);
    return spec;
}

// --- operations ---

namespace {

void check_domain(const PotentialSpec& spec, double x, const char* op) {
    if (!spec.in_domain(x))
        throw OutOfDomain(std::string(op) + ": x=" + std::to_string(x) +
                          " outside the domain of " + spec.family_name);
}

}  // namespace

double v_minus(const PotentialSpec& spec, double x) {
    check_domain(spec, x, "v_minus");
    const double w = spec.w(x);
    return w * w - spec.w_prime(x);
}

double v_plus(const PotentialSpec& spec, double x) {
    check_domain(spec, x, "v_plus");
    const double w = spec.w(x);
    return w * w + spec.w_prime(x);
}

double potential(const PotentialSpec& spec, double x) {
    check_domain(spec, x, "potential");
    const double w = spec.w(x);
    return w * w - spec.w_prime(x) - spec.v_minus_min;
}

double remainder(const PotentialSpec& spec, int k) {
    if (k < 0) throw Error("remainder: k must be >= 0");
    const FamilyDef& def = def_of(spec.family);
    const ParamSet pk = spec.params.at_level(k);
    try {
        def.validate(pk);
    } catch (const ParamViolation& e) {
        throw ParamViolation("remainder: parameters after " + std::to_string(k) +
                             " translations left the bound-state regime (" + e.what() + ")");
    }
    return def.r_value(pk);
}

std::vector<SpectrumEntry> exact_spectrum(const PotentialSpec& spec, int n_max) {
    if (n_max < 0) throw Error("exact_spectrum: n_max must be >= 0");
    if (n_max >= spec.max_level)
        throw ParamViolation("exact_spectrum: level " + std::to_string(n_max) + " exceeds the " +
                             std::to_string(spec.max_level) + " bound levels of " +
                             spec.family_name);
    std::vector<SpectrumEntry> entries;
    entries.reserve(static_cast<std::size_t>(n_max) + 1);
    double e = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        entries.push_back({n, e, e - spec.v_minus_min});
        if (n < n_max) e += remainder(spec, n);
    }
    return entries;
}

double ground_state_wavefunction(const PotentialSpec& spec, double x) {
    check_domain(spec, x, "ground_state_wavefunction");
    numerics::QuadratureSpec quad;
    quad.rel_tol = 1e-13;
    quad.abs_tol = 1e-14;
    const double integral = numerics::integrate_adaptive(spec.w, spec.x_at_min, x, quad);
    if (std::abs(integral) > 700.0)
        throw Overflow("ground_state_wavefunction: exponent magnitude " +
                       std::to_string(std::abs(integral)) + " > 700");
    return std::exp(-integral);
}

std::vector<double> sample_grid(const PotentialSpec& spec, int n) {
    if (n < 2) throw Error("sample_grid: need n >= 2");
    const int top = std::min(3, spec.max_level - 1);
    const double e_top = exact_spectrum(spec, top).back().e_shifted;
    const double stop_v = std::min(1e4, 30.0 * std::max(1.0, e_top));
    const double extent = 60.0 * std::max(1.0, std::abs(spec.x_at_min));
    // stop early on sides where V saturates toward a finite continuum
    const double sat_v = 0.98 * (spec.continuum_minus - spec.v_minus_min);

    auto edge_toward = [&](double limit) {
        double x = spec.x_at_min;
        double step = 0.05 * std::max(1.0, std::abs(spec.x_at_min));
        double prev = x;
        for (int it = 0; it < 500; ++it) {
            double next = toward(x, limit, step);
            if (std::abs(next - spec.x_at_min) > extent) return next;
            const double v = potential(spec, next);
            if (v >= sat_v && std::abs(spec.w_prime(next)) < 1e-3) return next;
            if (v >= stop_v) {
                // back off so samples stay clear of extreme wall values
                for (int j = 0; j < 80 && potential(spec, next) > 3.0 * stop_v; ++j)
                    next = 0.5 * (prev + next);
                return next;
            }
            prev = next;
            x = next;
            step *= 1.25;
        }
        return x;
    };

    const double left = edge_toward(spec.x_lo);
    const double right = edge_toward(spec.x_hi);
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] = left + (right - left) * i / (n - 1.0);
    return grid;
}

std::vector<double> wavefunction_sample_points(const PotentialSpec& spec, int count) {
    if (count < 2) throw Error("wavefunction_sample_points: need count >= 2");
    const double w_cap = std::max(6.0, 1.5 * std::abs(spec.w(spec.x_at_min)));
    numerics::QuadratureSpec quad;
    quad.rel_tol = 1e-9;
    std::vector<double> usable;
    for (double x : sample_grid(spec, 2001)) {
        if (std::abs(spec.w(x)) > w_cap) continue;
        const double logpsi = -numerics::integrate_adaptive(spec.w, spec.x_at_min, x, quad);
        if (std::abs(logpsi) > 25.0) continue;
        usable.push_back(x);
    }
    if (static_cast<int>(usable.size()) < count)
        throw NonConvergence(spec.family_name + ": only " + std::to_string(usable.size()) +
                             " usable wavefunction sample points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(usable[(usable.size() - 1) * static_cast<std::size_t>(i) /
                             static_cast<std::size_t>(count - 1)]);
    return out;
}

}  // namespace siq::catalog
