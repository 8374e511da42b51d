#include "siq/quantizers.hpp"

#include <cmath>
#include <string>

namespace siq::quantizers {

namespace {

using numerics::pi;

constexpr double turning_rel_tol = 1e-12;

numerics::QuadratureSpec action_quad(double rel_tol) {
    numerics::QuadratureSpec q;
    q.rel_tol = rel_tol;
    q.abs_tol = 1e-14;
    return q;
}

// continuum threshold on the tabulated V(x) scale
double continuum_energy(const catalog::PotentialSpec& spec) {
    return spec.continuum_minus - spec.v_minus_min;
}

// march from `from` toward `limit` until f changes sign, then return a valid
// bracket with finite endpoint values
numerics::Bracket march_bracket(const std::function<double(double)>& f, double from,
                                double limit, const char* what) {
    double prev = from;
    double f_prev = f(from);
    double step = 0.05 * std::max(1.0, std::abs(from));
    const bool leftward = limit < from;
    for (int it = 0; it < 200; ++it) {
        double x;
        if (std::isinf(limit))
            x = leftward ? prev - step : prev + step;
        else
            x = prev + 0.5 * (limit - prev);
        if (std::abs(x) > 1e15) break;
        const double fx = f(x);
        if (!std::isnan(fx) && ((f_prev < 0 && fx > 0) || (f_prev > 0 && fx < 0))) {
            double a = leftward ? x : prev, b = leftward ? prev : x;
            double fa = leftward ? fx : f_prev, fb = leftward ? f_prev : fx;
            for (int j = 0; j < 200 && (!std::isfinite(fa) || !std::isfinite(fb)); ++j) {
                const double m = 0.5 * (a + b), fm = f(m);
                if ((fm < 0) == (fa < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                    fb = fm;
                }
            }
            return {a, b, fa, fb};
        }
        prev = x;
        f_prev = fx;
        step *= 1.6;
    }
    throw NoTurningPoint(std::string(what) + ": no crossing before the domain end");
}

double action_between(const catalog::PotentialSpec& spec, double energy, const TurningPair& tp,
                      const numerics::QuadratureSpec& quad) {
    const double neg_tol = 1e-9 * std::max(1.0, energy);
    auto integrand = [&](double x) {
        const double g = energy - catalog::potential(spec, x);
        if (g < -neg_tol)
            throw NegativeIntegrand("wkb_action: E - V < 0 inside the turning interval");
        return std::sqrt(std::max(g, 0.0));
    };
    return numerics::integrate_turning(integrand, tp.left, tp.right, quad);
}

struct SolveOut {
    double x = 0;
    int iterations = 0;
    double residual = 0;
};

// root of the increasing function f on (lo, hi_limit); f(lo) must be negative.
// For a finite limit the upper bracket approaches the threshold geometrically,
// so near-continuum turning points are only probed when the root really sits there.
SolveOut solve_increasing(const std::function<double(double)>& f, double lo, double hi_limit,
                          const char* what, double energy_rel_tol) {
    double f_lo = f(lo);
    if (f_lo == 0.0) return {lo, 0, 0.0};
    if (f_lo > 0)
        throw NonConvergence(std::string(what) + ": no sign change at the bottom of the range");
    const bool open_top = std::isinf(hi_limit);
    const double gap_min = 1e-10 * std::max(1.0, std::abs(hi_limit));
    int evals = 1;
    double hi = open_top ? std::max(1.0, 2.0 * lo) : lo + 0.5 * (hi_limit - lo);
    double f_hi = f(hi);
    ++evals;
    while (f_hi < 0) {
        lo = hi;
        f_lo = f_hi;
        if (open_top) {
            hi *= 4.0;
            if (hi > 1e15)
                throw Unbound(std::string(what) + ": no root found at any reachable energy");
        } else {
            const double gap = hi_limit - hi;
            if (gap <= gap_min)
                throw Unbound(std::string(what) + ": no root below the continuum threshold");
            hi = hi_limit - 0.25 * gap;
        }
        f_hi = f(hi);
        if (++evals > 100)
            throw NonConvergence(std::string(what) + ": bracket expansion failed");
    }
    if (f_hi == 0.0) return {hi, evals, 0.0};
    const numerics::RootResult root =
        numerics::find_root_diag(f, numerics::Bracket{lo, hi, f_lo, f_hi}, energy_rel_tol);
    return {root.x, root.iterations + evals, std::abs(root.residual)};
}

}  // namespace

TurningPair turning_points_potential(const catalog::PotentialSpec& spec, double energy) {
    if (!(energy > 0))
        throw NoTurningPoint("turning_points_potential: need E > 0 (V_min = 0)");
    if (energy >= continuum_energy(spec))
        throw NoTurningPoint("turning_points_potential: E >= continuum threshold, unbound");
    auto g = [&](double x) { return catalog::potential(spec, x) - energy; };
    const numerics::Bracket right =
        march_bracket(g, spec.x_at_min, spec.x_hi, "turning_points_potential (right)");
    const numerics::Bracket left =
        march_bracket(g, spec.x_at_min, spec.x_lo, "turning_points_potential (left)");
    TurningPair tp;
    tp.kind = TurningKind::potential;
    tp.left = numerics::find_root(g, left, turning_rel_tol);
    tp.right = numerics::find_root(g, right, turning_rel_tol);
    return tp;
}

TurningPair turning_points_super(const catalog::PotentialSpec& spec, double e_minus) {
    if (e_minus < 0) throw Error("turning_points_super: e_minus must be >= 0");
    TurningPair tp;
    tp.kind = TurningKind::superpotential;
    if (e_minus == 0.0) {
        tp.left = tp.right = spec.w_zero;
        return tp;
    }
    if (e_minus >= spec.continuum_minus)
        throw NoTurningPoint("turning_points_super: sqrt(E-) exceeds the superpotential limit");
    const double t = std::sqrt(e_minus);
    auto g_right = [&](double x) { return spec.w(x) - t; };
    auto g_left = [&](double x) { return spec.w(x) + t; };
    const numerics::Bracket right =
        march_bracket(g_right, spec.w_zero, spec.x_hi, "turning_points_super (right)");
    const numerics::Bracket left =
        march_bracket(g_left, spec.w_zero, spec.x_lo, "turning_points_super (left)");
    tp.left = numerics::find_root(g_left, left, turning_rel_tol);
    tp.right = numerics::find_root(g_right, right, turning_rel_tol);
    return tp;
}

namespace {

double swkb_action_impl(const catalog::PotentialSpec& spec, double e_minus,
                        const numerics::QuadratureSpec& quad) {
    if (e_minus < 0) throw Error("swkb_action: e_minus must be >= 0");
    if (e_minus == 0.0) return 0.0;
    const TurningPair tp = turning_points_super(spec, e_minus);
    const double neg_tol = 1e-9 * std::max(1.0, e_minus);
    auto integrand = [&](double x) {
        const double w = spec.w(x);
        const double g = e_minus - w * w;
        if (g < -neg_tol)
            throw NegativeIntegrand("swkb_action: E- - W^2 < 0 inside the turning interval");
        return std::sqrt(std::max(g, 0.0));
    };
    return numerics::integrate_turning(integrand, tp.left, tp.right, quad);
}

}  // namespace

double wkb_action(const catalog::PotentialSpec& spec, double energy) {
    return action_between(spec, energy, turning_points_potential(spec, energy),
                          action_quad(1e-11));
}

double swkb_action(const catalog::PotentialSpec& spec, double e_minus) {
    return swkb_action_impl(spec, e_minus, action_quad(1e-11));
}

PhasePair ft_phases(const catalog::PotentialSpec& spec, double energy, const TurningPair& tp) {
    if (!(energy > 0)) throw ZeroEnergy("ft_phases: need E > 0");
    const double k = std::sqrt(energy);
    PhasePair ph;
    ph.phi_left = 2.0 * std::atan(-spec.w(tp.left) / k);
    ph.phi_right = 2.0 * std::atan(spec.w(tp.right) / k);
    ph.maslov = (ph.phi_left + ph.phi_right) / (0.5 * pi);
    return ph;
}

namespace {

void check_level(const catalog::PotentialSpec& spec, int n, const char* what) {
    if (n < 0) throw Error(std::string(what) + ": n must be >= 0");
    if (n >= spec.max_level)
        throw Unbound(std::string(what) + ": level " + std::to_string(n) + " of " +
                      spec.family_name + " is not bound (max_level = " +
                      std::to_string(spec.max_level) + ")");
}

}  // namespace

QuantizationResult solve_wkb(const catalog::PotentialSpec& spec, int n, SolverOptions opts) {
    check_level(spec, n, "solve_wkb");
    const double target = (n + 0.5) * pi;
    const numerics::QuadratureSpec quad = action_quad(opts.action_rel_tol);
    auto f = [&](double e) {
        return action_between(spec, e, turning_points_potential(spec, e), quad) - target;
    };
    const SolveOut s =
        solve_increasing(f, 1e-8, continuum_energy(spec), "solve_wkb", opts.energy_rel_tol);
    QuantizationResult res;
    res.n = n;
    res.energy = s.x;
    res.energy_minus = s.x + spec.v_minus_min;
    res.phases = {0.5 * pi, 0.5 * pi, 2.0};
    res.method = Method::wkb;
    res.iterations = s.iterations;
    res.residual = s.residual;
    return res;
}

QuantizationResult solve_swkb(const catalog::PotentialSpec& spec, int n, SolverOptions opts) {
    check_level(spec, n, "solve_swkb");
    QuantizationResult res;
    res.n = n;
    res.method = Method::swkb;
    res.phases = {0.0, 0.0, 0.0};  // the condition carries no half-integer offset
    if (n == 0) {
        res.energy_minus = 0.0;
        res.energy = -spec.v_minus_min;
        res.iterations = 0;
        res.residual = 0.0;
        return res;
    }
    const double target = n * pi;
    const numerics::QuadratureSpec quad = action_quad(opts.action_rel_tol);
    auto f = [&](double e) { return swkb_action_impl(spec, e, quad) - target; };
    const SolveOut s =
        solve_increasing(f, 1e-10, spec.continuum_minus, "solve_swkb", opts.energy_rel_tol);
    res.energy_minus = s.x;
    res.energy = s.x - spec.v_minus_min;
    res.iterations = s.iterations;
    res.residual = s.residual;
    return res;
}

QuantizationResult solve_ft(const catalog::PotentialSpec& spec, int n, SolverOptions opts) {
    check_level(spec, n, "solve_ft");
    const numerics::QuadratureSpec quad = action_quad(opts.action_rel_tol);
    auto g = [&](double e) {
        const TurningPair tp = turning_points_potential(spec, e);
        const double action = action_between(spec, e, tp, quad);
        const PhasePair ph = ft_phases(spec, e, tp);
        return action - (n + 0.25 * ph.maslov) * pi;
    };
    const SolveOut s =
        solve_increasing(g, 1e-8, continuum_energy(spec), "solve_ft", opts.energy_rel_tol);
    const TurningPair tp = turning_points_potential(spec, s.x);
    QuantizationResult res;
    res.n = n;
    res.energy = s.x;
    res.energy_minus = s.x + spec.v_minus_min;
    res.phases = ft_phases(spec, s.x, tp);
    res.method = Method::ft;
    res.iterations = s.iterations;
    res.residual = s.residual;
    return res;
}

}  // namespace siq::quantizers
