#pragma once

#include "siq/catalog.hpp"
#include "siq/numerics.hpp"

namespace siq::quantizers {

enum class TurningKind { potential, superpotential };

/// Turning points for one energy: V(x) = E (potential) or W(x) = +-sqrt(E-)
/// (superpotential).  left == right only in the degenerate SWKB n = 0 case.
struct TurningPair {
    double left = 0;
    double right = 0;
    TurningKind kind = TurningKind::potential;
};

/// Reflection phase losses at the two turning points; maslov = (phi_L + phi_R) / (pi/2).
struct PhasePair {
    double phi_left = 0;
    double phi_right = 0;
    double maslov = 0;
};

enum class Method { wkb, swkb, ft };

struct QuantizationResult {
    int n = 0;
    double energy = 0;        // on the tabulated V(x) scale, min V = 0
    double energy_minus = 0;  // on the V- scale: energy + v_minus_min
    PhasePair phases;
    Method method = Method::wkb;
    int iterations = 0;
    double residual = 0;  // |action - target| at the solution
};

/// Tolerances for the level solvers.  The defaults are tighter than the
/// comparisons ever need; loosen them to trade accuracy for speed.
struct SolverOptions {
    double energy_rel_tol = 1e-12;
    double action_rel_tol = 1e-11;
};

TurningPair turning_points_potential(const catalog::PotentialSpec& spec, double energy);
TurningPair turning_points_super(const catalog::PotentialSpec& spec, double e_minus);

/// int_{x_L}^{x_R} sqrt(E - V(x)) dx
double wkb_action(const catalog::PotentialSpec& spec, double energy);
/// int_{x'_L}^{x'_R} sqrt(E- - W(x)^2) dx
double swkb_action(const catalog::PotentialSpec& spec, double e_minus);

/// Energy-dependent phases tan(phi_L/2) = -W(x_L)/k, tan(phi_R/2) = W(x_R)/k
/// with k = sqrt(E); principal arctangent branch, negative phases kept as-is.
PhasePair ft_phases(const catalog::PotentialSpec& spec, double energy, const TurningPair& tp);

/// wkb_action(E) = (n + 1/2) pi
QuantizationResult solve_wkb(const catalog::PotentialSpec& spec, int n, SolverOptions opts = {});
/// swkb_action(E-) = n pi; n = 0 returns E- = 0 without root finding
QuantizationResult solve_swkb(const catalog::PotentialSpec& spec, int n, SolverOptions opts = {});
/// wkb_action(E) = (n + maslov(E)/4) pi with maslov from ft_phases at the same E
QuantizationResult solve_ft(const catalog::PotentialSpec& spec, int n, SolverOptions opts = {});

}  // namespace siq::quantizers
