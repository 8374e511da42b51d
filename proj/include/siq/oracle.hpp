#pragma once

#include <functional>
#include <vector>

#include "siq/catalog.hpp"

namespace siq::oracle {

/// Uniform Dirichlet grid for the finite-difference eigensolver.
struct GridSpec {
    double x_lo = 0;
    double x_hi = 0;
    int points = 4000;
};

struct OracleResult {
    std::vector<double> levels;               // finest-grid eigenvalues, ascending
    GridSpec grid;                            // the coarse grid of the Richardson pair
    std::vector<double> richardson_estimate;  // extrapolated over N and 2N-1 points
    std::vector<double> pair_difference;      // |fine - coarse| per level
};

/// Lowest k eigenvalues of -psi'' + V psi = E psi (hbar = 2m = 1) with the
/// standard 3-point stencil, plus Richardson extrapolation over a grid pair.
OracleResult solve_schrodinger(const std::function<double(double)>& potential,
                               const GridSpec& grid, int k);
OracleResult solve_schrodinger(const catalog::PotentialSpec& spec, const GridSpec& grid, int k);

/// Box covering the classically allowed region of level k-1 with wide margins;
/// wall endpoints are offset to where the potential is already enormous.
GridSpec default_grid(const catalog::PotentialSpec& spec, int k);

}  // namespace siq::oracle
