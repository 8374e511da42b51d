#include "siq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "siq/numerics.hpp"

namespace siq::oracle {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
// wall samples are clamped so the matrix norm stays bounded
constexpr double v_clamp = 1e8;

std::vector<double> lowest_eigenvalues(const std::function<double(double)>& potential,
                                       const GridSpec& grid, int k) {
    const int n = grid.points;
    const double h = (grid.x_hi - grid.x_lo) / (n - 1);
    const int m = n - 2;  // interior points, Dirichlet ends
    if (k > m) throw DimensionMismatch("solve_schrodinger: grid too coarse for k levels");
    std::vector<double> diag(static_cast<std::size_t>(m)),
        off(static_cast<std::size_t>(m - 1), -1.0 / (h * h));
    for (int i = 0; i < m; ++i) {
        const double x = grid.x_lo + h * (i + 1);
        diag[static_cast<std::size_t>(i)] =
            2.0 / (h * h) + std::min(potential(x), v_clamp);
    }
    return numerics::tridiag_eigen_lowest(diag, off, k);
}

}  // namespace

OracleResult solve_schrodinger(const std::function<double(double)>& potential,
                               const GridSpec& grid, int k) {
    if (!(grid.x_lo < grid.x_hi) || grid.points < 100)
        throw Error("solve_schrodinger: need x_lo < x_hi and points >= 100");
    if (k < 1) throw Error("solve_schrodinger: k must be >= 1");

    GridSpec fine = grid;
    fine.points = 2 * grid.points - 1;  // halves h exactly
    const std::vector<double> coarse = lowest_eigenvalues(potential, grid, k);
    const std::vector<double> levels = lowest_eigenvalues(potential, fine, k);

    OracleResult result;
    result.grid = grid;
    result.levels = levels;
    result.richardson_estimate.resize(static_cast<std::size_t>(k));
    result.pair_difference.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i);
        result.richardson_estimate[j] = (4.0 * levels[j] - coarse[j]) / 3.0;
        result.pair_difference[j] = std::abs(levels[j] - coarse[j]);
    }
    return result;
}

OracleResult solve_schrodinger(const catalog::PotentialSpec& spec, const GridSpec& grid, int k) {
    if (!(grid.x_lo > spec.x_lo && grid.x_hi < spec.x_hi))
        throw OutOfDomain("solve_schrodinger: grid must lie strictly inside the domain");
    auto v = [&spec](double x) { return catalog::potential(spec, x); };
    OracleResult result = solve_schrodinger(v, grid, k);

    // the top eigenfunction must not have support at the grid boundary;
    // classical allowedness is the proxy.  Edges truncating an infinite side
    // get a 1%-of-width decay zone; edges backed by a domain wall only need
    // to sit in the forbidden region themselves.
    const double zone = 0.01 * (grid.x_hi - grid.x_lo);
    const double e_top = result.richardson_estimate.back();
    const bool wall[2] = {!std::isinf(spec.x_lo), !std::isinf(spec.x_hi)};
    const double edges[2] = {grid.x_lo, grid.x_hi};
    for (int side = 0; side < 2; ++side) {
        double v_min_zone = inf;
        const int samples = wall[side] ? 0 : 20;
        for (int j = 0; j <= samples; ++j) {
            const double x = side == 0 ? edges[0] + zone * j / 20.0 : edges[1] - zone * j / 20.0;
            v_min_zone = std::min(v_min_zone, v(x));
        }
        if (v_min_zone <= e_top)
            throw GridTooSmall("solve_schrodinger: level " + std::to_string(k - 1) +
                               " is classically allowed at the grid boundary");
    }
    return result;
}

GridSpec default_grid(const catalog::PotentialSpec& spec, int k) {
    if (k < 1) throw Error("default_grid: k must be >= 1");
    const int top = std::min(std::max(3, k - 1), spec.max_level - 1);
    const double e_top = catalog::exact_spectrum(spec, top).back().e_shifted;

    // local turning-point search by bisection (kept independent of the quantizers)
    auto cross = [&](double limit) {
        double in = spec.x_at_min, out = in;
        double step = 0.5 * std::max(1.0, std::abs(spec.x_at_min));
        for (int it = 0; it < 300; ++it) {
            if (std::isinf(limit))
                out = limit > 0 ? out + step : out - step;
            else
                out = out + 0.5 * (limit - out);
            if (catalog::potential(spec, out) > e_top) break;
            in = out;
            step *= 1.5;
        }
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (in + out);
            (catalog::potential(spec, mid) > e_top ? out : in) = mid;
        }
        return out;
    };
    const double x_l = cross(spec.x_lo), x_r = cross(spec.x_hi);
    const double half = std::max(12.0, 6.0 * (x_r - x_l));

    // wall endpoints: back off until the potential drops to a representable size
    auto wall_offset = [&](double wall) {
        double x = spec.x_at_min;
        for (int it = 0; it < 200; ++it) {
            const double next = wall + 0.5 * (x - wall);
            if (catalog::potential(spec, next) >= 1e6) return next;
            x = next;
        }
        return x;
    };

    GridSpec g;
    g.x_lo = std::isinf(spec.x_lo) ? spec.x_at_min - half : wall_offset(spec.x_lo);
    g.x_hi = std::isinf(spec.x_hi) ? spec.x_at_min + half : wall_offset(spec.x_hi);
    return g;
}

}  // namespace siq::oracle
