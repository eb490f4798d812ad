#pragma once

#include <vector>

#include "hnls/field.hpp"
#include "hnls/propagator.hpp"

namespace hnls {

/// Uniform space-time quadrature grid for L^p norms over [0, T] x T^d:
/// composite trapezoid with n_t intervals in time (nodes are nested under
/// halving, which gives the refinement sentinel for free), Riemann sums on a
/// G^d spatial grid.
struct SpaceTimeGrid {
    double t_horizon = 1.0;
    long n_t = 64;       // even; nodes n_t + 1
    int grid_points = 0; // G per dimension
};

/// Grid sizing: G = next_fast(max(oversample (2M+1), pM + 1 for even p))
/// so products of degree p/2 are resolved exactly for even p; n_t defaults
/// to 8 M^2 (fastest propagator phase is ~M^2), clamped to [n_t_min, cap].
struct GridPolicy {
    int oversample = 1;
    long n_t_min = 64;
    long n_t_cap = 16384;
    double t_horizon = 1.0;
};

SpaceTimeGrid make_grid(const GridPolicy& policy, int box_halfwidth, double p);

/// Number of space-time points the grid evaluates (resource-cap input).
double grid_point_count(const SpaceTimeGrid& grid, int dim);

/// Product of free evolutions: factor j contributes evolve(f_j, t) or its
/// conjugate, sampled spatially.
struct ProductSpec {
    std::vector<const SpectralField*> fields;
    std::vector<bool> conjugate; // empty = no conjugation
};

/// F_i = (1/G^d) sum_x |prod(t_i, x)|^p at the n_t+1 trapezoid nodes.
/// Deterministic for any thread count: per-node values are computed
/// independently (fixed x order, compensated summation) and assembled in
/// node order.
std::vector<double> product_abs_pow_timeseries(const ProductSpec& spec, double p,
                                               const SpaceTimeGrid& grid, int threads = 1);

/// I_i = (1/G^d) sum_x prod(t_i, x) (complex spatial mean per node).
std::vector<Complex> product_mean_timeseries(const ProductSpec& spec,
                                             const SpaceTimeGrid& grid, int threads = 1);

double trapezoid(std::span<const double> nodes, double t_horizon);
Complex trapezoid(std::span<const Complex> nodes, double t_horizon);
/// Trapezoid over the even-index subsequence (the n_t/2 refinement level).
double trapezoid_coarse(std::span<const double> nodes, double t_horizon);
Complex trapezoid_coarse(std::span<const Complex> nodes, double t_horizon);

struct NormResult {
    double value = 0.0;              // (integral)^{1/p}
    double coarse_value = 0.0;       // same at half the time resolution
    double time_sentinel = 0.0;      // |value - coarse| / value
    double space_sentinel = 0.0;     // 0 when the grid is exact for this p
    bool space_exact = false;        // even p and G >= pM+1
    SpaceTimeGrid grid;
};

/// ( int_0^T int_{T^d} |u|^p )^{1/p} for u(t) = evolve(f0, t), f0 fixed.
/// For non-even p (quadrature-only, no exactness claim) the space sentinel
/// re-evaluates on a doubled spatial grid.
NormResult lp_spacetime_norm(const SpectralField& f0, double p, const SpaceTimeGrid& grid,
                             int threads = 1, bool space_check = true);

/// L^p_{t,x} norm of a product of evolved factors on the given grid.
NormResult lp_product_norm(const ProductSpec& spec, double p, const SpaceTimeGrid& grid,
                           int threads = 1);

} // namespace hnls
