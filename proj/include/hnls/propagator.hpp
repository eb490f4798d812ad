#pragma once

#include <functional>

#include "hnls/field.hpp"
#include "hnls/lattice.hpp"

namespace hnls {

/// Exact free evolution: u(k) -> exp(-2 pi i t symbol(k)) u(k), the torus
/// solution u(t,x) = sum_k exp(2 pi i (x.k - t |k|^2_pm)) u0(k).
/// Group law evolve(f, a+b) = evolve(evolve(f, a), b) and unitarity in every
/// H^s hold up to roundoff.
SpectralField evolve(const SpectralField& f, double t);

/// Per-mode evolution phase, shared with the norm sweeps.
Complex evolution_phase(const Signature& sig, std::span<const std::int64_t> k, double t);

/// Recentering data for a frequency cube with integer center r:
///   evolve(P_C f, t)(x) = e^{2 pi i (x.r + t H(r))} evolve(P_{C-r} f_0, t)(x + 2 t drift)
/// with f_0 the translate of P_C f by -r, H(r) = -symbol(r), and
/// drift_j = -eps_j r_j for j < j0, +eps_j r_j otherwise.
struct BoostDescriptor {
    std::vector<std::int64_t> center;    // r
    double phase_symbol;                 // H_eps(r) = -symbol(r)
    std::vector<double> drift_velocity;  // 2 * (eps-bar r)
};

struct BoostResult {
    SpectralField recentered; // P_C f translated by -r (box enlarged as needed)
    BoostDescriptor descriptor;
};

/// Hyperbolic Galilean boost of a cube-localized field. The cube center must
/// be integral so the recentered field is again a lattice field.
BoostResult galilean_boost(const SpectralField& f, const Cube& cube, double t);

/// Max pointwise |lhs - rhs| of the boost identity on a G^d grid at time t;
/// used by tests and the `galilean` experiment.
double boost_identity_residual(const SpectralField& f, const Cube& cube, double t,
                               int grid_points);

/// Inhomogeneous Duhamel term  int_0^t evolve_{t-tau} F(tau) dtau  by
/// composite trapezoid in the interaction picture (the free flow is applied
/// exactly; only w(tau) = evolve(F(tau), -tau) is quadratured).
/// Returns the integral term only; second-order accurate in 1/n_quad.
SpectralField duhamel(const std::function<SpectralField(double)>& forcing, double t,
                      int n_quad);

} // namespace hnls
