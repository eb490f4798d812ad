#include "hnls/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "hnls/project.hpp"

namespace hnls {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Complex evolution_phase(const Signature& sig, std::span<const std::int64_t> k, double t) {
    return std::polar(1.0, -kTwoPi * t * sig.symbol(k));
}

SpectralField evolve(const SpectralField& f, double t) {
    SpectralField out = f;
    const Signature& sig = f.sig();
    out.for_each_mode([&](std::span<const std::int64_t> k, Complex& v) {
        if (v != Complex{0.0, 0.0}) v *= evolution_phase(sig, k, t);
    });
    return out;
}

BoostResult galilean_boost(const SpectralField& f, const Cube& cube, double t) {
    if (!cube.integer_center())
        throw std::invalid_argument("galilean_boost: cube center must be integral");
    const auto r = cube.integer_center_coords();
    const Signature& sig = f.sig();
    if (static_cast<int>(r.size()) != sig.dim())
        throw std::invalid_argument("galilean_boost: cube dimension mismatch");

    SpectralField localized = project_cube(f, cube);

    std::int64_t r_max = 0;
    for (auto rj : r) r_max = std::max(r_max, rj < 0 ? -rj : rj);
    SpectralField recentered =
        localized.with_box(f.box_halfwidth() + static_cast<int>(r_max)).translated(r);
    // The translate is supported in the origin-centered cube; crop to it.
    const auto& h = cube.half_side();
    const int support_hw =
        static_cast<int>((h.num() + h.den() - 1) / h.den());
    if (support_hw < recentered.box_halfwidth())
        recentered = recentered.with_box(support_hw);

    BoostDescriptor desc;
    desc.center = r;
    desc.phase_symbol = -sig.symbol(r);
    desc.drift_velocity.resize(r.size());
    for (int j = 0; j < sig.dim(); ++j) {
        const double signed_eps =
            static_cast<double>(-sig.coord_sign(j)) * sig.eps_value(j);
        desc.drift_velocity[static_cast<std::size_t>(j)] =
            2.0 * signed_eps * static_cast<double>(r[static_cast<std::size_t>(j)]);
    }
    return {std::move(recentered), std::move(desc)};
}

double boost_identity_residual(const SpectralField& f, const Cube& cube, double t,
                               int grid_points) {
    const auto boost = galilean_boost(f, cube, t);
    const SpectralField lhs_field = evolve(project_cube(f, cube), t);
    const SpectralField rhs_field = evolve(boost.recentered, t);

    const int g = std::max({grid_points, lhs_field.side(), rhs_field.side()});
    const auto lhs = sample_spatial(lhs_field, g);

    std::vector<double> shift(boost.descriptor.drift_velocity.size());
    for (std::size_t j = 0; j < shift.size(); ++j)
        shift[j] = t * boost.descriptor.drift_velocity[j];
    const auto rhs_shifted = sample_spatial_shifted(rhs_field, g, shift);

    // e^{2 pi i (x.r + t H(r))} evaluated along the grid.
    const auto& r = boost.descriptor.center;
    const int d = static_cast<int>(r.size());
    std::vector<std::int64_t> idx(static_cast<std::size_t>(d), 0);
    double max_err = 0.0;
    const double phase0 = t * boost.descriptor.phase_symbol;
    std::size_t flat = 0;
    while (true) {
        double xr = phase0;
        for (int j = 0; j < d; ++j)
            xr += static_cast<double>(idx[static_cast<std::size_t>(j)]) / g *
                  static_cast<double>(r[static_cast<std::size_t>(j)]);
        const Complex rhs = std::polar(1.0, kTwoPi * xr) * rhs_shifted[flat];
        max_err = std::max(max_err, std::abs(lhs[flat] - rhs));
        ++flat;
        int j = d - 1;
        for (; j >= 0; --j) {
            auto& v = idx[static_cast<std::size_t>(j)];
            if (++v < g) break;
            v = 0;
        }
        if (j < 0) break;
    }
    return max_err;
}

SpectralField duhamel(const std::function<SpectralField(double)>& forcing, double t,
                      int n_quad) {
    if (n_quad < 2) throw std::invalid_argument("duhamel: n_quad must be >= 2");
    const double h = t / static_cast<double>(n_quad);

    SpectralField accum = evolve(forcing(0.0), 0.0).scale(0.5);
    for (int i = 1; i < n_quad; ++i) {
        const double tau = static_cast<double>(i) * h;
        SpectralField w = evolve(forcing(tau), -tau);
        auto acc = accum.coeffs();
        auto src = w.coeffs();
        if (acc.size() != src.size())
            throw std::invalid_argument("duhamel: forcing changed its box");
        for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += src[n];
    }
    {
        SpectralField w = evolve(forcing(t), -t).scale(0.5);
        auto acc = accum.coeffs();
        auto src = w.coeffs();
        if (acc.size() != src.size())
            throw std::invalid_argument("duhamel: forcing changed its box");
        for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += src[n];
    }
    accum.scale(h);
    return evolve(accum, t);
}

} // namespace hnls
