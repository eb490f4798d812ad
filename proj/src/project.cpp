#include "hnls/project.hpp"

#include <stdexcept>

namespace hnls {

double le_symbol(const CutoffProfile& cutoff, std::span<const std::int64_t> k, std::int64_t n) {
    double w = 1.0;
    for (auto kj : k) {
        w *= cutoff(static_cast<double>(kj) / static_cast<double>(n));
        if (w == 0.0) break;
    }
    return w;
}

double band_symbol(const CutoffProfile& cutoff, std::span<const std::int64_t> k, std::int64_t n) {
    if (n == 1) return le_symbol(cutoff, k, 1);
    return le_symbol(cutoff, k, n) - le_symbol(cutoff, k, n / 2);
}

SpectralField project_le(const SpectralField& f, std::int64_t n, const CutoffProfile& cutoff) {
    if (n < 1) throw std::invalid_argument("project_le: N must be >= 1");
    SpectralField out = f;
    out.for_each_mode([&](std::span<const std::int64_t> k, Complex& v) {
        v *= le_symbol(cutoff, k, n);
    });
    return out;
}

SpectralField project_band(const SpectralField& f, std::int64_t n, const CutoffProfile& cutoff) {
    if (n < 1) throw std::invalid_argument("project_band: N must be >= 1");
    if (n > 1 && (n & (n - 1)) != 0)
        throw std::invalid_argument("project_band: N must be dyadic");
    SpectralField out = f;
    out.for_each_mode([&](std::span<const std::int64_t> k, Complex& v) {
        v *= band_symbol(cutoff, k, n);
    });
    return out;
}

SpectralField project_cube(const SpectralField& f, const Cube& cube) {
    if (cube.dim() != f.dim()) throw std::invalid_argument("project_cube: dimension mismatch");
    SpectralField out = f;
    out.for_each_mode([&](std::span<const std::int64_t> k, Complex& v) {
        if (!cube.contains(k)) v = Complex{0.0, 0.0};
    });
    return out;
}

} // namespace hnls
