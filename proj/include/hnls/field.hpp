#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hnls/fft.hpp"
#include "hnls/lattice.hpp"

namespace hnls {

using Complex = std::complex<double>;

/// Trigonometric polynomial on the torus, stored as Fourier coefficients
/// u(k) on the box [-M, M]^d (row-major, last coordinate fastest).
/// Plancherel is exact by convention: ||f||_{L^2}^2 = sum |u(k)|^2.
class SpectralField {
public:
    SpectralField(Signature sig, int box_halfwidth);

    const Signature& sig() const { return sig_; }
    int dim() const { return sig_.dim(); }
    int box_halfwidth() const { return m_; }
    int side() const { return 2 * m_ + 1; }
    std::size_t mode_count() const { return coeffs_.size(); }

    std::span<Complex> coeffs() { return coeffs_; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// Flat index of lattice point k, row-major with k_d fastest.
    std::size_t index_of(std::span<const std::int64_t> k) const;
    Complex at(std::span<const std::int64_t> k) const { return coeffs_[index_of(k)]; }
    void set(std::span<const std::int64_t> k, Complex v) { coeffs_[index_of(k)] = v; }
    void set(std::initializer_list<std::int64_t> k, Complex v) {
        coeffs_[index_of(std::span<const std::int64_t>(k.begin(), k.size()))] = v;
    }

    /// Visits every mode; `k` is valid only during the call.
    void for_each_mode(const std::function<void(std::span<const std::int64_t>, Complex&)>& fn);
    void for_each_mode(const std::function<void(std::span<const std::int64_t>, const Complex&)>& fn) const;

    double l2_norm() const;

    /// (sum <k>^{2s} |u(k)|^2)^{1/2} with <k>^2 = 1 + |k|^2 (Euclidean,
    /// unweighted by eps).
    double sobolev_norm(double s) const;

    SpectralField& scale(double factor);
    SpectralField& scale(Complex factor);

    /// Returns a copy supported on a larger/smaller box (clipping discards
    /// outside modes); used to align operands.
    SpectralField with_box(int new_halfwidth) const;

    /// Coefficients translated by -shift: out(k) = in(k + shift); modes
    /// leaving the box are dropped unless the box is enlarged by the caller.
    SpectralField translated(std::span<const std::int64_t> shift) const;

private:
    Signature sig_;
    int m_;
    std::vector<Complex> coeffs_;
};

/// Values of f on the uniform G^d spatial grid x_n = n/G (row-major).
/// Rejects G < 2M+1 (aliasing would corrupt norms). Exact for trigonometric
/// polynomials up to roundoff.
std::vector<Complex> sample_spatial(const SpectralField& f, int grid_points);

/// Same grid, each sample taken at x_n + shift instead of x_n.
std::vector<Complex> sample_spatial_shifted(const SpectralField& f, int grid_points,
                                            std::span<const double> shift);

/// Recovers coefficients on [-M, M]^d from G^d grid samples, G >= 2M+1.
SpectralField field_from_samples(const Signature& sig, int box_halfwidth,
                                 std::span<const Complex> samples, int grid_points);

/// Scatters coefficients (optionally premultiplied per mode) into an FFT
/// buffer using wrapped indices; the buffer must belong to a grid with
/// G >= 2M+1.
void scatter_to_grid(const SpectralField& f, GridFft& fft,
                     const std::function<Complex(std::span<const std::int64_t>)>* premultiply = nullptr);

// --- serialization -------------------------------------------------------

/// JSON layout: {"signature": {"d","j0","eps"}, "box": M,
///               "coeffs": [re0, im0, re1, im1, ...]} (row-major).
std::string field_to_json(const SpectralField& f);
SpectralField field_from_json(const std::string& text);

/// Flat binary layout, little-endian: magic "HNLSFLD1", u32 version, u32 d,
/// d x i32 per-dimension half-width, payload complex64 pairs (two float32
/// per mode) in row-major k order.
std::vector<std::uint8_t> field_to_binary(const SpectralField& f);
SpectralField field_from_binary(std::span<const std::uint8_t> bytes, const Signature& sig);

void save_field_binary(const SpectralField& f, const std::string& path);
SpectralField load_field_binary(const std::string& path, const Signature& sig);

} // namespace hnls
