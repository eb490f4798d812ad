#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hnls {

/// Smallest 5-smooth integer >= n (FFT-friendly grid size).
int next_fast_size(int n);

/// In-place d-dimensional complex DFT on a G^d grid, one plan pair per
/// instance. Instances own their buffer; creating one is internally
/// serialized (FFTW planning is not thread-safe), executing is not.
///
/// Conventions (matching the torus Fourier series f(x) = sum e^{2pi i k.x} f(k)):
///   backward(): u[n] = sum_k c[k] e^{+2pi i k.n/G}   (synthesis, unnormalized)
///   forward():  c[k] = (1/G^d) sum_n u[n] e^{-2pi i k.n/G}   (analysis)
class GridFft {
public:
    GridFft(int dim, int grid_points);
    ~GridFft();

    GridFft(const GridFft&) = delete;
    GridFft& operator=(const GridFft&) = delete;

    int dim() const { return dim_; }
    int grid_points() const { return g_; }
    std::size_t size() const { return buffer_.size(); }

    std::complex<double>* data() { return buffer_.data(); }
    const std::complex<double>* data() const { return buffer_.data(); }

    void zero();
    void backward(); // synthesis, no scaling
    void forward();  // analysis, scales by 1/G^d

private:
    int dim_;
    int g_;
    std::vector<std::complex<double>> buffer_;
    void* plan_fwd_;
    void* plan_bwd_;
};

} // namespace hnls
