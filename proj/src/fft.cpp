#include "hnls/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace hnls {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

int next_fast_size(int n) {
    if (n < 1) throw std::invalid_argument("next_fast_size: n must be >= 1");
    for (int candidate = n;; ++candidate) {
        int r = candidate;
        for (int f : {2, 3, 5})
            while (r % f == 0) r /= f;
        if (r == 1) return candidate;
    }
}

GridFft::GridFft(int dim, int grid_points) : dim_(dim), g_(grid_points) {
    if (dim < 1 || dim > 4) throw std::invalid_argument("GridFft: dim must be in [1,4]");
    if (grid_points < 1) throw std::invalid_argument("GridFft: grid_points must be >= 1");
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(g_);
    buffer_.assign(total, {0.0, 0.0});

    int dims[4] = {g_, g_, g_, g_};
    auto* raw = reinterpret_cast<fftw_complex*>(buffer_.data());
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft(dim_, dims, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft(dim_, dims, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (plan_fwd_ == nullptr || plan_bwd_ == nullptr)
        throw std::runtime_error("GridFft: FFTW planning failed");
}

GridFft::~GridFft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan_fwd_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    if (plan_bwd_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void GridFft::zero() {
    std::fill(buffer_.begin(), buffer_.end(), std::complex<double>{0.0, 0.0});
}

void GridFft::backward() {
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
}

void GridFft::forward() {
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    const double inv = 1.0 / static_cast<double>(buffer_.size());
    for (auto& z : buffer_) z *= inv;
}

} // namespace hnls
