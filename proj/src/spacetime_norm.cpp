#include "hnls/spacetime_norm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

namespace hnls {

namespace {

bool even_integer_p(double p) {
    const double r = std::round(p);
    return std::abs(p - r) < 1e-12 && static_cast<long>(r) % 2 == 0 && r >= 2.0;
}

int max_box_halfwidth(const ProductSpec& spec) {
    int m = 0;
    for (const auto* f : spec.fields) m = std::max(m, f->box_halfwidth());
    return m;
}

int sum_box_halfwidth(const ProductSpec& spec) {
    int m = 0;
    for (const auto* f : spec.fields) m += f->box_halfwidth();
    return m;
}

void validate(const ProductSpec& spec, const SpaceTimeGrid& grid) {
    if (spec.fields.empty()) throw std::invalid_argument("ProductSpec: no factors");
    if (!spec.conjugate.empty() && spec.conjugate.size() != spec.fields.size())
        throw std::invalid_argument("ProductSpec: conjugate flags size mismatch");
    const int d = spec.fields.front()->dim();
    for (const auto* f : spec.fields)
        if (f->dim() != d) throw std::invalid_argument("ProductSpec: mixed dimensions");
    if (grid.n_t < 2 || grid.n_t % 2 != 0)
        throw std::invalid_argument("SpaceTimeGrid: n_t must be even and >= 2");
    if (grid.grid_points < 2 * max_box_halfwidth(spec) + 1)
        throw std::invalid_argument("SpaceTimeGrid: spatial grid below Nyquist");
    if (!(grid.t_horizon > 0.0))
        throw std::invalid_argument("SpaceTimeGrid: T must be positive");
}

/// Evaluates all factors at a time node into `product` (pointwise multiply).
class NodeEvaluator {
public:
    NodeEvaluator(const ProductSpec& spec, int g)
        : spec_(spec),
          d_(spec.fields.front()->dim()),
          product_(d_, g),
          scratch_(spec.fields.size() > 1 ? std::make_unique<GridFft>(d_, g) : nullptr) {}

    /// Fills product_ with prod_j factors(t, x).
    void eval(double t) {
        for (std::size_t j = 0; j < spec_.fields.size(); ++j) {
            const bool conj = !spec_.conjugate.empty() && spec_.conjugate[j];
            GridFft& target = (j == 0) ? product_ : *scratch_;
            const SpectralField& f = *spec_.fields[j];
            const Signature& sig = f.sig();
            std::function<Complex(std::span<const std::int64_t>)> phase =
                [&](std::span<const std::int64_t> k) { return evolution_phase(sig, k, t); };
            scatter_to_grid(f, target, &phase);
            target.backward();
            if (conj) {
                auto* p = target.data();
                for (std::size_t i = 0; i < target.size(); ++i) p[i] = std::conj(p[i]);
            }
            if (j > 0) {
                auto* prod = product_.data();
                const auto* s = scratch_->data();
                for (std::size_t i = 0; i < product_.size(); ++i) prod[i] *= s[i];
            }
        }
    }

    /// Kahan sum of |prod|^p over the grid, divided by G^d.
    double mean_abs_pow(double p) const {
        const auto* buf = product_.data();
        const std::size_t n = product_.size();
        const double half_p = 0.5 * p;
        const bool is_sq = std::abs(p - 2.0) < 1e-15;
        double sum = 0.0, c = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double a2 = std::norm(buf[i]);
            const double v = is_sq ? a2 : std::pow(a2, half_p);
            const double y = v - c;
            const double t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        return sum / static_cast<double>(n);
    }

    Complex mean_value() const {
        const auto* buf = product_.data();
        const std::size_t n = product_.size();
        double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double y = buf[i].real() - cr;
            double t = sr + y;
            cr = (t - sr) - y;
            sr = t;
            y = buf[i].imag() - ci;
            t = si + y;
            ci = (t - si) - y;
            si = t;
        }
        return Complex(sr, si) / static_cast<double>(n);
    }

private:
    const ProductSpec& spec_;
    int d_;
    GridFft product_;
    std::unique_ptr<GridFft> scratch_;
};

template <typename T, typename PerNode>
std::vector<T> run_timeseries(const ProductSpec& spec, const SpaceTimeGrid& grid, int threads,
                              PerNode per_node) {
    validate(spec, grid);
    const long nodes = grid.n_t + 1;
    std::vector<T> out(static_cast<std::size_t>(nodes));
    const int n_workers = std::max(1, std::min<int>(threads, static_cast<int>(nodes)));

    std::atomic<long> next{0};
    auto work = [&]() {
        NodeEvaluator eval(spec, grid.grid_points);
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= nodes) break;
            const double t =
                grid.t_horizon * static_cast<double>(i) / static_cast<double>(grid.n_t);
            eval.eval(t);
            out[static_cast<std::size_t>(i)] = per_node(eval);
        }
    };

    if (n_workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return out;
}

template <typename T>
T trapezoid_impl(std::span<const T> nodes, double t_horizon, std::size_t stride) {
    if (nodes.size() < 3 || (nodes.size() - 1) % stride != 0)
        throw std::invalid_argument("trapezoid: bad node count");
    const std::size_t n = (nodes.size() - 1) / stride;
    const double h = t_horizon / static_cast<double>(n);
    T sum = T(0.5) * (nodes.front() + nodes.back());
    for (std::size_t i = 1; i < n; ++i) sum += nodes[i * stride];
    return sum * T(h);
}

} // namespace

SpaceTimeGrid make_grid(const GridPolicy& policy, int box_halfwidth, double p) {
    const int m = box_halfwidth;
    int g_min = policy.oversample * (2 * m + 1);
    if (even_integer_p(p))
        g_min = std::max(g_min, static_cast<int>(std::lround(p)) * m + 1);
    g_min = std::max(g_min, 2 * m + 1);

    SpaceTimeGrid grid;
    grid.t_horizon = policy.t_horizon;
    grid.grid_points = next_fast_size(g_min);
    long n_t = std::max<long>(policy.n_t_min, 8L * m * m);
    n_t = std::min(n_t, policy.n_t_cap);
    if (n_t % 2 != 0) ++n_t;
    grid.n_t = n_t;
    return grid;
}

double grid_point_count(const SpaceTimeGrid& grid, int dim) {
    double pts = static_cast<double>(grid.n_t + 1);
    for (int i = 0; i < dim; ++i) pts *= static_cast<double>(grid.grid_points);
    return pts;
}

std::vector<double> product_abs_pow_timeseries(const ProductSpec& spec, double p,
                                               const SpaceTimeGrid& grid, int threads) {
    return run_timeseries<double>(spec, grid, threads,
                                  [p](const NodeEvaluator& e) { return e.mean_abs_pow(p); });
}

std::vector<Complex> product_mean_timeseries(const ProductSpec& spec,
                                             const SpaceTimeGrid& grid, int threads) {
    return run_timeseries<Complex>(spec, grid, threads,
                                   [](const NodeEvaluator& e) { return e.mean_value(); });
}

double trapezoid(std::span<const double> nodes, double t_horizon) {
    return trapezoid_impl(nodes, t_horizon, 1);
}
Complex trapezoid(std::span<const Complex> nodes, double t_horizon) {
    return trapezoid_impl(nodes, t_horizon, 1);
}
double trapezoid_coarse(std::span<const double> nodes, double t_horizon) {
    return trapezoid_impl(nodes, t_horizon, 2);
}
Complex trapezoid_coarse(std::span<const Complex> nodes, double t_horizon) {
    return trapezoid_impl(nodes, t_horizon, 2);
}

NormResult lp_product_norm(const ProductSpec& spec, double p, const SpaceTimeGrid& grid,
                           int threads) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_product_norm: p must be >= 1");
    const auto series = product_abs_pow_timeseries(spec, p, grid, threads);
    NormResult res;
    res.grid = grid;
    res.value = std::pow(trapezoid(std::span<const double>(series), grid.t_horizon), 1.0 / p);
    res.coarse_value =
        std::pow(trapezoid_coarse(std::span<const double>(series), grid.t_horizon), 1.0 / p);
    res.time_sentinel =
        res.value > 0.0 ? std::abs(res.value - res.coarse_value) / res.value : 0.0;
    // |prod|^p is a trig polynomial of per-coordinate degree p * sum M_j for
    // even p; the spatial mean is then exact once G exceeds that degree.
    res.space_exact =
        even_integer_p(p) &&
        grid.grid_points >= static_cast<int>(std::lround(p)) * sum_box_halfwidth(spec) + 1;
    return res;
}

NormResult lp_spacetime_norm(const SpectralField& f0, double p, const SpaceTimeGrid& grid,
                             int threads, bool space_check) {
    ProductSpec spec;
    spec.fields = {&f0};
    NormResult res = lp_product_norm(spec, p, grid, threads);
    if (!res.space_exact && space_check) {
        SpaceTimeGrid finer = grid;
        finer.grid_points = next_fast_size(2 * grid.grid_points);
        const NormResult ref = lp_product_norm(spec, p, finer, threads);
        res.space_sentinel =
            res.value > 0.0 ? std::abs(res.value - ref.value) / res.value : 0.0;
    }
    return res;
}

} // namespace hnls
