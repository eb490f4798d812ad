#include "hnls/weyl.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hnls/rng.hpp"

namespace hnls {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

RationalApprox dirichlet_approx(double eps, double t, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("dirichlet_approx: N must be >= 2");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("dirichlet_approx: t must be in [0,1]");
    const double y = eps * t;
    if (y == 0.0) return {0, 1, 0.0};

    // Continued-fraction convergents p_k/q_k of y; keep the last one with
    // q_k < N. Then q_{k+1} >= N gives |y - p/q| <= 1/(q q_{k+1}) <= 1/(qN).
    std::int64_t p_prev = 0, q_prev = 1; // p_{-2}/q_{-2}
    std::int64_t p = 1, q = 0;           // p_{-1}/q_{-1}
    double frac = y;
    std::int64_t best_p = 0, best_q = 1;
    for (int iter = 0; iter < 64; ++iter) {
        const double floor_f = std::floor(frac);
        const auto a_k = static_cast<std::int64_t>(floor_f);
        if (floor_f * static_cast<double>(q) + static_cast<double>(q_prev) >=
            static_cast<double>(n))
            break; // q_new would leave the admissible range (also overflow guard)
        const std::int64_t p_new = a_k * p + p_prev;
        const std::int64_t q_new = a_k * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_new; q = q_new;
        best_p = p; best_q = q;
        const double rem = frac - floor_f;
        if (rem < 1e-15) break; // y is (numerically) rational
        frac = 1.0 / rem;
    }
    RationalApprox out;
    out.a = best_p;
    out.q = best_q;
    out.eta = std::abs(y - static_cast<double>(best_p) / static_cast<double>(best_q));
    return out;
}

Complex weyl_sum_1d(std::int64_t n, const CutoffProfile& cutoff, int sign, double eps,
                    double t, double x) {
    if (n < 1) throw std::invalid_argument("weyl_sum_1d: N must be >= 1");
    const std::int64_t half = cutoff.support_halfwidth(n);
    const double dn = static_cast<double>(n);
    double sum_re = 0.0, c_re = 0.0, sum_im = 0.0, c_im = 0.0;
    for (std::int64_t k = -half; k <= half; ++k) {
        const double w = cutoff(static_cast<double>(k) / dn);
        if (w == 0.0) continue;
        const double dk = static_cast<double>(k);
        const double phase = kTwoPi * (x * dk + static_cast<double>(sign) * t * eps * dk * dk);
        const double re = w * std::cos(phase);
        const double im = w * std::sin(phase);
        double y = re - c_re;
        double s = sum_re + y;
        c_re = (s - sum_re) - y;
        sum_re = s;
        y = im - c_im;
        s = sum_im + y;
        c_im = (s - sum_im) - y;
        sum_im = s;
    }
    return {sum_re, sum_im};
}

Complex kernel_value(const Signature& sig, std::int64_t n, const CutoffProfile& cutoff,
                     double t, std::span<const double> x) {
    if (static_cast<int>(x.size()) != sig.dim())
        throw std::invalid_argument("kernel_value: x has wrong dimension");
    Complex prod{1.0, 0.0};
    for (int j = 0; j < sig.dim(); ++j) {
        // evolve multiplies by e^{-2 pi i t sigma(k)}: coordinate j of sigma
        // carries coord_sign(j), so the 1-d sum's sign is -coord_sign(j).
        prod *= weyl_sum_1d(n, cutoff, -sig.coord_sign(j), sig.eps_value(j), t,
                            x[static_cast<std::size_t>(j)]);
    }
    return prod;
}

Complex gauss_sum(std::int64_t a, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("gauss_sum: q must be >= 1");
    const std::int64_t a_mod = ((a % q) + q) % q;
    double sum_re = 0.0, sum_im = 0.0;
    for (std::int64_t k = 0; k < q; ++k) {
        // k^2 mod q keeps the phase argument small and exact.
        const std::int64_t k2 = (k * k) % q;
        const double phase = kTwoPi * static_cast<double>(a_mod * k2 % q) / static_cast<double>(q);
        sum_re += std::cos(phase);
        sum_im += std::sin(phase);
    }
    return {sum_re, sum_im};
}

bool classify_major_arc(std::span<const RationalApprox> approx, std::int64_t n, double sigma) {
    const double threshold = std::pow(static_cast<double>(n), 2.0 * sigma);
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    for (const auto& ap : approx) {
        if (static_cast<double>(ap.q) <= threshold &&
            static_cast<double>(ap.q) * n2 * ap.eta <= threshold)
            return true;
    }
    return false;
}

double dispersive_bound(std::span<const RationalApprox> approx, std::int64_t n) {
    double bound = 1.0;
    const double dn = static_cast<double>(n);
    for (const auto& ap : approx)
        bound *= dn / (std::sqrt(static_cast<double>(ap.q)) * (1.0 + dn * std::sqrt(ap.eta)));
    return bound;
}

KernelSample evaluate_kernel_sample(const Signature& sig, std::int64_t n,
                                    const CutoffProfile& cutoff, double sigma, double t,
                                    std::span<const double> x) {
    KernelSample s;
    s.t = t;
    s.x.assign(x.begin(), x.end());
    s.value = kernel_value(sig, n, cutoff, t, x);
    s.approx.reserve(static_cast<std::size_t>(sig.dim()));
    for (int j = 0; j < sig.dim(); ++j) {
        s.approx.push_back(dirichlet_approx(sig.eps_value(j), t, n));
        if (s.approx.back().q >= n) s.admissible = false;
    }
    s.major_arc = classify_major_arc(s.approx, n, sigma);
    s.bound = dispersive_bound(s.approx, n);
    s.ratio = s.bound > 0.0 ? std::abs(s.value) / s.bound : 0.0;
    return s;
}

KernelSplit split_kernel(const KernelSample& sample) {
    return sample.major_arc ? KernelSplit{sample.value, {0.0, 0.0}}
                            : KernelSplit{{0.0, 0.0}, sample.value};
}

KernelSweepResult kernel_sweep(const Signature& sig, const KernelSweepConfig& config) {
    if (config.n_list.empty()) throw std::invalid_argument("kernel_sweep: empty N list");
    const CutoffProfile cutoff =
        config.smooth_cutoff ? CutoffProfile::smooth() : CutoffProfile::sharp();

    KernelSweepResult result;
    result.sigma = config.sigma;
    std::vector<double> log_n, log_ratio, log_minor;

    for (std::size_t ni = 0; ni < config.n_list.size(); ++ni) {
        const std::int64_t n = config.n_list[ni];
        SplitMix64 rng(task_seed(config.seed, ni));
        KernelSweepPerN per;
        per.n = n;
        const double minor_scale = std::pow(
            static_cast<double>(n), static_cast<double>(sig.dim()) * (1.0 - config.sigma));
        std::vector<double> x(static_cast<std::size_t>(sig.dim()));
        for (int s = 0; s < config.samples_per_n; ++s) {
            const double t = rng.next_uniform();
            for (auto& xj : x) xj = rng.next_uniform();
            KernelSample sample = evaluate_kernel_sample(sig, n, cutoff, config.sigma, t, x);
            ++per.sample_count;
            if (sample.major_arc) ++per.major_count;
            if (sample.admissible) per.max_ratio = std::max(per.max_ratio, sample.ratio);
            if (!sample.major_arc)
                per.max_minor_ratio =
                    std::max(per.max_minor_ratio, std::abs(sample.value) / minor_scale);
            result.rows.push_back(std::move(sample));
        }
        result.per_n.push_back(per);
        log_n.push_back(std::log2(static_cast<double>(n)));
        log_ratio.push_back(std::log2(std::max(per.max_ratio, 1e-300)));
        log_minor.push_back(std::log2(std::max(per.max_minor_ratio, 1e-300)));
    }
    if (log_n.size() >= 2) {
        result.ratio_trend = fit_line(log_n, log_ratio);
        result.minor_trend = fit_line(log_n, log_minor);
    }
    return result;
}

} // namespace hnls
