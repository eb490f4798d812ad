#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hnls/fit.hpp"
#include "hnls/lattice.hpp"

namespace hnls {

using Complex = std::complex<double>;

/// Best rational approximation a/q of eps*t with q < N, from continued
/// fraction convergents. Guarantees gcd(a,q) = 1, q < N and the Dirichlet
/// bound eta = |eps t - a/q| <= 1/(qN).
struct RationalApprox {
    std::int64_t a = 0;
    std::int64_t q = 1;
    double eta = 0.0;
};

RationalApprox dirichlet_approx(double eps, double t, std::int64_t n);

/// One-dimensional quadratic Weyl sum
///   sum_k phi(k/N) exp(2 pi i (x k + sign * t * eps * k^2)),
/// summed over the support of phi(./N) ([-N,N] sharp, [-2N,2N] smooth).
Complex weyl_sum_1d(std::int64_t n, const CutoffProfile& cutoff, int sign, double eps,
                    double t, double x);

/// Frequency-truncated fundamental solution
///   K_N(t,x) = [evolve(P_{<=N} delta_0, t)](x),
/// evaluated as the product of per-coordinate Weyl sums (sign -1 for the
/// first j0 coordinates, matching the propagator phase).
Complex kernel_value(const Signature& sig, std::int64_t n, const CutoffProfile& cutoff,
                     double t, std::span<const double> x);

/// Complete quadratic Gauss sum  sum_{k=0}^{q-1} exp(2 pi i a k^2 / q)
/// by direct summation; |G(a,q)| = sqrt(q) for odd q with gcd(a,q)=1.
Complex gauss_sum(std::int64_t a, std::int64_t q);

/// Major-arc test: true iff some coordinate has q_j <= N^{2 sigma} and
/// q_j N^2 eta_j <= N^{2 sigma}.
bool classify_major_arc(std::span<const RationalApprox> approx, std::int64_t n, double sigma);

/// Right side of the dispersive estimate:
///   prod_j N / (sqrt(q_j) (1 + N sqrt(eta_j))).
double dispersive_bound(std::span<const RationalApprox> approx, std::int64_t n);

/// One kernel evaluation with its rational data, arc classification and
/// bound ratio. `admissible` records the Lemma hypothesis q_j < N (always
/// satisfied by dirichlet_approx; external approximations may violate it,
/// in which case the sample is excluded from bound statistics).
struct KernelSample {
    double t = 0.0;
    std::vector<double> x;
    Complex value;
    std::vector<RationalApprox> approx;
    bool major_arc = false;
    double bound = 0.0;
    double ratio = 0.0;
    bool admissible = true;
};

KernelSample evaluate_kernel_sample(const Signature& sig, std::int64_t n,
                                    const CutoffProfile& cutoff, double sigma, double t,
                                    std::span<const double> x);

/// Splits a classified sample into (major part, minor part); exactly one is
/// nonzero.
struct KernelSplit {
    Complex major;
    Complex minor;
};
KernelSplit split_kernel(const KernelSample& sample);

/// Dispersive-bound sweep: per N, max |K|/bound over random (t,x) samples
/// and max minor-arc |K - K~| / N^{d(1-sigma)}; trend slopes are fitted
/// against log2 N. The implied constants of the estimates are reported, not
/// asserted against an invented threshold.
struct KernelSweepConfig {
    std::vector<std::int64_t> n_list;
    int samples_per_n = 200;
    double sigma = 0.1;
    std::uint64_t seed = 0;
    bool smooth_cutoff = false;
};

struct KernelSweepPerN {
    std::int64_t n = 0;
    double max_ratio = 0.0;
    double max_minor_ratio = 0.0; // |K - K~| / N^{d(1-sigma)}
    long major_count = 0;
    long sample_count = 0;
};

struct KernelSweepResult {
    std::vector<KernelSweepPerN> per_n;
    std::vector<KernelSample> rows; // all samples, CSV order
    LineFit ratio_trend;            // log2(max ratio) vs log2 N
    LineFit minor_trend;            // log2(max minor ratio) vs log2 N
    double sigma = 0.1;
};

KernelSweepResult kernel_sweep(const Signature& sig, const KernelSweepConfig& config);

} // namespace hnls
