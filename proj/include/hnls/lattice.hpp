#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hnls/rational.hpp"

namespace hnls {

/// One anisotropy weight. Weights given as exact fractions keep their
/// numerator/denominator so time periodicity stays detectable; weights given
/// as doubles disable periodicity.
struct EpsWeight {
    double value = 1.0;
    std::optional<Rational> exact;

    EpsWeight() = default;
    EpsWeight(double v) : value(v) {}                              // NOLINT(google-explicit-constructor)
    EpsWeight(const Rational& r) : value(r.to_double()), exact(r) {} // NOLINT(google-explicit-constructor)
};

/// Torus geometry of the mixed-signature Laplacian: dimension d, split index
/// j0 (the first j0 coordinates carry a plus sign in the quadratic form) and
/// per-coordinate weights eps_j in (0,1].
class Signature {
public:
    Signature(int d, int j0, std::vector<EpsWeight> eps);

    static Signature isotropic(int d, int j0) {
        return Signature(d, j0, std::vector<EpsWeight>(static_cast<std::size_t>(d), EpsWeight(1.0)));
    }

    int dim() const { return d_; }
    int split_index() const { return j0_; }
    const std::vector<EpsWeight>& eps() const { return eps_; }
    double eps_value(int j) const { return eps_[static_cast<std::size_t>(j)].value; }

    /// min(j0, d-j0); 0 means elliptic.
    int delta() const { return j0_ < d_ - j0_ ? j0_ : d_ - j0_; }

    bool elliptic() const { return delta() == 0; }

    /// Signed quadratic form sum_{j<j0} eps_j k_j^2 - sum_{j>=j0} eps_j k_j^2
    /// (0-based j). Equals minus the Galilean-boost symbol H_eps(k).
    double symbol(std::span<const std::int64_t> k) const;

    /// Sign of coordinate j in the quadratic form: +1 for j < j0, else -1.
    int coord_sign(int j) const { return j < j0_ ? +1 : -1; }

    /// j0 -> d - j0 with the weight vector reversed; delta() is invariant and
    /// the symbol flips sign under simultaneous reversal of k.
    Signature reflected() const;

    /// Smallest T > 0 with exp(-2 pi i T symbol(k)) = 1 for all lattice k,
    /// available only when every weight is exact (lcm of denominators).
    std::optional<std::int64_t> time_period() const;

private:
    int d_;
    int j0_;
    std::vector<EpsWeight> eps_;
};

/// Strict lower admissibility bound p*(d, j0) = 2(d+2-delta)/(d-delta);
/// (d, p) is admissible iff p > p*.
double admissible_threshold(const Signature& sig);
double admissible_threshold(int d, int delta);

/// Worst-case admissibility bound over all hyperbolic j0:
/// 2 + 8/d for even d, 2 + 8/(d+1) for odd d.
double worst_case_admissible_bound(int d);

bool is_admissible(const Signature& sig, double p);

/// Scaling-critical Sobolev index s_c(d, m) = d/2 - 1/m and the companion
/// Lebesgue exponent p_{d,m} = m(d+2); they satisfy s_c = d/2 - (d+2)/p_{d,m}.
struct CriticalIndex {
    double s_c;
    double p_dm;
};
CriticalIndex critical_index(int d, int m);

/// Frequency cutoff profile phi. The smooth profile is 1 on [-1,1], 0 outside
/// (-2,2), with taper exp(1 - 1/(1-(|x|-1)^2)) in between; the sharp profile
/// is the indicator of [-1,1].
class CutoffProfile {
public:
    enum class Kind { sharp, smooth };

    static CutoffProfile sharp() { return CutoffProfile(Kind::sharp); }
    static CutoffProfile smooth() { return CutoffProfile(Kind::smooth); }

    Kind kind() const { return kind_; }

    double operator()(double x) const;

    /// Half-width of the support of phi(. / N): N for sharp, 2N for smooth.
    std::int64_t support_halfwidth(std::int64_t n) const {
        return kind_ == Kind::sharp ? n : 2 * n;
    }

private:
    explicit CutoffProfile(Kind k) : kind_(k) {}
    Kind kind_;
};

/// Axis-aligned frequency cube: rational center, half side length N/2 for a
/// cube of side N. Membership is exact rational arithmetic.
class Cube {
public:
    Cube(std::vector<Rational> center, Rational half_side);

    /// Cube of side `side` centered at integer point `center`.
    static Cube centered(std::vector<std::int64_t> center, Rational side);

    int dim() const { return static_cast<int>(center_.size()); }
    const std::vector<Rational>& center() const { return center_; }
    const Rational& half_side() const { return half_side_; }

    bool contains(std::span<const std::int64_t> k) const;

    /// True when every coordinate of the center is an integer.
    bool integer_center() const;
    std::vector<std::int64_t> integer_center_coords() const;

private:
    std::vector<Rational> center_;
    Rational half_side_;
};

} // namespace hnls
