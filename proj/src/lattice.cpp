#include "hnls/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hnls {

Signature::Signature(int d, int j0, std::vector<EpsWeight> eps)
    : d_(d), j0_(j0), eps_(std::move(eps)) {
    if (d < 1 || d > 4) throw std::invalid_argument("Signature: d must be in [1,4]");
    if (j0 < 0 || j0 > d) throw std::invalid_argument("Signature: j0 must be in [0,d]");
    if (static_cast<int>(eps_.size()) != d)
        throw std::invalid_argument("Signature: eps must have d entries");
    for (const auto& e : eps_) {
        if (!(e.value > 0.0) || e.value > 1.0)
            throw std::invalid_argument("Signature: weights must lie in (0,1]");
    }
}

double Signature::symbol(std::span<const std::int64_t> k) const {
    if (static_cast<int>(k.size()) != d_)
        throw std::invalid_argument("symbol: k must have d components");
    double plus = 0.0, minus = 0.0;
    for (int j = 0; j < d_; ++j) {
        const double term = eps_[static_cast<std::size_t>(j)].value *
                            static_cast<double>(k[static_cast<std::size_t>(j)]) *
                            static_cast<double>(k[static_cast<std::size_t>(j)]);
        if (j < j0_) plus += term; else minus += term;
    }
    return plus - minus;
}

Signature Signature::reflected() const {
    std::vector<EpsWeight> rev(eps_.rbegin(), eps_.rend());
    return Signature(d_, d_ - j0_, std::move(rev));
}

std::optional<std::int64_t> Signature::time_period() const {
    std::int64_t l = 1;
    for (const auto& e : eps_) {
        if (!e.exact) return std::nullopt;
        l = std::lcm(l, e.exact->den());
    }
    return l;
}

double admissible_threshold(int d, int delta) {
    if (delta >= d) throw std::invalid_argument("admissible_threshold: delta must be < d");
    return 2.0 * static_cast<double>(d + 2 - delta) / static_cast<double>(d - delta);
}

double admissible_threshold(const Signature& sig) {
    return admissible_threshold(sig.dim(), sig.delta());
}

double worst_case_admissible_bound(int d) {
    if (d < 2) throw std::invalid_argument("worst_case_admissible_bound: d must be >= 2");
    return d % 2 == 0 ? 2.0 + 8.0 / static_cast<double>(d)
                      : 2.0 + 8.0 / static_cast<double>(d + 1);
}

bool is_admissible(const Signature& sig, double p) {
    return p > admissible_threshold(sig);
}

CriticalIndex critical_index(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("critical_index: d, m must be >= 1");
    return {0.5 * static_cast<double>(d) - 1.0 / static_cast<double>(m),
            static_cast<double>(m) * static_cast<double>(d + 2)};
}

double CutoffProfile::operator()(double x) const {
    const double a = std::abs(x);
    if (kind_ == Kind::sharp) return a <= 1.0 ? 1.0 : 0.0;
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double y = a - 1.0; // in (0,1)
    return std::exp(1.0 - 1.0 / (1.0 - y * y));
}

Cube::Cube(std::vector<Rational> center, Rational half_side)
    : center_(std::move(center)), half_side_(half_side) {
    if (center_.empty()) throw std::invalid_argument("Cube: empty center");
    if (!(Rational(0) < half_side_)) throw std::invalid_argument("Cube: half_side must be positive");
}

Cube Cube::centered(std::vector<std::int64_t> center, Rational side) {
    std::vector<Rational> c;
    c.reserve(center.size());
    for (auto v : center) c.emplace_back(v);
    return Cube(std::move(c), side * Rational(1, 2));
}

bool Cube::contains(std::span<const std::int64_t> k) const {
    if (k.size() != center_.size())
        throw std::invalid_argument("Cube::contains: dimension mismatch");
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (!((Rational(k[j]) - center_[j]).abs() <= half_side_)) return false;
    }
    return true;
}

bool Cube::integer_center() const {
    return std::all_of(center_.begin(), center_.end(),
                       [](const Rational& r) { return r.den() == 1; });
}

std::vector<std::int64_t> Cube::integer_center_coords() const {
    if (!integer_center()) throw std::invalid_argument("Cube: center is not integral");
    std::vector<std::int64_t> out;
    out.reserve(center_.size());
    for (const auto& r : center_) out.push_back(r.num());
    return out;
}

} // namespace hnls
