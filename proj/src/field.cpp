#include "hnls/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hnls/serialize.hpp"

namespace hnls {

using json = nlohmann::ordered_json;

json signature_to_json(const Signature& sig) {
    json eps = json::array();
    for (const auto& e : sig.eps()) {
        if (e.exact && e.exact->den() != 1)
            eps.push_back(json::array({e.exact->num(), e.exact->den()}));
        else if (e.exact)
            eps.push_back(e.exact->num());
        else
            eps.push_back(e.value);
    }
    return json{{"d", sig.dim()}, {"j0", sig.split_index()}, {"eps", eps}};
}

Signature signature_from_json(const json& j) {
    const int d = j.at("d").get<int>();
    const int j0 = j.at("j0").get<int>();
    std::vector<EpsWeight> eps;
    for (const auto& e : j.at("eps")) {
        if (e.is_array()) {
            if (e.size() != 2) throw std::invalid_argument("signature eps entry: expected [num, den]");
            eps.emplace_back(Rational(e[0].get<std::int64_t>(), e[1].get<std::int64_t>()));
        } else if (e.is_number_integer()) {
            eps.emplace_back(Rational(e.get<std::int64_t>()));
        } else {
            eps.emplace_back(e.get<double>());
        }
    }
    return Signature(d, j0, std::move(eps));
}

namespace {

std::size_t pow_size(int base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

/// Odometer over [-M, M]^d, row-major (last coordinate fastest).
class ModeIter {
public:
    ModeIter(int d, int m) : d_(d), m_(m), k_(static_cast<std::size_t>(d), -m) {}

    std::span<const std::int64_t> k() const { return k_; }

    bool advance() {
        for (int j = d_ - 1; j >= 0; --j) {
            auto& kj = k_[static_cast<std::size_t>(j)];
            if (kj < m_) { ++kj; return true; }
            kj = -m_;
        }
        return false;
    }

private:
    int d_;
    int m_;
    std::vector<std::int64_t> k_;
};

} // namespace

SpectralField::SpectralField(Signature sig, int box_halfwidth)
    : sig_(std::move(sig)), m_(box_halfwidth) {
    if (m_ < 0) throw std::invalid_argument("SpectralField: box half-width must be >= 0");
    coeffs_.assign(pow_size(side(), dim()), Complex{0.0, 0.0});
}

std::size_t SpectralField::index_of(std::span<const std::int64_t> k) const {
    if (static_cast<int>(k.size()) != dim())
        throw std::invalid_argument("SpectralField: k has wrong dimension");
    std::size_t idx = 0;
    for (int j = 0; j < dim(); ++j) {
        const std::int64_t kj = k[static_cast<std::size_t>(j)];
        if (kj < -m_ || kj > m_) throw std::out_of_range("SpectralField: mode outside box");
        idx = idx * static_cast<std::size_t>(side()) + static_cast<std::size_t>(kj + m_);
    }
    return idx;
}

void SpectralField::for_each_mode(
    const std::function<void(std::span<const std::int64_t>, Complex&)>& fn) {
    ModeIter it(dim(), m_);
    std::size_t idx = 0;
    do {
        fn(it.k(), coeffs_[idx++]);
    } while (it.advance());
}

void SpectralField::for_each_mode(
    const std::function<void(std::span<const std::int64_t>, const Complex&)>& fn) const {
    ModeIter it(dim(), m_);
    std::size_t idx = 0;
    do {
        fn(it.k(), coeffs_[idx++]);
    } while (it.advance());
}

double SpectralField::l2_norm() const {
    double sum = 0.0, c = 0.0; // Kahan
    for (const auto& z : coeffs_) {
        const double y = std::norm(z) - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return std::sqrt(sum);
}

double SpectralField::sobolev_norm(double s) const {
    double sum = 0.0, c = 0.0;
    ModeIter it(dim(), m_);
    std::size_t idx = 0;
    do {
        const auto k = it.k();
        double k2 = 0.0;
        for (auto kj : k) k2 += static_cast<double>(kj) * static_cast<double>(kj);
        const double w = std::pow(1.0 + k2, s);
        const double y = w * std::norm(coeffs_[idx++]) - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    } while (it.advance());
    return std::sqrt(sum);
}

SpectralField& SpectralField::scale(double factor) {
    for (auto& z : coeffs_) z *= factor;
    return *this;
}

SpectralField& SpectralField::scale(Complex factor) {
    for (auto& z : coeffs_) z *= factor;
    return *this;
}

SpectralField SpectralField::with_box(int new_halfwidth) const {
    SpectralField out(sig_, new_halfwidth);
    const int m_common = std::min(m_, new_halfwidth);
    ModeIter it(dim(), m_common);
    do {
        out.set(it.k(), at(it.k()));
    } while (it.advance());
    return out;
}

SpectralField SpectralField::translated(std::span<const std::int64_t> shift) const {
    if (static_cast<int>(shift.size()) != dim())
        throw std::invalid_argument("translated: shift has wrong dimension");
    SpectralField out(sig_, m_);
    std::vector<std::int64_t> src(static_cast<std::size_t>(dim()));
    out.for_each_mode([&](std::span<const std::int64_t> k, Complex& v) {
        bool inside = true;
        for (std::size_t j = 0; j < src.size(); ++j) {
            src[j] = k[j] + shift[j];
            if (src[j] < -m_ || src[j] > m_) { inside = false; break; }
        }
        if (inside) v = at(src);
    });
    return out;
}

void scatter_to_grid(const SpectralField& f, GridFft& fft,
                     const std::function<Complex(std::span<const std::int64_t>)>* premultiply) {
    const int g = fft.grid_points();
    if (g < f.side())
        throw std::invalid_argument("scatter_to_grid: grid below Nyquist for the field box");
    fft.zero();
    auto* buf = fft.data();
    f.for_each_mode([&](std::span<const std::int64_t> k, const Complex& v) {
        if (v == Complex{0.0, 0.0} && premultiply == nullptr) return;
        std::size_t idx = 0;
        for (auto kj : k) {
            const std::int64_t wrapped = kj >= 0 ? kj : kj + g;
            idx = idx * static_cast<std::size_t>(g) + static_cast<std::size_t>(wrapped);
        }
        buf[idx] = premultiply != nullptr ? (*premultiply)(k) * v : v;
    });
}

std::vector<Complex> sample_spatial(const SpectralField& f, int grid_points) {
    GridFft fft(f.dim(), grid_points);
    scatter_to_grid(f, fft);
    fft.backward();
    return std::vector<Complex>(fft.data(), fft.data() + fft.size());
}

std::vector<Complex> sample_spatial_shifted(const SpectralField& f, int grid_points,
                                            std::span<const double> shift) {
    if (static_cast<int>(shift.size()) != f.dim())
        throw std::invalid_argument("sample_spatial_shifted: shift has wrong dimension");
    GridFft fft(f.dim(), grid_points);
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::function<Complex(std::span<const std::int64_t>)> mod =
        [&](std::span<const std::int64_t> k) {
            double phase = 0.0;
            for (std::size_t j = 0; j < k.size(); ++j)
                phase += static_cast<double>(k[j]) * shift[j];
            return std::polar(1.0, two_pi * phase);
        };
    scatter_to_grid(f, fft, &mod);
    fft.backward();
    return std::vector<Complex>(fft.data(), fft.data() + fft.size());
}

SpectralField field_from_samples(const Signature& sig, int box_halfwidth,
                                 std::span<const Complex> samples, int grid_points) {
    GridFft fft(sig.dim(), grid_points);
    if (samples.size() != fft.size())
        throw std::invalid_argument("field_from_samples: sample count does not match grid");
    if (grid_points < 2 * box_halfwidth + 1)
        throw std::invalid_argument("field_from_samples: grid below Nyquist");
    std::copy(samples.begin(), samples.end(), fft.data());
    fft.forward();
    SpectralField out(sig, box_halfwidth);
    const int g = grid_points;
    out.for_each_mode([&](std::span<const std::int64_t> k, Complex& v) {
        std::size_t idx = 0;
        for (auto kj : k) {
            const std::int64_t wrapped = kj >= 0 ? kj : kj + g;
            idx = idx * static_cast<std::size_t>(g) + static_cast<std::size_t>(wrapped);
        }
        v = fft.data()[idx];
    });
    return out;
}

std::string field_to_json(const SpectralField& f) {
    json j;
    j["signature"] = signature_to_json(f.sig());
    j["box"] = f.box_halfwidth();
    json coeffs = json::array();
    for (const auto& z : f.coeffs()) {
        coeffs.push_back(z.real());
        coeffs.push_back(z.imag());
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

SpectralField field_from_json(const std::string& text) {
    const json j = json::parse(text);
    Signature sig = signature_from_json(j.at("signature"));
    SpectralField out(sig, j.at("box").get<int>());
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != 2 * out.mode_count())
        throw std::invalid_argument("field_from_json: coefficient count mismatch");
    auto span = out.coeffs();
    for (std::size_t i = 0; i < span.size(); ++i)
        span[i] = Complex(coeffs[2 * i].get<double>(), coeffs[2 * i + 1].get<double>());
    return out;
}

namespace {

constexpr char kFieldMagic[8] = {'H', 'N', 'L', 'S', 'F', 'L', 'D', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint32_t>(b[off]) | (static_cast<std::uint32_t>(b[off + 1]) << 8) |
           (static_cast<std::uint32_t>(b[off + 2]) << 16) |
           (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

} // namespace

std::vector<std::uint8_t> field_to_binary(const SpectralField& f) {
    std::vector<std::uint8_t> out;
    out.reserve(16 + 4 * static_cast<std::size_t>(f.dim()) + 8 * f.mode_count());
    out.insert(out.end(), std::begin(kFieldMagic), std::end(kFieldMagic));
    put_u32(out, 1); // version
    put_u32(out, static_cast<std::uint32_t>(f.dim()));
    for (int j = 0; j < f.dim(); ++j)
        put_u32(out, static_cast<std::uint32_t>(f.box_halfwidth()));
    for (const auto& z : f.coeffs()) {
        const float re = static_cast<float>(z.real());
        const float im = static_cast<float>(z.imag());
        std::uint32_t bits;
        std::memcpy(&bits, &re, 4);
        put_u32(out, bits);
        std::memcpy(&bits, &im, 4);
        put_u32(out, bits);
    }
    return out;
}

SpectralField field_from_binary(std::span<const std::uint8_t> bytes, const Signature& sig) {
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kFieldMagic, 8) != 0)
        throw std::invalid_argument("field_from_binary: bad magic");
    if (get_u32(bytes, 8) != 1)
        throw std::invalid_argument("field_from_binary: unsupported version");
    const int d = static_cast<int>(get_u32(bytes, 12));
    if (d != sig.dim()) throw std::invalid_argument("field_from_binary: dimension mismatch");
    std::size_t off = 16;
    int m = -1;
    for (int j = 0; j < d; ++j) {
        const int mj = static_cast<int>(get_u32(bytes, off));
        off += 4;
        if (m < 0) m = mj;
        else if (m != mj)
            throw std::invalid_argument("field_from_binary: anisotropic boxes not supported");
    }
    SpectralField out(sig, m);
    if (bytes.size() != off + 8 * out.mode_count())
        throw std::invalid_argument("field_from_binary: payload size mismatch");
    auto span = out.coeffs();
    for (std::size_t i = 0; i < span.size(); ++i) {
        std::uint32_t rb = get_u32(bytes, off + 8 * i);
        std::uint32_t ib = get_u32(bytes, off + 8 * i + 4);
        float re, im;
        std::memcpy(&re, &rb, 4);
        std::memcpy(&im, &ib, 4);
        span[i] = Complex(re, im);
    }
    return out;
}

void save_field_binary(const SpectralField& f, const std::string& path) {
    const auto bytes = field_to_binary(f);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field_binary: cannot open " + path);
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
}

SpectralField load_field_binary(const std::string& path, const Signature& sig) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field_binary: cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                                    std::istreambuf_iterator<char>());
    return field_from_binary(bytes, sig);
}

} // namespace hnls
