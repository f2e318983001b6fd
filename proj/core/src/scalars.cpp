#include "postlie/scalars.hpp"

namespace postlie {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_reduce(std::int64_t n, std::uint32_t p) {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

// Inverse in GF(p) by Fermat.
std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw DivisionByZeroError{};
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldDesc FieldDesc::make(std::uint32_t p) {
    if (!is_prime(p)) throw NotPrimeError(p);
    FieldDesc f;
    f.p_ = p;
    f.deg_ = 1;
    return f;
}

FieldDesc FieldDesc::make(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (modulus.size() < 3 || modulus.size() > 4)
        throw ReducibleModulusError("modulus must have degree 2 or 3");
    const auto deg = static_cast<std::uint32_t>(modulus.size() - 1);

    // Normalize to a monic polynomial over GF(p).
    std::vector<std::uint32_t> m(modulus.size());
    for (std::size_t i = 0; i < modulus.size(); ++i) m[i] = modulus[i] % p;
    if (m[0] == 0) throw ReducibleModulusError("modulus has zero leading coefficient");
    const std::uint32_t lead_inv = inv_mod_p(m[0], p);
    for (auto& c : m) c = static_cast<std::uint32_t>(std::uint64_t(c) * lead_inv % p);

    // A polynomial of degree 2 or 3 is irreducible over GF(p) iff it has no
    // root in GF(p).
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t val = 0;
        for (const auto c : m) val = (val * x + c) % p;
        if (val == 0)
            throw ReducibleModulusError("modulus is reducible: it has root " + std::to_string(x) +
                                        " mod " + std::to_string(p));
    }

    FieldDesc f;
    f.p_ = p;
    f.deg_ = deg;
    f.modulus_ = m;
    // t^deg = -(lower-order part of the modulus)
    for (std::uint32_t i = 0; i < deg; ++i)
        f.red_[i] = (p - m[m.size() - 1 - i] % p) % p;
    return f;
}

std::uint64_t FieldDesc::order() const {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < deg_; ++i) n *= p_;
    return n;
}

Scalar FieldDesc::from_int(std::int64_t n) const {
    Scalar s;
    s.c[0] = mod_reduce(n, p_);
    return s;
}

Scalar FieldDesc::gen() const {
    if (deg_ < 2) throw std::invalid_argument("prime field has no extension generator");
    Scalar s;
    s.c[1] = 1;
    return s;
}

Scalar FieldDesc::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > deg_)
        throw std::invalid_argument("too many coefficients for field of degree " +
                                    std::to_string(deg_));
    Scalar s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.c[i] = mod_reduce(coeffs[i], p_);
    return s;
}

Scalar FieldDesc::add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    for (int i = 0; i < 3; ++i) s.c[i] = (a.c[i] + b.c[i]) % p_;
    return s;
}

Scalar FieldDesc::sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    for (int i = 0; i < 3; ++i) s.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
    return s;
}

Scalar FieldDesc::neg(const Scalar& a) const {
    Scalar s;
    for (int i = 0; i < 3; ++i) s.c[i] = (p_ - a.c[i]) % p_;
    return s;
}

Scalar FieldDesc::mul(const Scalar& a, const Scalar& b) const {
    // Schoolbook product, degree up to 4, then fold t^deg, t^(deg+1), ...
    // down using t^deg = red_.
    std::array<std::uint64_t, 5> prod{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod[i + j] += std::uint64_t(a.c[i]) * b.c[j];
    for (int k = 4; k >= static_cast<int>(deg_); --k) {
        const std::uint64_t hi = prod[k] % p_;
        prod[k] = 0;
        if (hi == 0) continue;
        // t^k = t^(k-deg) * t^deg; folding only touches strictly lower indices
        for (std::uint32_t i = 0; i < deg_; ++i) prod[k - deg_ + i] += hi * red_[i];
    }
    Scalar s;
    for (std::uint32_t i = 0; i < deg_; ++i) s.c[i] = static_cast<std::uint32_t>(prod[i] % p_);
    return s;
}

Scalar FieldDesc::pow(const Scalar& a, std::uint64_t e) const {
    Scalar result = one();
    Scalar base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Scalar FieldDesc::inv(const Scalar& a) const {
    if (is_zero(a)) throw DivisionByZeroError{};
    // a^(q-2) = a^(-1) in GF(q).
    return pow(a, order() - 2);
}

std::vector<Scalar> FieldDesc::all_elements() const {
    std::vector<Scalar> out;
    out.reserve(order());
    Scalar s;
    const std::uint32_t d = deg_;
    std::array<std::uint32_t, 3> idx{0, 0, 0};
    while (true) {
        for (std::uint32_t i = 0; i < 3; ++i) s.c[i] = idx[i];
        out.push_back(s);
        std::uint32_t i = 0;
        for (; i < d; ++i) {
            if (++idx[i] < p_) break;
            idx[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

std::string FieldDesc::to_string(const Scalar& a) const {
    if (deg_ == 1) return std::to_string(a.c[0]);
    std::string out;
    static const char* names[3] = {"", "t", "t^2"};
    for (int i = 0; i < 3; ++i) {
        if (a.c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || a.c[i] != 1) out += std::to_string(a.c[i]);
        if (i > 0 && a.c[i] != 1) out += "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace postlie
