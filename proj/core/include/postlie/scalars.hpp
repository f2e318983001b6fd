#pragma once

// Arithmetic in finite fields GF(p) and GF(p^k) for k = 2, 3.
//
// A Scalar is a polynomial of degree < k in a fixed generator t, stored as a
// coefficient array [c0, c1, c2] meaning c0 + c1*t + c2*t^2 with 0 <= ci < p.
// All arithmetic goes through a FieldDesc, which owns the characteristic and
// the (monic, irreducible) modulus that defines the extension.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace postlie {

struct NotPrimeError : std::invalid_argument {
    explicit NotPrimeError(std::uint64_t p)
        : std::invalid_argument("field characteristic must be prime, got " + std::to_string(p)) {}
};

struct ReducibleModulusError : std::invalid_argument {
    explicit ReducibleModulusError(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero in finite field") {}
};

struct Scalar {
    // coefficients of 1, t, t^2 (unused high entries are zero)
    std::array<std::uint32_t, 3> c{0, 0, 0};

    friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

class FieldDesc {
  public:
    // Default-constructed descriptors are placeholders; build real ones with
    // make().
    FieldDesc() = default;

    // Prime field GF(p).
    static FieldDesc make(std::uint32_t p);

    // Extension field GF(p^k) defined by a monic irreducible modulus of
    // degree k in {2, 3}, given leading coefficient first, constant last.
    static FieldDesc make(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return deg_; }
    std::uint64_t order() const;
    // Modulus coefficients, leading first; empty for a prime field.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Scalar zero() const { return Scalar{}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(std::int64_t n) const;
    // The generator t of the extension (throws for prime fields of degree 1).
    Scalar gen() const;
    // Build a scalar from coefficients of 1, t, t^2, ....
    Scalar from_coeffs(const std::vector<std::int64_t>& coeffs) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, std::uint64_t e) const;
    // x -> x^p, the canonical field endomorphism.
    Scalar frobenius(const Scalar& a) const { return pow(a, p_); }

    bool is_zero(const Scalar& a) const { return a == Scalar{}; }

    // All field elements in a fixed order (for exhaustive checks).
    std::vector<Scalar> all_elements() const;

    std::string to_string(const Scalar& a) const;

    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

  private:
    std::uint32_t p_ = 0;
    std::uint32_t deg_ = 1;
    std::vector<std::uint32_t> modulus_;   // leading first; empty for deg 1
    std::array<std::uint32_t, 3> red_{0, 0, 0};  // t^deg = red_[0] + red_[1] t + red_[2] t^2
};

}  // namespace postlie
