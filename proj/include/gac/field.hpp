#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gac {

/// Raw element code in [0, q). For q = p^k the base-p digits of the code are
/// the coefficients of the element as a polynomial in the generator, with the
/// least significant digit holding the constant term.
using Code = std::uint8_t;

inline constexpr std::uint32_t kMaxFieldOrder = 256;

class FieldElement;

/**
 * The finite field F_q, q = p^k.
 *
 * Handles are cheap to copy and immutable. Fields are interned, so two
 * handles for the same (p, k) share one set of lookup tables and compare
 * equal by pointer.
 *
 * For k > 1 the field is F_p[t]/(m) where m is the smallest monic irreducible
 * of degree k, polynomials being ordered by their ascending coefficient vector
 * read as a base-p integer (constant coefficient least significant).
 */
class FieldSpec {
public:
    std::uint32_t p() const noexcept { return impl_->p; }
    std::uint32_t k() const noexcept { return impl_->k; }
    std::uint32_t q() const noexcept { return impl_->q; }

    /// Coefficients of the modulus over F_p, ascending; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }

    Code add(Code a, Code b) const noexcept { return impl_->add[a * impl_->q + b]; }
    Code sub(Code a, Code b) const noexcept { return impl_->add[a * impl_->q + impl_->neg[b]]; }
    Code mul(Code a, Code b) const noexcept { return impl_->mul[a * impl_->q + b]; }
    Code neg(Code a) const noexcept { return impl_->neg[a]; }
    /// Multiplicative inverse of a nonzero code; throws "zero-divisor" on 0.
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }

    /// Smallest code generating the multiplicative group.
    Code primitive_element() const noexcept { return impl_->primitive; }

    FieldElement element(std::uint32_t code) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// Canonical text form of the modulus ("c0+c1*t+..."), or "" for k = 1.
    std::string modulus_string() const;

    bool operator==(const FieldSpec& other) const noexcept { return impl_ == other.impl_; }
    bool operator!=(const FieldSpec& other) const noexcept { return impl_ != other.impl_; }

private:
    struct Impl {
        std::uint32_t p = 0;
        std::uint32_t k = 0;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<Code> add;
        std::vector<Code> mul;
        std::vector<Code> neg;
        std::vector<Code> inv;
        Code primitive = 1;
    };

    explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    static std::shared_ptr<const Impl> build(std::uint32_t p, std::uint32_t k);

    std::shared_ptr<const Impl> impl_;

    friend FieldSpec field_make(std::uint32_t p, std::uint32_t k);
};

/// Builds (or fetches the interned) F_{p^k}.
/// Errors: "not-prime", "bad-degree", "field-too-large" (q > 256).
FieldSpec field_make(std::uint32_t p, std::uint32_t k);

/// Builds the field of order q, q a prime power. Errors as field_make, plus
/// "not-prime-power".
FieldSpec field_of_order(std::uint32_t q);

bool is_prime(std::uint32_t n) noexcept;

/// A value of F_q bound to its field.
class FieldElement {
public:
    FieldElement(FieldSpec spec, std::uint32_t code);

    const FieldSpec& spec() const noexcept { return spec_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& rhs) const noexcept {
        return spec_ == rhs.spec_ && code_ == rhs.code_;
    }
    bool operator!=(const FieldElement& rhs) const noexcept { return !(*this == rhs); }

private:
    void require_same(const FieldElement& rhs) const;

    FieldSpec spec_;
    Code code_;
};

}  // namespace gac
