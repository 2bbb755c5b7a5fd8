#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gac/field.hpp"

namespace gac {

/// Polynomial over F_q with ascending coefficients and no trailing zeros.
/// The zero polynomial has no coefficients and no degree.
class PolyFq {
public:
    explicit PolyFq(FieldSpec spec) : spec_(std::move(spec)) {}
    PolyFq(FieldSpec spec, std::vector<Code> coeffs);

    static PolyFq constant(const FieldSpec& spec, Code c);
    /// t - c
    static PolyFq linear(const FieldSpec& spec, Code root);
    static PolyFq t(const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<Code>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// nullopt stands for the degree of the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const;

    Code coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Code{0}; }
    Code leading() const noexcept { return coeffs_.empty() ? Code{0} : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    PolyFq monic() const;
    Code eval(Code x) const noexcept;

    PolyFq operator+(const PolyFq& rhs) const;
    PolyFq operator-(const PolyFq& rhs) const;
    PolyFq operator*(const PolyFq& rhs) const;
    PolyFq scaled(Code c) const;

    bool operator==(const PolyFq& rhs) const noexcept {
        return spec_ == rhs.spec_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const PolyFq& rhs) const noexcept { return !(*this == rhs); }

    /// Canonical text form "c0+c1*t+c2*t^2+..." with decimal codes.
    std::string to_string() const;

private:
    void require_same(const PolyFq& rhs) const;

    FieldSpec spec_;
    std::vector<Code> coeffs_;
};

/// Orders polynomials by degree, then by coefficient vector read as a base-q
/// integer with the constant term least significant. This is the key order
/// for Phi_q everywhere in the library.
struct CanonicalOrder {
    bool operator()(const PolyFq& a, const PolyFq& b) const noexcept;
};

/// Quotient and remainder. Throws "zero-divisor" when g is zero.
std::pair<PolyFq, PolyFq> divmod(const PolyFq& f, const PolyFq& g);
/// Monic gcd (zero when both inputs are zero).
PolyFq gcd(const PolyFq& f, const PolyFq& g);
/// f^e mod m.
PolyFq pow_mod(const PolyFq& f, std::uint64_t e, const PolyFq& m);

/// All monic irreducibles of degree <= d other than t (Phi_q truncated at d),
/// sorted by CanonicalOrder.
std::vector<PolyFq> irreducibles_up_to(const FieldSpec& spec, std::size_t d);

bool is_irreducible(const PolyFq& f);

struct Factor {
    PolyFq poly;
    unsigned exponent = 0;
};

/// f = unit * prod poly_i^exponent_i with monic irreducible poly_i in
/// CanonicalOrder.
struct Factorization {
    Code unit = 0;
    std::vector<Factor> factors;
};

/// Complete factorization by sieved trial division. Throws "zero-polynomial".
Factorization poly_factor(const PolyFq& f);

/// Parses either the canonical form or a free form such as "t^2+t+1",
/// "t-1", "2*t+3". Integers are element codes; '-' negates in the field.
/// Throws "parse".
PolyFq parse_poly(const FieldSpec& spec, std::string_view text);

}  // namespace gac
