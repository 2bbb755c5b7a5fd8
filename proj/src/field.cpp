#include "gac/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "gac/error.hpp"

namespace gac {

namespace {

// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t quo = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - quo * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - quo * s1);
    }
    std::int64_t s = s0 % static_cast<std::int64_t>(p);
    if (s < 0) s += p;
    return static_cast<std::uint32_t>(s);
}

// Remainder of f modulo g (g nonzero) over F_p.
PrimePoly poly_rem(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inv_mod(g.back(), p);
    trim(f);
    while (f.size() >= g.size()) {
        const std::uint32_t factor = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
        }
        trim(f);
    }
    return f;
}

std::pair<PrimePoly, PrimePoly> poly_divmod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
    trim(f);
    PrimePoly quo;
    if (f.size() < g.size()) return {quo, f};
    quo.assign(f.size() - g.size() + 1, 0);
    const std::uint32_t lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint32_t factor = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        quo[shift] = factor;
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
        }
        trim(f);
    }
    return {quo, f};
}

PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(out);
    return out;
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

PrimePoly digits(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
    PrimePoly out(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = code % p;
        code /= p;
    }
    return out;
}

std::uint32_t undigits(const PrimePoly& f, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

bool irreducible_over_prime(const PrimePoly& f, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint32_t c = 0; c < count; ++c) {
            PrimePoly g = digits(c, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
        PrimePoly f = digits(c, p, k);
        f.push_back(1);
        if (irreducible_over_prime(f, p)) return f;
    }
    throw Error("classification-bug", "no irreducible polynomial found");
}

// Inverse of a nonzero residue a modulo the irreducible m, via extended Euclid.
PrimePoly inv_residue(const PrimePoly& a, const PrimePoly& m, std::uint32_t p) {
    PrimePoly r0 = m, r1 = a, s0, s1{1};
    trim(r1);
    while (!r1.empty()) {
        auto [quo, rem] = poly_divmod(r0, r1, p);
        PrimePoly s2 = poly_sub(s0, poly_mul(quo, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since m is irreducible
    const std::uint32_t scale = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * scale % p;
    return poly_rem(s0, m, p);
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::shared_ptr<const FieldSpec::Impl> FieldSpec::build(std::uint32_t p, std::uint32_t k) {
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    impl->q = q;
    impl->add.resize(q * q);
    impl->mul.resize(q * q);
    impl->neg.resize(q);
    impl->inv.assign(q, 0);

    if (k == 1) {
        for (std::uint32_t a = 0; a < q; ++a) {
            impl->neg[a] = static_cast<Code>((p - a) % p);
            if (a != 0) impl->inv[a] = static_cast<Code>(inv_mod(a, p));
            for (std::uint32_t b = 0; b < q; ++b) {
                impl->add[a * q + b] = static_cast<Code>((a + b) % p);
                impl->mul[a * q + b] = static_cast<Code>(a * b % p);
            }
        }
    } else {
        impl->modulus = smallest_irreducible(p, k);
        for (std::uint32_t a = 0; a < q; ++a) {
            const PrimePoly da = digits(a, p, k);
            PrimePoly na(k);
            for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
            impl->neg[a] = static_cast<Code>(undigits(na, p));
            if (a != 0) {
                PrimePoly inv = inv_residue(da, impl->modulus, p);
                impl->inv[a] = static_cast<Code>(undigits(inv, p));
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                const PrimePoly db = digits(b, p, k);
                PrimePoly sum(k);
                for (std::uint32_t i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
                impl->add[a * q + b] = static_cast<Code>(undigits(sum, p));
                PrimePoly prod = poly_rem(poly_mul(da, db, p), impl->modulus, p);
                impl->mul[a * q + b] = static_cast<Code>(undigits(prod, p));
            }
        }
    }

    for (std::uint32_t g = 1; g < q; ++g) {
        std::uint32_t order = 1;
        std::uint32_t x = g;
        while (x != 1) {
            x = impl->mul[x * q + g];
            ++order;
        }
        if (order == q - 1) {
            impl->primitive = static_cast<Code>(g);
            break;
        }
    }
    return impl;
}

FieldSpec field_make(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error("not-prime", std::to_string(p) + " is not prime");
    if (k < 1) throw Error("bad-degree", "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw Error("field-too-large", "fields are limited to " + std::to_string(kMaxFieldOrder) +
                                               " elements");
        }
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldSpec::Impl>> interned;
    std::lock_guard lock(mutex);
    auto& slot = interned[{p, k}];
    if (!slot) slot = FieldSpec::build(p, k);
    return FieldSpec(slot);
}

FieldSpec field_of_order(std::uint32_t q) {
    if (q < 2) throw Error("not-prime-power", std::to_string(q) + " is not a prime power");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw Error("not-prime-power", std::to_string(q) + " is not a prime power");
    return field_make(p, k);
}

Code FieldSpec::inv(Code a) const {
    if (a == 0) throw Error("zero-divisor", "inverse of zero");
    return impl_->inv[a];
}

FieldElement FieldSpec::element(std::uint32_t code) const { return FieldElement(*this, code); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

std::string FieldSpec::modulus_string() const {
    const auto& m = impl_->modulus;
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(m[i]);
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out;
}

FieldElement::FieldElement(FieldSpec spec, std::uint32_t code) : spec_(std::move(spec)), code_(0) {
    if (code >= spec_.q()) {
        throw Error("bad-code", std::to_string(code) + " is not an element code of F_" +
                                    std::to_string(spec_.q()));
    }
    code_ = static_cast<Code>(code);
}

void FieldElement::require_same(const FieldElement& rhs) const {
    if (spec_ != rhs.spec_) throw Error("field-mismatch", "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same(rhs);
    return FieldElement(spec_, spec_.add(code_, rhs.code_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same(rhs);
    return FieldElement(spec_, spec_.sub(code_, rhs.code_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same(rhs);
    return FieldElement(spec_, spec_.mul(code_, rhs.code_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same(rhs);
    return FieldElement(spec_, spec_.div(code_, rhs.code_));
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, spec_.neg(code_)); }

FieldElement FieldElement::inverse() const { return FieldElement(spec_, spec_.inv(code_)); }

}  // namespace gac
