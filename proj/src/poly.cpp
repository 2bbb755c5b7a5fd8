#include "gac/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "gac/error.hpp"

namespace gac {

namespace {

void trim(std::vector<Code>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Monic irreducibles including t, per field, grown on demand. Snapshots are
// immutable so readers can hold them without the lock.
struct IrreducibleCache {
    std::size_t degree = 0;
    std::shared_ptr<const std::vector<PolyFq>> polys = std::make_shared<std::vector<PolyFq>>();
};

// All cached irreducibles; covers at least degree d, sorted by CanonicalOrder.
std::shared_ptr<const std::vector<PolyFq>> all_irreducibles(const FieldSpec& spec, std::size_t d) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, IrreducibleCache> caches;
    std::lock_guard lock(mutex);
    auto& cache = caches[{spec.p(), spec.k()}];
    if (cache.degree >= d) return cache.polys;
    auto polys = std::make_shared<std::vector<PolyFq>>(*cache.polys);
    const std::uint32_t q = spec.q();
    for (std::size_t e = cache.degree + 1; e <= d; ++e) {
        std::vector<Code> digits(e, 0);
        // monic polynomials of degree e in base-q counting order
        while (true) {
            std::vector<Code> coeffs = digits;
            coeffs.push_back(1);
            PolyFq f(spec, coeffs);
            bool irreducible = true;
            for (const auto& g : *polys) {
                if (2 * g.deg() > e) break;
                if (divmod(f, g).second.is_zero()) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) polys->push_back(std::move(f));
            std::size_t i = 0;
            while (i < e && digits[i] == q - 1) digits[i++] = 0;
            if (i == e) break;
            ++digits[i];
        }
    }
    cache.degree = d;
    cache.polys = polys;
    return cache.polys;
}

}  // namespace

PolyFq::PolyFq(FieldSpec spec, std::vector<Code> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (Code c : coeffs_) {
        if (c >= spec_.q()) throw Error("bad-code", "coefficient out of range");
    }
    trim(coeffs_);
}

PolyFq PolyFq::constant(const FieldSpec& spec, Code c) { return PolyFq(spec, {c}); }

PolyFq PolyFq::linear(const FieldSpec& spec, Code root) { return PolyFq(spec, {spec.neg(root), 1}); }

PolyFq PolyFq::t(const FieldSpec& spec) { return PolyFq(spec, {0, 1}); }

std::size_t PolyFq::deg() const {
    if (coeffs_.empty()) throw Error("zero-polynomial", "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

PolyFq PolyFq::monic() const {
    if (coeffs_.empty()) return *this;
    return scaled(spec_.inv(coeffs_.back()));
}

Code PolyFq::eval(Code x) const noexcept {
    Code acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = spec_.add(spec_.mul(acc, x), coeffs_[i]);
    return acc;
}

void PolyFq::require_same(const PolyFq& rhs) const {
    if (spec_ != rhs.spec_) throw Error("field-mismatch", "polynomials over different fields");
}

PolyFq PolyFq::operator+(const PolyFq& rhs) const {
    require_same(rhs);
    std::vector<Code> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = spec_.add(coeff(i), rhs.coeff(i));
    return PolyFq(spec_, std::move(out));
}

PolyFq PolyFq::operator-(const PolyFq& rhs) const {
    require_same(rhs);
    std::vector<Code> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = spec_.sub(coeff(i), rhs.coeff(i));
    return PolyFq(spec_, std::move(out));
}

PolyFq PolyFq::operator*(const PolyFq& rhs) const {
    require_same(rhs);
    if (is_zero() || rhs.is_zero()) return PolyFq(spec_);
    std::vector<Code> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = spec_.add(out[i + j], spec_.mul(coeffs_[i], rhs.coeffs_[j]));
        }
    }
    return PolyFq(spec_, std::move(out));
}

PolyFq PolyFq::scaled(Code c) const {
    std::vector<Code> out(coeffs_);
    for (auto& x : out) x = spec_.mul(x, c);
    return PolyFq(spec_, std::move(out));
}

std::string PolyFq::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(coeffs_[i]);
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out;
}

bool CanonicalOrder::operator()(const PolyFq& a, const PolyFq& b) const noexcept {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    for (std::size_t i = ca.size(); i-- > 0;) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

std::pair<PolyFq, PolyFq> divmod(const PolyFq& f, const PolyFq& g) {
    if (f.spec() != g.spec()) throw Error("field-mismatch", "polynomials over different fields");
    if (g.is_zero()) throw Error("zero-divisor", "division by the zero polynomial");
    const FieldSpec& spec = f.spec();
    std::vector<Code> rem = f.coeffs();
    const auto& gc = g.coeffs();
    if (rem.size() < gc.size()) return {PolyFq(spec), f};
    std::vector<Code> quo(rem.size() - gc.size() + 1, 0);
    const Code lead_inv = spec.inv(gc.back());
    while (rem.size() >= gc.size()) {
        const Code factor = spec.mul(rem.back(), lead_inv);
        const std::size_t shift = rem.size() - gc.size();
        quo[shift] = factor;
        for (std::size_t i = 0; i < gc.size(); ++i) {
            rem[shift + i] = spec.sub(rem[shift + i], spec.mul(factor, gc[i]));
        }
        trim(rem);
    }
    return {PolyFq(spec, std::move(quo)), PolyFq(spec, std::move(rem))};
}

PolyFq gcd(const PolyFq& f, const PolyFq& g) {
    PolyFq a = f;
    PolyFq b = g;
    while (!b.is_zero()) {
        PolyFq r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyFq pow_mod(const PolyFq& f, std::uint64_t e, const PolyFq& m) {
    PolyFq result = divmod(PolyFq::constant(f.spec(), 1), m).second;
    PolyFq base = divmod(f, m).second;
    while (e > 0) {
        if (e & 1U) result = divmod(result * base, m).second;
        base = divmod(base * base, m).second;
        e >>= 1U;
    }
    return result;
}

std::vector<PolyFq> irreducibles_up_to(const FieldSpec& spec, std::size_t d) {
    std::vector<PolyFq> out;
    const PolyFq t = PolyFq::t(spec);
    for (const auto& f : *all_irreducibles(spec, d)) {
        if (f.deg() > d) break;
        if (f != t) out.push_back(f);
    }
    return out;
}

bool is_irreducible(const PolyFq& f) {
    if (f.is_zero() || f.deg() == 0) return false;
    const std::size_t half = f.deg() / 2;
    for (const auto& g : *all_irreducibles(f.spec(), half)) {
        if (g.deg() > half) break;
        if (divmod(f, g).second.is_zero()) return false;
    }
    return true;
}

Factorization poly_factor(const PolyFq& f) {
    if (f.is_zero()) throw Error("zero-polynomial", "cannot factor the zero polynomial");
    Factorization out;
    out.unit = f.leading();
    PolyFq rest = f.monic();
    if (rest.deg() == 0) return out;
    const auto candidates = all_irreducibles(f.spec(), rest.deg() / 2);
    for (const auto& g : *candidates) {
        if (2 * g.deg() > rest.deg()) break;
        unsigned exponent = 0;
        while (true) {
            auto [quo, rem] = divmod(rest, g);
            if (!rem.is_zero()) break;
            rest = std::move(quo);
            ++exponent;
        }
        if (exponent > 0) out.factors.push_back({g, exponent});
    }
    if (rest.deg() > 0) {
        // no factor of degree <= deg/2 remains, so the cofactor is irreducible
        auto pos = std::find_if(out.factors.begin(), out.factors.end(),
                                [&](const Factor& x) { return x.poly == rest; });
        if (pos != out.factors.end()) {
            ++pos->exponent;
        } else {
            out.factors.push_back({rest, 1});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return CanonicalOrder{}(a.poly, b.poly); });
    return out;
}

PolyFq parse_poly(const FieldSpec& spec, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw Error("parse", "empty polynomial");
    std::vector<Code> coeffs;
    auto add_term = [&](Code c, std::size_t power) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] = spec.add(coeffs[power], c);
    };
    std::size_t i = 0;
    auto read_int = [&](std::uint64_t& value) {
        const std::size_t start = i;
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > 1'000'000) throw Error("parse", "number too large in '" + s + "'");
            ++i;
        }
        if (i == start) return false;
        value = v;
        return true;
    };
    bool first = true;
    while (i < s.size()) {
        bool negate = false;
        if (s[i] == '+' || s[i] == '-') {
            negate = s[i] == '-';
            ++i;
        } else if (!first) {
            throw Error("parse", "expected '+' or '-' in '" + s + "'");
        }
        first = false;
        std::uint64_t coef = 1;
        const bool has_coef = read_int(coef);
        if (has_coef && coef >= spec.q()) {
            throw Error("parse", "coefficient " + std::to_string(coef) + " is not an element code");
        }
        std::size_t power = 0;
        if (has_coef && i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && (s[i] == 't' || s[i] == 'x')) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::uint64_t e = 0;
                if (!read_int(e)) throw Error("parse", "missing exponent in '" + s + "'");
                power = static_cast<std::size_t>(e);
            }
        } else if (!has_coef) {
            throw Error("parse", "malformed term in '" + s + "'");
        }
        Code c = static_cast<Code>(coef);
        if (negate) c = spec.neg(c);
        add_term(c, power);
    }
    return PolyFq(spec, std::move(coeffs));
}

}  // namespace gac
