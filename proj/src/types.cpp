#include "gac/types.hpp"

#include <algorithm>
#include <functional>

#include "gac/error.hpp"

namespace gac {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    parts_.erase(std::remove(parts_.begin(), parts_.end(), 0U), parts_.end());
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::size() const noexcept {
    unsigned total = 0;
    for (unsigned x : parts_) total += x;
    return total;
}

std::map<unsigned, unsigned> Partition::multiplicities() const {
    std::map<unsigned, unsigned> out;
    for (unsigned x : parts_) ++out[x];
    return out;
}

unsigned Partition::multiplicity(unsigned part) const noexcept {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<unsigned> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<unsigned> out;
    if (parts_.empty()) return Partition();
    for (unsigned j = 1; j <= parts_.front(); ++j) {
        unsigned count = 0;
        for (unsigned x : parts_) count += x >= j ? 1 : 0;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

PolyFq unipotent_poly(const FieldSpec& spec) { return PolyFq::linear(spec, 1); }

Partition GLType::at(const PolyFq& f) const {
    auto it = entries_.find(f);
    return it == entries_.end() ? Partition() : it->second;
}

void GLType::set(const PolyFq& f, const Partition& parts) {
    if (f.spec() != spec_) throw Error("field-mismatch", "polynomial over a different field");
    if (!f.is_monic() || f == PolyFq::t(spec_) || !is_irreducible(f)) {
        throw Error("bad-polynomial", f.to_string() + " is not in Phi_q");
    }
    if (parts.empty()) {
        entries_.erase(f);
    } else {
        entries_.insert_or_assign(f, parts);
    }
}

Partition GLType::unipotent() const { return at(unipotent_poly(spec_)); }

void GLType::set_unipotent(const Partition& parts) {
    const PolyFq e = unipotent_poly(spec_);
    if (parts.empty()) {
        entries_.erase(e);
    } else {
        entries_.insert_or_assign(e, parts);
    }
}

unsigned GLType::degree() const {
    unsigned total = 0;
    for (const auto& [f, parts] : entries_) total += static_cast<unsigned>(f.deg()) * parts.size();
    return total;
}

bool GLType::operator==(const GLType& rhs) const noexcept {
    if (spec_ != rhs.spec_ || entries_.size() != rhs.entries_.size()) return false;
    auto a = entries_.begin();
    auto b = rhs.entries_.begin();
    for (; a != entries_.end(); ++a, ++b) {
        if (a->first != b->first || a->second != b->second) return false;
    }
    return true;
}

bool GLType::operator<(const GLType& rhs) const noexcept {
    CanonicalOrder less;
    auto a = entries_.begin();
    auto b = rhs.entries_.begin();
    for (; a != entries_.end() && b != rhs.entries_.end(); ++a, ++b) {
        if (less(a->first, b->first)) return true;
        if (less(b->first, a->first)) return false;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == entries_.end() && b != rhs.entries_.end();
}

std::string GLType::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [f, parts] : entries_) {
        if (!first) out += ", ";
        first = false;
        out += f.to_string() + ":" + parts.to_string();
    }
    return out + "}";
}

bool GAType::operator<(const GAType& rhs) const noexcept {
    if (flavor != rhs.flavor) return flavor < rhs.flavor;
    if (base != rhs.base) return base < rhs.base;
    return k < rhs.k;
}

std::string GAType::to_string() const {
    return std::string(flavor == Flavor::plain ? "plain" : "modified") + "(" + base.to_string() + ", " +
           std::to_string(k) + ")";
}

unsigned gl_degree(const GLType& lambda) { return lambda.degree(); }

GLType modify_type(const GLType& lambda) {
    GLType out = lambda;
    std::vector<unsigned> parts;
    const Partition e = lambda.unipotent();
    for (unsigned x : e.parts()) parts.push_back(x - 1);
    out.set_unipotent(Partition(std::move(parts)));
    return out;
}

GLType inflate_type(const GLType& mu, unsigned m) {
    const Partition e = mu.unipotent();
    const unsigned need = mu.degree() + static_cast<unsigned>(e.length());
    if (m < need) {
        throw Error("not-inflatable", mu.to_string() + " needs degree at least " + std::to_string(need));
    }
    std::vector<unsigned> parts;
    for (unsigned x : e.parts()) parts.push_back(x + 1);
    parts.insert(parts.end(), m - need, 1U);
    GLType out = mu;
    out.set_unipotent(Partition(std::move(parts)));
    return out;
}

GLType tilde_type(const GLType& lambda, unsigned k) {
    std::vector<unsigned> parts = lambda.unipotent().parts();
    if (k == 0) {
        parts.push_back(1);
    } else {
        auto it = std::find(parts.begin(), parts.end(), k);
        if (it == parts.end()) {
            throw Error("invalid-shift", std::to_string(k) + " is not a part of " + lambda.unipotent().to_string());
        }
        *it = k + 1;
    }
    GLType out = lambda;
    out.set_unipotent(Partition(std::move(parts)));
    return out;
}

GLType hat_type(const GLType& lambda, unsigned k) {
    if (!is_valid_pair(GAType{lambda, k, Flavor::modified})) {
        throw Error("invalid-shift", "(" + lambda.to_string() + ", " + std::to_string(k) + ") is not a modified pair");
    }
    return k == 0 ? lambda : tilde_type(lambda, k - 1);
}

bool is_valid_pair(const GAType& pair) {
    const Partition e = pair.base.unipotent();
    if (pair.flavor == Flavor::plain) return pair.k == 0 || e.multiplicity(pair.k) > 0;
    return pair.k <= 1 || e.multiplicity(pair.k - 1) > 0;
}

GAType to_modified(const GAType& pair) {
    if (pair.flavor == Flavor::modified) return pair;
    return GAType{modify_type(pair.base), pair.k, Flavor::modified};
}

unsigned affine_degree(const GAType& pair) {
    const GAType m = to_modified(pair);
    return m.base.degree() + (m.k >= 1 ? 1U : 0U);
}

std::size_t gl_min_n(const GLType& lambda) { return lambda.degree() + lambda.unipotent().length(); }

std::size_t ga_min_n(const GAType& pair) {
    const GAType m = to_modified(pair);
    const std::size_t base = m.base.degree() + m.base.unipotent().length();
    return base + (m.k == 1 ? 2 : 1);
}

bool gl_defined_at(const GLType& lambda, std::size_t n) { return gl_min_n(lambda) <= n; }

bool ga_defined_at(const GAType& pair, std::size_t n) { return is_valid_pair(to_modified(pair)) && ga_min_n(pair) <= n; }

GLType gl_plain_at(const GLType& lambda, std::size_t n) {
    if (!gl_defined_at(lambda, n)) {
        throw Error("undefined-at-n", lambda.to_string() + " is empty in GL_" + std::to_string(n) +
                                          "; needs n >= " + std::to_string(gl_min_n(lambda)));
    }
    return inflate_type(lambda, static_cast<unsigned>(n));
}

GAType ga_plain_at(const GAType& pair, std::size_t n) {
    const GAType m = to_modified(pair);
    if (!is_valid_pair(m)) throw Error("invalid-shift", m.to_string() + " is not a modified pair");
    if (!ga_defined_at(m, n)) {
        throw Error("undefined-at-n", m.to_string() + " is empty in GA_" + std::to_string(n) + "; needs n >= " +
                                          std::to_string(ga_min_n(m)));
    }
    return GAType{inflate_type(m.base, static_cast<unsigned>(n - 1)), m.k, Flavor::plain};
}

MatFq companion_matrix(const PolyFq& f) {
    const FieldSpec& spec = f.spec();
    if (!f.is_monic() || f.deg() == 0) throw Error("bad-polynomial", "companion of " + f.to_string());
    const std::size_t d = f.deg();
    MatFq out(spec, d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) out(i, i + 1) = 1;
    for (std::size_t j = 0; j < d; ++j) out(d - 1, j) = spec.neg(f.coeff(j));
    return out;
}

MatFq jordan_block(const PolyFq& f, unsigned m) {
    const MatFq c = companion_matrix(f);
    const std::size_t d = c.rows();
    MatFq out(f.spec(), d * m, d * m);
    for (unsigned b = 0; b < m; ++b) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) out(b * d + i, b * d + j) = c(i, j);
            if (b + 1 < m) out(b * d + i, (b + 1) * d + i) = 1;
        }
    }
    return out;
}

namespace {

void place(MatFq& target, const MatFq& block, std::size_t offset) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) target(offset + i, offset + j) = block(i, j);
    }
}

}  // namespace

MatFq canonical_rep_gl(const GLType& lambda) {
    const FieldSpec& spec = lambda.spec();
    MatFq out(spec, lambda.degree(), lambda.degree());
    std::size_t offset = 0;
    const PolyFq e = unipotent_poly(spec);
    for (const auto& [part, count] : lambda.unipotent().multiplicities()) {
        const MatFq block = jordan_block(e, part);
        for (unsigned c = 0; c < count; ++c) {
            place(out, block, offset);
            offset += part;
        }
    }
    for (const auto& [f, parts] : lambda.entries()) {
        if (f == e) continue;
        for (unsigned part : parts.parts()) {
            const MatFq block = jordan_block(f, part);
            place(out, block, offset);
            offset += block.rows();
        }
    }
    return out;
}

std::size_t unipotent_block_end(const GLType& lambda, unsigned k) {
    std::size_t end = 0;
    for (const auto& [part, count] : lambda.unipotent().multiplicities()) {
        if (part > k) break;
        end += static_cast<std::size_t>(part) * count;
    }
    return end - 1;
}

MatFq canonical_rep_ga(const GAType& pair, std::size_t n) {
    if (pair.flavor != Flavor::plain) {
        throw Error("invalid-representative", "representatives are built from plain pairs");
    }
    if (n == 0 || pair.base.degree() + 1 != n) {
        throw Error("invalid-representative", pair.to_string() + " does not have degree " + std::to_string(n - 1));
    }
    if (!is_valid_pair(pair)) throw Error("invalid-representative", pair.to_string() + " is not a valid pair");
    const FieldSpec& spec = pair.base.spec();
    MatFq out(spec, n, n);
    out(0, 0) = 1;
    place(out, canonical_rep_gl(pair.base), 1);
    if (pair.k >= 1) out(1 + unipotent_block_end(pair.base, pair.k), 0) = 1;
    return out;
}

std::vector<GLType> enumerate_gl_types(std::size_t n, const FieldSpec& spec) {
    std::vector<GLType> out;
    const auto phi = irreducibles_up_to(spec, std::max<std::size_t>(n, 1));
    GLType current(spec);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t index, std::size_t rest) {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        if (index == phi.size()) return;
        const PolyFq& f = phi[index];
        const std::size_t d = f.deg();
        for (std::size_t w = rest / d; w >= 1; --w) {
            for (const auto& parts : partitions_of(static_cast<unsigned>(w))) {
                current.set(f, parts);
                rec(index + 1, rest - w * d);
            }
            current.set(f, Partition());
        }
        rec(index + 1, rest);
    };
    rec(0, n);
    return out;
}

std::vector<GAType> enumerate_ga_types(std::size_t n, const FieldSpec& spec, Flavor flavor) {
    if (n == 0) throw Error("bad-degree", "GA_n needs n >= 1");
    std::vector<GAType> out;
    for (const auto& lambda : enumerate_gl_types(n - 1, spec)) {
        std::vector<unsigned> shifts{0};
        for (const auto& [part, count] : lambda.unipotent().multiplicities()) shifts.push_back(part);
        for (unsigned k : shifts) {
            GAType pair{lambda, k, Flavor::plain};
            out.push_back(flavor == Flavor::plain ? pair : to_modified(pair));
        }
    }
    return out;
}

}  // namespace gac
