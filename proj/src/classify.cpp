#include "gac/classify.hpp"

#include <cstdlib>

#include "gac/error.hpp"

namespace gac {

namespace {

using u128 = unsigned __int128;

constexpr u128 kSaturated = ~static_cast<u128>(0);

u128 sat_mul(u128 a, u128 b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

// Group order, or kSaturated when it does not fit in 128 bits.
u128 order_wide(const GroupId& gid) {
    const u128 q = gid.spec.q();
    // prod_{i<n} (q^n - q^i) = q^{n(n-1)/2} prod_{m=1..n} (q^m - 1)
    auto gl_order = [&](std::size_t n) {
        u128 total = 1;
        u128 qm = 1;
        for (std::size_t m = 1; m <= n; ++m) {
            qm = sat_mul(qm, q);
            if (qm == kSaturated) return kSaturated;
            total = sat_mul(total, qm - 1);
        }
        for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) total = sat_mul(total, q);
        return total;
    };
    if (gid.kind == GroupKind::GL) return gl_order(gid.n);
    u128 total = gl_order(gid.n - 1);
    for (std::size_t i = 0; i + 1 < gid.n; ++i) total = sat_mul(total, q);
    return total;
}

std::string wide_string(u128 x) {
    if (x == kSaturated) return "more than 2^128";
    if (x == 0) return "0";
    std::string out;
    while (x > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return out;
}

// First row (1, 0, ..., 0).
bool is_affine_shape(const MatFq& a) {
    if (!a.is_square() || a.rows() == 0 || a(0, 0) != 1) return false;
    for (std::size_t j = 1; j < a.cols(); ++j) {
        if (a(0, j) != 0) return false;
    }
    return true;
}

void check_budget(const GroupId& gid, std::uint64_t budget) {
    if (budget == 0) budget = default_element_budget();
    if (order_wide(gid) > budget) {
        throw Error("too-large", gid.name() + " has " + wide_string(order_wide(gid)) + " elements, budget is " +
                                     std::to_string(budget));
    }
}

// Row vectors of F_q^n in base-q counting order, first entry most significant.
bool next_vector(std::vector<Code>& v, std::uint32_t q) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] + 1U < q) {
            ++v[i];
            return true;
        }
        v[i] = 0;
    }
    return false;
}

// Invertible matrices by choosing rows outside the span of earlier rows.
void gl_rows(const FieldSpec& spec, std::size_t n, std::vector<Code>& entries,
             std::vector<std::pair<std::size_t, std::vector<Code>>>& basis,
             const std::function<void(const std::vector<Code>&)>& visit) {
    const std::size_t row = basis.size();
    if (row == n) {
        visit(entries);
        return;
    }
    std::vector<Code> v(n, 0);
    do {
        std::vector<Code> r = v;
        for (const auto& [pivot, b] : basis) {
            const Code c = r[pivot];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[j] = spec.sub(r[j], spec.mul(c, b[j]));
        }
        std::size_t pivot = 0;
        while (pivot < n && r[pivot] == 0) ++pivot;
        if (pivot == n) continue;
        const Code inv = spec.inv(r[pivot]);
        for (auto& x : r) x = spec.mul(x, inv);
        std::copy(v.begin(), v.end(), entries.begin() + static_cast<std::ptrdiff_t>(row * n));
        basis.emplace_back(pivot, std::move(r));
        gl_rows(spec, n, entries, basis, visit);
        basis.pop_back();
    } while (next_vector(v, spec.q()));
}

}  // namespace

std::string GroupId::name() const {
    return std::string(kind == GroupKind::GL ? "GL_" : "GA_") + std::to_string(n) + "(" + std::to_string(spec.q()) +
           ")";
}

std::optional<std::uint64_t> group_order(const GroupId& gid) {
    const u128 order = order_wide(gid);
    if (order > static_cast<u128>(UINT64_MAX)) return std::nullopt;
    return static_cast<std::uint64_t>(order);
}

std::string group_order_string(const GroupId& gid) { return wide_string(order_wide(gid)); }

std::uint64_t default_element_budget() {
    if (const char* env = std::getenv("GAC_BUDGET_ELEMENTS")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return 10'000'000ULL;
}

bool is_affine(const MatFq& a) { return is_affine_shape(a) && is_invertible(a); }

void require_member(const GroupId& gid, const MatFq& a) {
    if (a.spec() != gid.spec) throw Error("field-mismatch", "matrix is not over F_" + std::to_string(gid.spec.q()));
    if (a.rows() != gid.n || a.cols() != gid.n) {
        throw Error("shape-mismatch", "expected " + std::to_string(gid.n) + "x" + std::to_string(gid.n));
    }
    if (gid.kind == GroupKind::GA && !is_affine_shape(a)) {
        throw Error("not-affine", "matrix is not in " + gid.name());
    }
    if (!is_invertible(a)) throw Error("not-invertible", "matrix is singular");
}

bool is_member(const GroupId& gid, const MatFq& a) {
    try {
        require_member(gid, a);
        return true;
    } catch (const Error&) {
        return false;
    }
}

GLType type_of_gl(const MatFq& g) {
    if (!g.is_square() || !is_invertible(g)) throw Error("not-invertible", "type of a non-invertible matrix");
    const FieldSpec& spec = g.spec();
    GLType out(spec);
    const std::size_t n = g.rows();
    if (n == 0) return out;
    const Factorization fac = poly_factor(char_poly(g));
    for (const auto& [f, exponent] : fac.factors) {
        const std::size_t d = f.deg();
        const auto tower = detail::nullity_tower_trusted(g, f, exponent);
        if (tower.back() != d * exponent) {
            throw Error("classification-bug", "generalized eigenspace of " + f.to_string() + " has wrong dimension");
        }
        std::vector<unsigned> conjugate;
        std::size_t prev = 0;
        for (std::size_t nj : tower) {
            const std::size_t diff = nj - prev;
            prev = nj;
            if (diff % d != 0) throw Error("classification-bug", "nullity jump not divisible by deg f");
            if (diff > 0) conjugate.push_back(static_cast<unsigned>(diff / d));
        }
        out.set(f, Partition(std::move(conjugate)).conjugate());
    }
    return out;
}

GAType type_of_ga(const MatFq& a, Flavor flavor) {
    if (!is_affine(a)) throw Error("not-affine", "matrix is not an affine transformation");
    const FieldSpec& spec = a.spec();
    const std::size_t m = a.rows() - 1;
    GAType out{GLType(spec), 0, Flavor::plain};
    if (m > 0) {
        const MatFq g = a.submatrix(1, 1, m, m);
        const MatFq alpha = a.submatrix(1, 0, m, 1);
        out.base = type_of_gl(g);
        if (!in_column_space(MatFq::identity(spec, m) - g, alpha)) {
            const GLType whole = type_of_gl(a);
            bool found = false;
            for (const auto& [part, count] : out.base.unipotent().multiplicities()) {
                if (tilde_type(out.base, part) == whole) {
                    out.k = part;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("classification-bug", "no shift matches the type " + whole.to_string());
        }
    }
    return flavor == Flavor::plain ? out : to_modified(out);
}

std::size_t reflection_length(const MatFq& h) {
    if (!h.is_square()) throw Error("shape-mismatch", "reflection length of a non-square matrix");
    return mat_rank(h - MatFq::identity(h.spec(), h.rows()));
}

std::size_t affine_length(const MatFq& a) {
    if (!is_affine(a)) throw Error("not-affine", "matrix is not an affine transformation");
    return reflection_length(a);
}

std::size_t affine_reflection_length(const MatFq& a) {
    const std::size_t length = affine_length(a);
    const GAType t = type_of_ga(a, Flavor::modified);
    return t.base.empty() && t.k == 1 ? length + 1 : length;
}

void for_each_element(const GroupId& gid, const std::function<void(const MatFq&)>& visit, std::uint64_t budget) {
    check_budget(gid, budget);
    const FieldSpec& spec = gid.spec;
    const std::size_t n = gid.n;
    if (gid.kind == GroupKind::GL) {
        std::vector<Code> entries(n * n, 0);
        std::vector<std::pair<std::size_t, std::vector<Code>>> basis;
        gl_rows(spec, n, entries, basis,
                [&](const std::vector<Code>& e) { visit(MatFq(spec, n, n, e)); });
        return;
    }
    if (n == 0) throw Error("bad-degree", "GA_n needs n >= 1");
    const std::size_t m = n - 1;
    std::vector<Code> g_entries(m * m, 0);
    std::vector<std::pair<std::size_t, std::vector<Code>>> basis;
    MatFq a(spec, n, n);
    a(0, 0) = 1;
    gl_rows(spec, m, g_entries, basis, [&](const std::vector<Code>& g) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) a(i + 1, j + 1) = g[i * m + j];
        }
        std::vector<Code> alpha(m, 0);
        do {
            for (std::size_t i = 0; i < m; ++i) a(i + 1, 0) = alpha[i];
            visit(a);
        } while (next_vector(alpha, spec.q()));
    });
}

std::vector<MatFq> enumerate_group(const GroupId& gid, std::uint64_t budget) {
    std::vector<MatFq> out;
    for_each_element(gid, [&](const MatFq& a) { out.push_back(a); }, budget);
    return out;
}

OrbitBuilder::OrbitBuilder(const GroupId& gid, const MatFq& rep) : gid_(gid) {
    require_member(gid, rep);
    const FieldSpec& spec = gid.spec;
    const std::size_t n = gid.n;
    const std::size_t start = gid.kind == GroupKind::GA ? 1 : 0;
    std::vector<Code> basis;
    for (std::uint32_t c = 1; c < spec.q(); c *= spec.p()) basis.push_back(static_cast<Code>(c));
    for (std::size_t i = start; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Code c : basis) {
                moves_.push_back({0, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), c, 0});
            }
        }
    }
    if (start < n && spec.q() > 2) {
        const Code a = spec.primitive_element();
        moves_.push_back({1, static_cast<std::uint8_t>(start), static_cast<std::uint8_t>(start), a, spec.inv(a)});
    }
    const std::uint64_t key = rep.key();
    keys_.push_back(key);
    seen_.insert(key);
}

void OrbitBuilder::apply(const Move& m, std::vector<Code>& buf) const {
    const FieldSpec& spec = gid_.spec;
    const std::size_t n = gid_.n;
    if (m.kind == 0) {
        // (I + cE_ij) h (I - cE_ij)
        for (std::size_t col = 0; col < n; ++col) {
            buf[m.i * n + col] = spec.add(buf[m.i * n + col], spec.mul(m.c, buf[m.j * n + col]));
        }
        for (std::size_t row = 0; row < n; ++row) {
            buf[row * n + m.j] = spec.sub(buf[row * n + m.j], spec.mul(m.c, buf[row * n + m.i]));
        }
    } else {
        for (std::size_t col = 0; col < n; ++col) buf[m.i * n + col] = spec.mul(m.c, buf[m.i * n + col]);
        for (std::size_t row = 0; row < n; ++row) buf[row * n + m.i] = spec.mul(m.c_inv, buf[row * n + m.i]);
    }
}

bool OrbitBuilder::step() {
    if (done()) return false;
    const std::uint64_t key = keys_[head_++];
    const std::size_t n = gid_.n;
    const std::uint64_t q = gid_.spec.q();
    std::vector<Code> base(n * n);
    std::uint64_t rest = key;
    for (std::size_t i = n * n; i-- > 0;) {
        base[i] = static_cast<Code>(rest % q);
        rest /= q;
    }
    std::vector<Code> buf(n * n);
    for (const Move& m : moves_) {
        buf = base;
        apply(m, buf);
        std::uint64_t next = 0;
        for (Code c : buf) next = next * q + c;
        if (seen_.insert(next).second) keys_.push_back(next);
    }
    return !done();
}

void OrbitBuilder::run(std::uint64_t limit) {
    if (limit == 0) limit = default_element_budget();
    while (step()) {
        if (keys_.size() > limit) {
            throw Error("too-large", "conjugacy class in " + gid_.name() + " exceeds " + std::to_string(limit) +
                                         " elements");
        }
    }
}

std::vector<MatFq> conjugacy_class_of(const MatFq& rep, const GroupId& gid, std::uint64_t limit) {
    OrbitBuilder orbit(gid, rep);
    orbit.run(limit);
    std::vector<MatFq> out;
    out.reserve(orbit.size());
    for (std::uint64_t key : orbit.keys()) out.push_back(MatFq::from_key(gid.spec, gid.n, gid.n, key));
    return out;
}

}  // namespace gac
