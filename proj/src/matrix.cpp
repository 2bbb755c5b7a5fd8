#include "gac/matrix.hpp"

#include <utility>

#include "gac/error.hpp"

namespace gac {

namespace {

// Row-reduces m in place; returns the rank.
std::size_t eliminate(const FieldSpec& spec, std::vector<Code>& m, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
        }
        const Code inv = spec.inv(m[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Code x = m[r * cols + c];
            if (x == 0) continue;
            const Code factor = spec.mul(x, inv);
            for (std::size_t j = c; j < cols; ++j) {
                m[r * cols + j] = spec.sub(m[r * cols + j], spec.mul(factor, m[rank * cols + j]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

MatFq::MatFq(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MatFq::MatFq(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error("shape-mismatch", "entry count does not match " + std::to_string(rows_) + "x" +
                                          std::to_string(cols_));
    }
    for (Code c : entries_) {
        if (c >= spec_.q()) throw Error("bad-code", "matrix entry out of range");
    }
}

MatFq MatFq::identity(const FieldSpec& spec, std::size_t n) {
    MatFq out(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

MatFq MatFq::from_rows(const FieldSpec& spec, std::initializer_list<std::initializer_list<unsigned>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Code> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("shape-mismatch", "ragged rows");
        for (unsigned x : row) {
            if (x >= spec.q()) throw Error("bad-code", "matrix entry out of range");
            entries.push_back(static_cast<Code>(x));
        }
    }
    return MatFq(spec, r, c, std::move(entries));
}

void MatFq::require_conformable(const MatFq& rhs, bool same_shape) const {
    if (spec_ != rhs.spec_) throw Error("field-mismatch", "matrices over different fields");
    if (same_shape ? (rows_ != rhs.rows_ || cols_ != rhs.cols_) : cols_ != rhs.rows_) {
        throw Error("shape-mismatch", std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                                          std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
}

MatFq MatFq::operator*(const MatFq& rhs) const {
    require_conformable(rhs, false);
    MatFq out(spec_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Code a = entries_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                Code& dst = out.entries_[i * rhs.cols_ + j];
                dst = spec_.add(dst, spec_.mul(a, rhs.entries_[k * rhs.cols_ + j]));
            }
        }
    }
    return out;
}

MatFq MatFq::operator+(const MatFq& rhs) const {
    require_conformable(rhs, true);
    MatFq out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = spec_.add(entries_[i], rhs.entries_[i]);
    return out;
}

MatFq MatFq::operator-(const MatFq& rhs) const {
    require_conformable(rhs, true);
    MatFq out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = spec_.sub(entries_[i], rhs.entries_[i]);
    return out;
}

MatFq MatFq::scaled(Code c) const {
    MatFq out(*this);
    for (auto& x : out.entries_) x = spec_.mul(x, c);
    return out;
}

MatFq MatFq::submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) throw Error("shape-mismatch", "submatrix out of bounds");
    MatFq out(spec_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    }
    return out;
}

MatFq MatFq::padded(std::size_t extra) const {
    MatFq out(spec_, rows_ + extra, cols_ + extra);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    }
    for (std::size_t i = 0; i < extra; ++i) out(rows_ + i, cols_ + i) = 1;
    return out;
}

bool key_fits(std::uint32_t q, std::size_t entries) noexcept {
    unsigned __int128 bound = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        bound *= q;
        if (bound > (static_cast<unsigned __int128>(1) << 64)) return false;
    }
    return true;
}

std::uint64_t MatFq::key() const {
    if (!key_fits(spec_.q(), entries_.size())) {
        throw Error("too-large", "matrix does not fit a 64-bit key");
    }
    std::uint64_t key = 0;
    const std::uint64_t q = spec_.q();
    for (Code c : entries_) key = key * q + c;
    return key;
}

MatFq MatFq::from_key(const FieldSpec& spec, std::size_t rows, std::size_t cols, std::uint64_t key) {
    MatFq out(spec, rows, cols);
    const std::uint64_t q = spec.q();
    for (std::size_t i = rows * cols; i-- > 0;) {
        out.entries_[i] = static_cast<Code>(key % q);
        key /= q;
    }
    return out;
}

std::string MatFq::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) out += ',';
            out += std::to_string((*this)(i, j));
        }
        out += ']';
    }
    return out + "]";
}

MatFq mat_inv(const MatFq& a) {
    if (!a.is_square()) throw Error("shape-mismatch", "inverse of a non-square matrix");
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();
    const std::size_t w = 2 * n;
    std::vector<Code> m(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * w + j] = a(i, j);
        m[i * w + n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot * w + c] == 0) ++pivot;
        if (pivot == n) throw Error("singular", "matrix is not invertible");
        if (pivot != c) {
            for (std::size_t j = 0; j < w; ++j) std::swap(m[pivot * w + j], m[c * w + j]);
        }
        const Code inv = spec.inv(m[c * w + c]);
        for (std::size_t j = 0; j < w; ++j) m[c * w + j] = spec.mul(m[c * w + j], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const Code factor = m[r * w + c];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < w; ++j) {
                m[r * w + j] = spec.sub(m[r * w + j], spec.mul(factor, m[c * w + j]));
            }
        }
    }
    MatFq out(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m[i * w + n + j];
    }
    return out;
}

std::size_t mat_rank(const MatFq& a) {
    std::vector<Code> m = a.entries();
    return eliminate(a.spec(), m, a.rows(), a.cols());
}

bool is_invertible(const MatFq& a) { return a.is_square() && mat_rank(a) == a.rows(); }

PolyFq char_poly(const MatFq& g) {
    if (!g.is_square()) throw Error("shape-mismatch", "characteristic polynomial of a non-square matrix");
    const FieldSpec& spec = g.spec();
    const std::size_t n = g.rows();
    MatFq h = g;

    // similarity transforms down to upper Hessenberg form
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h(pivot, j) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, j + 1));
        }
        const Code inv = spec.inv(h(j + 1, j));
        for (std::size_t r = j + 2; r < n; ++r) {
            const Code u = spec.mul(h(r, j), inv);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h(r, c) = spec.sub(h(r, c), spec.mul(u, h(j + 1, c)));
            for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = spec.add(h(c, j + 1), spec.mul(u, h(c, r)));
        }
    }

    // p_m = (t - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
    std::vector<PolyFq> p;
    p.reserve(n + 1);
    p.push_back(PolyFq::constant(spec, 1));
    for (std::size_t m = 0; m < n; ++m) {
        PolyFq next = PolyFq::linear(spec, h(m, m)) * p[m];
        Code prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = spec.mul(prod, h(i + 1, i));
            if (prod == 0) break;
            const Code coef = spec.mul(h(i, m), prod);
            if (coef != 0) next = next - p[i].scaled(coef);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

MatFq eval_at_matrix(const PolyFq& f, const MatFq& g) {
    if (!g.is_square()) throw Error("shape-mismatch", "polynomial of a non-square matrix");
    if (f.spec() != g.spec()) throw Error("field-mismatch", "polynomial and matrix over different fields");
    const std::size_t n = g.rows();
    MatFq acc(g.spec(), n, n);
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * g;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) = g.spec().add(acc(d, d), c[i]);
    }
    return acc;
}

namespace detail {

std::vector<std::size_t> nullity_tower_trusted(const MatFq& g, const PolyFq& f, std::size_t jmax) {
    const std::size_t n = g.rows();
    if (jmax == 0) jmax = n;
    const MatFq fg = eval_at_matrix(f, g);
    MatFq power = fg;
    std::vector<std::size_t> out;
    out.reserve(jmax);
    bool stable = false;
    for (std::size_t j = 1; j <= jmax; ++j) {
        if (stable) {
            out.push_back(out.back());
            continue;
        }
        if (j > 1) power = power * fg;
        out.push_back(n - mat_rank(power));
        stable = j > 1 && out[j - 1] == out[j - 2];
    }
    return out;
}

}  // namespace detail

std::vector<std::size_t> nullity_tower(const MatFq& g, const PolyFq& f, std::size_t jmax) {
    if (!g.is_square()) throw Error("shape-mismatch", "nullity tower of a non-square matrix");
    if (!f.is_monic() || !is_irreducible(f)) {
        throw Error("bad-polynomial", f.to_string() + " is not monic irreducible");
    }
    return detail::nullity_tower_trusted(g, f, jmax);
}

bool in_column_space(const MatFq& a, const MatFq& v) {
    if (v.cols() != 1 || v.rows() != a.rows()) throw Error("shape-mismatch", "vector shape");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols() + 1;
    std::vector<Code> aug(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug[i * cols + j] = a(i, j);
        aug[i * cols + a.cols()] = v(i, 0);
    }
    std::vector<Code> plain = a.entries();
    return eliminate(a.spec(), plain, rows, a.cols()) == eliminate(a.spec(), aug, rows, cols);
}

}  // namespace gac
