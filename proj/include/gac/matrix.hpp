#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gac/field.hpp"
#include "gac/poly.hpp"

namespace gac {

/// Dense row-major matrix over F_q.
class MatFq {
public:
    MatFq(FieldSpec spec, std::size_t rows, std::size_t cols);
    MatFq(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<Code> entries);

    static MatFq identity(const FieldSpec& spec, std::size_t n);
    static MatFq from_rows(const FieldSpec& spec, std::initializer_list<std::initializer_list<unsigned>> rows);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Code>& entries() const noexcept { return entries_; }

    Code operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
    Code& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }

    MatFq operator*(const MatFq& rhs) const;
    MatFq operator+(const MatFq& rhs) const;
    MatFq operator-(const MatFq& rhs) const;
    bool operator==(const MatFq& rhs) const noexcept {
        return spec_ == rhs.spec_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
    }
    bool operator!=(const MatFq& rhs) const noexcept { return !(*this == rhs); }

    MatFq scaled(Code c) const;
    MatFq submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    /// diag(this, I_extra): the embedding GL_n -> GL_{n+extra}.
    MatFq padded(std::size_t extra) const;

    /// Base-q integer of the entries, first entry most significant.
    /// Requires q^(rows*cols) < 2^64; throws "too-large" otherwise.
    std::uint64_t key() const;
    static MatFq from_key(const FieldSpec& spec, std::size_t rows, std::size_t cols, std::uint64_t key);

    std::string to_string() const;

private:
    void require_conformable(const MatFq& rhs, bool same_shape) const;

    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Code> entries_;
};

/// Gauss-Jordan inverse. Throws "shape-mismatch" for non-square, "singular".
MatFq mat_inv(const MatFq& a);
std::size_t mat_rank(const MatFq& a);
bool is_invertible(const MatFq& a);

/// det(tI - g), monic of degree n.
PolyFq char_poly(const MatFq& g);

/// f(g) by Horner's rule.
MatFq eval_at_matrix(const PolyFq& f, const MatFq& g);

/// N_j = dim ker f(g)^j for j = 1..jmax (jmax = 0 selects n).
/// Throws "bad-polynomial" unless f is monic irreducible.
std::vector<std::size_t> nullity_tower(const MatFq& g, const PolyFq& f, std::size_t jmax = 0);

/// Whether v (an m x 1 column) lies in the column space of a (m x k).
bool in_column_space(const MatFq& a, const MatFq& v);

/// Whether q^entries fits the 64-bit packed key.
bool key_fits(std::uint32_t q, std::size_t entries) noexcept;

namespace detail {
/// nullity_tower without the irreducibility check, for callers that obtained
/// f from poly_factor.
std::vector<std::size_t> nullity_tower_trusted(const MatFq& g, const PolyFq& f, std::size_t jmax);
}  // namespace detail

}  // namespace gac
