#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gac/field.hpp"
#include "gac/matrix.hpp"
#include "gac/poly.hpp"

namespace gac {

/// Integer partition with parts stored in nonincreasing order.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; zero parts are dropped.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned size() const noexcept;
    std::size_t length() const noexcept { return parts_.size(); }

    /// m_i for every part i that occurs.
    std::map<unsigned, unsigned> multiplicities() const;
    unsigned multiplicity(unsigned part) const noexcept;

    Partition union_with(const Partition& other) const;
    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    /// "(3,1,1)"; "()" when empty.
    std::string to_string() const;

private:
    std::vector<unsigned> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(unsigned n);

/// A partition-valued function on Phi_q with finite support.
class GLType {
public:
    using Map = std::map<PolyFq, Partition, CanonicalOrder>;

    explicit GLType(FieldSpec spec) : spec_(std::move(spec)) {}

    const FieldSpec& spec() const noexcept { return spec_; }
    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Partition assigned to f, empty when absent.
    Partition at(const PolyFq& f) const;
    /// Assigns lambda(f); an empty partition erases the key. Throws
    /// "bad-polynomial" unless f is a member of Phi_q.
    void set(const PolyFq& f, const Partition& parts);

    /// lambda(t-1).
    Partition unipotent() const;
    void set_unipotent(const Partition& parts);

    /// sum over f of d(f) |lambda(f)|
    unsigned degree() const;

    bool operator==(const GLType& rhs) const noexcept;
    bool operator!=(const GLType& rhs) const noexcept { return !(*this == rhs); }
    bool operator<(const GLType& rhs) const noexcept;

    /// "{1+1*t:(2,1), 1+1*t+1*t^2:(1)}"; "{}" when empty.
    std::string to_string() const;

private:
    FieldSpec spec_;
    Map entries_;
};

enum class Flavor { plain, modified };

/// The pair (lambda, k). See the flavor for which convention applies.
struct GAType {
    GLType base;
    unsigned k = 0;
    Flavor flavor = Flavor::modified;

    bool operator==(const GAType& rhs) const noexcept {
        return k == rhs.k && flavor == rhs.flavor && base == rhs.base;
    }
    bool operator!=(const GAType& rhs) const noexcept { return !(*this == rhs); }
    bool operator<(const GAType& rhs) const noexcept;

    std::string to_string() const;
};

/// t - 1 over the given field.
PolyFq unipotent_poly(const FieldSpec& spec);

unsigned gl_degree(const GLType& lambda);

/// Every part of lambda(t-1) lowered by one, zero parts dropped.
GLType modify_type(const GLType& lambda);

/// mu^{up m}. Throws "not-inflatable" when m < ||mu|| + l(mu(t-1)).
GLType inflate_type(const GLType& mu, unsigned m);

/// One part k of lambda(t-1) raised to k+1; k = 0 adjoins a part 1.
/// Throws "invalid-shift" when k >= 1 is not a part.
GLType tilde_type(const GLType& lambda, unsigned k);

/// lambda if k = 0, tilde_type(lambda, k-1) otherwise. Throws "invalid-shift"
/// unless (lambda, k) is a valid modified pair.
GLType hat_type(const GLType& lambda, unsigned k);

/// Plain pairs need k = 0 or k a part of lambda(t-1); modified pairs need
/// k <= 1 or k-1 a part of lambda(t-1).
bool is_valid_pair(const GAType& pair);

/// ||mu|| + (l >= 1) for a modified pair; plain pairs are modified first.
unsigned affine_degree(const GAType& pair);

/// (lambda, k) -> (modify_type(lambda), k). Modified input is returned as is.
GAType to_modified(const GAType& pair);

/// Whether the GL class with modified type lambda is nonempty in GL_n(q).
bool gl_defined_at(const GLType& lambda, std::size_t n);
/// Whether the GA class with modified type (mu, l) is nonempty in GA_n(q).
bool ga_defined_at(const GAType& pair, std::size_t n);

/// Smallest n at which the class is nonempty.
std::size_t gl_min_n(const GLType& lambda);
std::size_t ga_min_n(const GAType& pair);

/// Type in GL_n(q) of the class with modified type lambda.
/// Throws "undefined-at-n".
GLType gl_plain_at(const GLType& lambda, std::size_t n);
/// Plain type in GA_n(q) of the class with modified type (mu, l).
/// Throws "undefined-at-n".
GAType ga_plain_at(const GAType& pair, std::size_t n);

/// Companion matrix J(f): superdiagonal ones, last row (-c_0, ..., -c_{d-1}).
MatFq companion_matrix(const PolyFq& f);
/// J_m(f): J(f) on the block diagonal, identity blocks on the block superdiagonal.
MatFq jordan_block(const PolyFq& f, unsigned m);

/// J_lambda: unipotent blocks by part size ascending, then the other
/// polynomials in canonical order with parts descending.
MatFq canonical_rep_gl(const GLType& lambda);

/// J_(lambda,k) in GA_n(q) for a plain pair with ||lambda|| = n-1.
/// Throws "invalid-representative".
MatFq canonical_rep_ga(const GAType& pair, std::size_t n);

/// Row (within J_lambda) of the last row of the unipotent block of part size k.
std::size_t unipotent_block_end(const GLType& lambda, unsigned k);

/// All lambda with ||lambda|| = n.
std::vector<GLType> enumerate_gl_types(std::size_t n, const FieldSpec& spec);

/// Plain pairs (lambda, k) with lambda in P_{n-1}, or their modified images.
std::vector<GAType> enumerate_ga_types(std::size_t n, const FieldSpec& spec, Flavor flavor);

}  // namespace gac
