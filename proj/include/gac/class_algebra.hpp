#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gac/classify.hpp"
#include "gac/types.hpp"

namespace gac {

/// A class of GL_n(q) (labelled by its modified type) or of GA_n(q)
/// (labelled by its modified pair).
struct ClassIndex {
    GroupId group;
    std::variant<GLType, GAType> label;

    unsigned degree() const;
    std::string to_string() const;
};

enum class ScanMethod { pair_scan, class_scan };

struct StructConstReport {
    ClassIndex a;
    ClassIndex b;
    ClassIndex c;
    std::size_t n = 0;
    std::uint32_t q = 0;
    std::uint64_t value = 0;
    ScanMethod method = ScanMethod::class_scan;
    /// Size of the class that was scanned.
    std::uint64_t scanned = 0;
    std::chrono::duration<double> elapsed{};
    /// deg c == deg a + deg b
    bool graded = false;
};

struct ScanOptions {
    ScanMethod method = ScanMethod::class_scan;
    unsigned parallelism = 1;
    /// Element cap for any single class (0 = default budget).
    std::uint64_t budget = 0;
    /// Wall-clock cap in seconds (0 = none); exceeding it throws "too-large".
    double seconds = 0;
};

/// Structure constant p^c_{a,b}(n) of the center of Z[GA_n(q)]: the number of
/// P in K_a with P^{-1} C in K_b for a fixed C in K_c. Labels may be plain or
/// modified; plain ones are converted. Throws "undefined-at-n", "too-large".
StructConstReport struct_const_ga(const GAType& a, const GAType& b, const GAType& c, std::size_t n,
                                  const FieldSpec& spec, const ScanOptions& options = {});

/// The GL_n(q) analogue with modified types.
StructConstReport struct_const_gl(const GLType& a, const GLType& b, const GLType& c, std::size_t n,
                                  const FieldSpec& spec, const ScanOptions& options = {});

/// Class-sum multiplication table of a whole group.
struct MultiplicationTable {
    GroupId group;
    std::vector<ClassIndex> classes;
    std::vector<MatFq> reps;
    std::vector<std::uint64_t> sizes;
    /// coeff[(a * r + b) * r + c] for r classes.
    std::vector<std::uint64_t> coeff;

    std::size_t rank() const noexcept { return classes.size(); }
    std::uint64_t at(std::size_t a, std::size_t b, std::size_t c) const {
        return coeff[(a * rank() + b) * rank() + c];
    }
    /// Index of the class with this label, or rank() if absent.
    std::size_t find(const ClassIndex& label) const;

    /// sum_c coeff * |K_c| == |K_a| |K_b| for every pair.
    bool row_mass_ok() const;
    bool commutative() const;
};

/// Builds the classes by orbit closure from the canonical representatives and
/// counts, for every class c, the products X C over all X in the group.
MultiplicationTable multiplication_table(const GroupId& gid, unsigned parallelism = 1, std::uint64_t budget = 0,
                                        double seconds = 0);

/// Top-degree slice of P_a P_b in GA_n(q): every modified pair c with
/// deg c = deg a + deg b, mapped to its nonzero coefficient.
std::map<GAType, std::uint64_t> graded_product(const GAType& a, const GAType& b, std::size_t n,
                                               const FieldSpec& spec, const ScanOptions& options = {});

/// Class labels of a group in enumeration order.
std::vector<ClassIndex> class_labels(const GroupId& gid);
/// Canonical representative of a labelled class.
MatFq class_representative(const ClassIndex& index);

}  // namespace gac
