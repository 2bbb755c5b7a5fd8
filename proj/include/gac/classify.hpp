#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gac/matrix.hpp"
#include "gac/types.hpp"

namespace gac {

enum class GroupKind { GL, GA };

struct GroupId {
    GroupKind kind;
    std::size_t n;
    FieldSpec spec;

    std::string name() const;  // "GA_3(2)"
};

/// |GL_n(q)| or |GA_n(q)|, or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> group_order(const GroupId& gid);
std::string group_order_string(const GroupId& gid);

/// Element budget for enumerations: GAC_BUDGET_ELEMENTS or 10^7.
std::uint64_t default_element_budget();

/// Throws "shape-mismatch", "field-mismatch", "not-invertible" or "not-affine".
void require_member(const GroupId& gid, const MatFq& a);
bool is_member(const GroupId& gid, const MatFq& a);
bool is_affine(const MatFq& a);

GLType type_of_gl(const MatFq& g);
GAType type_of_ga(const MatFq& a, Flavor flavor = Flavor::modified);

/// rank(h - I)
std::size_t reflection_length(const MatFq& h);
std::size_t affine_length(const MatFq& a);
std::size_t affine_reflection_length(const MatFq& a);

/// Calls visit on every element. GL: row-major base-q order. GA: the linear
/// part g in GL_{n-1} order outermost, the translation column in base-q
/// order innermost. Throws "too-large" when the order exceeds budget.
void for_each_element(const GroupId& gid, const std::function<void(const MatFq&)>& visit,
                      std::uint64_t budget = 0);
std::vector<MatFq> enumerate_group(const GroupId& gid, std::uint64_t budget = 0);

/// Breadth-first conjugation orbit over the packed keys of one element.
/// Generators: transvections I + c E_ij with c running over an F_p-basis of
/// F_q, and diag(primitive) at the first linear coordinate. For GA the row
/// index of a transvection is never 0, so translations are included and the
/// first row is preserved.
class OrbitBuilder {
public:
    OrbitBuilder(const GroupId& gid, const MatFq& rep);

    /// Processes one queued element; returns false once the orbit is closed.
    bool step();
    /// Runs to closure; throws "too-large" past limit elements (0 = budget).
    void run(std::uint64_t limit = 0);
    bool done() const noexcept { return head_ == keys_.size(); }

    std::size_t size() const noexcept { return keys_.size(); }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
    bool contains(std::uint64_t key) const { return seen_.count(key) > 0; }
    const GroupId& group() const noexcept { return gid_; }

private:
    struct Move {
        std::uint8_t kind;  // 0 transvection, 1 diagonal
        std::uint8_t i;
        std::uint8_t j;
        Code c;
        Code c_inv;
    };

    void apply(const Move& m, std::vector<Code>& buf) const;

    GroupId gid_;
    std::vector<Move> moves_;
    std::vector<std::uint64_t> keys_;
    std::unordered_set<std::uint64_t> seen_;
    std::size_t head_ = 0;
};

std::vector<MatFq> conjugacy_class_of(const MatFq& rep, const GroupId& gid, std::uint64_t limit = 0);

}  // namespace gac
