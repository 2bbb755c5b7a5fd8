#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gac/class_algebra.hpp"

namespace gac {

enum class CheckStatus { pass, fail, skipped_budget };

std::string to_string(CheckStatus status);

/// One verified statement with the exact numbers compared.
struct CheckReport {
    CheckReport() = default;
    CheckReport(std::string id_, std::map<std::string, std::string> params_)
        : id(std::move(id_)), params(std::move(params_)) {}

    std::string id;
    std::map<std::string, std::string> params;
    std::string expected;
    std::string observed;
    CheckStatus status = CheckStatus::pass;
    std::string note;
    std::chrono::duration<double> elapsed{};
};

struct SuiteOptions {
    unsigned parallelism = 1;
    /// Per-enumeration element cap (0 = default budget).
    std::uint64_t budget = 0;
    /// Wall-clock cap per check in seconds (0 = none).
    double seconds = 60;
};

/// p^{(lambda cup mu, 0)}_{(lambda,0),(mu,0)}(3) for lambda = (1)_{t-xi},
/// mu = (1)_{t-zeta}: q^2+q when xi = zeta, 2q-1 otherwise. xi and zeta are
/// the smallest codes outside {0, 1}.
std::vector<CheckReport> check_semisimple_pair(const FieldSpec& spec, const SuiteOptions& options = {});

/// p^{(lambda,1)}_{(lambda,0),(empty,1)} = q^r in GA_{r+2}(q) for lambda a union
/// of r distinct (1)_{t-xi_i}.
CheckReport check_translation_product(const FieldSpec& spec, unsigned r, const SuiteOptions& options = {});

/// The two hyperbolic coefficients in GA_n(q): q^{n-1}-q for the square of
/// the transvection class, q^{n-1} for (1)_{t-xi} times (1)_{t-xi^{-1}}.
std::vector<CheckReport> check_hyperbolic_coefficients(const FieldSpec& spec, std::size_t n,
                                                       const SuiteOptions& options = {});

/// GA and GL constants agree on degree-additive triples ((lambda,0),(mu,0),(nu,0))
/// with ||nu|| <= max_degree, each at its smallest admissible n and at n+1.
std::vector<CheckReport> check_gl_coincidence(std::size_t max_degree, const FieldSpec& spec,
                                              const SuiteOptions& options = {});

/// Full tables of GA_n(q) for n in ns: degree filtration, agreement of
/// degree-additive constants across n, monotone growth and the strictly
/// increasing property of every triple.
std::vector<CheckReport> check_filtration_and_stability(const FieldSpec& spec, const std::vector<std::size_t>& ns,
                                                        const SuiteOptions& options = {});

/// For each n <= n_max: canonical representatives hit every class exactly
/// once, and the class count is c_0 + ... + c_{n-1}.
std::vector<CheckReport> check_representatives_and_counts(const FieldSpec& spec, std::size_t n_max,
                                                          const SuiteOptions& options = {});

/// The transvection-square coefficient is additive for the affine-reflection
/// length yet grows from n = 3 to n = 4.
CheckReport check_ll_a_nonstability(const FieldSpec& spec, const SuiteOptions& options = {});

/// Every check above at the given field, up to n_max, in a fixed order.
std::vector<CheckReport> run_suite(const FieldSpec& spec, std::size_t n_max, const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace gac
