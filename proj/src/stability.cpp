#include "gac/stability.hpp"

#include <functional>

#include "gac/error.hpp"

namespace gac {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t power(std::uint64_t base, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

GLType singleton(const FieldSpec& spec, Code root, unsigned part = 1) {
    GLType out(spec);
    out.set(PolyFq::linear(spec, root), Partition({part}));
    return out;
}

GLType union_types(const GLType& a, const GLType& b) {
    GLType out = a;
    for (const auto& [f, parts] : b.entries()) out.set(f, out.at(f).union_with(parts));
    return out;
}

// Runs body and fills status/elapsed. Budget errors become skipped-budget;
// any other library error is a failure with the message as the note.
CheckReport guarded(CheckReport report, const std::function<void(CheckReport&)>& body) {
    const auto start = Clock::now();
    try {
        body(report);
    } catch (const Error& e) {
        report.status = e.code() == "too-large" ? CheckStatus::skipped_budget : CheckStatus::fail;
        report.note = e.what();
    }
    report.elapsed = Clock::now() - start;
    return report;
}

CheckReport skipped(CheckReport report, std::string reason) {
    report.status = CheckStatus::skipped_budget;
    report.note = std::move(reason);
    return report;
}

void compare(CheckReport& r, std::uint64_t expected, std::uint64_t observed) {
    r.expected = std::to_string(expected);
    r.observed = std::to_string(observed);
    r.status = expected == observed ? CheckStatus::pass : CheckStatus::fail;
}

void compare_zero(CheckReport& r, std::uint64_t bad, std::uint64_t total, const std::string& what) {
    r.expected = "0 " + what;
    r.observed = std::to_string(bad) + " " + what + " among " + std::to_string(total);
    r.status = bad == 0 ? CheckStatus::pass : CheckStatus::fail;
}

ScanOptions scan_options(const SuiteOptions& options) {
    ScanOptions scan;
    scan.parallelism = options.parallelism;
    scan.budget = options.budget;
    scan.seconds = options.seconds;
    return scan;
}

std::map<std::string, std::string> field_params(const FieldSpec& spec) { return {{"q", std::to_string(spec.q())}}; }

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::skipped_budget:
            return "skipped-budget";
    }
    return "fail";
}

std::vector<CheckReport> check_semisimple_pair(const FieldSpec& spec, const SuiteOptions& options) {
    const std::uint64_t q = spec.q();
    std::vector<CheckReport> out;
    CheckReport equal{"semisimple-pair-equal", field_params(spec)};
    equal.params["n"] = "3";
    if (q < 3) {
        out.push_back(skipped(equal, "F_q has no element outside {0,1}"));
    } else {
        equal.params["xi"] = "2";
        out.push_back(guarded(equal, [&](CheckReport& r) {
            const GLType lambda = singleton(spec, 2);
            const GLType nu = union_types(lambda, lambda);
            const auto report = struct_const_ga({lambda, 0}, {lambda, 0}, {nu, 0}, 3, spec, scan_options(options));
            compare(r, q * q + q, report.value);
        }));
    }
    CheckReport distinct{"semisimple-pair-distinct", field_params(spec)};
    distinct.params["n"] = "3";
    if (q < 4) {
        out.push_back(skipped(distinct, "F_q has fewer than two elements outside {0,1}"));
    } else {
        distinct.params["xi"] = "2";
        distinct.params["zeta"] = "3";
        out.push_back(guarded(distinct, [&](CheckReport& r) {
            const GLType lambda = singleton(spec, 2);
            const GLType mu = singleton(spec, 3);
            const auto report =
                struct_const_ga({lambda, 0}, {mu, 0}, {union_types(lambda, mu), 0}, 3, spec, scan_options(options));
            compare(r, 2 * q - 1, report.value);
        }));
    }
    return out;
}

CheckReport check_translation_product(const FieldSpec& spec, unsigned r, const SuiteOptions& options) {
    CheckReport report{"translation-product", field_params(spec)};
    report.params["r"] = std::to_string(r);
    report.params["n"] = std::to_string(r + 2);
    if (spec.q() < r + 2) return skipped(report, "needs r distinct elements outside {0,1}");
    return guarded(report, [&](CheckReport& out) {
        GLType lambda(spec);
        for (unsigned i = 0; i < r; ++i) lambda.set(PolyFq::linear(spec, static_cast<Code>(2 + i)), Partition({1}));
        const auto value =
            struct_const_ga({lambda, 0}, {GLType(spec), 1}, {lambda, 1}, r + 2, spec, scan_options(options)).value;
        compare(out, power(spec.q(), r), value);
    });
}

std::vector<CheckReport> check_hyperbolic_coefficients(const FieldSpec& spec, std::size_t n,
                                                       const SuiteOptions& options) {
    const std::uint64_t q = spec.q();
    std::vector<CheckReport> out;
    auto params = field_params(spec);
    params["n"] = std::to_string(n);
    const GAType hyperbolic{GLType(spec), 1, Flavor::modified};

    CheckReport unipotent{"hyperbolic-unipotent", params};
    out.push_back(guarded(unipotent, [&](CheckReport& r) {
        const GLType lambda = singleton(spec, 1);
        const auto value = struct_const_ga({lambda, 0}, {lambda, 0}, hyperbolic, n, spec, scan_options(options)).value;
        compare(r, power(q, n - 1) - q, value);
    }));

    CheckReport inverse{"hyperbolic-inverse-pair", params};
    if (q < 3) {
        out.push_back(skipped(inverse, "F_q has no element outside {0,1}"));
    } else {
        const Code xi = 2;
        inverse.params["xi"] = std::to_string(xi);
        out.push_back(guarded(inverse, [&](CheckReport& r) {
            const GLType mu = singleton(spec, xi);
            const GLType nu = singleton(spec, spec.inv(xi));
            const auto value = struct_const_ga({mu, 0}, {nu, 0}, hyperbolic, n, spec, scan_options(options)).value;
            compare(r, power(q, n - 1), value);
        }));
    }
    return out;
}

std::vector<CheckReport> check_gl_coincidence(std::size_t max_degree, const FieldSpec& spec,
                                              const SuiteOptions& options) {
    std::vector<std::vector<GLType>> by_degree;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        std::vector<GLType> types;
        for (const auto& t : enumerate_gl_types(d, spec)) types.push_back(t);
        by_degree.push_back(std::move(types));
    }
    std::vector<CheckReport> out;
    for (std::size_t dn = 0; dn <= max_degree; ++dn) {
        for (std::size_t da = 0; da <= dn; ++da) {
            for (const auto& lambda : by_degree[da]) {
                for (const auto& mu : by_degree[dn - da]) {
                    for (const auto& nu : by_degree[dn]) {
                        CheckReport report{"gl-coincidence", field_params(spec)};
                        report.params["lambda"] = lambda.to_string();
                        report.params["mu"] = mu.to_string();
                        report.params["nu"] = nu.to_string();
                        out.push_back(guarded(report, [&](CheckReport& r) {
                            const GAType a{lambda, 0, Flavor::modified};
                            const GAType b{mu, 0, Flavor::modified};
                            const GAType c{nu, 0, Flavor::modified};
                            const std::size_t n_ga = std::max({ga_min_n(a), ga_min_n(b), ga_min_n(c)});
                            const std::size_t n_gl = std::max({gl_min_n(lambda), gl_min_n(mu), gl_min_n(nu)});
                            const ScanOptions scan = scan_options(options);
                            std::vector<std::uint64_t> values;
                            for (std::size_t n : {n_ga, n_ga + 1}) {
                                values.push_back(struct_const_ga(a, b, c, n, spec, scan).value);
                            }
                            for (std::size_t n : {n_gl, n_gl + 1}) {
                                values.push_back(struct_const_gl(lambda, mu, nu, n, spec, scan).value);
                            }
                            r.params["n_ga"] = std::to_string(n_ga);
                            r.params["n_gl"] = std::to_string(n_gl);
                            r.expected = "GA(" + std::to_string(n_ga) + "), GA(" + std::to_string(n_ga + 1) +
                                         "), GL(" + std::to_string(n_gl) + "), GL(" + std::to_string(n_gl + 1) +
                                         ") all equal";
                            r.observed = std::to_string(values[0]) + ", " + std::to_string(values[1]) + ", " +
                                         std::to_string(values[2]) + ", " + std::to_string(values[3]);
                            const bool same = values[0] == values[1] && values[1] == values[2] && values[2] == values[3];
                            r.status = same ? CheckStatus::pass : CheckStatus::fail;
                        }));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<CheckReport> check_filtration_and_stability(const FieldSpec& spec, const std::vector<std::size_t>& ns,
                                                        const SuiteOptions& options) {
    std::vector<CheckReport> out;
    std::vector<MultiplicationTable> tables;
    for (std::size_t n : ns) {
        auto params = field_params(spec);
        params["n"] = std::to_string(n);
        bool built = false;
        out.push_back(guarded({"table-consistency", params}, [&](CheckReport& r) {
            const GroupId gid{GroupKind::GA, n, spec};
            tables.push_back(multiplication_table(gid, options.parallelism, options.budget, options.seconds));
            built = true;
            const auto& t = tables.back();
            r.expected = "row mass holds and table is commutative";
            r.observed = std::string(t.row_mass_ok() ? "row mass holds" : "row mass fails") + ", " +
                         (t.commutative() ? "commutative" : "not commutative");
            r.status = t.row_mass_ok() && t.commutative() ? CheckStatus::pass : CheckStatus::fail;
        }));
        if (!built) break;
        out.push_back(guarded({"filtration", params}, [&](CheckReport& r) {
            const auto& t = tables.back();
            std::uint64_t bad = 0;
            std::uint64_t nonzero = 0;
            for (std::size_t a = 0; a < t.rank(); ++a) {
                for (std::size_t b = 0; b < t.rank(); ++b) {
                    for (std::size_t c = 0; c < t.rank(); ++c) {
                        if (t.at(a, b, c) == 0) continue;
                        ++nonzero;
                        if (t.classes[c].degree() > t.classes[a].degree() + t.classes[b].degree()) ++bad;
                    }
                }
            }
            compare_zero(r, bad, nonzero, "violations");
        }));
    }

    // Value of the triple (a, b, c) of table i at table j, if all three labels exist there.
    auto value_at = [&](std::size_t i, std::size_t j, std::size_t a, std::size_t b, std::size_t c, std::uint64_t& v) {
        const auto& from = tables[i];
        const auto& to = tables[j];
        const std::size_t ja = to.find(from.classes[a]);
        const std::size_t jb = to.find(from.classes[b]);
        const std::size_t jc = to.find(from.classes[c]);
        if (ja == to.rank() || jb == to.rank() || jc == to.rank()) return false;
        v = to.at(ja, jb, jc);
        return true;
    };

    for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
        auto params = field_params(spec);
        params["n"] = std::to_string(ns[i]) + "->" + std::to_string(ns[i + 1]);
        const auto& t = tables[i];
        std::uint64_t additive = 0;
        std::uint64_t unstable = 0;
        std::uint64_t shared = 0;
        std::uint64_t decreasing = 0;
        for (std::size_t a = 0; a < t.rank(); ++a) {
            for (std::size_t b = 0; b < t.rank(); ++b) {
                for (std::size_t c = 0; c < t.rank(); ++c) {
                    std::uint64_t next = 0;
                    if (!value_at(i, i + 1, a, b, c, next)) continue;
                    ++shared;
                    if (next < t.at(a, b, c)) ++decreasing;
                    if (t.classes[c].degree() == t.classes[a].degree() + t.classes[b].degree()) {
                        ++additive;
                        if (next != t.at(a, b, c)) ++unstable;
                    }
                }
            }
        }
        CheckReport stability{"stability", params};
        compare_zero(stability, unstable, additive, "changed degree-additive constants");
        out.push_back(stability);
        CheckReport monotone{"monotone", params};
        compare_zero(monotone, decreasing, shared, "decreasing constants");
        out.push_back(monotone);
    }

    for (std::size_t i = 0; i + 2 < tables.size(); ++i) {
        auto params = field_params(spec);
        params["n"] = std::to_string(ns[i]) + "->" + std::to_string(ns[i + 1]) + "->" + std::to_string(ns[i + 2]);
        const auto& t = tables[i];
        std::uint64_t grew = 0;
        std::uint64_t stalled = 0;
        for (std::size_t a = 0; a < t.rank(); ++a) {
            for (std::size_t b = 0; b < t.rank(); ++b) {
                for (std::size_t c = 0; c < t.rank(); ++c) {
                    std::uint64_t v1 = 0;
                    std::uint64_t v2 = 0;
                    if (!value_at(i, i + 1, a, b, c, v1) || !value_at(i, i + 2, a, b, c, v2)) continue;
                    if (t.at(a, b, c) < v1) {
                        ++grew;
                        if (!(v1 < v2)) ++stalled;
                    }
                }
            }
        }
        CheckReport report{"strictly-increasing", params};
        compare_zero(report, stalled, grew, "stalls after growth");
        out.push_back(report);
    }
    return out;
}

std::vector<CheckReport> check_representatives_and_counts(const FieldSpec& spec, std::size_t n_max,
                                                          const SuiteOptions& options) {
    std::vector<CheckReport> out;
    std::vector<std::uint64_t> c_counts;
    for (std::size_t n = 1; n <= n_max; ++n) {
        c_counts.push_back(enumerate_gl_types(n - 1, spec).size());
        auto params = field_params(spec);
        params["n"] = std::to_string(n);
        const GroupId gid{GroupKind::GA, n, spec};
        const auto pairs = enumerate_ga_types(n, spec, Flavor::plain);
        out.push_back(guarded({"representatives", params}, [&](CheckReport& r) {
            const auto order = group_order(gid);
            const std::uint64_t budget = options.budget == 0 ? default_element_budget() : options.budget;
            if (!order || *order > budget) {
                throw Error("too-large", gid.name() + " has " + group_order_string(gid) + " elements");
            }
            // Orbits of distinct representatives must be disjoint and cover the group.
            std::unordered_set<std::uint64_t> covered;
            std::uint64_t overlaps = 0;
            for (const auto& pair : pairs) {
                OrbitBuilder orbit(gid, canonical_rep_ga(pair, n));
                orbit.run(budget);
                for (std::uint64_t key : orbit.keys()) {
                    if (!covered.insert(key).second) ++overlaps;
                }
            }
            std::uint64_t members = 0;
            std::uint64_t missed = 0;
            for_each_element(
                gid,
                [&](const MatFq& a) {
                    ++members;
                    if (covered.count(a.key()) == 0) ++missed;
                },
                budget);
            r.expected = "each of " + std::to_string(*order) + " elements in exactly one representative class";
            r.observed = std::to_string(members - missed) + " covered, " + std::to_string(missed) + " missed, " +
                         std::to_string(overlaps) + " overlaps";
            r.status = missed == 0 && overlaps == 0 && members == *order ? CheckStatus::pass : CheckStatus::fail;
        }));
        CheckReport count{"class-count", params};
        std::uint64_t expected = 0;
        for (auto c : c_counts) expected += c;
        compare(count, expected, pairs.size());
        out.push_back(count);
    }
    return out;
}

CheckReport check_ll_a_nonstability(const FieldSpec& spec, const SuiteOptions& options) {
    CheckReport report{"ll-a-nonstability", field_params(spec)};
    report.params["n"] = "3->4";
    return guarded(report, [&](CheckReport& r) {
        const GLType lambda = singleton(spec, 1);
        const GAType a{lambda, 0, Flavor::modified};
        const GAType c{GLType(spec), 1, Flavor::modified};
        const GroupId ga3{GroupKind::GA, 3, spec};
        // affine-reflection lengths of the representatives at n = 3
        const std::size_t la = affine_reflection_length(class_representative({ga3, a}));
        const std::size_t lc = affine_reflection_length(class_representative({ga3, c}));
        const std::uint64_t p3 = struct_const_ga(a, a, c, 3, spec, scan_options(options)).value;
        const std::uint64_t p4 = struct_const_ga(a, a, c, 4, spec, scan_options(options)).value;
        const std::uint64_t q = spec.q();
        r.expected = "ll_a additive (" + std::to_string(la) + "+" + std::to_string(la) + "=" + std::to_string(lc) +
                     ") and " + std::to_string(q * q - q) + " < " + std::to_string(q * q * q - q);
        r.observed = "ll_a " + std::to_string(la) + "+" + std::to_string(la) + " vs " + std::to_string(lc) + ", " +
                     std::to_string(p3) + " -> " + std::to_string(p4);
        const bool ok = la + la == lc && p3 == q * q - q && p4 == q * q * q - q && p3 < p4;
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    });
}

std::vector<CheckReport> run_suite(const FieldSpec& spec, std::size_t n_max, const SuiteOptions& options) {
    std::vector<CheckReport> out;
    auto append = [&](std::vector<CheckReport> more) {
        for (auto& r : more) out.push_back(std::move(r));
    };
    append(check_semisimple_pair(spec, options));
    for (unsigned r = 1; r + 2 <= n_max; ++r) out.push_back(check_translation_product(spec, r, options));
    for (std::size_t n = 3; n <= n_max; ++n) append(check_hyperbolic_coefficients(spec, n, options));
    append(check_gl_coincidence(n_max >= 4 ? 2 : 1, spec, options));
    std::vector<std::size_t> ns;
    for (std::size_t n = 3; n <= n_max; ++n) ns.push_back(n);
    append(check_filtration_and_stability(spec, ns, options));
    append(check_representatives_and_counts(spec, n_max, options));
    if (n_max >= 4) out.push_back(check_ll_a_nonstability(spec, options));
    return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.status == CheckStatus::fail) return false;
    }
    return true;
}

}  // namespace gac
