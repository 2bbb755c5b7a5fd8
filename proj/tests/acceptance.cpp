// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "gac/error.hpp"
#include "gac/stability.hpp"
#include "oracles.hpp"

using namespace gac;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

SuiteOptions options() {
    SuiteOptions o;
    o.parallelism = std::clamp(std::thread::hardware_concurrency(), 1U, 4U);
    return o;
}

// Folds reports into an outcome; skipped reports count as failures here
// because every listed case is required.
void absorb(Outcome& out, const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
        if (r.status != CheckStatus::pass) {
            out.pass = false;
            out.detail += "[" + r.id + " " + params + ": " + to_string(r.status) + ", expected " + r.expected +
                          ", observed " + r.observed + (r.note.empty() ? "" : ", " + r.note) + "] ";
        }
    }
}

void absorb_values(Outcome& out, const std::vector<CheckReport>& reports) {
    absorb(out, reports);
    for (const auto& r : reports) {
        if (r.status == CheckStatus::pass) out.detail += r.params.at("q") + ":" + r.observed + " ";
    }
}

void time_limit(Outcome& out, double seconds, double limit, const std::string& what) {
    if (seconds > limit) {
        out.pass = false;
        out.detail += "[" + what + " took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s] ";
    }
}

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail += std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failures;
    std::printf("criterion %2d: %s  %s (%.1f s) %s\n", id, out.pass ? "PASS" : "FAIL", name.c_str(), since(start),
                out.detail.c_str());
    std::fflush(stdout);
}

std::vector<CheckReport> pick(const std::vector<CheckReport>& reports, const std::string& id) {
    std::vector<CheckReport> out;
    for (const auto& r : reports) {
        if (r.id == id) out.push_back(r);
    }
    return out;
}

}  // namespace

int main() {
    const SuiteOptions opts = options();
    std::printf("parallelism %u\n", opts.parallelism);

    report(1, "semisimple pair, equal eigenvalues, GA_3(q), q=3,4,5 -> q^2+q", [&] {
        Outcome out;
        for (std::uint32_t q : {3U, 4U, 5U}) {
            const auto start = Clock::now();
            absorb_values(out, pick(check_semisimple_pair(field_of_order(q), opts), "semisimple-pair-equal"));
            time_limit(out, since(start), 5.0, "q=" + std::to_string(q));
        }
        return out;
    });

    report(2, "semisimple pair, distinct eigenvalues, GA_3(q), q=4,5 -> 2q-1", [&] {
        Outcome out;
        const auto start = Clock::now();
        for (std::uint32_t q : {4U, 5U}) {
            absorb_values(out, pick(check_semisimple_pair(field_of_order(q), opts), "semisimple-pair-distinct"));
        }
        time_limit(out, since(start), 5.0, "both fields");
        return out;
    });

    report(3, "translation product in GA_{r+2}(q) -> q^r", [&] {
        Outcome out;
        for (auto [q, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {4, 1}, {5, 1}, {4, 2}, {5, 2}}) {
            const auto start = Clock::now();
            const auto rep = check_translation_product(field_of_order(q), r, opts);
            absorb(out, {rep});
            if (rep.status == CheckStatus::pass) out.detail += "(" + std::to_string(q) + "," + std::to_string(r) + "):" + rep.observed + " ";
            time_limit(out, since(start), 60.0, "q=" + std::to_string(q) + " r=" + std::to_string(r));
        }
        return out;
    });

    report(4, "hyperbolic coefficients q^{n-1}-q and q^{n-1}", [&] {
        Outcome out;
        for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
            const auto start = Clock::now();
            auto reports = check_hyperbolic_coefficients(field_of_order(q), n, opts);
            if (q < 3) reports = pick(reports, "hyperbolic-unipotent");
            absorb(out, reports);
            out.detail += "(" + std::to_string(q) + "," + std::to_string(n) + "):";
            for (const auto& r : reports) out.detail += r.observed + "/";
            out.detail.back() = ' ';
            time_limit(out, since(start), 60.0, "q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
        return out;
    });

    report(5, "GA and GL constants coincide on degree-additive triples, ||nu|| <= 2, q=2,3", [&] {
        Outcome out;
        const auto start = Clock::now();
        std::size_t triples = 0;
        for (std::uint32_t q : {2U, 3U}) {
            const auto reports = check_gl_coincidence(2, field_of_order(q), opts);
            triples += reports.size();
            absorb(out, reports);
        }
        out.detail += std::to_string(triples) + " triples ";
        time_limit(out, since(start), 120.0, "sweep");
        return out;
    });

    std::vector<CheckReport> sweep2;
    std::vector<CheckReport> sweep3;
    double sweep2_seconds = 0;
    report(6, "degree filtration over the tables of GA_3(2), GA_4(2), GA_3(3)", [&] {
        Outcome out;
        auto start = Clock::now();
        sweep2 = check_filtration_and_stability(field_of_order(2), {3, 4, 5}, opts);
        sweep2_seconds = since(start);
        sweep3 = check_filtration_and_stability(field_of_order(3), {3}, opts);
        std::vector<CheckReport> filtration;
        for (const auto& r : sweep2) {
            if (r.id == "filtration" && (r.params.at("n") == "3" || r.params.at("n") == "4")) filtration.push_back(r);
        }
        for (const auto& r : pick(sweep3, "filtration")) filtration.push_back(r);
        if (filtration.size() != 3) {
            out.pass = false;
            out.detail += "only " + std::to_string(filtration.size()) + " of 3 tables built ";
        }
        absorb(out, filtration);
        for (const auto& r : filtration) out.detail += r.params.at("q") + "/" + r.params.at("n") + ": " + r.observed + "; ";
        return out;
    });

    report(7, "stability of degree-additive constants GA_3(2) -> GA_4(2) -> GA_5(2)", [&] {
        Outcome out;
        const auto stability = pick(sweep2, "stability");
        if (stability.size() != 2) {
            out.pass = false;
            out.detail += "sweep incomplete ";
        }
        absorb(out, pick(sweep2, "table-consistency"));
        absorb(out, stability);
        for (const auto& r : stability) out.detail += r.params.at("n") + ": " + r.observed + "; ";
        time_limit(out, sweep2_seconds, 600.0, "three tables");
        return out;
    });

    report(8, "strictly increasing property over the same sweep", [&] {
        Outcome out;
        const auto strict = pick(sweep2, "strictly-increasing");
        if (strict.size() != 1) {
            out.pass = false;
            out.detail += "sweep incomplete ";
        }
        absorb(out, strict);
        absorb(out, pick(sweep2, "monotone"));
        for (const auto& r : strict) out.detail += r.observed;
        return out;
    });

    report(9, "representatives and class counts c_0+...+c_{n-1}", [&] {
        Outcome out;
        for (auto [q, n_max] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 3}}) {
            const FieldSpec f = field_of_order(q);
            std::vector<CheckReport> wanted;
            for (const auto& r : check_representatives_and_counts(f, n_max, opts)) {
                if (std::stoul(r.params.at("n")) >= 2) wanted.push_back(r);
            }
            absorb(out, wanted);
            for (std::size_t n = 2; n <= n_max; ++n) {
                const auto brute = oracle::conjugacy_classes(f, n, true).members.size();
                const auto listed = enumerate_ga_types(n, f, Flavor::plain).size();
                out.detail += "(" + std::to_string(n) + "," + std::to_string(q) + "):" + std::to_string(listed) + " ";
                if (brute != listed) {
                    out.pass = false;
                    out.detail += "[brute force finds " + std::to_string(brute) + "] ";
                }
            }
        }
        return out;
    });

    report(10, "reflection length = word length over affine reflections = degree of modified pair", [&] {
        Outcome out;
        for (std::uint32_t q : {2U, 3U}) {
            const FieldSpec f = field_of_order(q);
            const auto words = oracle::reflection_word_lengths(f, 3, true);
            std::size_t bad = 0;
            std::size_t total = 0;
            for (const auto& a : oracle::group_elements(f, 3, true)) {
                ++total;
                const std::size_t len = reflection_length(a);
                const auto it = words.find(a.key());
                if (it == words.end() || it->second != len || affine_degree(type_of_ga(a)) != len) ++bad;
            }
            if (bad != 0 || total != words.size()) out.pass = false;
            out.detail += "GA_3(" + std::to_string(q) + "): " + std::to_string(bad) + " mismatches among " +
                          std::to_string(total) + "; ";
        }
        return out;
    });

    report(11, "affine-reflection length is not stable: q^2-q < q^3-q", [&] {
        Outcome out;
        for (std::uint32_t q : {2U, 3U}) {
            const auto r = check_ll_a_nonstability(field_of_order(q), opts);
            absorb(out, {r});
            out.detail += "q=" + std::to_string(q) + ": " + r.observed + "; ";
        }
        return out;
    });

    report(12, "property suites", [&] {
        Outcome out;
        std::size_t bad = 0;
        // field axioms
        for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
            const FieldSpec f = field_of_order(q);
            for (Code a = 0; a < q; ++a) {
                if (a != 0 && f.mul(a, f.inv(a)) != 1) ++bad;
                for (Code b = 0; b < q; ++b) {
                    if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) ++bad;
                    for (Code c = 0; c < q; ++c) {
                        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ++bad;
                        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ++bad;
                        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ++bad;
                    }
                }
            }
        }
        if (bad != 0) out.detail += "[field axioms: " + std::to_string(bad) + "] ";
        std::size_t field_bad = bad;

        // factorization round trip
        for (std::uint32_t q : {2U, 3U}) {
            const FieldSpec f = field_of_order(q);
            for (std::size_t d = 1; d <= 4; ++d) {
                std::uint64_t combos = 1;
                for (std::size_t i = 0; i < d; ++i) combos *= q;
                for (Code lead = 1; lead < q; ++lead) {
                    for (std::uint64_t code = 0; code < combos; ++code) {
                        std::vector<Code> coeffs(d + 1);
                        std::uint64_t rest = code;
                        for (std::size_t i = 0; i < d; ++i) {
                            coeffs[i] = static_cast<Code>(rest % q);
                            rest /= q;
                        }
                        coeffs[d] = lead;
                        const PolyFq g(f, coeffs);
                        const auto fac = poly_factor(g);
                        PolyFq back = PolyFq::constant(f, fac.unit);
                        for (const auto& [h, e] : fac.factors) {
                            if (!is_irreducible(h) || !h.is_monic()) ++bad;
                            for (unsigned i = 0; i < e; ++i) back = back * h;
                        }
                        if (back != g) ++bad;
                    }
                }
            }
        }
        if (bad != field_bad) out.detail += "[factorization: " + std::to_string(bad - field_bad) + "] ";
        std::size_t before = bad;

        // type round trip
        for (std::uint32_t q : {2U, 3U}) {
            const FieldSpec f = field_of_order(q);
            for (std::size_t n = 1; n <= 4; ++n) {
                for (const auto& lambda : enumerate_gl_types(n, f)) {
                    if (type_of_gl(canonical_rep_gl(lambda)) != lambda) ++bad;
                    if (gl_plain_at(modify_type(lambda), n) != lambda) ++bad;
                }
                for (const auto& pair : enumerate_ga_types(n + 1, f, Flavor::plain)) {
                    if (type_of_ga(canonical_rep_ga(pair, n + 1), Flavor::plain) != pair) ++bad;
                    if (ga_plain_at(to_modified(pair), n + 1) != pair) ++bad;
                }
            }
        }
        if (bad != before) out.detail += "[type round trip: " + std::to_string(bad - before) + "] ";
        before = bad;

        // classification against brute-force classes of GA_3
        for (std::uint32_t q : {2U, 3U}) {
            const FieldSpec f = field_of_order(q);
            const auto cls = oracle::conjugacy_classes(f, 3, true);
            std::set<std::string> labels;
            for (const auto& members : cls.members) {
                const GAType label = type_of_ga(cls.elements[members.front()]);
                labels.insert(label.to_string());
                for (std::size_t x : members) {
                    if (type_of_ga(cls.elements[x]) != label) ++bad;
                }
            }
            if (labels.size() != cls.members.size()) ++bad;
        }
        if (bad != before) out.detail += "[classification: " + std::to_string(bad - before) + "] ";

        // row mass and commutativity of every table built above
        std::size_t tables = 0;
        for (const auto* sweep : {&sweep2, &sweep3}) {
            for (const auto& r : pick(*sweep, "table-consistency")) {
                ++tables;
                if (r.status != CheckStatus::pass) ++bad;
            }
        }
        if (tables != 4) {
            ++bad;
            out.detail += "[only " + std::to_string(tables) + " of 4 tables] ";
        }
        out.pass = bad == 0;
        if (out.pass) out.detail = "fields, factorization, types, classification, " + std::to_string(tables) + " tables";
        return out;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
