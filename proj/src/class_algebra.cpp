#include "gac/class_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>
#include <unordered_map>

#include "gac/error.hpp"

namespace gac {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(begin, end, slot) over [0, count) split into contiguous chunks.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned parallelism, Body body) {
    const unsigned workers =
        std::max(1U, std::min<unsigned>(parallelism, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        body(std::size_t{0}, count, 0U);
        return;
    }
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
    for (auto& t : threads) t.join();
}

class Deadline {
public:
    explicit Deadline(double seconds)
        : seconds_(seconds), end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                      std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}

    bool expired() const { return seconds_ > 0 && Clock::now() > end_; }
    void check(const std::string& what) const {
        if (expired()) {
            char limit[32];
            std::snprintf(limit, sizeof limit, "%g", seconds_);
            throw Error("too-large", what + " exceeded the time budget of " + limit + " s");
        }
    }

private:
    double seconds_;
    Clock::time_point end_;
};

constexpr std::size_t kPollInterval = 4096;

void decode(std::uint64_t key, std::uint64_t q, std::vector<Code>& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Code>(key % q);
        key /= q;
    }
}

// Key of x * c where x is given by its entries.
std::uint64_t product_key(const FieldSpec& spec, std::size_t n, const std::vector<Code>& x, const MatFq& c) {
    const std::uint64_t q = spec.q();
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Code acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc = spec.add(acc, spec.mul(x[i * n + k], c(k, j)));
            key = key * q + acc;
        }
    }
    return key;
}

bool label_matches(const ClassIndex& index, const MatFq& q) {
    if (index.group.kind == GroupKind::GA) {
        return type_of_ga(q, Flavor::modified) == std::get<GAType>(index.label);
    }
    return modify_type(type_of_gl(q)) == std::get<GLType>(index.label);
}

void require_defined(const ClassIndex& index) {
    const std::size_t n = index.group.n;
    if (index.group.kind == GroupKind::GA) {
        ga_plain_at(std::get<GAType>(index.label), n);
    } else {
        gl_plain_at(std::get<GLType>(index.label), n);
    }
}

struct ScanResult {
    std::vector<std::uint64_t> values;
    std::uint64_t scanned = 0;
};

// p^c_{a,b} for each c in cs, all labels already validated.
ScanResult count_products(const ClassIndex& a, const ClassIndex& b, const std::vector<ClassIndex>& cs,
                          const ScanOptions& options) {
    const GroupId& gid = a.group;
    const FieldSpec& spec = gid.spec;
    const std::size_t n = gid.n;
    const std::uint64_t limit = options.budget == 0 ? default_element_budget() : options.budget;
    const Deadline deadline(options.seconds);

    // Scanning X over K_a^{-1} and testing X C in K_b counts P = X^{-1} in K_a
    // with P^{-1} C in K_b. The roles of a and b may be swapped since the
    // center is commutative.
    OrbitBuilder inv_a(gid, mat_inv(class_representative(a)));
    OrbitBuilder inv_b(gid, mat_inv(class_representative(b)));
    const OrbitBuilder* scan = nullptr;
    const ClassIndex* target = nullptr;
    while (true) {
        if (inv_a.done()) {
            scan = &inv_a;
            target = &b;
            break;
        }
        if (inv_b.done()) {
            scan = &inv_b;
            target = &a;
            break;
        }
        if (inv_a.size() > limit && inv_b.size() > limit) {
            throw Error("too-large", "both classes in " + gid.name() + " exceed " + std::to_string(limit) + " elements");
        }
        inv_a.step();
        inv_b.step();
        if (inv_a.size() % kPollInterval == 0) deadline.check("class closure in " + gid.name());
    }

    // Membership in the target class: by element set when fully built, by type otherwise.
    std::unordered_set<std::uint64_t> target_set;
    if (options.method == ScanMethod::pair_scan) {
        OrbitBuilder target_orbit(gid, class_representative(*target));
        target_orbit.run(limit);
        target_set.insert(target_orbit.keys().begin(), target_orbit.keys().end());
    }

    ScanResult result;
    result.scanned = scan->size();
    const auto& keys = scan->keys();
    for (const auto& c_index : cs) {
        const MatFq c = class_representative(c_index);
        const unsigned workers = std::max(1U, options.parallelism);
        std::vector<std::uint64_t> partial(workers, 0);
        std::atomic<bool> late{false};
        parallel_chunks(keys.size(), workers, [&](std::size_t begin, std::size_t end, unsigned slot) {
            std::vector<Code> x(n * n);
            std::uint64_t count = 0;
            for (std::size_t i = begin; i < end; ++i) {
                if ((i - begin) % kPollInterval == 0 && (late || deadline.expired())) {
                    late = true;
                    return;
                }
                decode(keys[i], spec.q(), x);
                const std::uint64_t qkey = product_key(spec, n, x, c);
                if (options.method == ScanMethod::pair_scan) {
                    count += target_set.count(qkey);
                } else if (label_matches(*target, MatFq::from_key(spec, n, n, qkey))) {
                    ++count;
                }
            }
            partial[slot] = count;
        });
        if (late) deadline.check("scan in " + gid.name());
        std::uint64_t total = 0;
        for (auto v : partial) total += v;
        result.values.push_back(total);
    }
    return result;
}

StructConstReport make_report(const ClassIndex& a, const ClassIndex& b, const ClassIndex& c,
                              const ScanOptions& options) {
    const auto start = Clock::now();
    require_defined(a);
    require_defined(b);
    require_defined(c);
    const ScanResult result = count_products(a, b, {c}, options);
    StructConstReport report{a, b, c};
    report.n = a.group.n;
    report.q = a.group.spec.q();
    report.value = result.values.front();
    report.method = options.method;
    report.scanned = result.scanned;
    report.graded = c.degree() == a.degree() + b.degree();
    report.elapsed = Clock::now() - start;
    return report;
}

}  // namespace

unsigned ClassIndex::degree() const {
    if (group.kind == GroupKind::GA) return affine_degree(std::get<GAType>(label));
    return std::get<GLType>(label).degree();
}

std::string ClassIndex::to_string() const {
    if (group.kind == GroupKind::GA) return std::get<GAType>(label).to_string();
    return std::get<GLType>(label).to_string();
}

std::vector<ClassIndex> class_labels(const GroupId& gid) {
    std::vector<ClassIndex> out;
    if (gid.kind == GroupKind::GA) {
        for (auto& t : enumerate_ga_types(gid.n, gid.spec, Flavor::modified)) out.push_back({gid, std::move(t)});
    } else {
        for (const auto& t : enumerate_gl_types(gid.n, gid.spec)) out.push_back({gid, modify_type(t)});
    }
    return out;
}

MatFq class_representative(const ClassIndex& index) {
    const std::size_t n = index.group.n;
    if (index.group.kind == GroupKind::GA) {
        return canonical_rep_ga(ga_plain_at(std::get<GAType>(index.label), n), n);
    }
    return canonical_rep_gl(gl_plain_at(std::get<GLType>(index.label), n));
}

StructConstReport struct_const_ga(const GAType& a, const GAType& b, const GAType& c, std::size_t n,
                                  const FieldSpec& spec, const ScanOptions& options) {
    const GroupId gid{GroupKind::GA, n, spec};
    return make_report({gid, to_modified(a)}, {gid, to_modified(b)}, {gid, to_modified(c)}, options);
}

StructConstReport struct_const_gl(const GLType& a, const GLType& b, const GLType& c, std::size_t n,
                                  const FieldSpec& spec, const ScanOptions& options) {
    const GroupId gid{GroupKind::GL, n, spec};
    return make_report({gid, a}, {gid, b}, {gid, c}, options);
}

std::size_t MultiplicationTable::find(const ClassIndex& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].label == label.label) return i;
    }
    return classes.size();
}

bool MultiplicationTable::row_mass_ok() const {
    const std::size_t r = rank();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            unsigned __int128 mass = 0;
            for (std::size_t c = 0; c < r; ++c) mass += static_cast<unsigned __int128>(at(a, b, c)) * sizes[c];
            if (mass != static_cast<unsigned __int128>(sizes[a]) * sizes[b]) return false;
        }
    }
    return true;
}

bool MultiplicationTable::commutative() const {
    const std::size_t r = rank();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            for (std::size_t c = 0; c < r; ++c) {
                if (at(a, b, c) != at(b, a, c)) return false;
            }
        }
    }
    return true;
}

MultiplicationTable multiplication_table(const GroupId& gid, unsigned parallelism, std::uint64_t budget,
                                        double seconds) {
    if (budget == 0) budget = default_element_budget();
    const Deadline deadline(seconds);
    const auto order = group_order(gid);
    if (!order || *order > budget) {
        throw Error("too-large", gid.name() + " has " + group_order_string(gid) + " elements, budget is " +
                                     std::to_string(budget));
    }
    MultiplicationTable table{gid, class_labels(gid), {}, {}, {}};
    const std::size_t r = table.rank();
    const FieldSpec& spec = gid.spec;
    const std::size_t n = gid.n;

    std::vector<std::uint64_t> elements;
    std::vector<std::uint32_t> element_class;
    std::unordered_map<std::uint64_t, std::uint32_t> class_of;
    class_of.reserve(*order);
    for (std::size_t i = 0; i < r; ++i) {
        table.reps.push_back(class_representative(table.classes[i]));
        OrbitBuilder orbit(gid, table.reps.back());
        orbit.run(budget);
        table.sizes.push_back(orbit.size());
        deadline.check("class closure in " + gid.name());
        for (std::uint64_t key : orbit.keys()) {
            if (!class_of.emplace(key, static_cast<std::uint32_t>(i)).second) {
                throw Error("classification-bug", "representatives " + std::to_string(class_of[key]) + " and " +
                                                      std::to_string(i) + " are conjugate");
            }
            elements.push_back(key);
            element_class.push_back(static_cast<std::uint32_t>(i));
        }
    }
    if (elements.size() != *order) {
        throw Error("classification-bug", "classes cover " + std::to_string(elements.size()) + " of " +
                                              std::to_string(*order) + " elements");
    }

    std::vector<std::uint32_t> inverse_class(r);
    for (std::size_t i = 0; i < r; ++i) inverse_class[i] = class_of.at(mat_inv(table.reps[i]).key());

    table.coeff.assign(r * r * r, 0);
    const unsigned workers = std::max(1U, parallelism);
    for (std::size_t c = 0; c < r; ++c) {
        const MatFq& rep = table.reps[c];
        std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(r * r, 0));
        std::atomic<bool> late{false};
        parallel_chunks(elements.size(), workers, [&](std::size_t begin, std::size_t end, unsigned slot) {
            std::vector<Code> x(n * n);
            auto& counts = partial[slot];
            for (std::size_t i = begin; i < end; ++i) {
                if ((i - begin) % kPollInterval == 0 && (late || deadline.expired())) {
                    late = true;
                    return;
                }
                decode(elements[i], spec.q(), x);
                // P = X^{-1} lies in the inverse class of X, and P^{-1} C = X C
                const std::uint32_t b = class_of.at(product_key(spec, n, x, rep));
                ++counts[inverse_class[element_class[i]] * r + b];
            }
        });
        if (late) deadline.check("table of " + gid.name());
        for (const auto& counts : partial) {
            for (std::size_t ab = 0; ab < r * r; ++ab) table.coeff[ab * r + c] += counts[ab];
        }
    }
    return table;
}

std::map<GAType, std::uint64_t> graded_product(const GAType& a, const GAType& b, std::size_t n,
                                               const FieldSpec& spec, const ScanOptions& options) {
    const GroupId gid{GroupKind::GA, n, spec};
    const ClassIndex ia{gid, to_modified(a)};
    const ClassIndex ib{gid, to_modified(b)};
    require_defined(ia);
    require_defined(ib);
    const unsigned top = ia.degree() + ib.degree();
    std::vector<ClassIndex> candidates;
    for (const auto& index : class_labels(gid)) {
        if (index.degree() == top) candidates.push_back(index);
    }
    std::map<GAType, std::uint64_t> out;
    if (candidates.empty()) return out;
    const ScanResult result = count_products(ia, ib, candidates, options);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (result.values[i] != 0) out.emplace(std::get<GAType>(candidates[i].label), result.values[i]);
    }
    return out;
}

}  // namespace gac
