#include "doctest.h"

#include "gac/error.hpp"
#include "gac/types.hpp"
#include "oracles.hpp"

using namespace gac;

namespace {

GLType on(const FieldSpec& spec, const char* poly, std::vector<unsigned> parts) {
    GLType out(spec);
    out.set(parse_poly(spec, poly), Partition(std::move(parts)));
    return out;
}

GLType unipotent(const FieldSpec& spec, std::vector<unsigned> parts) {
    GLType out(spec);
    out.set_unipotent(Partition(std::move(parts)));
    return out;
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(Partition({2, 1}).union_with(Partition({1})) == Partition({2, 1, 1}));
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({1, 2, 2}).multiplicities() == std::map<unsigned, unsigned>{{1, 1}, {2, 2}});
    CHECK(Partition({3, 0, 1}).parts() == std::vector<unsigned>{3, 1});
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 1}).to_string() == "(2,1)");
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15};
    for (unsigned n = 0; n < counts.size(); ++n) CHECK(partitions_of(n).size() == counts[n]);
    CHECK(partitions_of(3).front() == Partition({3}));
    CHECK(partitions_of(3).back() == Partition({1, 1, 1}));
}

TEST_CASE("type degree and validation") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f5 = field_of_order(5);
    GLType two(f5);
    two.set(PolyFq::linear(f5, 2), Partition({1}));
    two.set(PolyFq::linear(f5, 3), Partition({1}));
    CHECK(two.degree() == 2);
    CHECK(on(f2, "t^2+t+1", {2}).degree() == 4);
    CHECK(GLType(f2).degree() == 0);
    GLType bad(f2);
    CHECK_THROWS_WITH_AS(bad.set(PolyFq::t(f2), Partition({1})), doctest::Contains("bad-polynomial"), Error);
    CHECK_THROWS_AS(bad.set(parse_poly(f2, "t^2+1"), Partition({1})), Error);
    bad.set(PolyFq::linear(f2, 1), Partition({1}));
    bad.set(PolyFq::linear(f2, 1), Partition());
    CHECK(bad.empty());
}

TEST_CASE("modified type, inflation, tilde and hat") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f3 = field_of_order(3);
    CHECK(modify_type(unipotent(f2, {3, 1})) == unipotent(f2, {2}));
    CHECK(modify_type(unipotent(f2, {1, 1, 1})).empty());
    CHECK(modify_type(on(f3, "t+1", {2})) == on(f3, "t+1", {2}));

    CHECK(inflate_type(unipotent(f2, {2}), 5) == unipotent(f2, {3, 1, 1}));
    CHECK(inflate_type(GLType(f2), 3) == unipotent(f2, {1, 1, 1}));
    GLType expect = on(f3, "t-2", {1});
    expect.set_unipotent(Partition({1, 1}));
    CHECK(inflate_type(on(f3, "t-2", {1}), 3) == expect);
    CHECK_THROWS_WITH_AS(inflate_type(unipotent(f2, {2}), 2), doctest::Contains("not-inflatable"), Error);

    CHECK(tilde_type(unipotent(f2, {1, 1}), 1) == unipotent(f2, {2, 1}));
    CHECK(tilde_type(unipotent(f2, {2}), 0) == unipotent(f2, {2, 1}));
    CHECK(tilde_type(GLType(f2), 0) == unipotent(f2, {1}));
    CHECK_THROWS_WITH_AS(tilde_type(unipotent(f2, {2}), 1), doctest::Contains("invalid-shift"), Error);

    const GLType lambda = on(f3, "t+1", {1});
    CHECK(hat_type(lambda, 0) == lambda);
    CHECK(hat_type(GLType(f2), 1) == unipotent(f2, {1}));
    CHECK(hat_type(unipotent(f2, {1}), 2) == unipotent(f2, {2}));
}

TEST_CASE("pair validity and affine degree") {
    const FieldSpec f2 = field_of_order(2);
    CHECK(is_valid_pair({unipotent(f2, {2, 1}), 2, Flavor::plain}));
    CHECK_FALSE(is_valid_pair({unipotent(f2, {2, 1}), 3, Flavor::plain}));
    CHECK(is_valid_pair({GLType(f2), 1, Flavor::modified}));
    CHECK(is_valid_pair({unipotent(f2, {2}), 3, Flavor::modified}));
    CHECK_FALSE(is_valid_pair({unipotent(f2, {2}), 2, Flavor::modified}));
    CHECK(affine_degree({GLType(f2), 1, Flavor::modified}) == 1);
    CHECK(affine_degree({unipotent(f2, {2}), 0, Flavor::modified}) == 2);
    CHECK(affine_degree({unipotent(f2, {1, 1}), 1, Flavor::plain}) == 1);
}

TEST_CASE("admissibility bounds") {
    const FieldSpec f2 = field_of_order(2);
    const GAType translation{GLType(f2), 1, Flavor::modified};
    CHECK(ga_min_n(translation) == 2);
    CHECK_FALSE(ga_defined_at(translation, 1));
    CHECK(ga_min_n({unipotent(f2, {1}), 0, Flavor::modified}) == 3);
    CHECK(ga_min_n({unipotent(f2, {1}), 2, Flavor::modified}) == 3);
    CHECK(gl_min_n(unipotent(f2, {1})) == 2);
    CHECK(gl_min_n(GLType(f2)) == 0);
    CHECK_THROWS_WITH_AS(ga_plain_at(translation, 1), doctest::Contains("undefined-at-n"), Error);
    CHECK(ga_plain_at(translation, 2) == GAType{unipotent(f2, {1}), 1, Flavor::plain});
    CHECK(ga_plain_at(translation, 3) == GAType{unipotent(f2, {1, 1}), 1, Flavor::plain});
    CHECK(gl_plain_at(unipotent(f2, {1}), 3) == unipotent(f2, {2, 1}));
}

TEST_CASE("canonical representatives") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f3 = field_of_order(3);
    CHECK(canonical_rep_gl(unipotent(f2, {1, 1})) == MatFq::identity(f2, 2));
    CHECK(canonical_rep_gl(unipotent(f3, {2})) == MatFq::from_rows(f3, {{1, 1}, {0, 1}}));
    CHECK(canonical_rep_gl(on(f2, "t^2+t+1", {1})) == MatFq::from_rows(f2, {{0, 1}, {1, 1}}));
    CHECK(jordan_block(parse_poly(f2, "t^2+t+1"), 2) ==
          MatFq::from_rows(f2, {{0, 1, 1, 0}, {1, 1, 0, 1}, {0, 0, 0, 1}, {0, 0, 1, 1}}));

    CHECK(canonical_rep_ga({unipotent(f2, {1, 1}), 0, Flavor::plain}, 3) == MatFq::identity(f2, 3));
    // e_1 sits on the last row of the part-1 blocks
    CHECK(canonical_rep_ga({unipotent(f2, {1, 1}), 1, Flavor::plain}, 3) ==
          MatFq::from_rows(f2, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
    CHECK(canonical_rep_ga({unipotent(f2, {2}), 2, Flavor::plain}, 3) ==
          MatFq::from_rows(f2, {{1, 0, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK_THROWS_AS(canonical_rep_ga({unipotent(f2, {2}), 1, Flavor::plain}, 3), Error);
    CHECK_THROWS_AS(canonical_rep_ga({GLType(f2), 1, Flavor::modified}, 3), Error);
}

TEST_CASE("type enumeration") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f3 = field_of_order(3);
    const auto one = enumerate_gl_types(1, f2);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == unipotent(f2, {1}));
    const auto two = enumerate_gl_types(2, f2);
    CHECK(two.size() == 3);
    CHECK(std::find(two.begin(), two.end(), on(f2, "t^2+t+1", {1})) != two.end());
    CHECK(enumerate_gl_types(2, f3).size() == 8);
    for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
        for (std::size_t n = 0; n <= 4; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            CHECK(enumerate_gl_types(n, field_of_order(q)).size() == oracle::gl_class_count(q, n));
        }
    }

    const auto ga1 = enumerate_ga_types(1, f2, Flavor::modified);
    REQUIRE(ga1.size() == 1);
    CHECK(ga1[0] == GAType{GLType(f2), 0, Flavor::modified});
    CHECK(enumerate_ga_types(2, f2, Flavor::plain) ==
          std::vector<GAType>{{unipotent(f2, {1}), 0, Flavor::plain}, {unipotent(f2, {1}), 1, Flavor::plain}});
    CHECK(enumerate_ga_types(3, f2, Flavor::plain).size() == 5);
    CHECK(enumerate_ga_types(4, f2, Flavor::plain).size() == 11);
    CHECK(enumerate_ga_types(2, f3, Flavor::plain).size() == 3);
}

TEST_CASE("modified and plain labels round trip") {
    for (std::uint32_t q : {2U, 3U}) {
        const FieldSpec f = field_of_order(q);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (const auto& pair : enumerate_ga_types(n, f, Flavor::plain)) {
                const GAType m = to_modified(pair);
                CHECK(is_valid_pair(m));
                CHECK(ga_defined_at(m, n));
                CHECK(ga_plain_at(m, n) == pair);
                CHECK(affine_degree(m) == affine_degree(pair));
            }
            for (const auto& lambda : enumerate_gl_types(n, f)) {
                const GLType m = modify_type(lambda);
                CHECK(gl_defined_at(m, n));
                CHECK(gl_plain_at(m, n) == lambda);
            }
        }
    }
}
