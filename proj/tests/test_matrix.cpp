#include "doctest.h"

#include <random>

#include "gac/error.hpp"
#include "gac/matrix.hpp"
#include "gac/poly.hpp"

using namespace gac;

namespace {

MatFq random_matrix(const FieldSpec& spec, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> dist(0, spec.q() - 1);
    MatFq m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Code>(dist(rng));
    }
    return m;
}

}  // namespace

TEST_CASE("matrix products and inverses") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f3 = field_of_order(3);
    const FieldSpec f5 = field_of_order(5);
    const MatFq i3 = MatFq::identity(f2, 3);
    CHECK(i3 * i3 == i3);
    const MatFq j2 = MatFq::from_rows(f3, {{1, 1}, {0, 1}});
    CHECK(j2 * j2 == MatFq::from_rows(f3, {{1, 2}, {0, 1}}));
    const MatFq swap = MatFq::from_rows(f2, {{0, 1}, {1, 0}});
    CHECK(mat_inv(swap) == swap);
    CHECK(mat_inv(MatFq::from_rows(f5, {{2}})) == MatFq::from_rows(f5, {{3}}));
    CHECK_THROWS_WITH_AS(mat_inv(MatFq(f2, 2, 2)), doctest::Contains("singular"), Error);
    CHECK_THROWS_WITH_AS(MatFq(f2, 2, 3) * MatFq(f2, 2, 3), doctest::Contains("shape-mismatch"), Error);
    CHECK_THROWS_AS(MatFq::from_rows(f2, {{0, 2}}), Error);

    std::mt19937 rng(7);
    for (std::uint32_t q : {2U, 3U, 4U, 5U, 9U}) {
        const FieldSpec f = field_of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            const MatFq a = random_matrix(f, 4, rng);
            if (!is_invertible(a)) continue;
            CHECK(a * mat_inv(a) == MatFq::identity(f, 4));
            CHECK(mat_inv(a) * a == MatFq::identity(f, 4));
        }
    }
}

TEST_CASE("rank") {
    const FieldSpec f2 = field_of_order(2);
    CHECK(mat_rank(MatFq(f2, 3, 3)) == 0);
    CHECK(mat_rank(MatFq::identity(f2, 3)) == 3);
    const MatFq j3 = MatFq::from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(mat_rank(j3 - MatFq::identity(f2, 3)) == 2);
    CHECK(mat_rank(MatFq::from_rows(f2, {{1, 1, 0}, {1, 1, 0}})) == 1);
}

TEST_CASE("characteristic polynomial") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f3 = field_of_order(3);
    CHECK(char_poly(MatFq::identity(f2, 2)) == parse_poly(f2, "t^2+1"));
    CHECK(char_poly(MatFq::from_rows(f2, {{0, 1}, {1, 1}})) == parse_poly(f2, "t^2+t+1"));
    CHECK(char_poly(MatFq::from_rows(f3, {{1, 1}, {0, 1}})) == parse_poly(f3, "t^2+t+1"));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
    std::mt19937 rng(11);
    for (std::uint32_t q : {2U, 3U, 4U, 5U, 8U, 9U}) {
        const FieldSpec f = field_of_order(q);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                const MatFq a = random_matrix(f, n, rng);
                const PolyFq chi = char_poly(a);
                CHECK(chi.deg() == n);
                CHECK(chi.is_monic());
                CHECK(eval_at_matrix(chi, a) == MatFq(f, n, n));
            }
        }
    }
}

TEST_CASE("nullity towers") {
    const FieldSpec f2 = field_of_order(2);
    const PolyFq t1 = PolyFq::linear(f2, 1);
    const MatFq j3 = MatFq::from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(nullity_tower(j3, t1) == std::vector<std::size_t>{1, 2, 3});
    CHECK(nullity_tower(MatFq::identity(f2, 2), t1) == std::vector<std::size_t>{2, 2});
    const PolyFq g = parse_poly(f2, "t^2+t+1");
    CHECK(nullity_tower(MatFq::from_rows(f2, {{0, 1}, {1, 1}}), g, 1) == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(nullity_tower(j3, parse_poly(f2, "t^2+1")), Error);
}

TEST_CASE("packed keys and column space") {
    const FieldSpec f3 = field_of_order(3);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const MatFq a = random_matrix(f3, 4, rng);
        CHECK(MatFq::from_key(f3, 4, 4, a.key()) == a);
    }
    CHECK(key_fits(2, 64));
    CHECK_FALSE(key_fits(2, 65));
    CHECK_THROWS_WITH_AS(MatFq(field_of_order(256), 3, 3).key(), doctest::Contains("too-large"), Error);
    const MatFq cols = MatFq::from_rows(f3, {{1, 0}, {0, 1}, {0, 0}});
    CHECK(in_column_space(cols, MatFq::from_rows(f3, {{2}, {1}, {0}})));
    CHECK_FALSE(in_column_space(cols, MatFq::from_rows(f3, {{0}, {0}, {1}})));
    CHECK(MatFq::identity(f3, 2).padded(1) == MatFq::identity(f3, 3));
    CHECK(MatFq::from_rows(f3, {{1, 2}, {0, 1}}).to_string() == "[[1,2],[0,1]]");
}
