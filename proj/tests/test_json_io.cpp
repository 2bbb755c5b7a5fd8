#include "doctest.h"

#include "gac/error.hpp"
#include "gac/json_io.hpp"

using namespace gac;

TEST_CASE("type shorthand and JSON forms") {
    const FieldSpec f2 = field_of_order(2);
    const FieldSpec f3 = field_of_order(3);
    GLType expect(f2);
    expect.set_unipotent(Partition({2, 1}));
    CHECK(parse_gl_type(f2, "1:t-1,2:t-1") == expect);
    CHECK(parse_gl_type(f2, " 2:t+1 , 1:1+1*t ") == expect);
    CHECK(parse_gl_type(f2, "{\"t+1\":[2,1]}") == expect);
    CHECK(parse_gl_type(f2, "empty").empty());
    CHECK(parse_gl_type(f2, "").empty());
    CHECK(parse_gl_type(f3, "1:2*t+2") == parse_gl_type(f3, "1:t+1"));
    CHECK_THROWS_WITH_AS(parse_gl_type(f2, "1:t"), doctest::Contains("bad-polynomial"), Error);
    CHECK_THROWS_WITH_AS(parse_gl_type(f2, "x"), doctest::Contains("parse"), Error);
    CHECK_THROWS_WITH_AS(parse_gl_type(f2, "{\"t+1\":"), doctest::Contains("parse"), Error);

    CHECK(parse_ga_type(f2, "@1") == GAType{GLType(f2), 1, Flavor::modified});
    CHECK(parse_ga_type(f2, "2:t-1,1:t-1@2", Flavor::plain) == GAType{expect, 2, Flavor::plain});
    CHECK_THROWS_WITH_AS(parse_ga_type(f2, "2:t-1@2"), doctest::Contains("invalid-shift"), Error);
    const GAType pair{expect, 3, Flavor::modified};
    CHECK(ga_type_from_json(f2, to_json(pair)) == pair);
    CHECK(parse_ga_type(f2, to_json(pair).dump()) == pair);
    CHECK(gl_type_from_json(f2, to_json(expect)) == expect);
}

TEST_CASE("matrices") {
    const FieldSpec f3 = field_of_order(3);
    const MatFq m = MatFq::from_rows(f3, {{1, 0}, {2, 1}});
    CHECK(matrix_from_json(f3, json::parse("[[1,0],[2,1]]")) == m);
    CHECK(matrix_from_json(f3, to_json(m)) == m);
    CHECK_THROWS_WITH_AS(matrix_from_json(f3, json::parse("[[1,0],[2]]")), doctest::Contains("parse"), Error);
    CHECK_THROWS_WITH_AS(matrix_from_json(f3, json::parse("[[3]]")), doctest::Contains("parse"), Error);
    CHECK_THROWS_AS(matrix_from_json(f3, json::parse("[[\"a\"]]")), Error);
}

TEST_CASE("classification output") {
    const FieldSpec f2 = field_of_order(2);
    const GroupId ga3{GroupKind::GA, 3, f2};
    const json id = classification_json(ga3, MatFq::identity(f2, 3));
    CHECK(id["modified"]["k"] == 0);
    CHECK(id["modified"]["base"].empty());
    CHECK(id["length"] == 0);
    CHECK(id["ll_a"] == 0);
    const json tr = classification_json(ga3, MatFq::from_rows(f2, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
    CHECK(tr["modified"]["k"] == 1);
    CHECK(tr["length"] == 1);
    CHECK(tr["ll_a"] == 2);
    CHECK_THROWS_WITH_AS(classification_json(ga3, MatFq::from_rows(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})),
                         doctest::Contains("not-affine"), Error);
}

TEST_CASE("tables round trip through JSON") {
    for (const GroupId& gid : {GroupId{GroupKind::GA, 3, field_of_order(2)}, GroupId{GroupKind::GL, 2, field_of_order(3)}}) {
        const auto table = multiplication_table(gid);
        const json doc = to_json(table);
        CHECK(doc["schema_version"] == kTableSchemaVersion);
        const auto back = table_from_json(json::parse(doc.dump()));
        CHECK(back.rank() == table.rank());
        CHECK(back.coeff == table.coeff);
        CHECK(back.sizes == table.sizes);
        for (std::size_t i = 0; i < table.rank(); ++i) {
            CHECK(back.reps[i] == table.reps[i]);
            CHECK(back.classes[i].to_string() == table.classes[i].to_string());
        }
        CHECK(to_json(back) == doc);
    }
    const auto csv = table_to_csv(multiplication_table({GroupKind::GA, 2, field_of_order(2)}));
    CHECK(csv == "a,b,c,coefficient\n0,0,0,1\n0,1,1,1\n1,0,1,1\n1,1,0,1\n");
}
