#include <doctest.h>

#include <postlie/catalog.hpp>
#include <postlie/json_io.hpp>

using namespace postlie;

TEST_CASE("round trip through JSON") {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = catalog_build("heisenberg-p3", {F.one(), F.from_int(2), F.zero()});
    Mat m = mat_identity(F, 3);
    m.at(0, 2) = F.from_int(2);

    AlgebraFile back = parse_algebra_json(algebra_to_json(A, {{"phi", m}}));
    CHECK(back.algebra.field == A.field);
    CHECK(back.algebra.dim == A.dim);
    CHECK(back.algebra.basis == A.basis);
    CHECK(back.algebra.bracket == A.bracket);
    CHECK(back.algebra.pmap_basis == A.pmap_basis);
    CHECK(back.algebra.postlie == A.postlie);
    REQUIRE(back.maps.count("phi") == 1);
    CHECK(back.maps.at("phi").data == m.data);
}

TEST_CASE("round trip over an extension field") {
    FdAlgebra A = catalog_build("sl2-p3-gf9", {});
    AlgebraFile back = parse_algebra_json(algebra_to_json(A));
    CHECK(back.algebra.field.order() == 9);
    CHECK(back.algebra.bracket == A.bracket);
    CHECK(back.algebra.postlie == A.postlie);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_algebra_json("not json at all"), AlgebraFileError);
    CHECK_THROWS_AS(parse_algebra_json("{}"), AlgebraFileError);
    // out-of-range basis index
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"field":{"p":3},"dim":2,"bracket":[[0,5,[[1],[0]]]]})"),
                    AlgebraFileError);
    // duplicate sparse entry
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"field":{"p":3},"dim":2,
                            "bracket":[[0,1,[[1],[0]]],[0,1,[[1],[0]]]]})"),
                    AlgebraFileError);
    // scalar digit list of the wrong length for the field degree
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"field":{"p":3,"modulus":[1,0,1]},"dim":1,
                            "bracket":[[0,0,[[1]]]]})"),
                    AlgebraFileError);
    // missing file
    CHECK_THROWS_AS(load_algebra_file("/nonexistent/algebra.json"), AlgebraFileError);
}

TEST_CASE("reports serialize with witnesses") {
    CheckReport rep;
    rep.seed = 99;
    rep.add_pass("identity A");
    rep.add_fail("identity B", "x = e1");
    std::string j = report_to_json(rep);
    CHECK(j.find("identity A") != std::string::npos);
    CHECK(j.find("x = e1") != std::string::npos);
    CHECK(parse_algebra_json(algebra_to_json(catalog_build(
                                 "dim2-p3-family4", {FieldDesc::make(3).one()})))
              .algebra.dim == 2);
}
