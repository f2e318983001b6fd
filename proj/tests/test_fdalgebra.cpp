#include <doctest.h>

#include <postlie/catalog.hpp>
#include <postlie/fdalgebra.hpp>

using namespace postlie;

namespace {

FdAlgebra heisenberg(const Scalar& mu, const Scalar& gamma, const Scalar& theta) {
    return catalog_build("heisenberg-p3", {mu, gamma, theta});
}

FdAlgebra affine_p2() {
    // dim 2 over GF(2): [e1,e2] = e2, e1^[2] = e1, e2^[2] = 0.
    FieldDesc F = FieldDesc::make(2);
    FdAlgebra A;
    A.field = F;
    A.dim = 2;
    A.basis = {"e1", "e2"};
    A.bracket.assign(2, std::vector<Vec>(2, A.zero()));
    A.bracket[0][1] = {F.zero(), F.one()};
    A.bracket[1][0] = {F.zero(), F.neg(F.one())};
    A.pmap_basis = std::vector<Vec>{Vec{F.one(), F.zero()}, A.zero()};
    return A;
}

}  // namespace

TEST_CASE("p-map on arbitrary elements, p = 3") {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = heisenberg(F.one(), F.zero(), F.zero());
    // (e1 + e2)^[3] = e1^[3] + e2^[3] + (nested-bracket terms, all central) = e3
    Vec x = vec_add(F, A.e(0), A.e(1));
    CHECK(eval_pmap(A, x) == A.e(2));
    // semilinearity: (2 e1)^[3] = 8 e1^[3] = 2 e3
    CHECK(eval_pmap(A, vec_scale(F, F.from_int(2), A.e(0))) ==
          vec_scale(F, F.from_int(2), A.e(2)));
}

TEST_CASE("p-map on arbitrary elements, p = 2") {
    FdAlgebra A = affine_p2();
    const FieldDesc& F = A.field;
    // (x+y)^[2] = x^[2] + y^[2] + [x,y]
    Vec x = A.e(0), y = A.e(1);
    Vec expect = vec_add(F, vec_add(F, eval_pmap(A, x), eval_pmap(A, y)), eval_bracket(A, x, y));
    CHECK(eval_pmap(A, vec_add(F, x, y)) == expect);
    CHECK(check_lie(A).passed());
    CHECK(check_restricted(A, 7).passed());
}

TEST_CASE("universal bracket sum is an independent oracle for the p-map") {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = heisenberg(F.from_int(2), F.one(), F.zero());
    auto br = [&](const Vec& a, const Vec& b) { return eval_bracket(A, a, b); };
    std::uint64_t st = 11;
    for (int t = 0; t < 25; ++t) {
        Vec x = random_element(A, st);
        Vec y = random_element(A, st);
        Vec sum = jacobson_bracket_sum(F, A.dim, br, x, y);
        Vec lhs = eval_pmap(A, vec_add(F, x, y));
        Vec rhs = vec_add(F, vec_add(F, eval_pmap(A, x), eval_pmap(A, y)), sum);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("matrices of ad and triangle") {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = heisenberg(F.one(), F.from_int(2), F.one());
    std::uint64_t st = 3;
    for (int t = 0; t < 10; ++t) {
        Vec x = random_element(A, st);
        Vec y = random_element(A, st);
        CHECK(mat_apply(F, ad_matrix(A, x), y) == eval_bracket(A, x, y));
        CHECK(mat_apply(F, triangle_matrix(A, x), y) == eval_triangle(A, x, y));
    }
}

TEST_CASE("error conditions") {
    FdAlgebra A = affine_p2();
    CHECK_THROWS_AS(eval_triangle(A, A.e(0), A.e(1)), MissingTableError);
    CHECK_THROWS_AS(eval_bracket(A, Vec{A.field.one()}, A.e(0)), DimensionMismatchError);
    FdAlgebra noP = A;
    noP.pmap_basis.reset();
    CHECK_THROWS_AS(eval_pmap(noP, noP.e(0)), MissingTableError);
}

TEST_CASE("zero-dimensional algebra passes vacuously") {
    FdAlgebra A;
    A.field = FieldDesc::make(3);
    A.dim = 0;
    A.pmap_basis = std::vector<Vec>{};
    CHECK(check_lie(A).passed());
    CHECK(check_restricted(A, 1).passed());
}

TEST_CASE("derived bracket and p-map of the Heisenberg example") {
    FieldDesc F = FieldDesc::make(3);
    // mu = 1, gamma = 2, theta = 1: [[e1,e2]] = (1 + gamma - theta) e3 = 2 e3.
    FdAlgebra A = heisenberg(F.one(), F.from_int(2), F.one());
    FdAlgebra B = sub_adjacent(A);
    CHECK(eval_bracket(B, B.e(0), B.e(1)) == vec_scale(F, F.from_int(2), B.e(2)));
    // e1^{[3]>} = e1^{[3]} + e1|>(e1|>e1) + [e1|>e1, e1]; the corrections are
    // central multiples of e3 that vanish here, leaving e3.
    CHECK(eval_pmap(B, B.e(0)) == B.e(2));
    CHECK(check_lie(B).passed());
    CHECK(check_restricted(B, 5).passed());
}

TEST_CASE("envelope word action recursion") {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = heisenberg(F.one(), F.one(), F.from_int(2));
    std::uint64_t st = 9;
    Vec x = random_element(A, st), y = random_element(A, st), z = random_element(A, st);
    // empty word acts as identity; single letter acts by |>
    CHECK(env_action(A, {}, z) == z);
    CHECK(env_action(A, {x}, z) == eval_triangle(A, x, z));
    // (x y) |> z = x |> (y |> z) - (x |> y) |> z
    Vec lhs = env_action(A, {x, y}, z);
    Vec rhs = vec_sub(F, eval_triangle(A, x, eval_triangle(A, y, z)),
                      eval_triangle(A, eval_triangle(A, x, y), z));
    CHECK(lhs == rhs);
    CHECK(D_check(A, x, y, z).passed());
}

TEST_CASE("lower central series membership") {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = heisenberg(F.zero(), F.zero(), F.zero());
    CHECK(lcs_membership(A, A.e(0), 1));
    CHECK(lcs_membership(A, A.e(2), 2));   // [e1,e2] = e3
    CHECK(!lcs_membership(A, A.e(0), 2));
    CHECK(!lcs_membership(A, A.e(2), 3));  // e3 is central
    CHECK(lcs_membership(A, A.zero(), 5));
}

TEST_CASE("checker catches broken structures") {
    FdAlgebra A = affine_p2();
    // Break antisymmetry.
    FdAlgebra bad = A;
    bad.bracket[1][0] = bad.zero();
    CHECK(!check_lie(bad).passed());
    // Break the p-map.
    FdAlgebra badP = A;
    (*badP.pmap_basis)[0] = badP.e(1);
    CHECK(!check_restricted(badP, 7).passed());
}
