#include <doctest.h>

#include <postlie/catalog.hpp>
#include <postlie/fdalgebra.hpp>
#include <postlie/freelie.hpp>
#include <postlie/perms.hpp>
#include <postlie/pstruct.hpp>
#include <postlie/trees.hpp>

using namespace postlie;

TEST_CASE("coefficient C values and nonvanishing") {
    FieldDesc F3 = FieldDesc::make(3);
    CHECK(coefficient_C({1, 2}, F3) == F3.from_int(1));
    CHECK(coefficient_C({2, 1}, F3) == F3.from_int(2));

    // Partial sums of a composition of p stay below p, so C never vanishes.
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        FieldDesc F = FieldDesc::make(p);
        for (int n = 1; n <= (int)p; ++n)
            for (const auto& ell : compositions((int)p, n))
                CHECK(!F.is_zero(coefficient_C(ell, F)));
    }
}

TEST_CASE("composition weights") {
    CHECK(composition_weight(5, {1, 1, 1, 2}) == 24);      // 4!/1
    CHECK(composition_weight(5, {5}) == 1);                // 4!/4!
    CHECK(composition_weight(5, {2, 3}) == 12);            // 4!/(1!2!)
    CHECK(composition_weight(7, {3, 4}) == 720 / (2 * 6));
}

TEST_CASE("shuffle sums of inverse C vanish") {
    FieldDesc F3 = FieldDesc::make(3);
    Perm id2 = {0, 1};
    // C^{-1}(1,2) + C^{-1}(2,1) = 1 + 2 = 0 mod 3.
    CHECK(F3.is_zero(friedrich_sum({1, 2}, 1, id2, F3, false)));

    FieldDesc F5 = FieldDesc::make(5);
    Perm id3 = {0, 1, 2};
    CHECK(F5.is_zero(friedrich_sum({1, 1, 3}, 1, id3, F5, false)));
    CHECK(F5.is_zero(friedrich_sum({1, 1, 3}, 2, id3, F5, true)));

    CHECK_THROWS_AS(friedrich_sum({1, 2}, 2, id2, F3, false), std::out_of_range);
    CHECK_THROWS_AS(friedrich_sum({3}, 1, Perm{0}, F3, false), std::out_of_range);
}

TEST_CASE("P_lambda hook values") {
    FieldDesc F5 = FieldDesc::make(5);
    FreeLie L(F5, 2);
    const LieElt x1 = L.gen(0), x2 = L.gen(1);

    // Smallest hook 1^{p-2}.2: minus the fully nested bracket.
    CHECK(P_lambda({1, 1, 1, 2}, L) ==
          L.scale(F5.neg(F5.one()), L.right_nested({x1, x1, x1, x2})));
    // 1^2.3: n = 3 is odd, sign +1.
    CHECK(P_lambda({1, 1, 3}, L) == L.right_nested({x1, x1, x2}));

    // All parts 1: every term degenerates.
    FieldDesc F3 = FieldDesc::make(3);
    FreeLie L1(F3, 1);
    CHECK(P_lambda({1, 1, 1}, L1) == L1.zero());
}

TEST_CASE("constrained expansion of P_lambda agrees with the direct sum") {
    for (std::uint32_t p : {3u, 5u}) {
        FieldDesc F = FieldDesc::make(p);
        for (const auto& lam : partitions((int)p)) {
            std::vector<int> distinct = lam;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            FreeLie L(F, (int)distinct.size());
            CHECK(general_P_expansion(lam, L) == P_lambda(lam, L));
        }
    }
}

TEST_CASE("free context: expansion theorem equals the composition formula") {
    FieldDesc F = FieldDesc::make(3);
    Envelope E(F);
    FreeContext ctx{&E};
    const EnvElt x = E.from_tree(leaf());
    CHECK(expansion_theorem(ctx, x) == sub_adjacent_pmap(ctx, x));
    CHECK(E.add(E.add(ctx.pmap(x), E.bullet_power(3)), L_closed_form(ctx, x)) ==
          sub_adjacent_pmap(ctx, x));
}

TEST_CASE("finite-dimensional context: p-semilinearity of the composed p-map") {
    FdAlgebra A = catalog_build("heisenberg-p3",
                                {FieldDesc::make(3).from_int(1), FieldDesc::make(3).from_int(2),
                                 FieldDesc::make(3).from_int(1)});
    FdContext ctx{&A};
    std::uint64_t st = 42;
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_element(A, st);
        Scalar lam = random_scalar(A.field, st);
        Vec lhs = sub_adjacent_pmap(ctx, vec_scale(A.field, lam, x));
        Vec rhs = vec_scale(A.field, A.field.pow(lam, 3), sub_adjacent_pmap(ctx, x));
        CHECK(lhs == rhs);
        CHECK(expansion_theorem(ctx, x) == sub_adjacent_pmap(ctx, x));
    }
}
