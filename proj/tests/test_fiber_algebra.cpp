#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobkit/fiber_algebra.hpp"
#include "frobkit/rng.hpp"

using namespace frobkit;

namespace {

MultiPoly mono(int n, std::vector<int> e, Rational c) {
    return MultiPoly::monomial(n, std::move(e), c);
}

FrobeniusSpec n2_spec(bool degenerate = false) {
    MultiPoly F = mono(2, {2, 1}, Rational(1) / 2);
    if (!degenerate) F = F + mono(2, {0, 4}, Rational(1));
    MatQ eta = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    MatQ a = {{Rational(1), Rational(0)}, {Rational(0), Rational(2) / 3}};
    VecQ b = {Rational(0), Rational(0)};
    return FrobeniusSpec(2, F, eta, a, b, Rational(1) / 3);
}

AlgebraElement el(std::vector<Rational> c) { return AlgebraElement(std::move(c)); }

}  // namespace

TEST_CASE("fiber product at a point follows the evaluated tensor") {
    FrobeniusSpec s = n2_spec();
    StructureTensor tz = structure_constants(s);
    RationalPoint pt({Rational(1), Rational(1) / 2});
    FiberAlgebra a = algebra_at(tz, pt);
    CHECK(a.unit == VecQ{Rational(1), Rational(0)});
    // d2 . d2 = 24 t2 d1 evaluates to 12 d1 at t2 = 1/2
    AlgebraElement d2 = el({Rational(0), Rational(1)});
    CHECK(multiply(a, d2, d2) == el({Rational(12), Rational(0)}));
    // unit really is the two-sided unit on arbitrary elements
    AlgebraElement x = el({Rational(3), Rational(-7) / 2});
    AlgebraElement e = el({Rational(1), Rational(0)});
    CHECK(multiply(a, e, x) == x);
    CHECK(multiply(a, x, e) == x);
    CHECK_THROWS_AS(algebra_at(tz, RationalPoint({Rational(1)})), std::invalid_argument);
    CHECK_THROWS_AS(multiply(a, el({Rational(1)}), x), std::invalid_argument);
}

TEST_CASE("mult_operator is the matrix of multiplication") {
    FrobeniusSpec s = n2_spec();
    StructureTensor tz = structure_constants(s);
    FiberAlgebra a = algebra_at(tz, RationalPoint({Rational(2), Rational(-1)}));
    AlgebraElement x = el({Rational(1) / 3, Rational(5)});
    AlgebraElement y = el({Rational(-2), Rational(7) / 4});
    MatQ mx = mult_operator(a, x);
    CHECK(mat_apply(mx, y.coords) == multiply(a, x, y).coords);
    // commutativity read off the operator: M_x y = M_y x
    CHECK(mat_apply(mx, y.coords) == mat_apply(mult_operator(a, y), x.coords));
}

TEST_CASE("inversion solves x * u = e and names the failure") {
    FrobeniusSpec s = n2_spec();
    StructureTensor tz = structure_constants(s);
    FiberAlgebra a = algebra_at(tz, RationalPoint({Rational(1), Rational(1) / 2}));
    AlgebraElement eu = el({Rational(1), Rational(1) / 3});  // E at that point
    AlgebraElement inv = invert(a, eu);
    CHECK(multiply(a, eu, inv) == el({Rational(1), Rational(0)}));
    CHECK(inv == el({Rational(-3), Rational(1)}));  // E^{-1} = (-3, 1) here

    // the degenerate algebra has d2 . d2 = 0: d2 is nilpotent
    FrobeniusSpec sd = n2_spec(true);
    FiberAlgebra ad = algebra_at(structure_constants(sd), RationalPoint({Rational(0), Rational(0)}));
    try {
        invert(ad, el({Rational(0), Rational(1)}));
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        CHECK(std::string(e.what()) == "element (0, 1) is not invertible");
        CHECK(e.stage == -1);
    }
}

TEST_CASE("discriminant polynomial of the n=2 spec is frozen") {
    FrobeniusSpec s = n2_spec();
    StructureTensor tz = structure_constants(s);
    MultiPoly disc = discriminant_det(tz, s);
    MultiPoly want = mono(2, {2, 0}, Rational(1)) + mono(2, {0, 3}, Rational(-32) / 3);
    CHECK(disc == want);
    CHECK(disc.evaluate(RationalPoint({Rational(1), Rational(1)})) == Rational(-29) / 3);
    CHECK(disc.evaluate(RationalPoint({Rational(6), Rational(3) / 2})) == 0);
}

TEST_CASE("semisimplicity detection separates the two n=2 algebras") {
    // F = 1/2 t1^2 t2 alone: char poly of every element is (x - z1)^2
    FrobeniusSpec sd = n2_spec(true);
    FiberAlgebra nil = algebra_at(structure_constants(sd), RationalPoint({Rational(1), Rational(2)}));
    CHECK_FALSE(is_semisimple(nil, 8, kDefaultSeed));
    CHECK_FALSE(is_semisimple(nil, 8, 99));

    FrobeniusSpec s = n2_spec();
    FiberAlgebra full = algebra_at(structure_constants(s), RationalPoint({Rational(1), Rational(1)}));
    CHECK(is_semisimple(full, 5, kDefaultSeed));
}

TEST_CASE("char_poly and squarefree agree with hand calculations") {
    // multiplication by (0,1) in the full n=2 algebra at t2 = 1:
    // M = [[0, 24], [1, 0]], char poly x^2 - 24
    FrobeniusSpec s = n2_spec();
    FiberAlgebra a = algebra_at(structure_constants(s), RationalPoint({Rational(0), Rational(1)}));
    MatQ m = mult_operator(a, el({Rational(0), Rational(1)}));
    VecQ cp = char_poly(m);
    CHECK(cp == VecQ{Rational(-24), Rational(0), Rational(1)});
    CHECK(squarefree(cp));
    CHECK_FALSE(squarefree(VecQ{Rational(1), Rational(2), Rational(1)}));  // (x+1)^2
}

TEST_CASE("frobenius algebra axioms at sampled points") {
    FrobeniusSpec s = n2_spec();
    StructureTensor tz = structure_constants(s);
    DetRng rng(7);
    for (int it = 0; it < 10; ++it) {
        FiberAlgebra a = algebra_at(tz, rng.point(2));
        CheckReport r = check_frobenius_algebra(a, s.metric);
        CHECK(r.pass);
    }
    // breaking the pairing breaks invariance
    FiberAlgebra a = algebra_at(tz, RationalPoint({Rational(1), Rational(1)}));
    MatQ bad = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CheckReport r = check_frobenius_algebra(a, bad);
    CHECK_FALSE(r.pass);
    CHECK(r.witness->rfind("invariance fails", 0) == 0);
}
