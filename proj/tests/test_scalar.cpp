#include "doctest.h"

#include "forest_hopf/errors.hpp"
#include "forest_hopf/scalar.hpp"

#include <random>

using namespace fhopf;

TEST_CASE("rationals stay in lowest terms") {
    Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").to_string() == "-7");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) / Rational(4, 9)) == Rational(3, 2));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("big coefficients do not overflow") {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x *= Rational(1000003);
    Rational y = x;
    for (int i = 0; i < 40; ++i) y /= Rational(1000003);
    CHECK(y.is_one());
}

TEST_CASE("weight polynomials print in ascending exponent order") {
    WeightPoly p = WeightPoly::monomial(Rational(2), 2) + WeightPoly(Rational(1, 3));
    CHECK(p.to_string() == "1/3 + 2*L^2");
    CHECK(WeightPoly::lambda().to_string() == "L");
    CHECK((-WeightPoly::lambda()).to_string() == "-L");
    CHECK(WeightPoly().to_string() == "0");
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1).is_zero());
    CHECK((p - p).is_zero());
    CHECK(WeightPoly(1).is_one());
    CHECK(!WeightPoly::lambda().is_constant());
}

TEST_CASE("coefficient parser") {
    CHECK(parse_weight_poly("(2*L + 1/3*L^2)") ==
          WeightPoly::monomial(Rational(2), 1) + WeightPoly::monomial(Rational(1, 3), 2));
    CHECK(parse_weight_poly("L*L") == WeightPoly::monomial(Rational(1), 2));
    CHECK(parse_weight_poly("-3/6") == WeightPoly(Rational(-1, 2)));
    CHECK_THROWS_AS(parse_weight_poly("2*"), ParseError);
    CHECK_THROWS_AS(parse_weight_poly("(L"), ParseError);
}

TEST_CASE("weight configuration") {
    CHECK(parse_weight("L").is_symbolic());
    CHECK(parse_weight("0").is_zero());
    Weight w = parse_weight("-1/2");
    CHECK(w.apply(WeightPoly::lambda() * WeightPoly::lambda() + WeightPoly(1)) == WeightPoly(Rational(5, 4)));
    CHECK(Weight::symbolic().apply(WeightPoly::lambda()) == WeightPoly::lambda());
    CHECK_THROWS_AS(parse_weight("q"), ParseError);
}

namespace {

WeightPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> n(-5, 5), e(0, 3), len(0, 3);
    WeightPoly p;
    for (int i = len(rng); i > 0; --i) p += WeightPoly::monomial(Rational(n(rng), 1 + e(rng)), e(rng));
    return p;
}

}  // namespace

TEST_CASE("ring laws and evaluation is a morphism") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        WeightPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(poly_add(a, b) == a + b);
        CHECK(poly_mul(a, b) == a * b);
        Rational q(i % 7 - 3, 1 + i % 4);
        CHECK(specialize(a * b + c, q) == specialize(a, q) * specialize(b, q) + specialize(c, q));
        CHECK(parse_weight_poly(a.to_string()) == a);
    }
}
