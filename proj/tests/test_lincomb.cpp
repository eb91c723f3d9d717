#include "doctest.h"

#include "forest_hopf/errors.hpp"
#include "forest_hopf/lincomb.hpp"

using namespace fhopf;

namespace {

const Alphabet ab;
LinComb P(std::string_view s) { return parse_lincomb(s, ab); }
Forest F(std::string_view s) { return parse_forest(s, ab); }

}  // namespace

TEST_CASE("like terms collect") {
    Alphabet x = Alphabet::from_list("x");
    CHECK(render(parse_lincomb("x + x", x), x) == "2*x");
    CHECK(P("a - a").is_zero());
    CHECK(render(P("a - a"), ab) == "0");
    CHECK(render(P("3 - 3*1"), ab) == "0");
}

TEST_CASE("rendering order and coefficients") {
    CHECK(render(P("[] + 2*[[]]"), ab) == "2*[[]] + []");
    CHECK(render(P("-[a] + L*a b"), ab) == "-[a] + L*a b");
    CHECK(render(P("(1 + L)*[]"), ab) == "(1 + L)*[]");
    CHECK(render(P("-1/2*a"), ab) == "-1/2*a");
    CHECK(render(P("2"), ab) == "2");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P("a +"), ParseError);
    CHECK_THROWS_AS(P("2*"), ParseError);
    CHECK_THROWS_AS(P("[q]"), ParseError);
    CHECK_THROWS_AS(P("{\"terms\": 3}"), ParseError);
}

TEST_CASE("linear structure") {
    LinComb a = P("a + 2*[]"), b = P("L*[] - a");
    CHECK(a + b == b + a);
    CHECK(a - a == LinComb());
    CHECK(lc_scale(WeightPoly(0), a).is_zero());
    CHECK(a.coefficient(F("[]")) == WeightPoly(2));
    CHECK((a + b).specialized(Weight::fixed(Rational(-2))).is_zero());
    CHECK(bilinear_extend(concat_basis, P("a + b"), P("a")) == P("a a + b a"));
    CHECK(map_linear(a, [](const Forest& f) { return lc_of(concat(f, f)); }) == P("a a + 2*[] []"));
}

TEST_CASE("tensors") {
    TensorComb t = tensor_of(F("a"), F("1"));
    t.add(ForestPair{F("1"), F("a")}, WeightPoly::lambda());
    CHECK(render(t, ab) == "a (x) 1 + L*1 (x) a");
    CHECK(multiply_legs(t, concat_basis) == P("(1 + L)*a"));
    TensorComb sq = tensor_product_componentwise(t, t, concat_basis);
    CHECK(sq.coefficient(ForestPair{F("a"), F("a")}) == WeightPoly(2) * WeightPoly::lambda());
    CHECK(tensor_from_json(to_json(sq, ab), ab) == sq);
}

TEST_CASE("json round trip") {
    LinComb a = P("(1/3 - L^2)*[a [] b] + 7*1 - b");
    CHECK(lincomb_from_json(to_json(a, ab), ab) == a);
    CHECK(parse_lincomb(to_json(a, ab).dump(), ab) == a);
    CHECK(parse_lincomb(render(a, ab), ab) == a);
    WeightPoly p = parse_weight_poly("1/2 - 3*L^4");
    CHECK(poly_from_json(poly_to_json(p)) == p);
}
