#include "doctest.h"

#include "forest_hopf/ck_hopf.hpp"
#include "forest_hopf/errors.hpp"

using namespace fhopf;

namespace {

const Alphabet xs = Alphabet::from_list("x,y");
LinComb P(std::string_view s) { return parse_lincomb(s, xs); }
Forest F(std::string_view s) { return parse_forest(s, xs); }

TensorComb T(std::initializer_list<std::pair<const char*, const char*>> terms) {
    TensorComb t;
    for (auto [l, r] : terms) t.add(ForestPair{F(l), F(r)}, WeightPoly(1));
    return t;
}

}  // namespace

TEST_CASE("coproduct of small forests") {
    CHECK(coproduct_ck(F("1")) == T({{"1", "1"}}));
    CHECK(coproduct_ck(F("x")) == T({{"x", "1"}, {"1", "x"}}));
    CHECK(render(coproduct_ck(F("[x]")), xs) == "[x] (x) 1 + x (x) [] + 1 (x) [x]");
    // Vertex-decorated: the root carries a letter.
    CHECK(coproduct_ck(F("x[y]")) == T({{"x[y]", "1"}, {"y", "x"}, {"1", "x[y]"}}));
    // Left-to-right order of cut subtrees.
    TensorComb d = coproduct_ck(F("[x y]"));
    CHECK(d.coefficient(ForestPair{F("x y"), F("[]")}) == WeightPoly(1));
    CHECK(d.coefficient(ForestPair{F("y x"), F("[]")}).is_zero());
}

TEST_CASE("antipode of small forests") {
    CHECK(render(antipode_ck(F("[x]")), xs) == "-[x] + x []");
    CHECK(antipode_ck(F("x y")) == P("y x"));
    CHECK(antipode_ck(F("1")) == P("1"));
    CHECK(counit_ck(P("3*1 + x")) == WeightPoly(3));
}

TEST_CASE("recursion agrees with the subforest expansion") {
    for (const auto& f : enumerate_forests(5, xs, false)) {
        if (f.breadth() != 1) continue;
        CHECK(coproduct_ck(f) == coproduct_subforest_oracle(f.front()));
    }
}

TEST_CASE("hopf laws up to three vertices") {
    auto fs = enumerate_forests(3, xs, false);
    for (const auto& f : fs) {
        TensorComb d = coproduct_ck(f);
        auto cop = [](const Forest& g) { return coproduct_ck(g); };
        CHECK(coassoc_left(d, cop) == coassoc_right(d, cop));
        CHECK(multiply_legs(d, [](const Forest& l, const Forest& r) {
                  return counit_ck(lc_of(l)) * lc_of(r);
              }) == lc_of(f));
        LinComb s = multiply_legs(d, [](const Forest& l, const Forest& r) {
            return bilinear_extend(concat_basis, antipode_ck(l), lc_of(r));
        });
        CHECK(s == counit_ck(lc_of(f)) * lc_of(Forest()));
        CHECK(antipode_ck(f) == antipode_ck_right(f));
        for (const auto& [lr, c] : d) CHECK(lr.first.vertex_count() + lr.second.vertex_count() == f.vertex_count());
        Decoration sigma = Decoration::sigma();
        CHECK(coproduct_ck(as_forest(graft(f, sigma))) ==
              tensor_of(as_forest(graft(f, sigma)), Forest()) + graft_right(d, sigma));
    }
    for (std::size_t i = 0; i < fs.size(); i += 7)
        for (std::size_t j = 0; j < fs.size(); j += 5)
            CHECK(coproduct_ck(concat(fs[i], fs[j])) ==
                  tensor_product_componentwise(coproduct_ck(fs[i]), coproduct_ck(fs[j]), concat_basis));
}

TEST_CASE("fold out of the free operated monoid") {
    OperatedTargetHooks<std::size_t> count{
        0, [](std::size_t a, std::size_t b) { return a + b; }, [](std::size_t a) { return a + 1; },
        [](Decoration) { return std::size_t{1}; }};
    CHECK(evaluate_operated(F("[x [y]] x"), count) == 5);
    CHECK_THROWS_AS(evaluate_operated(F("x[y]"), count), DomainError);
}
