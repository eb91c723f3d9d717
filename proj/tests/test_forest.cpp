#include "doctest.h"

#include "forest_hopf/errors.hpp"
#include "forest_hopf/forest.hpp"

#include <set>

using namespace fhopf;

namespace {

const Alphabet ab;
Forest F(std::string_view s) { return parse_forest(s, ab); }

}  // namespace

TEST_CASE("alphabet validation") {
    CHECK(Alphabet::from_list("x,y,z").size() == 3);
    CHECK_THROWS(Alphabet::from_list("a,a"));
    CHECK_THROWS(Alphabet::from_list("a,L"));
    CHECK_THROWS(Alphabet::from_list("a,1b"));
    CHECK(ab.find("b") == 1);
    CHECK(ab.find("q") == -1);
    CHECK(ab.name_of(Decoration::sigma()) == "@");
}

TEST_CASE("parse and render") {
    CHECK(render(F("1"), ab) == "1");
    CHECK(render(F("[a [] b]"), ab) == "[a [] b]");
    CHECK(render(F("[a]b"), ab) == "[a] b");
    CHECK(render(F("a[b]"), ab) == "a[b]");
    CHECK(F("[]").vertex_count() == 1);
    CHECK(F("[[a] b]").vertex_count() == 4);
    CHECK_THROWS_AS(F("[q]"), ParseError);
    CHECK_THROWS_AS(F("[a"), ParseError);
    CHECK_THROWS_AS(F("a]"), ParseError);
    CHECK_THROWS_AS(F(""), ParseError);
}

TEST_CASE("latex rendering") {
    CHECK(render(F("[a]"), ab, Format::latex) == "B^+(\\bullet_{a})");
}

TEST_CASE("structure") {
    Forest f = F("[[a] b] a");
    CHECK(breadth(f) == 2);
    CHECK(depth(f) == 2);
    CHECK(depth(F("1")) == 0);
    CHECK(depth(F("a")) == 0);
    CHECK(concat(f, Forest()) == f);
    CHECK(concat(Forest(), f) == f);
    CHECK(as_forest(graft(Forest(), Decoration::sigma())) == F("[]"));
    CHECK(is_leaf_decorated(f));
    CHECK(!is_leaf_decorated(F("a[b]")));
}

TEST_CASE("theta examples") {
    BracketedWord w = parse_word("a [b []]", ab);
    CHECK(theta(w) == F("a [b []]"));
    CHECK(theta_inv(F("a [b []]")) == w);
    CHECK(w == word_concat(parse_word("a", ab), word_bracket(parse_word("b []", ab))));
    CHECK(render(w, ab, Format::latex).find("\\lfloor") != std::string::npos);
    CHECK_THROWS_AS(theta_inv(F("a[b]")), DomainError);
}

TEST_CASE("forest invariants over the enumeration") {
    for (const auto& f : enumerate_forests(5, ab, false)) {
        CHECK(f.vertex_count() == [&] {
            std::size_t n = 0;
            for (const auto& t : f.trees()) n += t.vertex_count();
            return n;
        }());
        CHECK(breadth(concat(f, f)) == 2 * breadth(f));
        CHECK(depth(concat(f, f)) == depth(f));
        if (!f.is_unit()) {
            CHECK(depth(as_forest(graft(f, Decoration::sigma()))) == depth(f) + 1);
        }
        CHECK(parse_forest(render(f, ab), ab) == f);
        CHECK(forest_from_json(to_json(f, ab), ab) == f);
    }
}

TEST_CASE("enumeration has no duplicates and is ascending") {
    auto fs = enumerate_forests(2, Alphabet::from_list("a"), true);
    // 1, a, [], a a, a [], [] a, [] [], [a], [[]]
    CHECK(fs.size() == 9);
    for (std::size_t n = 0; n <= 5; ++n) {
        auto all = enumerate_forests(n, ab, false);
        CHECK(std::set<Forest>(all.begin(), all.end()).size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    std::size_t seen = 0;
    for_each_forest(4, ab, true, [&](const Forest&) { return ++seen < 10; });
    CHECK(seen == 10);
}

TEST_CASE("theta is a bijection on leaf-decorated forests") {
    for (const auto& f : enumerate_forests(6, ab, true)) {
        BracketedWord w = theta_inv(f);
        CHECK(theta(w) == f);
        CHECK(parse_word(render(w, ab), ab) == w);
        CHECK(word_from_json(to_json(w, ab), ab) == w);
    }
}

TEST_CASE("canonical order puts letters before sigma") {
    CHECK(F("a") < F("[]"));
    CHECK(F("b") < F("[]"));
    CHECK(F("[]") < F("a a"));
}
