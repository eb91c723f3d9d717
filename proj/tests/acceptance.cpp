// One line per acceptance criterion; exits nonzero if any fails.
#include "forest_hopf/checks.hpp"
#include "forest_hopf/ck_hopf.hpp"
#include "forest_hopf/rota_baxter.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace fhopf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome suites(std::initializer_list<std::pair<const char*, std::size_t>> runs, Weight w = Weight::symbolic(),
               const Alphabet& alphabet = Alphabet()) {
    Outcome o;
    for (auto [name, n] : runs) {
        CheckConfig cfg;
        cfg.alphabet = alphabet;
        cfg.weight = w;
        cfg.weight_explicit = !w.is_symbolic();
        cfg.max_vertices = n;
        CheckReport r = run_suite(name, cfg);
        if (!o.detail.empty()) o.detail += ", ";
        o.detail += std::string(name) + "@" + std::to_string(n) + " " + std::to_string(r.instances) + " inst";
        if (!r.ok() || r.instances == 0) {
            o.ok = false;
            o.detail += " " + std::to_string(r.failures.size()) + " failed";
            if (!r.failures.empty()) o.detail += " [" + r.failures.front().input + "]";
        }
    }
    return o;
}

Decoration sigma() { return Decoration::sigma(); }
Forest leaf(Decoration d) { return single_vertex(d); }
Forest plus(const Forest& f) { return as_forest(graft(f, sigma())); }

Outcome witness() {
    Alphabet abc = Alphabet::from_list("a,b,c");
    Decoration a = abc.letter("a"), b = abc.letter("b"), c = abc.letter("c");
    // [[a] b [c]] and the term λ·[a c] ⊗ [b]
    Forest f = plus(concat(concat(plus(leaf(a)), leaf(b)), plus(leaf(c))));
    Forest left = plus(concat(leaf(a), leaf(c))), right = plus(leaf(b));
    WeightPoly coeff = coproduct_rb(f).coefficient(ForestPair{left, right});
    Outcome o;
    o.ok = coeff == WeightPoly::lambda() && left.vertex_count() + right.vertex_count() == 5 &&
           f.vertex_count() == 6;
    o.detail = "coefficient " + coeff.to_string() + ", degree 5 < 6";
    return o;
}

Outcome worked_values() {
    Alphabet xy = Alphabet::from_list("x,y");
    Decoration x = xy.letter("x"), y = xy.letter("y");
    Forest one;
    Outcome o;
    auto expect = [&](const char* what, const LinComb& got, const LinComb& hand) {
        if (got != hand) {
            o.ok = false;
            o.detail += std::string(what) + " got " + render(got, xy) + "; ";
        }
    };

    // •σ⋄•σ = B(1⋄B1) + B(B1⋄1) + λB(1⋄1) = 2·B(B1) + λ·B1
    LinComb hand1 = WeightPoly(2) * lc_of(plus(plus(one))) + WeightPoly::lambda() * lc_of(plus(one));
    expect("sigma*sigma", diamond(lc_of(plus(one)), lc_of(plus(one))), hand1);

    // [x]⋄[y] = B(x⋄B y) + B(B x⋄y) + λB(x⋄y), and x⋄B y, B x⋄y, x⋄y are concatenations
    LinComb hand2 = lc_of(plus(concat(leaf(x), plus(leaf(y))))) + lc_of(plus(concat(plus(leaf(x)), leaf(y)))) +
                    WeightPoly::lambda() * lc_of(plus(concat(leaf(x), leaf(y))));
    expect("[x]*[y]", diamond(lc_of(plus(leaf(x))), lc_of(plus(leaf(y)))), hand2);

    // Δ[x] = [x]⊗1 + x⊗• + 1⊗[x], S(x) = −x, so S([x]) = −[x] − S(x)·• = −[x] + x•
    LinComb hand3 = WeightPoly(-1) * lc_of(plus(leaf(x))) + lc_of(concat(leaf(x), plus(one)));
    expect("S([x])", antipode_ck(plus(leaf(x))), hand3);
    expect("S_rb([x])", antipode_rb(lc_of(plus(leaf(x))), Weight::fixed(Rational(0))), hand3);
    if (o.ok) o.detail = "3 values match their hand expansions";
    return o;
}

// Words of exactly n symbols (letters and brackets each count one) with
// brackets nested at most d deep, built without going through forests.
std::vector<BracketedWord> words(std::size_t n, std::size_t d) {
    if (n == 0) return {BracketedWord()};
    std::vector<BracketedWord> out;
    auto prepend = [&](const WordItem& item, std::size_t rest) {
        for (const auto& tail : words(rest, d)) {
            std::vector<WordItem> items{item};
            items.insert(items.end(), tail.items().begin(), tail.items().end());
            out.emplace_back(std::move(items));
        }
    };
    for (std::uint32_t l = 0; l < 2; ++l) prepend(WordItem::letter(l), n - 1);
    if (d > 0)
        for (std::size_t k = 1; k <= n; ++k)
            for (const auto& inner : words(k - 1, d - 1)) prepend(WordItem::bracket(inner), n - k);
    return out;
}

Outcome round_trips() {
    Alphabet ab;
    std::vector<BracketedWord> ws;
    for (std::size_t n = 0; n <= 4; ++n)
        for (auto& w : words(n, 3)) ws.push_back(std::move(w));
    std::set<BracketedWord> seen;
    Outcome o;
    std::size_t n_words = 0, n_forests = 0;
    for (const auto& w : ws) {
        if (!seen.insert(w).second) o.ok = false;
        ++n_words;
        Forest f = theta(w);
        if (theta_inv(f) != w || !is_leaf_decorated(f) || parse_word(render(w, ab), ab) != w) {
            o.ok = false;
            o.detail += "word " + render(w, ab) + "; ";
        }
    }
    std::set<Forest> images;
    for (const auto& w : seen) images.insert(theta(w));
    if (images.size() != seen.size()) o.ok = false;
    for (const auto& f : enumerate_forests(6, ab, false)) {
        ++n_forests;
        if (parse_forest(render(f, ab), ab) != f) {
            o.ok = false;
            o.detail += "forest " + render(f, ab) + "; ";
        }
    }
    if (o.ok) o.detail = std::to_string(n_words) + " words, " + std::to_string(n_forests) + " forests";
    return o;
}

}  // namespace

int main() {
    Weight zero = Weight::fixed(Rational(0));
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", [] { return suites({{"oracle-ck", 6}}); }},
        {"H_CK Hopf laws",
         [] {
             return suites({{"coassoc-ck", 5}, {"counit-ck", 5}, {"multiplicative-ck", 5}, {"graded-ck", 5},
                            {"antipode-ck", 5}});
         }},
        {"cocycle identities", [] { return suites({{"cocycle-ck", 5}, {"rb-cocycle", 4}}); }},
        {"Rota-Baxter identity and associativity", [] { return suites({{"rb-identity", 4}, {"diamond-assoc", 6}}); }},
        {"phi laws", [] { return suites({{"phi-idempotent", 5}, {"phi-morphism", 5}}); }},
        {"RB bialgebra", [] { return suites({{"coassoc-rb", 5}, {"rb-multiplicative", 5}, {"compat", 5}}); }},
        {"weight 0 Hopf structure", [zero] { return suites({{"antipode-rb0", 4}, {"cograded-rb0", 4}}, zero); }},
        {"degree-drop witness", witness},
        {"worked values", worked_values},
        {"round trips", round_trips},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = criteria[i].second();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%-4s criterion %zu: %s (%s; %.1fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
