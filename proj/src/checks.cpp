#include "forest_hopf/checks.hpp"

#include "forest_hopf/ck_hopf.hpp"
#include "forest_hopf/errors.hpp"
#include "forest_hopf/lincomb.hpp"
#include "forest_hopf/rota_baxter.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>
#include <variant>

namespace fhopf {

unsigned worker_count(unsigned requested) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned n = requested ? requested : hw;
    if (const char* env = std::getenv("FOREST_HOPF_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

namespace {

using Failure = std::optional<CheckFailure>;

// Runs `check` over every item on a worker pool; failures are reported in
// item order regardless of scheduling.
template <class Item, class Fn>
void run_items(CheckReport& report, const std::vector<Item>& items, unsigned threads, Fn&& check) {
    std::vector<Failure> results(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                results[i] = check(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    unsigned n = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(items.size(), 1));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    report.instances += items.size();
    for (auto& r : results)
        if (r) report.failures.push_back(std::move(*r));
}

std::string render_triples(const TripleComb& t, const Alphabet& a) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const auto& [f1, f2, f3] = it->first;
        if (!it->second.is_one()) os << '(' << it->second << ")*";
        os << render(f1, a) << " (x) " << render(f2, a) << " (x) " << render(f3, a);
    }
    return os.str();
}

struct Context {
    const CheckConfig& cfg;
    Weight weight;  // the weight results are compared at

    const Alphabet& alpha() const { return cfg.alphabet; }
    std::size_t n() const { return cfg.max_vertices; }

    template <class S>
    bool same(const S& a, const S& b) const {
        return a.specialized(weight) == b.specialized(weight);
    }
    std::string str(const LinComb& a) const { return render(a.specialized(weight), alpha()); }
    std::string str(const TensorComb& t) const { return render(t.specialized(weight), alpha()); }
    std::string str(const TripleComb& t) const { return render_triples(t.specialized(weight), alpha()); }
    std::string str(const Forest& f) const { return render(f, alpha()); }

    template <class S>
    Failure compare(const std::string& input, const S& expected, const S& actual) const {
        if (same(expected, actual)) return std::nullopt;
        return CheckFailure{input, str(expected), str(actual)};
    }
};

// Forests grouped by vertex count: grades[k] holds those with k vertices.
std::vector<std::vector<Forest>> by_grade(const std::vector<Forest>& xs) {
    std::vector<std::vector<Forest>> grades;
    for (const auto& f : xs) {
        if (grades.size() <= f.vertex_count()) grades.resize(f.vertex_count() + 1);
        grades[f.vertex_count()].push_back(f);
    }
    return grades;
}

std::vector<std::pair<Forest, Forest>> pairs_with_total(const std::vector<Forest>& xs, std::size_t total) {
    auto grades = by_grade(xs);
    std::vector<std::pair<Forest, Forest>> out;
    for (std::size_t i = 0; i < grades.size(); ++i)
        for (std::size_t j = 0; j < grades.size() && i + j <= total; ++j)
            for (const auto& f : grades[i])
                for (const auto& g : grades[j]) out.emplace_back(f, g);
    return out;
}

std::vector<ForestTriple> triples_with_total(const std::vector<Forest>& xs, std::size_t total) {
    auto grades = by_grade(xs);
    std::vector<ForestTriple> out;
    for (std::size_t i = 0; i < grades.size(); ++i)
        for (std::size_t j = 0; j < grades.size() && i + j <= total; ++j)
            for (std::size_t k = 0; k < grades.size() && i + j + k <= total; ++k)
                for (const auto& a : grades[i])
                    for (const auto& b : grades[j])
                        for (const auto& c : grades[k]) out.emplace_back(a, b, c);
    return out;
}

std::string pair_input(const Context& cx, const Forest& f, const Forest& g) {
    return "(" + cx.str(f) + ", " + cx.str(g) + ")";
}

std::vector<Decoration> all_decorations(const Alphabet& a) {
    std::vector<Decoration> ds;
    for (std::uint32_t i = 0; i < a.size(); ++i) ds.push_back(Decoration::letter(i));
    ds.push_back(Decoration::sigma());
    return ds;
}

auto ck_coproduct = [](const Forest& f) { return coproduct_ck(f); };
auto rb_coproduct = [](const Forest& f) { return coproduct_rb(f); };

// --- H_CK -------------------------------------------------------------------

void suite_coassoc_ck(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), false), cx.cfg.threads, [&](const Forest& f) {
        TensorComb d = coproduct_ck(f);
        return cx.compare(cx.str(f), coassoc_left(d, ck_coproduct), coassoc_right(d, ck_coproduct));
    });
}

void suite_counit_ck(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), false), cx.cfg.threads, [&](const Forest& f) -> Failure {
        LinComb left, right;
        for (const auto& [lr, c] : coproduct_ck(f)) {
            left.add_scaled(lc_of(lr.second), c * counit_ck(lc_of(lr.first)));
            right.add_scaled(lc_of(lr.first), c * counit_ck(lc_of(lr.second)));
        }
        if (auto fail = cx.compare(cx.str(f) + " (eps (x) id)", lc_of(f), left)) return fail;
        return cx.compare(cx.str(f) + " (id (x) eps)", lc_of(f), right);
    });
}

void suite_multiplicative_ck(const Context& cx, CheckReport& r) {
    auto pairs = pairs_with_total(enumerate_forests(cx.n(), cx.alpha(), false), cx.n());
    run_items(r, pairs, cx.cfg.threads, [&](const std::pair<Forest, Forest>& p) {
        TensorComb lhs = coproduct_ck(concat(p.first, p.second));
        TensorComb rhs = tensor_product_componentwise(coproduct_ck(p.first), coproduct_ck(p.second), concat_basis);
        return cx.compare(pair_input(cx, p.first, p.second), rhs, lhs);
    });
}

void suite_cocycle_ck(const Context& cx, CheckReport& r) {
    auto decorations = all_decorations(cx.alpha());
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), false), cx.cfg.threads, [&](const Forest& f) -> Failure {
        for (Decoration d : decorations) {
            Tree grafted = graft(f, d);
            TensorComb rhs = graft_right(coproduct_ck(f), d);
            rhs.add(ForestPair{as_forest(grafted), Forest()}, WeightPoly(1));
            std::string input = "B+_" + cx.alpha().name_of(d) + "(" + cx.str(f) + ")";
            if (auto fail = cx.compare(input, rhs, coproduct_ck(as_forest(grafted)))) return fail;
            if (auto fail = cx.compare(input + " [subforest]", rhs, coproduct_subforest_oracle(grafted))) return fail;
        }
        return std::nullopt;
    });
}

void suite_oracle_ck(const Context& cx, CheckReport& r) {
    std::vector<Tree> trees;
    for (std::size_t k = 1; k <= cx.n(); ++k) {
        auto ts = trees_of_size(k, cx.alpha().size(), false);
        trees.insert(trees.end(), ts.begin(), ts.end());
    }
    run_items(r, trees, cx.cfg.threads, [&](const Tree& t) {
        return cx.compare(render(t, cx.alpha()), coproduct_subforest_oracle(t), coproduct_ck(as_forest(t)));
    });
}

void suite_antipode_ck(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), false), cx.cfg.threads, [&](const Forest& f) -> Failure {
        TensorComb d = coproduct_ck(f);
        LinComb unit_counit = counit_ck(lc_of(f)) * lc_of(Forest());
        LinComb left, right;
        for (const auto& [lr, c] : d) {
            left.add_scaled(bilinear_extend(concat_basis, antipode_ck(lr.first), lc_of(lr.second)), c);
            right.add_scaled(bilinear_extend(concat_basis, lc_of(lr.first), antipode_ck(lr.second)), c);
        }
        if (auto fail = cx.compare(cx.str(f) + " m(S (x) id)D", unit_counit, left)) return fail;
        if (auto fail = cx.compare(cx.str(f) + " m(id (x) S)D", unit_counit, right)) return fail;
        return cx.compare(cx.str(f) + " left/right recursion", antipode_ck(f), antipode_ck_right(f));
    });
}

void suite_graded_ck(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), false), cx.cfg.threads, [&](const Forest& f) -> Failure {
        for (const auto& [lr, c] : coproduct_ck(f))
            if (lr.first.vertex_count() + lr.second.vertex_count() != f.vertex_count())
                return CheckFailure{cx.str(f), "degree " + std::to_string(f.vertex_count()),
                                    cx.str(lr.first) + " (x) " + cx.str(lr.second)};
        return std::nullopt;
    });
}

// --- Ш(X) -------------------------------------------------------------------

void suite_rb_identity(const Context& cx, CheckReport& r) {
    auto rbfs = enumerate_rbf(cx.n(), cx.alpha());
    std::vector<std::pair<Forest, Forest>> pairs;
    for (const auto& u : rbfs)
        for (const auto& v : rbfs) pairs.emplace_back(u, v);
    run_items(r, pairs, cx.cfg.threads, [&](const std::pair<Forest, Forest>& p) {
        LinComb u = lc_of(p.first), v = lc_of(p.second);
        LinComb bu = graft_sigma(u), bv = graft_sigma(v);
        LinComb lhs = diamond(bu, bv);
        LinComb rhs = graft_sigma(diamond(u, bv)) + graft_sigma(diamond(bu, v));
        rhs.add_scaled(graft_sigma(diamond(u, v)), WeightPoly::lambda());
        return cx.compare(pair_input(cx, p.first, p.second), rhs, lhs);
    });
}

void suite_diamond_assoc(const Context& cx, CheckReport& r) {
    auto triples = triples_with_total(enumerate_rbf(cx.n(), cx.alpha()), cx.n());
    run_items(r, triples, cx.cfg.threads, [&](const ForestTriple& t) -> Failure {
        const auto& [a, b, c] = t;
        std::string input = "(" + cx.str(a) + ", " + cx.str(b) + ", " + cx.str(c) + ")";
        LinComb lhs = diamond(diamond(lc_of(a), lc_of(b)), lc_of(c));
        LinComb rhs = diamond(lc_of(a), diamond(lc_of(b), lc_of(c)));
        if (auto fail = cx.compare(input, lhs, rhs)) return fail;
        if (a.is_unit()) return cx.compare(input + " unit", lc_of(b), diamond(lc_of(a), lc_of(b)));
        return cx.compare(input + " unit", lc_of(a), diamond(lc_of(a), lc_of(Forest())));
    });
}

void suite_wprod(const Context& cx, CheckReport& r) {
    auto pairs = pairs_with_total(enumerate_rbf(cx.n(), cx.alpha()), cx.n());
    run_items(r, pairs, cx.cfg.threads, [&](const std::pair<Forest, Forest>& p) -> Failure {
        Forest joined = concat(p.first, p.second);
        if (!is_rbf(joined)) return std::nullopt;
        return cx.compare(pair_input(cx, p.first, p.second), lc_of(joined), diamond(p.first, p.second));
    });
}

LinComb fold_phi(const Forest& f) {
    OperatedTargetHooks<LinComb> hooks{
        lc_of(Forest()),
        [](const LinComb& a, const LinComb& b) { return diamond(a, b); },
        [](const LinComb& a) { return graft_sigma(a); },
        [](Decoration d) { return lc_of(single_vertex(d)); },
    };
    return evaluate_operated(f, hooks);
}

void suite_phi_morphism(const Context& cx, CheckReport& r) {
    auto forests = enumerate_forests(cx.n(), cx.alpha(), true);
    auto pairs = pairs_with_total(forests, cx.n());
    run_items(r, pairs, cx.cfg.threads, [&](const std::pair<Forest, Forest>& p) -> Failure {
        const auto& [f, g] = p;
        return cx.compare(pair_input(cx, f, g), diamond(phi(f), phi(g)), phi(concat(f, g)));
    });
    run_items(r, forests, cx.cfg.threads, [&](const Forest& f) -> Failure {
        if (auto fail = cx.compare("B+(" + cx.str(f) + ")", graft_sigma(phi(f)), phi(as_forest(graft(f, Decoration::sigma())))))
            return fail;
        return cx.compare(cx.str(f) + " [universal fold]", fold_phi(f), phi(f));
    });
}

void suite_phi_idempotent(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), true), cx.cfg.threads, [&](const Forest& f) -> Failure {
        LinComb once = phi(f);
        if (is_rbf(f))
            if (auto fail = cx.compare(cx.str(f) + " phi(i(F))", lc_of(f), once)) return fail;
        return cx.compare(cx.str(f) + " i phi i phi", once, phi(once));
    });
}

void suite_compat(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_forests(cx.n(), cx.alpha(), true), cx.cfg.threads, [&](const Forest& f) {
        auto leg = [](const Forest& g) { return phi(g); };
        TensorComb expected = map_tensor(coproduct_ck(f), leg, leg);
        return cx.compare(cx.str(f), expected, coproduct_rb(phi(f)));
    });
}

void suite_rb_multiplicative(const Context& cx, CheckReport& r) {
    auto pairs = pairs_with_total(enumerate_rbf(cx.n(), cx.alpha()), cx.n());
    run_items(r, pairs, cx.cfg.threads, [&](const std::pair<Forest, Forest>& p) {
        TensorComb lhs = coproduct_rb(diamond(p.first, p.second));
        TensorComb rhs = tensor_diamond(coproduct_rb(p.first), coproduct_rb(p.second));
        return cx.compare(pair_input(cx, p.first, p.second), rhs, lhs);
    });
}

void suite_rb_cocycle(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_rbf(cx.n(), cx.alpha()), cx.cfg.threads, [&](const Forest& f) {
        Forest bf = as_forest(graft(f, Decoration::sigma()));
        TensorComb rhs = graft_right(coproduct_rb(f), Decoration::sigma());
        rhs.add(ForestPair{bf, Forest()}, WeightPoly(1));
        return cx.compare("B+(" + cx.str(f) + ")", rhs, coproduct_rb(bf));
    });
}

void suite_coassoc_rb(const Context& cx, CheckReport& r) {
    run_items(r, enumerate_rbf(cx.n(), cx.alpha()), cx.cfg.threads, [&](const Forest& f) -> Failure {
        TensorComb d = coproduct_rb(f);
        if (auto fail = cx.compare(cx.str(f), coassoc_left(d, rb_coproduct), coassoc_right(d, rb_coproduct)))
            return fail;
        LinComb left, right;
        for (const auto& [lr, c] : d) {
            left.add_scaled(lc_of(lr.second), c * counit_rb(lc_of(lr.first)));
            right.add_scaled(lc_of(lr.first), c * counit_rb(lc_of(lr.second)));
        }
        if (auto fail = cx.compare(cx.str(f) + " (eps (x) id)", lc_of(f), left)) return fail;
        return cx.compare(cx.str(f) + " (id (x) eps)", lc_of(f), right);
    });
}

void suite_antipode_rb0(const Context& cx, CheckReport& r) {
    const Weight zero = Weight::fixed(Rational(0));
    run_items(r, enumerate_rbf(cx.n(), cx.alpha()), cx.cfg.threads, [&](const Forest& f) -> Failure {
        TensorComb d = coproduct_rb(f).specialized(zero);
        LinComb unit_counit = counit_rb(lc_of(f)) * lc_of(Forest());
        LinComb left, right;
        for (const auto& [lr, c] : d) {
            left.add_scaled(diamond(antipode_rb(lc_of(lr.first), zero), lc_of(lr.second)), c);
            right.add_scaled(diamond(lc_of(lr.first), antipode_rb(lc_of(lr.second), zero)), c);
        }
        if (auto fail = cx.compare(cx.str(f) + " m(S (x) id)D", unit_counit, left.specialized(zero))) return fail;
        return cx.compare(cx.str(f) + " m(id (x) S)D", unit_counit, right.specialized(zero));
    });
}

void suite_cograded_rb0(const Context& cx, CheckReport& r) {
    const Weight zero = Weight::fixed(Rational(0));
    run_items(r, enumerate_rbf(cx.n(), cx.alpha()), cx.cfg.threads, [&](const Forest& f) -> Failure {
        for (const auto& [lr, c] : coproduct_rb(f).specialized(zero))
            if (lr.first.vertex_count() + lr.second.vertex_count() != f.vertex_count())
                return CheckFailure{cx.str(f), "degree " + std::to_string(f.vertex_count()),
                                    cx.str(lr.first) + " (x) " + cx.str(lr.second)};
        return std::nullopt;
    });
}

// Δ⋄(B⁺(B⁺(x) y B⁺(z))) contains λ·B⁺(x z) ⊗ B⁺(y), whose degree is one less
// than the input's.
void suite_degree_drop_witness(const Context& cx, CheckReport& r) {
    const auto& a = cx.alpha();
    auto letter = [&](std::uint32_t i) { return Tree(Decoration::letter(i % static_cast<std::uint32_t>(a.size()))); };
    const Decoration s = Decoration::sigma();
    Tree x = letter(0), y = letter(1), z = letter(2);
    Forest input = as_forest(graft(Forest({graft(as_forest(x), s), y, graft(as_forest(z), s)}), s));
    ForestPair witness{as_forest(graft(Forest({x, z}), s)), as_forest(graft(as_forest(y), s))};

    TensorComb d = coproduct_rb(input);
    WeightPoly expected = WeightPoly::lambda();
    WeightPoly actual = d.coefficient(witness);
    r.instances = 1;
    std::string term = cx.str(witness.first) + " (x) " + cx.str(witness.second);
    bool degree_drops = witness.first.vertex_count() + witness.second.vertex_count() < input.vertex_count();
    if (cx.weight.apply(actual) != cx.weight.apply(expected) || cx.weight.apply(actual).is_zero() || !degree_drops)
        r.failures.push_back({cx.str(input), cx.weight.apply(expected).to_string() + "*" + term,
                              cx.weight.apply(actual).to_string() + "*" + term});
}

struct SuiteSpec {
    const char* name;
    void (*run)(const Context&, CheckReport&);
    enum class WeightRule { any, zero, nonzero } rule;
};

const std::vector<SuiteSpec>& registry() {
    using R = SuiteSpec::WeightRule;
    static const std::vector<SuiteSpec> suites{
        {"coassoc-ck", suite_coassoc_ck, R::any},
        {"counit-ck", suite_counit_ck, R::any},
        {"multiplicative-ck", suite_multiplicative_ck, R::any},
        {"cocycle-ck", suite_cocycle_ck, R::any},
        {"oracle-ck", suite_oracle_ck, R::any},
        {"antipode-ck", suite_antipode_ck, R::any},
        {"graded-ck", suite_graded_ck, R::any},
        {"rb-identity", suite_rb_identity, R::any},
        {"diamond-assoc", suite_diamond_assoc, R::any},
        {"wprod", suite_wprod, R::any},
        {"phi-morphism", suite_phi_morphism, R::any},
        {"phi-idempotent", suite_phi_idempotent, R::any},
        {"compat", suite_compat, R::any},
        {"rb-multiplicative", suite_rb_multiplicative, R::any},
        {"rb-cocycle", suite_rb_cocycle, R::any},
        {"coassoc-rb", suite_coassoc_rb, R::any},
        {"antipode-rb0", suite_antipode_rb0, R::zero},
        {"cograded-rb0", suite_cograded_rb0, R::zero},
        {"degree-drop-witness", suite_degree_drop_witness, R::nonzero},
    };
    return suites;
}

const SuiteSpec& find_suite(std::string_view name) {
    for (const auto& s : registry())
        if (name == s.name) return s;
    throw std::invalid_argument("unknown suite `" + std::string(name) + "`");
}

// The weight a suite compares at, or an explanation of why it cannot run.
std::variant<Weight, std::string> resolve_weight(const SuiteSpec& s, const CheckConfig& cfg) {
    using R = SuiteSpec::WeightRule;
    switch (s.rule) {
        case R::any:
            return cfg.weight;
        case R::zero:
            if (!cfg.weight_explicit || cfg.weight.is_zero()) return Weight::fixed(Rational(0));
            return s.name + std::string(" runs at weight 0 only");
        case R::nonzero:
            if (!cfg.weight.is_zero()) return cfg.weight;
            return std::string("the degree drop only occurs at nonzero weight");
    }
    return cfg.weight;
}

CheckReport run_spec(const SuiteSpec& s, const Weight& w, const CheckConfig& cfg) {
    CheckReport report;
    report.suite = s.name;
    auto start = std::chrono::steady_clock::now();
    Context cx{cfg, w};
    s.run(cx, report);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : registry()) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

CheckReport run_suite(std::string_view name, const CheckConfig& cfg) {
    const SuiteSpec& s = find_suite(name);
    auto w = resolve_weight(s, cfg);
    if (auto* why = std::get_if<std::string>(&w)) throw WeightError(*why);
    return run_spec(s, std::get<Weight>(w), cfg);
}

std::vector<CheckReport> run_checks(std::string_view name, const CheckConfig& cfg) {
    if (name != "all") return {run_suite(name, cfg)};
    std::vector<CheckReport> out;
    for (const auto& s : registry()) {
        auto w = resolve_weight(s, cfg);
        if (auto* why = std::get_if<std::string>(&w)) {
            CheckReport skipped;
            skipped.suite = s.name;
            skipped.skipped = *why;
            out.push_back(std::move(skipped));
            continue;
        }
        out.push_back(run_spec(s, std::get<Weight>(w), cfg));
    }
    return out;
}

}  // namespace fhopf
