#include "forest_hopf/rota_baxter.hpp"

#include "forest_hopf/ck_hopf.hpp"
#include "memo.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fhopf {

namespace {

bool sigma_rooted(const Tree& t) { return t.decoration().is_sigma(); }

}  // namespace

bool is_rbf(const Forest& f) {
    const auto& trees = f.trees();
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const Tree& t = trees[i];
        if (sigma_rooted(t)) {
            if (i + 1 < trees.size() && sigma_rooted(trees[i + 1])) return false;
            if (!is_rbf(t.children())) return false;
        } else if (!t.is_leaf()) {
            return false;
        }
    }
    return true;
}

RBForest::RBForest(Forest f) : f_(std::move(f)) {
    if (!is_rbf(f_)) throw DomainError("not a Rota-Baxter forest");
}

std::optional<RBForest> RBForest::make(Forest f) {
    if (!is_rbf(f)) return std::nullopt;
    return RBForest(std::move(f), Trusted{});
}

std::vector<Tree> alternating_decomposition(const Forest& f) {
    if (f.is_unit()) throw DomainError("unit has no decomposition");
    if (!is_rbf(f)) throw DomainError("not a Rota-Baxter forest");
    return f.trees();
}

namespace {

std::size_t rb_depth_unchecked(const Forest& f) {
    std::size_t d = 0;
    for (const auto& t : f.trees())
        if (sigma_rooted(t)) d = std::max(d, 1 + rb_depth_unchecked(t.children()));
    return d;
}

void require_rbf(const Forest& f) {
    if (!is_rbf(f)) throw DomainError("operand outside Ш(X)");
}

void assert_rbf_output(const LinComb& a) {
    for (const auto& [f, c] : a)
        if (!is_rbf(f)) throw std::logic_error("diamond produced a non-RBF basis element");
}

LinComb diamond_unchecked(const Forest& u, const Forest& v);

detail::Memo<ForestPair, LinComb, detail::PairHash>& bracket_memo() {
    static detail::Memo<ForestPair, LinComb, detail::PairHash> memo;
    return memo;
}

LinComb diamond_unchecked(const LinComb& a, const LinComb& b) {
    return bilinear_extend([](const Forest& f, const Forest& g) { return diamond_unchecked(f, g); }, a, b);
}

// ⌊ū⌋ ⋄ ⌊v̄⌋ = ⌊ū ⋄ ⌊v̄⌋⌋ + ⌊⌊ū⌋ ⋄ v̄⌋ + λ⌊ū ⋄ v̄⌋
LinComb bracket_diamond(const Forest& ubar, const Forest& vbar) {
    return bracket_memo().get(ForestPair{ubar, vbar}, [&] {
        Forest bu = as_forest(graft(ubar, Decoration::sigma()));
        Forest bv = as_forest(graft(vbar, Decoration::sigma()));
        [[maybe_unused]] auto measure = [](const Forest& a, const Forest& b) {
            return rb_depth_unchecked(a) + rb_depth_unchecked(b);
        };
        // Every recursive call lowers the sum of depths.
        assert(measure(ubar, bv) < measure(bu, bv) && measure(bu, vbar) < measure(bu, bv));
        LinComb inner = diamond_unchecked(ubar, bv);
        inner += diamond_unchecked(bu, vbar);
        inner.add_scaled(diamond_unchecked(ubar, vbar), WeightPoly::lambda());
        return graft_sigma(inner);
    });
}

LinComb diamond_unchecked(const Forest& u, const Forest& v) {
    if (u.is_unit()) return lc_of(v);
    if (v.is_unit()) return lc_of(u);
    const Tree& last = u.back();
    const Tree& first = v.front();
    if (!sigma_rooted(last) || !sigma_rooted(first)) return lc_of(concat(u, v));

    LinComb middle = bracket_diamond(last.children(), first.children());
    Forest prefix = u.slice(0, u.breadth() - 1);
    Forest suffix = v.slice(1, v.breadth());
    LinComb out;
    for (const auto& [m, c] : middle) {
        Forest f = prefix;
        f.append(m);
        f.append(suffix);
        out.add(std::move(f), c);
    }
    return out;
}

}  // namespace

std::size_t rb_depth(const Forest& f) {
    if (!is_rbf(f)) throw DomainError("not a Rota-Baxter forest");
    return rb_depth_unchecked(f);
}

LinComb graft_sigma(const LinComb& a) { return graft_linear(a, Decoration::sigma()); }

LinComb diamond(const Forest& u, const Forest& v) {
    require_rbf(u);
    require_rbf(v);
    LinComb out = diamond_unchecked(u, v);
    assert_rbf_output(out);
    return out;
}

LinComb diamond(const LinComb& a, const LinComb& b) {
    for (const auto& [f, c] : a) require_rbf(f);
    for (const auto& [f, c] : b) require_rbf(f);
    LinComb out = diamond_unchecked(a, b);
    assert_rbf_output(out);
    return out;
}

// --- φ ----------------------------------------------------------------------

namespace {

detail::Memo<Tree, LinComb>& phi_memo() {
    static detail::Memo<Tree, LinComb> memo;
    return memo;
}

LinComb phi_forest(const Forest& f);

LinComb phi_tree(const Tree& t) {
    if (t.decoration().is_letter()) {
        if (!t.is_leaf()) throw DomainError("φ undefined outside the leaf-decorated forests");
        return lc_of(as_forest(t));
    }
    return phi_memo().get(t, [&] { return graft_sigma(phi_forest(t.children())); });
}

LinComb phi_forest(const Forest& f) {
    if (f.is_unit()) return lc_of(f);
    const auto& trees = f.trees();
    LinComb acc = phi_tree(trees.front());
    for (std::size_t i = 1; i < trees.size(); ++i) acc = diamond_unchecked(acc, phi_tree(trees[i]));
    return acc;
}

}  // namespace

LinComb phi(const Forest& f) {
    if (!is_leaf_decorated(f)) throw DomainError("φ undefined outside the leaf-decorated forests");
    LinComb out = phi_forest(f);
    assert_rbf_output(out);
    return out;
}

LinComb phi(const LinComb& a) {
    return map_linear(a, [](const Forest& f) { return phi(f); });
}

// --- coproduct, counit, antipode ------------------------------------------

TensorComb coproduct_rb(const Forest& f) {
    require_rbf(f);
    auto leg = [](const Forest& g) { return phi_forest(g); };
    return map_tensor(coproduct_ck(f), leg, leg);
}

TensorComb coproduct_rb(const LinComb& a) {
    TensorComb out;
    for (const auto& [f, c] : a) out.add_scaled(coproduct_rb(f), c);
    return out;
}

WeightPoly counit_rb(const LinComb& a) { return a.coefficient(Forest()); }

TensorComb tensor_diamond(const TensorComb& a, const TensorComb& b) {
    return tensor_product_componentwise(a, b, [](const Forest& f, const Forest& g) { return diamond(f, g); });
}

namespace {

const Weight kZeroWeight = Weight::fixed(Rational(0));

detail::Memo<Forest, LinComb>& antipode_rb_memo() {
    static detail::Memo<Forest, LinComb> memo;
    return memo;
}

LinComb antipode_rb0(const Forest& f) {
    if (f.is_unit()) return lc_of(f);
    return antipode_rb_memo().get(f, [&] {
        TensorComb reduced = coproduct_rb(f).specialized(kZeroWeight);
        reduced.add(ForestPair{f, Forest()}, WeightPoly(-1));
        reduced.add(ForestPair{Forest(), f}, WeightPoly(-1));
        LinComb s = -lc_of(f);
        for (const auto& [lr, c] : reduced) {
            if (lr.first.vertex_count() >= f.vertex_count())
                throw std::logic_error("reduced coproduct did not lower the vertex count");
            LinComb left = antipode_rb0(lr.first);
            s.add_scaled(diamond_unchecked(left, lc_of(lr.second)).specialized(kZeroWeight), -c);
        }
        return s;
    });
}

}  // namespace

LinComb antipode_rb(const LinComb& a, const Weight& weight) {
    if (!weight.is_zero()) throw WeightError("antipode only defined at weight 0");
    LinComb at_zero = a.specialized(kZeroWeight);
    for (const auto& [f, c] : at_zero) require_rbf(f);
    return map_linear(at_zero, [](const Forest& f) { return antipode_rb0(f); });
}

std::vector<Forest> enumerate_rbf(std::size_t max_vertices, const Alphabet& alphabet) {
    std::vector<Forest> out;
    for_each_forest(max_vertices, alphabet, true, [&](const Forest& f) {
        if (is_rbf(f)) out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace fhopf
