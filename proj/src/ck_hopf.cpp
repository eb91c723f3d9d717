#include "forest_hopf/ck_hopf.hpp"

#include "memo.hpp"

#include <optional>
#include <stdexcept>

namespace fhopf {

namespace {

detail::Memo<Tree, TensorComb>& tree_coproduct_memo() {
    static detail::Memo<Tree, TensorComb> memo;
    return memo;
}

detail::Memo<Forest, LinComb>& antipode_memo() {
    static detail::Memo<Forest, LinComb> memo;
    return memo;
}

TensorComb coproduct_tree(const Tree& t) {
    return tree_coproduct_memo().get(t, [&] {
        TensorComb out = graft_right(coproduct_ck(t.children()), t.decoration());
        out.add(ForestPair{as_forest(t), Forest()}, WeightPoly(1));
        return out;
    });
}

}  // namespace

TensorComb graft_right(const TensorComb& t, Decoration d) {
    TensorComb out;
    for (const auto& [lr, c] : t) out.add(ForestPair{lr.first, as_forest(graft(lr.second, d))}, c);
    return out;
}

LinComb graft_linear(const LinComb& a, Decoration d) {
    LinComb out;
    for (const auto& [f, c] : a) out.add(as_forest(graft(f, d)), c);
    return out;
}

TensorComb coproduct_ck(const Forest& f) {
    TensorComb acc = tensor_of(Forest(), Forest());
    for (const auto& t : f.trees()) acc = tensor_product_componentwise(acc, coproduct_tree(t), concat_basis);
    return acc;
}

TensorComb coproduct_ck(const LinComb& a) {
    TensorComb out;
    for (const auto& [f, c] : a) out.add_scaled(coproduct_ck(f), c);
    return out;
}

// --- subforest expansion ----------------------------------------------------

namespace {

// One admissible choice inside a subtree: the cut-off subtrees (left to
// right) and what remains of the subtree, if anything.
struct Cut {
    Forest removed;
    std::optional<Tree> remainder;
};

std::vector<Cut> cuts_of(const Tree& t) {
    std::vector<Cut> out;
    out.push_back({as_forest(t), std::nullopt});

    // Vertex not chosen: combine independent choices in each child subtree.
    std::vector<Cut> partial{{Forest(), Tree(t.decoration())}};
    for (const Tree& child : t.children().trees()) {
        std::vector<Cut> child_cuts = cuts_of(child);
        std::vector<Cut> next;
        next.reserve(partial.size() * child_cuts.size());
        for (const Cut& p : partial)
            for (const Cut& c : child_cuts) {
                Forest removed = concat(p.removed, c.removed);
                Forest kept = p.remainder->children();
                if (c.remainder) kept.push_back(*c.remainder);
                next.push_back({std::move(removed), Tree(t.decoration(), std::move(kept))});
            }
        partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
    return out;
}

}  // namespace

TensorComb coproduct_subforest_oracle(const Tree& t) {
    TensorComb out;
    for (Cut& c : cuts_of(t)) {
        Forest quotient = c.remainder ? as_forest(std::move(*c.remainder)) : Forest();
        out.add(ForestPair{std::move(c.removed), std::move(quotient)}, WeightPoly(1));
    }
    return out;
}

// --- counit and antipode ----------------------------------------------------

WeightPoly counit_ck(const LinComb& a) { return a.coefficient(Forest()); }

TensorComb reduced_coproduct_ck(const Forest& f) {
    TensorComb d = coproduct_ck(f);
    d.add(ForestPair{f, Forest()}, WeightPoly(-1));
    d.add(ForestPair{Forest(), f}, WeightPoly(-1));
    return d;
}

LinComb antipode_ck(const Forest& f) {
    if (f.is_unit()) return lc_of(f);
    return antipode_memo().get(f, [&] {
        LinComb s = -lc_of(f);
        for (const auto& [lr, c] : reduced_coproduct_ck(f)) {
            if (lr.first.vertex_count() >= f.vertex_count())
                throw std::logic_error("reduced coproduct did not lower the vertex count");
            for (const auto& [g, cg] : antipode_ck(lr.first)) s.add(concat(g, lr.second), -(c * cg));
        }
        return s;
    });
}

LinComb antipode_ck(const LinComb& a) {
    return map_linear(a, [](const Forest& f) { return antipode_ck(f); });
}

LinComb antipode_ck_right(const Forest& f) {
    if (f.is_unit()) return lc_of(f);
    LinComb s = -lc_of(f);
    for (const auto& [lr, c] : reduced_coproduct_ck(f)) {
        if (lr.second.vertex_count() >= f.vertex_count())
            throw std::logic_error("reduced coproduct did not lower the vertex count");
        for (const auto& [g, cg] : antipode_ck_right(lr.second)) s.add(concat(lr.first, g), -(c * cg));
    }
    return s;
}

}  // namespace fhopf
