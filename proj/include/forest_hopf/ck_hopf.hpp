#pragma once

// The noncommutative Connes-Kreimer Hopf algebra on vertex-decorated planar
// forests: coproduct (cocycle recursion and the subforest expansion), counit,
// antipode, and the fold out of the free operated monoid.

#include "forest_hopf/errors.hpp"
#include "forest_hopf/forest.hpp"
#include "forest_hopf/lincomb.hpp"

#include <functional>

namespace fhopf {

/// Δ(1) = 1⊗1, Δ(B⁺_d f) = B⁺_d f ⊗ 1 + (id ⊗ B⁺_d)Δ(f), multiplicative over
/// concatenation.
TensorComb coproduct_ck(const Forest& f);
TensorComb coproduct_ck(const LinComb& a);

/// Σ F ⊗ t/F over the subforests of t: each antichain of vertices taken with
/// all descendants, its subtrees concatenated left to right.
TensorComb coproduct_subforest_oracle(const Tree& t);

/// Coefficient of the unit forest.
WeightPoly counit_ck(const LinComb& a);

/// Δ(F) − F⊗1 − 1⊗F for F ≠ 1.
TensorComb reduced_coproduct_ck(const Forest& f);

/// S(F) = −F − Σ S(F′)·F″ over the reduced coproduct.
LinComb antipode_ck(const Forest& f);
LinComb antipode_ck(const LinComb& a);
/// The mirror recursion S(F) = −F − Σ F′·S(F″); equal to antipode_ck.
LinComb antipode_ck_right(const Forest& f);

/// (id ⊗ B⁺_d) applied termwise.
TensorComb graft_right(const TensorComb& t, Decoration d);
/// B⁺_d on linear combinations.
LinComb graft_linear(const LinComb& a, Decoration d);

/// (Δ⊗id)Δ(F) and (id⊗Δ)Δ(F), flattened to triples.
template <class Coproduct>
TripleComb coassoc_left(const TensorComb& delta, Coproduct&& coproduct) {
    TripleComb out;
    for (const auto& [lr, c] : delta)
        for (const auto& [inner, ci] : coproduct(lr.first))
            out.add(ForestTriple{inner.first, inner.second, lr.second}, c * ci);
    return out;
}
template <class Coproduct>
TripleComb coassoc_right(const TensorComb& delta, Coproduct&& coproduct) {
    TripleComb out;
    for (const auto& [lr, c] : delta)
        for (const auto& [inner, ci] : coproduct(lr.second))
            out.add(ForestTriple{lr.first, inner.first, inner.second}, c * ci);
    return out;
}

/// A target operated monoid/algebra (A, mul, unit, op) with an assignment of
/// letters. `mul` is expected associative with unit `unit`.
template <class A>
struct OperatedTargetHooks {
    A unit;
    std::function<A(const A&, const A&)> mul;
    std::function<A(const A&)> op;
    std::function<A(Decoration)> letter;
};

/// The unique operated-monoid morphism out of the leaf-decorated forests
/// extending `letter`: 1 ↦ unit, •ₓ ↦ letter(x), B⁺_σ(g) ↦ op(g),
/// concatenation ↦ mul.
template <class A>
A evaluate_operated(const Forest& f, const OperatedTargetHooks<A>& hooks);

template <class A>
A evaluate_operated(const Tree& t, const OperatedTargetHooks<A>& hooks) {
    if (t.decoration().is_sigma()) return hooks.op(evaluate_operated(t.children(), hooks));
    if (!t.is_leaf()) throw DomainError("outside the free object on X: a letter decorates an internal vertex");
    return hooks.letter(t.decoration());
}

template <class A>
A evaluate_operated(const Forest& f, const OperatedTargetHooks<A>& hooks) {
    if (f.is_unit()) return hooks.unit;
    const auto& trees = f.trees();
    A acc = evaluate_operated(trees.front(), hooks);
    for (std::size_t i = 1; i < trees.size(); ++i) acc = hooks.mul(acc, evaluate_operated(trees[i], hooks));
    return acc;
}

}  // namespace fhopf
