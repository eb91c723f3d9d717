#pragma once

// The free Rota-Baxter algebra of weight λ realized on Rota-Baxter forests
// (RBFs): leaf-decorated forests in which no two adjacent trees, at any
// level, both have σ-decorated roots.

#include "forest_hopf/errors.hpp"
#include "forest_hopf/forest.hpp"
#include "forest_hopf/lincomb.hpp"

#include <optional>
#include <vector>

namespace fhopf {

bool is_rbf(const Forest& f);

/// A forest known to satisfy is_rbf.
class RBForest {
public:
    /// Throws DomainError when f is not an RBF.
    explicit RBForest(Forest f);
    static std::optional<RBForest> make(Forest f);

    const Forest& forest() const { return f_; }
    operator const Forest&() const { return f_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(const RBForest&, const RBForest&) = default;
    friend auto operator<=>(const RBForest&, const RBForest&) = default;

private:
    struct Trusted {};
    RBForest(Forest f, Trusted) : f_(std::move(f)) {}
    Forest f_;
};

/// The factors of f: letter vertices and σ-rooted trees, no two consecutive
/// σ-rooted. Throws DomainError for 1 or non-RBFs.
std::vector<Tree> alternating_decomposition(const Forest& f);

/// 0 for 1 and letter-only forests, else 1 + the largest depth among the
/// child forests of the σ-rooted factors. Throws DomainError for non-RBFs.
std::size_t rb_depth(const Forest& f);

/// The Rota-Baxter product ⋄. Throws DomainError("operand outside Ш(X)")
/// when a basis forest is not an RBF.
LinComb diamond(const Forest& u, const Forest& v);
LinComb diamond(const LinComb& a, const LinComb& b);

/// B⁺_σ on linear combinations.
LinComb graft_sigma(const LinComb& a);

/// Projection of the free operated algebra on leaf-decorated forests onto
/// the RBF span: 1 ↦ 1, •ₓ ↦ •ₓ, B⁺_σ(f) ↦ B⁺_σ(φ(f)),
/// T₁⋯Tₘ ↦ φ(T₁)⋄⋯⋄φ(Tₘ). Throws DomainError on non-leaf-decorated input.
LinComb phi(const Forest& f);
LinComb phi(const LinComb& a);

/// Δ⋄ = (φ⊗φ)∘Δ_CK on RBFs.
TensorComb coproduct_rb(const Forest& f);
TensorComb coproduct_rb(const LinComb& a);

WeightPoly counit_rb(const LinComb& a);

/// Antipode of (Ш(X), ⋄, Δ⋄). Only defined at weight exactly 0: any other
/// weight throws WeightError. Input coefficients are specialized at λ = 0.
LinComb antipode_rb(const LinComb& a, const Weight& weight);

/// Componentwise ⋄ on tensors.
TensorComb tensor_diamond(const TensorComb& a, const TensorComb& b);

/// Leaf-decorated forests with at most max_vertices vertices that are RBFs,
/// ascending canonical order.
std::vector<Forest> enumerate_rbf(std::size_t max_vertices, const Alphabet& alphabet);

}  // namespace fhopf
