#pragma once

// Formal linear combinations over ℚ[λ] of forests, forest pairs and forest
// triples.

#include "forest_hopf/forest.hpp"
#include "forest_hopf/scalar.hpp"

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace fhopf {

/// A finite sum Σ cᵢ·kᵢ with nonzero coefficients, ordered by key.
template <class Key>
class FormalSum {
public:
    using Map = std::map<Key, WeightPoly>;

    FormalSum() = default;
    explicit FormalSum(Key k, WeightPoly c = WeightPoly(1)) { add(std::move(k), c); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    WeightPoly coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? WeightPoly() : it->second;
    }

    /// Adds c·k, erasing the entry if it cancels.
    void add(const Key& k, const WeightPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Key&& k, const WeightPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    /// Adds s·other.
    void add_scaled(const FormalSum& other, const WeightPoly& s) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : other.terms_) add(k, s.is_one() ? c : s * c);
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    FormalSum operator-() const {
        FormalSum r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend FormalSum operator*(const WeightPoly& s, const FormalSum& a) {
        FormalSum r;
        r.add_scaled(a, s);
        return r;
    }

    /// Applies a numeric weight to every coefficient.
    FormalSum specialized(const Weight& w) const {
        if (w.is_symbolic()) return *this;
        FormalSum r;
        for (const auto& [k, c] : terms_) r.add(k, w.apply(c));
        return r;
    }

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    Map terms_;
};

using ForestPair = std::pair<Forest, Forest>;
using ForestTriple = std::tuple<Forest, Forest, Forest>;

/// An element of the free module on forests.
using LinComb = FormalSum<Forest>;
/// An element of the tensor square; factors are ordered.
using TensorComb = FormalSum<ForestPair>;
/// An element of the tensor cube, used for coassociativity.
using TripleComb = FormalSum<ForestTriple>;

inline LinComb lc_of(const Forest& f) { return LinComb(f); }
inline LinComb lc_add(const LinComb& a, const LinComb& b) { return a + b; }
inline LinComb lc_scale(const WeightPoly& s, const LinComb& a) { return s * a; }
inline TensorComb tensor_of(const Forest& l, const Forest& r) { return TensorComb(ForestPair{l, r}); }

/// Linear extension of a basis-level map.
template <class Fn>
LinComb map_linear(const LinComb& a, Fn&& on_basis) {
    LinComb out;
    for (const auto& [f, c] : a) out.add_scaled(on_basis(f), c);
    return out;
}

/// Σaᵢfᵢ op Σbⱼgⱼ = Σᵢⱼ aᵢbⱼ·op(fᵢ,gⱼ)
template <class Op>
LinComb bilinear_extend(Op&& op, const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [f, cf] : a)
        for (const auto& [g, cg] : b) out.add_scaled(op(f, g), cf * cg);
    return out;
}

/// (x⊗y)·(u⊗v) = (x·u)⊗(y·v), extended bilinearly; `mul` is the basis
/// multiplication returning a LinComb.
template <class Mul>
TensorComb tensor_product_componentwise(const TensorComb& a, const TensorComb& b, Mul&& mul) {
    TensorComb out;
    for (const auto& [xy, c1] : a)
        for (const auto& [uv, c2] : b) {
            WeightPoly c = c1 * c2;
            LinComb left = mul(xy.first, uv.first);
            LinComb right = mul(xy.second, uv.second);
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) out.add(ForestPair{l, r}, c * cl * cr);
        }
    return out;
}

/// (f ⊗ g) applied termwise, each side a linear map on forests.
template <class Left, class Right>
TensorComb map_tensor(const TensorComb& t, Left&& left, Right&& right) {
    TensorComb out;
    for (const auto& [lr, c] : t) {
        LinComb l = left(lr.first);
        LinComb r = right(lr.second);
        for (const auto& [fl, cl] : l)
            for (const auto& [fr, cr] : r) out.add(ForestPair{fl, fr}, c * cl * cr);
    }
    return out;
}

/// Concatenation as a basis multiplication.
inline LinComb concat_basis(const Forest& f, const Forest& g) { return lc_of(concat(f, g)); }

/// m: A⊗A → A for a basis multiplication.
template <class Mul>
LinComb multiply_legs(const TensorComb& t, Mul&& mul) {
    LinComb out;
    for (const auto& [lr, c] : t) out.add_scaled(mul(lr.first, lr.second), c);
    return out;
}

// --- text / JSON ------------------------------------------------------------

/// Terms are listed from the largest forest in canonical order down; a
/// coefficient of 1 is omitted and a leading minus is folded into the sign.
std::string render(const LinComb& a, const Alphabet& alphabet, Format format = Format::text);
std::string render(const TensorComb& t, const Alphabet& alphabet, Format format = Format::text);

/// lincomb := term (('+'|'-') term)*, term := (coeff '*')? forest | coeff.
/// A text starting with `{` is read as the JSON encoding instead.
LinComb parse_lincomb(std::string_view text, const Alphabet& alphabet);

nlohmann::json to_json(const LinComb& a, const Alphabet& alphabet);
nlohmann::json to_json(const TensorComb& t, const Alphabet& alphabet);
LinComb lincomb_from_json(const nlohmann::json& j, const Alphabet& alphabet);
TensorComb tensor_from_json(const nlohmann::json& j, const Alphabet& alphabet);

nlohmann::json poly_to_json(const WeightPoly& p);
WeightPoly poly_from_json(const nlohmann::json& j);

}  // namespace fhopf
