#pragma once

// Exact coefficient arithmetic: rationals and sparse polynomials in the
// weight symbol λ (printed as `L`).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fhopf {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parses `-?[0-9]+` or `-?[0-9]+/[0-9]+`. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Sparse univariate polynomial over ℚ in the weight λ. Terms are stored
/// sorted by exponent with no zero coefficients.
class WeightPoly {
public:
    using Term = std::pair<unsigned, Rational>;

    WeightPoly() = default;
    WeightPoly(Rational c);  // NOLINT(google-explicit-constructor)
    WeightPoly(long c) : WeightPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    /// c·λ^exp
    static WeightPoly monomial(Rational c, unsigned exp);
    /// The weight symbol λ itself.
    static WeightPoly lambda() { return monomial(Rational(1), 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True when the polynomial has no λ-dependence.
    bool is_constant() const;
    /// Highest exponent; 0 for the zero polynomial.
    unsigned degree() const { return terms_.empty() ? 0 : terms_.back().first; }
    Rational coeff(unsigned exp) const;
    const std::vector<Term>& terms() const { return terms_; }

    WeightPoly operator-() const;
    WeightPoly& operator+=(const WeightPoly& o);
    WeightPoly& operator-=(const WeightPoly& o);
    WeightPoly& operator*=(const WeightPoly& o);

    friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
    friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
    friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);

    friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

    /// Renders in ascending exponent order, e.g. `1/3 + 2*L^2`.
    std::string to_string() const;

private:
    void add_term(unsigned exp, const Rational& c);

    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const WeightPoly& p);

WeightPoly poly_add(const WeightPoly& a, const WeightPoly& b);
WeightPoly poly_mul(const WeightPoly& a, const WeightPoly& b);
/// Evaluates the polynomial at λ = q.
Rational specialize(const WeightPoly& a, const Rational& q);

/// Parses the coefficient syntax: integers, `p/q`, the weight symbol `L`,
/// products `*`, powers `^` and parenthesized sums, e.g. `(2*L + 1/3*L^2)`.
/// Throws ParseError.
WeightPoly parse_weight_poly(std::string_view text);

/// The weight configuration: either the symbol λ kept free, or a fixed
/// rational value.
struct Weight {
    std::optional<Rational> value;

    static Weight symbolic() { return {}; }
    static Weight fixed(Rational q) { return {std::move(q)}; }

    bool is_symbolic() const { return !value.has_value(); }
    bool is_zero() const { return value && value->is_zero(); }

    /// Applies the weight to a coefficient; identity when symbolic.
    WeightPoly apply(const WeightPoly& p) const;
    std::string to_string() const;
};

/// Parses `L` (symbolic) or a rational into a weight configuration.
Weight parse_weight(std::string_view text);

}  // namespace fhopf
