#include "forest_hopf/scalar.hpp"

#include "coeff_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fhopf {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw std::invalid_argument("malformed rational `" + std::string(text) + "`");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in `" + std::string(text) + "`");
    if (neg) n = -n;
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------

WeightPoly::WeightPoly(Rational c) {
    if (!c.is_zero()) terms_.emplace_back(0u, std::move(c));
}

WeightPoly WeightPoly::monomial(Rational c, unsigned exp) {
    WeightPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(exp, std::move(c));
    return p;
}

bool WeightPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

bool WeightPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational WeightPoly::coeff(unsigned exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, unsigned e) { return t.first < e; });
    return it != terms_.end() && it->first == exp ? it->second : Rational();
}

void WeightPoly::add_term(unsigned exp, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, unsigned e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {exp, c});
    }
}

WeightPoly WeightPoly::operator-() const {
    WeightPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
    WeightPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

WeightPoly& WeightPoly::operator*=(const WeightPoly& o) { return *this = *this * o; }

std::string WeightPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            mag = c.abs();
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << 'L';
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeightPoly& p) { return os << p.to_string(); }

WeightPoly poly_add(const WeightPoly& a, const WeightPoly& b) { return a + b; }
WeightPoly poly_mul(const WeightPoly& a, const WeightPoly& b) { return a * b; }

Rational specialize(const WeightPoly& a, const Rational& q) {
    // Horner from the top exponent down.
    Rational acc;
    unsigned cur = a.degree();
    const auto& ts = a.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        for (; cur > it->first; --cur) acc *= q;
        acc += it->second;
    }
    for (; cur > 0; --cur) acc *= q;
    return acc;
}

WeightPoly Weight::apply(const WeightPoly& p) const {
    if (!value) return p;
    return WeightPoly(specialize(p, *value));
}

WeightPoly parse_weight_poly(std::string_view text) {
    detail::Cursor cur(text);
    WeightPoly p = detail::parse_coeff_sum(cur);
    cur.skip_ws();
    if (!cur.at_end()) cur.fail(std::string("unexpected `") + cur.peek() + "`");
    return p;
}

Weight parse_weight(std::string_view text) {
    WeightPoly p = parse_weight_poly(text);
    if (p == WeightPoly::lambda()) return Weight::symbolic();
    if (!p.is_constant()) throw ParseError("weight must be `L` or a rational number", 0);
    return Weight::fixed(p.coeff(0));
}

std::string Weight::to_string() const { return value ? value->to_string() : std::string("L"); }

}  // namespace fhopf
