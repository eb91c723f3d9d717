#include "coeff_text.hpp"

#include <cctype>
#include <string>

namespace fhopf::detail {

bool at_weight_symbol(Cursor& cur) {
    cur.skip_ws();
    return cur.peek() == 'L' && !Cursor::ident_char(cur.peek(1));
}

bool at_coeff_factor(Cursor& cur) {
    cur.skip_ws();
    char c = cur.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || at_weight_symbol(cur);
}

namespace {

unsigned parse_exponent(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos();
    auto d = cur.digits();
    if (d.empty() || d.size() > 6) cur.fail_at("expected a small nonnegative exponent", start);
    return static_cast<unsigned>(std::stoul(std::string(d)));
}

WeightPoly power(const WeightPoly& base, unsigned e) {
    WeightPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

WeightPoly parse_coeff_factor(Cursor& cur) {
    cur.skip_ws();
    WeightPoly value;
    std::size_t start = cur.pos();
    if (at_weight_symbol(cur)) {
        cur.get();
        value = WeightPoly::lambda();
    } else if (cur.accept('(')) {
        value = parse_coeff_sum(cur);
        cur.expect(')');
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        std::string text(cur.digits());
        if (cur.peek() == '/') {
            cur.get();
            auto den = cur.digits();
            if (den.empty()) cur.fail("expected a denominator");
            text += "/" + std::string(den);
        }
        try {
            value = WeightPoly(Rational::parse(text));
        } catch (const std::exception& e) {
            cur.fail_at(e.what(), start);
        }
    } else {
        cur.fail("expected a coefficient");
    }
    if (cur.accept('^')) value = power(value, parse_exponent(cur));
    return value;
}

WeightPoly parse_coeff_sum(Cursor& cur) {
    WeightPoly total;
    bool negate = cur.accept('-');
    if (!negate) cur.accept('+');
    while (true) {
        WeightPoly term = parse_coeff_factor(cur);
        while (cur.accept('*')) term *= parse_coeff_factor(cur);
        total += negate ? -term : term;
        if (cur.accept('+'))
            negate = false;
        else if (cur.accept('-'))
            negate = true;
        else
            break;
    }
    return total;
}

}  // namespace fhopf::detail
