#include "forest_hopf/lincomb.hpp"

#include "coeff_text.hpp"
#include "forest_hopf/errors.hpp"
#include "forest_text.hpp"

#include <sstream>

namespace fhopf {

namespace {

struct CoeffText {
    bool negative = false;
    std::string magnitude;  // empty when the magnitude is 1
};

std::string latex_poly(const WeightPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool show = e == 0 || !mag.is_one();
        if (show) {
            if (mag.denominator() == 1)
                os << mag;
            else
                os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << '}';
        }
        if (e > 0) {
            os << "\\lambda";
            if (e > 1) os << "^{" << e << '}';
        }
    }
    return os.str();
}

CoeffText coeff_text(const WeightPoly& c, Format format) {
    CoeffText out;
    if (c.terms().size() == 1) {
        const auto& [e, r] = c.terms().front();
        out.negative = r.sign() < 0;
        WeightPoly mag = WeightPoly::monomial(r.abs(), e);
        if (!mag.is_one()) out.magnitude = format == Format::latex ? latex_poly(mag) : mag.to_string();
        return out;
    }
    out.magnitude = "(" + (format == Format::latex ? latex_poly(c) : c.to_string()) + ")";
    return out;
}

template <class Key, class RenderKey>
std::string render_sum(const FormalSum<Key>& a, Format format, RenderKey&& render_key) {
    if (a.is_zero()) return "0";
    const char* times = format == Format::latex ? "\\," : "*";
    std::ostringstream os;
    bool first = true;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [key, c] = *it;
        CoeffText ct = coeff_text(c, format);
        if (first)
            os << (ct.negative ? "-" : "");
        else
            os << (ct.negative ? " - " : " + ");
        first = false;
        std::string body = render_key(key);
        if (body.empty())
            os << (ct.magnitude.empty() ? "1" : ct.magnitude);
        else if (ct.magnitude.empty())
            os << body;
        else
            os << ct.magnitude << times << body;
    }
    return os.str();
}

}  // namespace

std::string render(const LinComb& a, const Alphabet& alphabet, Format format) {
    if (format == Format::json) return to_json(a, alphabet).dump();
    return render_sum(a, format, [&](const Forest& f) {
        return f.is_unit() ? std::string() : render(f, alphabet, format);
    });
}

std::string render(const TensorComb& t, const Alphabet& alphabet, Format format) {
    if (format == Format::json) return to_json(t, alphabet).dump();
    const char* otimes = format == Format::latex ? " \\otimes " : " (x) ";
    return render_sum(t, format, [&](const ForestPair& p) {
        return render(p.first, alphabet, format) + otimes + render(p.second, alphabet, format);
    });
}

// --- parsing ----------------------------------------------------------------

namespace {

void parse_term(detail::Cursor& cur, const Alphabet& alphabet, bool negate, LinComb& out) {
    using namespace detail;
    WeightPoly coeff(1);
    Forest forest;
    if (!at_weight_symbol(cur) && at_tree_start(cur)) {
        forest = parse_trees(cur, alphabet);
    } else {
        coeff = parse_coeff_factor(cur);
        while (cur.accept('*')) {
            if (!at_weight_symbol(cur) && at_tree_start(cur)) {
                forest = parse_trees(cur, alphabet);
                break;
            }
            coeff *= parse_coeff_factor(cur);
        }
    }
    out.add(std::move(forest), negate ? -coeff : coeff);
}

}  // namespace

LinComb parse_lincomb(std::string_view text, const Alphabet& alphabet) {
    detail::Cursor cur(text);
    cur.skip_ws();
    if (cur.peek() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        return lincomb_from_json(j, alphabet);
    }
    if (cur.at_end()) cur.fail("empty expression");
    LinComb out;
    bool negate = cur.accept('-');
    if (!negate) cur.accept('+');
    while (true) {
        parse_term(cur, alphabet, negate, out);
        if (cur.accept('+'))
            negate = false;
        else if (cur.accept('-'))
            negate = true;
        else
            break;
    }
    cur.skip_ws();
    if (!cur.at_end()) cur.fail(std::string("unexpected `") + cur.peek() + "`");
    return out;
}

// --- JSON -------------------------------------------------------------------

nlohmann::json poly_to_json(const WeightPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.to_string();
    return j;
}

WeightPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("coefficient JSON must be an object {\"<exp>\": \"<rational>\"}", 0);
    WeightPoly p;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw ParseError("coefficient values must be rational strings", 0);
        unsigned e = 0;
        try {
            std::size_t used = 0;
            e = static_cast<unsigned>(std::stoul(k, &used));
            if (used != k.size()) throw std::invalid_argument(k);
            p += WeightPoly::monomial(Rational::parse(v.get<std::string>()), e);
        } catch (const std::exception& ex) {
            throw ParseError(std::string("bad coefficient entry: ") + ex.what(), 0);
        }
    }
    return p;
}

nlohmann::json to_json(const LinComb& a, const Alphabet& alphabet) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
        terms.push_back({{"coeff", poly_to_json(it->second)}, {"forest", to_json(it->first, alphabet)}});
    return {{"terms", std::move(terms)}};
}

nlohmann::json to_json(const TensorComb& t, const Alphabet& alphabet) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        nlohmann::json factors = nlohmann::json::array(
            {to_json(it->first.first, alphabet), to_json(it->first.second, alphabet)});
        terms.push_back({{"coeff", poly_to_json(it->second)}, {"factors", std::move(factors)}});
    }
    return {{"terms", std::move(terms)}};
}

LinComb lincomb_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("linear combination JSON must be {\"terms\": [...]}", 0);
    LinComb out;
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("forest"))
            throw ParseError("each term needs \"coeff\" and \"forest\"", 0);
        out.add(forest_from_json(term["forest"], alphabet), poly_from_json(term["coeff"]));
    }
    return out;
}

TensorComb tensor_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("tensor JSON must be {\"terms\": [...]}", 0);
    TensorComb out;
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("factors") ||
            !term["factors"].is_array() || term["factors"].size() != 2)
            throw ParseError("each tensor term needs \"coeff\" and two \"factors\"", 0);
        out.add(ForestPair{forest_from_json(term["factors"][0], alphabet),
                           forest_from_json(term["factors"][1], alphabet)},
                poly_from_json(term["coeff"]));
    }
    return out;
}

}  // namespace fhopf
