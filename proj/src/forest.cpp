#include "forest_hopf/forest.hpp"

#include "forest_hopf/errors.hpp"
#include "forest_text.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fhopf {

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet() : names_{"a", "b"} {}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) throw std::invalid_argument("`" + n + "` is not an identifier");
        if (n == "L") throw std::invalid_argument("`L` is reserved for the weight and cannot be a letter");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate letter `" + n + "`");
    }
}

Alphabet Alphabet::from_list(std::string_view csv) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        std::string_view item = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        names.emplace_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Alphabet(std::move(names));
}

long Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<long>(i);
    return -1;
}

Decoration Alphabet::letter(std::string_view name) const {
    long i = find(name);
    if (i < 0) throw std::invalid_argument("unknown letter `" + std::string(name) + "`");
    return Decoration::letter(static_cast<std::uint32_t>(i));
}

std::string Alphabet::name_of(Decoration d) const {
    if (d.is_sigma()) return "@";
    if (d.letter_index() >= names_.size()) return "#" + std::to_string(d.letter_index());
    return names_[d.letter_index()];
}

bool Alphabet::is_identifier(std::string_view s) {
    if (s.empty() || !detail::Cursor::ident_start(s.front())) return false;
    return std::all_of(s.begin(), s.end(), detail::Cursor::ident_char);
}

// --- Forest / Tree ----------------------------------------------------------

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    for (const auto& t : trees_) vertices_ += t.vertex_count();
}

Forest::Forest(std::initializer_list<Tree> trees) : Forest(std::vector<Tree>(trees)) {}

const Tree& Forest::front() const { return trees_.front(); }
const Tree& Forest::back() const { return trees_.back(); }

void Forest::push_back(Tree t) {
    vertices_ += t.vertex_count();
    trees_.push_back(std::move(t));
}

void Forest::append(const Forest& f) {
    trees_.insert(trees_.end(), f.trees_.begin(), f.trees_.end());
    vertices_ += f.vertices_;
}

Forest Forest::slice(std::size_t first, std::size_t last) const {
    return Forest(std::vector<Tree>(trees_.begin() + static_cast<std::ptrdiff_t>(first),
                                    trees_.begin() + static_cast<std::ptrdiff_t>(last)));
}

bool operator==(const Forest& a, const Forest& b) {
    return a.vertices_ == b.vertices_ && a.trees_ == b.trees_;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                  b.trees_.end());
}

Tree::Tree(Decoration d, Forest children) : dec_(d), children_(std::move(children)) {}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = a.dec_ <=> b.dec_; c != 0) return c;
    return a.children_ <=> b.children_;
}

namespace {
inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}
}  // namespace

std::size_t hash_value(const Tree& t) {
    std::size_t h = t.decoration().code();
    hash_mix(h, hash_value(t.children()));
    return h;
}

std::size_t hash_value(const Forest& f) {
    std::size_t h = f.breadth();
    for (const auto& t : f.trees()) hash_mix(h, hash_value(t));
    return h;
}

// --- structure --------------------------------------------------------------

std::size_t depth(const Tree& t) { return t.is_leaf() ? 0 : 1 + depth(t.children()); }

std::size_t depth(const Forest& f) {
    std::size_t d = 0;
    for (const auto& t : f.trees()) d = std::max(d, depth(t));
    return d;
}

Tree graft(const Forest& f, Decoration d) { return Tree(d, f); }

Forest concat(const Forest& f, const Forest& g) {
    Forest r = f;
    r.append(g);
    return r;
}

bool is_leaf_decorated(const Tree& t) {
    if (t.is_leaf()) return true;
    return t.decoration().is_sigma() && is_leaf_decorated(t.children());
}

bool is_leaf_decorated(const Forest& f) {
    return std::all_of(f.trees().begin(), f.trees().end(), [](const Tree& t) { return is_leaf_decorated(t); });
}

// --- bracketed words --------------------------------------------------------

BracketedWord::BracketedWord(std::vector<WordItem> items) : items_(std::move(items)) {}

bool operator==(const BracketedWord& a, const BracketedWord& b) { return a.items_ == b.items_; }

std::strong_ordering operator<=>(const BracketedWord& a, const BracketedWord& b) {
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(), b.items_.begin(),
                                                  b.items_.end());
}

BracketedWord word_concat(const BracketedWord& u, const BracketedWord& v) {
    std::vector<WordItem> items = u.items();
    items.insert(items.end(), v.items().begin(), v.items().end());
    return BracketedWord(std::move(items));
}

BracketedWord word_bracket(const BracketedWord& u) { return BracketedWord({WordItem::bracket(u)}); }

Forest theta(const BracketedWord& w) {
    Forest f;
    for (const auto& item : w.items()) {
        if (item.is_bracket())
            f.push_back(graft(theta(item.inner()), Decoration::sigma()));
        else
            f.push_back(Tree(Decoration::letter(item.letter_index())));
    }
    return f;
}

BracketedWord theta_inv(const Forest& f) {
    std::vector<WordItem> items;
    items.reserve(f.breadth());
    for (const auto& t : f.trees()) {
        if (t.decoration().is_sigma()) {
            items.push_back(WordItem::bracket(theta_inv(t.children())));
        } else {
            if (!t.is_leaf()) throw DomainError("not in the image of θ: a letter decorates an internal vertex");
            items.push_back(WordItem::letter(t.decoration().letter_index()));
        }
    }
    return BracketedWord(std::move(items));
}

// --- parsing ----------------------------------------------------------------

namespace detail {

bool at_tree_start(Cursor& cur) {
    cur.skip_ws();
    return cur.peek() == '[' || cur.at_identifier();
}

namespace {

Forest parse_inner_forest(Cursor& cur, const Alphabet& alphabet) {
    cur.skip_ws();
    if (cur.peek() == ']') return {};
    if (cur.peek() == '1' && !Cursor::ident_char(cur.peek(1))) {
        cur.get();
        return {};
    }
    return parse_trees(cur, alphabet);
}

Tree parse_tree(Cursor& cur, const Alphabet& alphabet) {
    cur.skip_ws();
    if (cur.accept('[')) {
        Forest inner = parse_inner_forest(cur, alphabet);
        cur.expect(']');
        return graft(inner, Decoration::sigma());
    }
    std::size_t start = cur.pos();
    std::string_view name = cur.identifier();
    if (name == "L") cur.fail_at("`L` is the weight symbol, not a letter", start);
    long idx = alphabet.find(name);
    if (idx < 0) cur.fail_at("unknown letter " + std::string(name), start);
    Decoration d = Decoration::letter(static_cast<std::uint32_t>(idx));
    if (cur.peek() == '[') {
        cur.get();
        Forest inner = parse_inner_forest(cur, alphabet);
        cur.expect(']');
        return graft(inner, d);
    }
    return Tree(d);
}

}  // namespace

Forest parse_trees(Cursor& cur, const Alphabet& alphabet) {
    if (!at_tree_start(cur)) cur.fail("expected a tree");
    Forest f;
    while (at_tree_start(cur)) f.push_back(parse_tree(cur, alphabet));
    return f;
}

}  // namespace detail

Forest parse_forest(std::string_view text, const Alphabet& alphabet) {
    detail::Cursor cur(text);
    cur.skip_ws();
    Forest f;
    if (cur.peek() == '1' && !detail::Cursor::ident_char(cur.peek(1))) {
        cur.get();
    } else {
        f = detail::parse_trees(cur, alphabet);
    }
    cur.skip_ws();
    if (!cur.at_end()) cur.fail(std::string("unexpected `") + cur.peek() + "`");
    return f;
}

BracketedWord parse_word(std::string_view text, const Alphabet& alphabet) {
    Forest f = parse_forest(text, alphabet);
    if (!is_leaf_decorated(f)) throw ParseError("letter-rooted subtree is not a bracketed word", 0);
    return theta_inv(f);
}

// --- rendering --------------------------------------------------------------

namespace {

void render_text(std::ostringstream& os, const Forest& f, const Alphabet& a);

void render_text(std::ostringstream& os, const Tree& t, const Alphabet& a) {
    if (t.decoration().is_sigma()) {
        os << '[';
        render_text(os, t.children(), a);
        os << ']';
        return;
    }
    os << a.name_of(t.decoration());
    if (!t.is_leaf()) {
        os << '[';
        render_text(os, t.children(), a);
        os << ']';
    }
}

void render_text(std::ostringstream& os, const Forest& f, const Alphabet& a) {
    bool first = true;
    for (const auto& t : f.trees()) {
        if (!first) os << ' ';
        first = false;
        render_text(os, t, a);
    }
}

void render_latex(std::ostringstream& os, const Forest& f, const Alphabet& a);

void render_latex(std::ostringstream& os, const Tree& t, const Alphabet& a) {
    if (t.is_leaf() && t.decoration().is_letter()) {
        os << "\\bullet_{" << a.name_of(t.decoration()) << '}';
        return;
    }
    os << "B^+";
    if (t.decoration().is_letter()) os << "_{" << a.name_of(t.decoration()) << '}';
    os << '(';
    render_latex(os, t.children(), a);
    os << ')';
}

void render_latex(std::ostringstream& os, const Forest& f, const Alphabet& a) {
    if (f.is_unit()) {
        os << '1';
        return;
    }
    bool first = true;
    for (const auto& t : f.trees()) {
        if (!first) os << "\\,";
        first = false;
        render_latex(os, t, a);
    }
}

void render_word_latex(std::ostringstream& os, const BracketedWord& w, const Alphabet& a) {
    if (w.is_unit()) {
        os << '1';
        return;
    }
    for (const auto& item : w.items()) {
        if (item.is_bracket()) {
            os << "\\lfloor ";
            render_word_latex(os, item.inner(), a);
            os << "\\rfloor ";
        } else {
            os << a.name(item.letter_index()) << ' ';
        }
    }
}

}  // namespace

std::string render(const Forest& f, const Alphabet& alphabet, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::text:
            if (f.is_unit()) return "1";
            render_text(os, f, alphabet);
            break;
        case Format::latex:
            render_latex(os, f, alphabet);
            break;
        case Format::json:
            return to_json(f, alphabet).dump();
    }
    return os.str();
}

std::string render(const Tree& t, const Alphabet& alphabet, Format format) {
    return render(as_forest(t), alphabet, format);
}

std::string render(const BracketedWord& w, const Alphabet& alphabet, Format format) {
    switch (format) {
        case Format::text:
            return render(theta(w), alphabet, Format::text);
        case Format::latex: {
            std::ostringstream os;
            render_word_latex(os, w, alphabet);
            std::string s = os.str();
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        }
        case Format::json:
            return to_json(w, alphabet).dump();
    }
    return {};
}

// --- JSON -------------------------------------------------------------------

namespace {

nlohmann::json tree_json(const Tree& t, const Alphabet& a) {
    nlohmann::json children = nlohmann::json::array();
    for (const auto& c : t.children().trees()) children.push_back(tree_json(c, a));
    return {{"d", a.name_of(t.decoration())}, {"c", std::move(children)}};
}

Tree tree_from_json(const nlohmann::json& j, const Alphabet& a) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_string())
        throw ParseError("tree JSON must be an object with a string \"d\"", 0);
    const std::string d = j["d"].get<std::string>();
    Forest children;
    if (j.contains("c")) children = forest_from_json(j["c"], a);
    if (d == "@") return Tree(Decoration::sigma(), std::move(children));
    long idx = a.find(d);
    if (idx < 0) throw ParseError("unknown letter " + d, 0);
    return Tree(Decoration::letter(static_cast<std::uint32_t>(idx)), std::move(children));
}

}  // namespace

nlohmann::json to_json(const Forest& f, const Alphabet& alphabet) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : f.trees()) arr.push_back(tree_json(t, alphabet));
    return arr;
}

Forest forest_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_array()) throw ParseError("forest JSON must be an array of trees", 0);
    Forest f;
    for (const auto& t : j) f.push_back(tree_from_json(t, alphabet));
    return f;
}

nlohmann::json to_json(const BracketedWord& w, const Alphabet& alphabet) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& item : w.items()) {
        if (item.is_bracket())
            arr.push_back({{"b", to_json(item.inner(), alphabet)}});
        else
            arr.push_back(alphabet.name(item.letter_index()));
    }
    return arr;
}

BracketedWord word_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_array()) throw ParseError("word JSON must be an array", 0);
    std::vector<WordItem> items;
    for (const auto& item : j) {
        if (item.is_string()) {
            long idx = alphabet.find(item.get<std::string>());
            if (idx < 0) throw ParseError("unknown letter " + item.get<std::string>(), 0);
            items.push_back(WordItem::letter(static_cast<std::uint32_t>(idx)));
        } else if (item.is_object() && item.contains("b")) {
            items.push_back(WordItem::bracket(word_from_json(item["b"], alphabet)));
        } else {
            throw ParseError("word item must be a letter string or {\"b\": [...]}", 0);
        }
    }
    return BracketedWord(std::move(items));
}

// --- enumeration ------------------------------------------------------------

namespace {

struct ShapeTables {
    std::vector<std::vector<Tree>> trees;
    std::vector<std::vector<Forest>> forests;

    ShapeTables(std::size_t max_n, std::size_t k, bool leaf_only) {
        trees.resize(max_n + 1);
        forests.resize(max_n + 1);
        forests[0].emplace_back();
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (const Forest& kids : forests[n - 1]) {
                if (!kids.is_unit() && leaf_only) {
                    trees[n].emplace_back(Decoration::sigma(), kids);
                    continue;
                }
                for (std::uint32_t i = 0; i < k; ++i) trees[n].emplace_back(Decoration::letter(i), kids);
                trees[n].emplace_back(Decoration::sigma(), kids);
            }
            std::sort(trees[n].begin(), trees[n].end());
            for (std::size_t first = 1; first <= n; ++first)
                for (const Tree& t : trees[first])
                    for (const Forest& rest : forests[n - first]) {
                        Forest f({t});
                        f.append(rest);
                        forests[n].push_back(std::move(f));
                    }
            std::sort(forests[n].begin(), forests[n].end());
        }
    }
};

}  // namespace

std::vector<Tree> trees_of_size(std::size_t n, std::size_t alphabet_size, bool leaf_decorated_only) {
    return ShapeTables(n, alphabet_size, leaf_decorated_only).trees[n];
}

std::vector<Forest> forests_of_size(std::size_t n, std::size_t alphabet_size, bool leaf_decorated_only) {
    return ShapeTables(n, alphabet_size, leaf_decorated_only).forests[n];
}

std::vector<Forest> enumerate_forests(std::size_t max_vertices, const Alphabet& alphabet, bool leaf_decorated_only) {
    ShapeTables tables(max_vertices, alphabet.size(), leaf_decorated_only);
    std::vector<Forest> out;
    for (auto& grade : tables.forests) out.insert(out.end(), grade.begin(), grade.end());
    return out;
}

void for_each_forest(std::size_t max_vertices, const Alphabet& alphabet, bool leaf_decorated_only,
                     const std::function<bool(const Forest&)>& visit) {
    ShapeTables tables(max_vertices, alphabet.size(), leaf_decorated_only);
    for (const auto& grade : tables.forests)
        for (const auto& f : grade)
            if (!visit(f)) return;
}

}  // namespace fhopf
