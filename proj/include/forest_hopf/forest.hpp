#pragma once

// Planar rooted trees and forests decorated by X ∪ {σ}, the bracketed-word
// presentation, and their text / JSON / LaTeX encodings.
//
// Letters are stored as indices into an Alphabet, so forests compare and hash
// as plain integer structures. The alphabet is only needed to parse or print.

#include "json.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fhopf {

/// A vertex label: either a letter of the alphabet (by index) or σ.
/// Letters order by alphabet index and all letters precede σ.
class Decoration {
public:
    static constexpr std::uint32_t kSigmaCode = 0xffffffffu;

    static constexpr Decoration letter(std::uint32_t index) { return Decoration(index); }
    static constexpr Decoration sigma() { return Decoration(kSigmaCode); }

    constexpr bool is_sigma() const { return code_ == kSigmaCode; }
    constexpr bool is_letter() const { return code_ != kSigmaCode; }
    constexpr std::uint32_t letter_index() const { return code_; }
    constexpr std::uint32_t code() const { return code_; }

    friend constexpr auto operator<=>(Decoration, Decoration) = default;

private:
    constexpr explicit Decoration(std::uint32_t c) : code_(c) {}
    std::uint32_t code_;
};

/// The configured letter set X. Names are identifiers, distinct, and never
/// the reserved weight symbol `L`.
class Alphabet {
public:
    /// {a, b}
    Alphabet();
    explicit Alphabet(std::vector<std::string> names);
    /// Parses a comma-separated list such as "a,b,c".
    static Alphabet from_list(std::string_view csv);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::uint32_t index) const { return names_.at(index); }
    /// Returns -1 when `name` is not a letter of the alphabet.
    long find(std::string_view name) const;
    Decoration letter(std::string_view name) const;
    std::string name_of(Decoration d) const;

    static bool is_identifier(std::string_view s);

private:
    std::vector<std::string> names_;
};

class Tree;

/// An ordered sequence of planar rooted trees; the empty forest is the unit 1.
class Forest {
public:
    Forest() = default;
    explicit Forest(std::vector<Tree> trees);
    Forest(std::initializer_list<Tree> trees);

    const std::vector<Tree>& trees() const { return trees_; }
    bool is_unit() const { return trees_.empty(); }
    std::size_t breadth() const { return trees_.size(); }
    std::size_t vertex_count() const { return vertices_; }
    const Tree& front() const;
    const Tree& back() const;

    void push_back(Tree t);
    void append(const Forest& f);
    /// The sub-sequence of trees [first, last).
    Forest slice(std::size_t first, std::size_t last) const;

    friend bool operator==(const Forest& a, const Forest& b);
    /// Canonical order: by vertex count, then lexicographically by trees.
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

private:
    std::vector<Tree> trees_;
    std::size_t vertices_ = 0;
};

class Tree {
public:
    Tree(Decoration d, Forest children = {});

    Decoration decoration() const { return dec_; }
    const Forest& children() const { return children_; }
    bool is_leaf() const { return children_.is_unit(); }
    std::size_t vertex_count() const { return children_.vertex_count() + 1; }

    friend bool operator==(const Tree& a, const Tree& b) = default;
    /// Decoration first, then children in canonical forest order.
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

private:
    Decoration dec_;
    Forest children_;
};

std::size_t hash_value(const Tree& t);
std::size_t hash_value(const Forest& f);

// --- structure --------------------------------------------------------------

/// Longest root-to-leaf chain counted in edges; a single vertex and 1 have depth 0.
std::size_t depth(const Tree& t);
std::size_t depth(const Forest& f);
inline std::size_t breadth(const Forest& f) { return f.breadth(); }
inline std::size_t vertex_count(const Forest& f) { return f.vertex_count(); }

/// B⁺_d: a new root decorated by d above the trees of f. graft(1, d) = •_d.
Tree graft(const Forest& f, Decoration d);
Forest concat(const Forest& f, const Forest& g);
inline Forest as_forest(Tree t) { return Forest({std::move(t)}); }
inline Forest single_vertex(Decoration d) { return as_forest(Tree(d)); }

/// Every vertex with at least one child carries σ.
bool is_leaf_decorated(const Tree& t);
bool is_leaf_decorated(const Forest& f);

// --- bracketed words --------------------------------------------------------

class WordItem;

/// An element of the free operated monoid on X: a sequence of letters and
/// nestable brackets. The empty word is the unit.
class BracketedWord {
public:
    BracketedWord() = default;
    explicit BracketedWord(std::vector<WordItem> items);

    const std::vector<WordItem>& items() const { return items_; }
    bool is_unit() const { return items_.empty(); }

    friend bool operator==(const BracketedWord& a, const BracketedWord& b);
    friend std::strong_ordering operator<=>(const BracketedWord& a, const BracketedWord& b);

private:
    std::vector<WordItem> items_;
};

class WordItem {
public:
    static WordItem letter(std::uint32_t index) { return WordItem(index, {}); }
    static WordItem bracket(BracketedWord inner) { return WordItem(Decoration::kSigmaCode, std::move(inner)); }

    bool is_bracket() const { return code_ == Decoration::kSigmaCode; }
    std::uint32_t letter_index() const { return code_; }
    const BracketedWord& inner() const { return inner_; }

    friend bool operator==(const WordItem&, const WordItem&) = default;
    friend std::strong_ordering operator<=>(const WordItem&, const WordItem&) = default;

private:
    WordItem(std::uint32_t code, BracketedWord inner) : code_(code), inner_(std::move(inner)) {}
    std::uint32_t code_;
    BracketedWord inner_;
};

BracketedWord word_concat(const BracketedWord& u, const BracketedWord& v);
BracketedWord word_bracket(const BracketedWord& u);

/// θ: x ↦ •_x, ⌊w⌋ ↦ B⁺_σ(θ(w)), extended multiplicatively.
Forest theta(const BracketedWord& w);
/// Inverse of θ. Throws DomainError when f is not leaf-decorated.
BracketedWord theta_inv(const Forest& f);

// --- text / JSON / LaTeX ----------------------------------------------------

enum class Format { text, latex, json };

/// Parses the forest grammar:
///   forest := "1" | tree+
///   tree   := letter | letter "[" forest "]" | "[" forest? "]"
/// `x[f]` (letter immediately followed by a bracket) is a letter-rooted tree,
/// needed for the vertex-decorated algebra.
/// Throws ParseError on syntax errors and unknown letters.
Forest parse_forest(std::string_view text, const Alphabet& alphabet);
BracketedWord parse_word(std::string_view text, const Alphabet& alphabet);

std::string render(const Forest& f, const Alphabet& alphabet, Format format = Format::text);
std::string render(const Tree& t, const Alphabet& alphabet, Format format = Format::text);
std::string render(const BracketedWord& w, const Alphabet& alphabet, Format format = Format::text);

/// {"d": "<letter>" | "@", "c": [...]} per tree, arrays for forests.
nlohmann::json to_json(const Forest& f, const Alphabet& alphabet);
Forest forest_from_json(const nlohmann::json& j, const Alphabet& alphabet);
/// Words encode as arrays whose items are letter strings or {"b": [...]}.
nlohmann::json to_json(const BracketedWord& w, const Alphabet& alphabet);
BracketedWord word_from_json(const nlohmann::json& j, const Alphabet& alphabet);

// --- enumeration ------------------------------------------------------------

/// All trees with exactly n vertices, in canonical order.
std::vector<Tree> trees_of_size(std::size_t n, std::size_t alphabet_size, bool leaf_decorated_only);
/// All forests with exactly n vertices, in canonical order.
std::vector<Forest> forests_of_size(std::size_t n, std::size_t alphabet_size, bool leaf_decorated_only);
/// Every forest with vertex_count ≤ max_vertices exactly once, ascending.
std::vector<Forest> enumerate_forests(std::size_t max_vertices, const Alphabet& alphabet,
                                      bool leaf_decorated_only);
/// Streaming form; `visit` returning false stops the enumeration.
void for_each_forest(std::size_t max_vertices, const Alphabet& alphabet, bool leaf_decorated_only,
                     const std::function<bool(const Forest&)>& visit);

}  // namespace fhopf

template <>
struct std::hash<fhopf::Forest> {
    std::size_t operator()(const fhopf::Forest& f) const noexcept { return fhopf::hash_value(f); }
};
template <>
struct std::hash<fhopf::Tree> {
    std::size_t operator()(const fhopf::Tree& t) const noexcept { return fhopf::hash_value(t); }
};
