#pragma once

// Character cursor shared by the recursive-descent parsers.

#include "forest_hopf/errors.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace fhopf::detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    /// Skips whitespace, then consumes `c` if present.
    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected `") + c + "`");
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    bool at_identifier() const { return ident_start(peek()); }
    std::string_view identifier() {
        std::size_t start = pos_;
        while (!at_end() && ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }
    std::string_view digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t p) const { throw ParseError(what, p); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace fhopf::detail
