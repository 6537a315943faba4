#pragma once

#include "errors.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

namespace hnf::detail {

// Minimal cursor shared by the two block grammars.
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return done() ? '\0' : s_[pos_]; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::uint64_t number(const char* what) {
        std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what, start);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::uint64_t digit = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - digit) / 10) fail(std::string(what) + " out of range", start);
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg + " at position " + std::to_string(at), at);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

inline bool is_zero_literal(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return a == b || s.substr(a, b - a) == "0";
}

} // namespace hnf::detail
