#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "xdl/errors.hpp"
#include "xdl/linalg.hpp"

namespace xdl {

namespace detail {

/// Whitespace-separated tokens with line/column positions, for diagnostics.
class Tokenizer {
public:
    explicit Tokenizer(std::istream& in) : in_(in) {}

    struct Token {
        std::string text;
        std::size_t line;
        std::size_t column;
    };

    bool next(Token& tok) {
        skip_space();
        if (!in_.good() || in_.peek() == EOF) return false;
        tok.line = line_;
        tok.column = col_;
        tok.text.clear();
        int c;
        while ((c = in_.peek()) != EOF && !std::isspace(c)) {
            tok.text.push_back(static_cast<char>(in_.get()));
            ++col_;
        }
        return true;
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    void skip_space() {
        int c;
        while ((c = in_.peek()) != EOF && std::isspace(c)) {
            in_.get();
            if (c == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }
    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

inline std::size_t parse_count(Tokenizer& tz, const char* what) {
    Tokenizer::Token tok;
    if (!tz.next(tok)) throw parse_error(std::string("missing ") + what, tz.line(), tz.column());
    try {
        const long long v = std::stoll(tok.text);
        if (v <= 0) throw std::out_of_range("nonpositive");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw parse_error(std::string("bad ") + what + " '" + tok.text + "'", tok.line, tok.column);
    }
}

inline std::vector<Rational> parse_entries(Tokenizer& tz, std::size_t count) {
    std::vector<Rational> entries;
    entries.reserve(count);
    Tokenizer::Token tok;
    while (entries.size() < count) {
        if (!tz.next(tok))
            throw parse_error("expected " + std::to_string(count) + " entries, found only " +
                                  std::to_string(entries.size()),
                              tz.line(), tz.column());
        entries.push_back(parse_rational(tok.text, tok.line, tok.column));
    }
    if (tz.next(tok))
        throw parse_error("trailing token '" + tok.text + "' after " + std::to_string(count) +
                              " entries",
                          tok.line, tok.column);
    return entries;
}

} // namespace detail

/// Matrix format: "rows cols" then rows·cols whitespace-separated entries,
/// each an integer or "a/b".
inline RMatrix parse_matrix(std::istream& in) {
    detail::Tokenizer tz(in);
    const std::size_t rows = detail::parse_count(tz, "row count");
    const std::size_t cols = detail::parse_count(tz, "column count");
    return RMatrix(rows, cols, detail::parse_entries(tz, rows * cols));
}

/// Vector format: "dim" then dim entries.
inline RVector parse_vector(std::istream& in) {
    detail::Tokenizer tz(in);
    const std::size_t dim = detail::parse_count(tz, "dimension");
    return RVector(detail::parse_entries(tz, dim));
}

inline RMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file '" + path + "'");
    return parse_matrix(in);
}

inline RVector parse_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open vector file '" + path + "'");
    return parse_vector(in);
}

inline std::string vector_to_string(const RVector& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (i) out += " ";
        out += rational_to_string(x[i]);
    }
    return out + "]";
}

inline std::string matrix_to_string(const RMatrix& A) {
    std::string out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        out += i == 0 ? "[" : " ";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j) out += " ";
            out += rational_to_string(A(i, j));
        }
        out += i + 1 == A.rows() ? "]" : "\n";
    }
    return out;
}

} // namespace xdl
