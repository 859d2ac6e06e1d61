#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "xdl/errors.hpp"

namespace xdl {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in canonical form: positive
/// denominator, gcd(|num|, den) = 1, zero stored as 0/1. All computation in
/// this library is exact; there is no epsilon anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "a/b", or just "a" for integers.
inline std::string rational_to_string(const Rational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) {
        s += "/";
        s += rat_den(q).str();
    }
    return s;
}

/// Parses "a" or "a/b" with an optional leading sign. Round-trips
/// rational_to_string exactly.
inline Rational parse_rational(std::string_view token, std::size_t line = 0, std::size_t column = 0) {
    auto fail = [&](const std::string& why) -> Rational {
        throw parse_error("bad rational token '" + std::string(token) + "': " + why, line, column);
    };
    if (token.empty()) return fail("empty");

    const auto slash = token.find('/');
    std::string_view num_part = token.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view{} : token.substr(slash + 1);

    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    if (!is_integer(num_part)) return fail("numerator is not an integer");
    if (num_part.front() == '+') num_part.remove_prefix(1); // cpp_int rejects a leading '+'
    Integer num{std::string(num_part)};

    if (slash == std::string_view::npos) return Rational(num);

    if (!is_integer(den_part)) return fail("denominator is not an integer");
    if (den_part.front() == '+') den_part.remove_prefix(1);
    Integer den{std::string(den_part)};
    if (den == 0) return fail("zero denominator");
    return Rational(num, den);
}

} // namespace xdl
