#pragma once

// Exact rational scalars.  Every coordinate, norm and margin in the library
// is a Scalar; there is no floating point anywhere.  Scalar is an
// arbitrary-precision rational kept in canonical reduced form (positive
// denominator, lowest terms).
//
// Text format: "a" or "a/b" with integer a and positive integer b.
//
// For hot verification loops there is a doubled-integer companion
// representation: a vector whose coordinates are all half-integers is stored
// as 2*coordinate in int64.  Norms computed there equal 4x the rational
// values, so signs and comparisons carry over exactly.

#include "diracgate/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace diracgate {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Scalar make_scalar(long long num, long long den = 1) {
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Scalar(Int(num), Int(den));
}

inline bool is_integer(const Scalar& s) { return denominator(s) == 1; }

// True when 2*s is an integer (denominator 1 or 2 in lowest terms).
inline bool is_half_integer(const Scalar& s) {
    const Int& d = denominator(s);
    return d == 1 || d == 2;
}

// 2*s as int64, when s is a half-integer of moderate size.  The width guard
// keeps downstream squared sums far away from int64 overflow.
inline std::optional<std::int64_t> to_doubled_int(const Scalar& s) {
    if (!is_half_integer(s)) return std::nullopt;
    Int doubled = numerator(s) * (denominator(s) == 1 ? 2 : 1);
    // (2^28)^2 * 32 coordinates < 2^62, so shifted squared sums stay exact.
    constexpr std::int64_t kWidthGuard = std::int64_t(1) << 28;
    if (doubled > kWidthGuard || doubled < -kWidthGuard) return std::nullopt;
    return doubled.convert_to<std::int64_t>();
}

inline std::string to_string(const Scalar& s) {
    std::string out = numerator(s).str();
    if (!is_integer(s)) {
        out += '/';
        out += denominator(s).str();
    }
    return out;
}

namespace detail {

inline bool all_digits(std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

// Strict grammar: optional leading '-', digits, optionally "/" and positive
// digits.  Surrounding whitespace is trimmed for CLI friendliness.
inline Scalar parse_scalar(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos)
        throw Error(ErrorKind::ParseError, "empty rational");
    text = text.substr(b, e - b + 1);

    bool negative = false;
    if (text.front() == '-') { negative = true; text.remove_prefix(1); }

    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (size_t slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    if (!detail::all_digits(num_part) || !detail::all_digits(den_part))
        throw Error(ErrorKind::ParseError,
                    "bad rational '" + std::string(text) + "' (expected \"a\" or \"a/b\")");
    Int num{std::string(num_part)};
    Int den{std::string(den_part)};
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    if (negative) num = -num;
    return Scalar(num, den);
}

}  // namespace diracgate
