#pragma once

// Weight vectors in the epsilon-basis, their validity constraints, and the
// bit-exact text format.
//
// Validity (dominance + integrality) per family:
//   sp / so*  : w1 >= ... >= wn, pairwise differences integral
//   su        : each block descending, integral differences within blocks
//   so-even   : w2 >= ... >= w_{n-1} >= |wn|, differences among 2..n integral,
//               w1 any rational
//   so-odd    : w2 >= ... >= wn >= 0, differences among 2..n integral and
//               2*wi integral for i >= 2, w1 any rational
//
// Text: comma-separated rationals; su separates the blocks with "|",
// e.g. "1,0|0,-1".

#include "diracgate/family.hpp"
#include "diracgate/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace diracgate {

using Weight = std::vector<Scalar>;

namespace detail {

inline void check_length(const Family& f, const Weight& w) {
    if (static_cast<int>(w.size()) != f.coord_count())
        throw Error(ErrorKind::LengthMismatch,
                    "expected " + std::to_string(f.coord_count()) + " coordinates, got " +
                        std::to_string(w.size()));
}

// Descending + integral-differences check over w[first..last] (1-based,
// inclusive); reports the first violating pair.
inline void check_block(const Weight& w, int first, int last) {
    for (int i = first; i < last; ++i) {
        const Scalar& a = w[i - 1];
        const Scalar& b = w[i];
        if (a < b)
            throw Error(ErrorKind::DominanceViolation,
                        "coordinate " + std::to_string(i) + " < coordinate " +
                            std::to_string(i + 1),
                        i, i + 1);
        if (!is_integer(a - b))
            throw Error(ErrorKind::IntegralityViolation,
                        "coordinates " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " differ by a non-integer",
                        i, i + 1);
    }
}

}  // namespace detail

inline void validate_weight(const Family& f, const Weight& w) {
    detail::check_length(f, w);
    const int n = f.coord_count();
    switch (f.kind()) {
        case FamilyKind::SpReal:
        case FamilyKind::SoStar:
            detail::check_block(w, 1, n);
            break;
        case FamilyKind::SU:
            detail::check_block(w, 1, f.left_block());
            detail::check_block(w, f.left_block() + 1, n);
            break;
        case FamilyKind::SoEven: {
            detail::check_block(w, 2, n - 1);
            const Scalar last_abs = w[n - 1] < 0 ? Scalar(-w[n - 1]) : w[n - 1];
            if (w[n - 2] < last_abs)
                throw Error(ErrorKind::DominanceViolation,
                            "coordinate " + std::to_string(n - 1) + " < |coordinate " +
                                std::to_string(n) + "|",
                            n - 1, n);
            if (!is_integer(w[n - 2] - w[n - 1]))
                throw Error(ErrorKind::IntegralityViolation,
                            "coordinates " + std::to_string(n - 1) + " and " +
                                std::to_string(n) + " differ by a non-integer",
                            n - 1, n);
            break;
        }
        case FamilyKind::SoOdd: {
            for (int i = 2; i <= n; ++i)
                if (!is_half_integer(w[i - 1]))
                    throw Error(ErrorKind::IntegralityViolation,
                                "2 x coordinate " + std::to_string(i) + " is not an integer",
                                i, i);
            detail::check_block(w, 2, n);
            if (w[n - 1] < 0)
                throw Error(ErrorKind::DominanceViolation,
                            "coordinate " + std::to_string(n) + " is negative", n, n);
            break;
        }
    }
}

namespace detail {

inline std::vector<Scalar> parse_coord_list(std::string_view text) {
    std::vector<Scalar> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string_view token = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        out.push_back(parse_scalar(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

// Parses the textual form; checks coordinate counts (and, for su, the block
// split) but not dominance/integrality -- callers validate separately so
// that sweep grids can report skipped points.
inline Weight parse_weight(const Family& f, std::string_view text) {
    size_t bar = text.find('|');
    if (f.kind() == FamilyKind::SU) {
        if (bar == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "su weight needs a block separator '|'");
        if (text.find('|', bar + 1) != std::string_view::npos)
            throw Error(ErrorKind::ParseError, "more than one '|' in weight");
        Weight left = detail::parse_coord_list(text.substr(0, bar));
        Weight right = detail::parse_coord_list(text.substr(bar + 1));
        if (static_cast<int>(left.size()) != f.left_block() ||
            static_cast<int>(right.size()) != f.right_block())
            throw Error(ErrorKind::LengthMismatch,
                        "expected blocks of sizes " + std::to_string(f.left_block()) + "|" +
                            std::to_string(f.right_block()) + ", got " +
                            std::to_string(left.size()) + "|" + std::to_string(right.size()));
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
    if (bar != std::string_view::npos)
        throw Error(ErrorKind::ParseError, "'|' is only valid in su weights");
    Weight w = detail::parse_coord_list(text);
    detail::check_length(f, w);
    return w;
}

inline std::string to_string(const Family& f, const Weight& w) {
    detail::check_length(f, w);
    std::string out;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (i > 0) out += (f.kind() == FamilyKind::SU && i == f.left_block()) ? '|' : ',';
        out += to_string(w[i]);
    }
    return out;
}

}  // namespace diracgate
