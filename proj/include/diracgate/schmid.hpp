#pragma once

// Basic Schmid modules, general Schmid modules as nonnegative-integer
// coefficient vectors over the basic ones, the level function, and
// level-ordered enumeration.
//
// Basic modules per family (weights in the epsilon-basis):
//   sp(2n,R)   : s_i = (2,...,2,0,...,0)            (i twos),      1 <= i <= n
//   so*(2n)    : s_i = (1,...,1,0,...,0)            (2i ones),     1 <= i <= floor(n/2)
//   su(p,q)    : s_i = (1,..,1,0,..,0|0,..,0,-1,..,-1) (i on each side), 1 <= i <= p
//   so(2,2n-2) : s_1 = (1,1,0,...,0), s_2 = (2,0,...,0)
//   so(2,2n-1) : s_1 = (1,1,0,...,0), s_2 = (2,0,...,0)
//
// For the so families a coefficient vector (a, b) materializes to
// s_{a,b} = (2b+a, a, 0, ..., 0).
//
// Level = the symmetric-algebra degree at which the K-type first occurs:
// sum_i i * coeffs_i for every family (for so families this is a + 2b).
//
// Text format: "c1,c2,..." coefficient vector, or "weight:<weight-text>" for
// a materialized Schmid weight that is decomposed back into coefficients.

#include "diracgate/weight.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace diracgate {

struct SchmidCoeffs {
    Family family;
    std::vector<int> coeffs;  // length = family.basic_count(), entries >= 0

    friend bool operator==(const SchmidCoeffs& a, const SchmidCoeffs& b) = default;
};

namespace detail {

inline void check_coeffs(const SchmidCoeffs& sc) {
    if (static_cast<int>(sc.coeffs.size()) != sc.family.basic_count())
        throw Error(ErrorKind::LengthMismatch,
                    "expected " + std::to_string(sc.family.basic_count()) +
                        " Schmid coefficients, got " + std::to_string(sc.coeffs.size()));
    for (int i = 0; i < static_cast<int>(sc.coeffs.size()); ++i)
        if (sc.coeffs[i] < 0)
            throw Error(ErrorKind::DominanceViolation,
                        "Schmid coefficient " + std::to_string(i + 1) + " is negative", i + 1,
                        i + 1);
}

}  // namespace detail

// The trivial K-type s = 0.
inline SchmidCoeffs schmid_zero(const Family& f) {
    return SchmidCoeffs{f, std::vector<int>(f.basic_count(), 0)};
}

// Weight of the i-th basic Schmid module (1-based).
inline Weight basic_schmid(const Family& f, int i) {
    if (i < 1 || i > f.basic_count())
        throw Error(ErrorKind::IndexOutOfRange,
                    "basic Schmid index " + std::to_string(i) + " outside [1, " +
                        std::to_string(f.basic_count()) + "] for " + f.to_string(),
                    i, i);
    const int n = f.coord_count();
    Weight w(n, Scalar(0));
    switch (f.kind()) {
        case FamilyKind::SpReal:
            for (int j = 0; j < i; ++j) w[j] = Scalar(2);
            break;
        case FamilyKind::SoStar:
            for (int j = 0; j < 2 * i; ++j) w[j] = Scalar(1);
            break;
        case FamilyKind::SU:
            for (int j = 0; j < i; ++j) w[j] = Scalar(1);
            for (int j = 0; j < i; ++j) w[n - 1 - j] = Scalar(-1);
            break;
        case FamilyKind::SoEven:
        case FamilyKind::SoOdd:
            if (i == 1) { w[0] = Scalar(1); w[1] = Scalar(1); }
            else        { w[0] = Scalar(2); }
            break;
    }
    return w;
}

// Sum_i coeffs_i * s_i as a Weight.
inline Weight materialize(const SchmidCoeffs& sc) {
    detail::check_coeffs(sc);
    Weight w(sc.family.coord_count(), Scalar(0));
    for (int i = 0; i < static_cast<int>(sc.coeffs.size()); ++i) {
        if (sc.coeffs[i] == 0) continue;
        Weight s = basic_schmid(sc.family, i + 1);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += sc.coeffs[i] * s[j];
    }
    return w;
}

inline int level(const SchmidCoeffs& sc) {
    detail::check_coeffs(sc);
    int acc = 0;
    for (int i = 0; i < static_cast<int>(sc.coeffs.size()); ++i)
        acc += (i + 1) * sc.coeffs[i];
    return acc;
}

namespace detail {

inline void schmid_level_rec(const Family& f, int i, int m, int remaining, std::vector<int>& cur,
                             std::vector<SchmidCoeffs>& out) {
    if (i == m) {
        if (remaining % m == 0) {
            cur[m - 1] = remaining / m;
            out.push_back(SchmidCoeffs{f, cur});
            cur[m - 1] = 0;
        }
        return;
    }
    for (int c = remaining / i; c >= 0; --c) {
        cur[i - 1] = c;
        schmid_level_rec(f, i + 1, m, remaining - c * i, cur, out);
    }
    cur[i - 1] = 0;
}

}  // namespace detail

// All coefficient vectors of the given level, largest leading coefficients
// first (descending lexicographic).
inline std::vector<SchmidCoeffs> schmid_at_level(const Family& f, int lvl) {
    std::vector<SchmidCoeffs> out;
    if (lvl < 0) return out;
    if (lvl == 0) { out.push_back(schmid_zero(f)); return out; }
    std::vector<int> cur(f.basic_count(), 0);
    detail::schmid_level_rec(f, 1, f.basic_count(), lvl, cur, out);
    return out;
}

// Every nonzero coefficient vector with level <= cap, in nondecreasing level
// order; within a level, descending lexicographic.
inline std::vector<SchmidCoeffs> enumerate_by_level(const Family& f, int cap) {
    std::vector<SchmidCoeffs> out;
    for (int lvl = 1; lvl <= cap; ++lvl) {
        std::vector<SchmidCoeffs> at = schmid_at_level(f, lvl);
        out.insert(out.end(), at.begin(), at.end());
    }
    return out;
}

namespace detail {

// Decomposes a materialized Schmid weight back into coefficients, rejecting
// weights outside the family's Schmid shape.
inline SchmidCoeffs decompose_schmid(const Family& f, const Weight& w) {
    check_length(f, w);
    const int n = f.coord_count();
    auto reject = [&](const std::string& why) -> Error {
        return Error(ErrorKind::ParseError,
                     "weight " + to_string(f, w) + " is not a Schmid weight for " +
                         f.to_string() + ": " + why);
    };
    auto as_nonneg_int = [&](const Scalar& s) -> long long {
        if (!is_integer(s) || s < 0) throw reject("coordinate " + to_string(s) + " is not a nonnegative integer");
        Int num = numerator(s);
        if (num > 1'000'000'000) throw reject("coordinate too large");
        return num.convert_to<long long>();
    };
    std::vector<int> coeffs(f.basic_count(), 0);
    switch (f.kind()) {
        case FamilyKind::SpReal: {
            // (2b1, ..., 2bn) with b descending >= 0; c_i = b_i - b_{i+1}.
            std::vector<long long> b(n);
            for (int i = 0; i < n; ++i) {
                long long v = as_nonneg_int(w[i]);
                if (v % 2 != 0) throw reject("coordinates must be even");
                b[i] = v / 2;
            }
            for (int i = 0; i + 1 < n; ++i)
                if (b[i] < b[i + 1]) throw reject("coordinates must be descending");
            for (int i = 0; i < n; ++i)
                coeffs[i] = static_cast<int>(b[i] - (i + 1 < n ? b[i + 1] : 0));
            break;
        }
        case FamilyKind::SoStar: {
            // (b1, b1, b2, b2, ...) doubled pairs descending; odd tail is 0.
            const int m = f.basic_count();
            std::vector<long long> b(m);
            for (int j = 0; j < m; ++j) {
                long long v1 = as_nonneg_int(w[2 * j]);
                long long v2 = as_nonneg_int(w[2 * j + 1]);
                if (v1 != v2) throw reject("coordinates must come in equal pairs");
                b[j] = v1;
            }
            if (n % 2 == 1 && w[n - 1] != 0) throw reject("last coordinate must be 0");
            for (int j = 0; j + 1 < m; ++j)
                if (b[j] < b[j + 1]) throw reject("pairs must be descending");
            for (int j = 0; j < m; ++j)
                coeffs[j] = static_cast<int>(b[j] - (j + 1 < m ? b[j + 1] : 0));
            break;
        }
        case FamilyKind::SU: {
            // (b1..bp | 0..0, -bp..-b1) with b descending >= 0.
            const int p = f.left_block();
            std::vector<long long> b(p);
            for (int i = 0; i < p; ++i) b[i] = as_nonneg_int(w[i]);
            for (int i = 0; i + 1 < p; ++i)
                if (b[i] < b[i + 1]) throw reject("left block must be descending");
            for (int i = 0; i < f.right_block(); ++i) {
                // Right-block entry at distance d from the end mirrors -b_d.
                int d = f.right_block() - i;  // n - (p + i)
                Scalar expected = d <= p ? Scalar(-b[d - 1]) : Scalar(0);
                if (w[p + i] != expected) throw reject("right block must mirror the left block");
            }
            for (int i = 0; i < p; ++i)
                coeffs[i] = static_cast<int>(b[i] - (i + 1 < p ? b[i + 1] : 0));
            break;
        }
        case FamilyKind::SoEven:
        case FamilyKind::SoOdd: {
            // (2b+a, a, 0, ..., 0).
            for (int i = 2; i < n; ++i)
                if (w[i] != 0) throw reject("coordinates 3.." + std::to_string(n) + " must be 0");
            long long a = as_nonneg_int(w[1]);
            long long first = as_nonneg_int(w[0]);
            if (first < a || (first - a) % 2 != 0)
                throw reject("first coordinate must be a + an even nonnegative amount");
            coeffs[0] = static_cast<int>(a);
            coeffs[1] = static_cast<int>((first - a) / 2);
            break;
        }
    }
    return SchmidCoeffs{f, coeffs};
}

}  // namespace detail

// Parses "c1,c2,..." (coefficient vector over the basic modules) or
// "weight:<weight-text>" (materialized Schmid weight, decomposed).
inline SchmidCoeffs parse_schmid(const Family& f, std::string_view text) {
    constexpr std::string_view kWeightPrefix = "weight:";
    if (text.substr(0, kWeightPrefix.size()) == kWeightPrefix)
        return detail::decompose_schmid(f, parse_weight(f, text.substr(kWeightPrefix.size())));

    std::vector<int> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        if (!detail::all_digits(token) || token.size() > 9)
            throw Error(ErrorKind::ParseError,
                        "bad Schmid coefficient '" + std::string(token) +
                            "' (expected a nonnegative integer)");
        int value = 0;
        for (char c : token) value = value * 10 + (c - '0');
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    SchmidCoeffs sc{f, std::move(coeffs)};
    detail::check_coeffs(sc);
    return sc;
}

// "(c1,c2,...)"
inline std::string to_string(const SchmidCoeffs& sc) {
    std::string out = "(";
    for (std::size_t i = 0; i < sc.coeffs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(sc.coeffs[i]);
    }
    out += ')';
    return out;
}

}  // namespace diracgate
