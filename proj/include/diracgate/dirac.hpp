#pragma once

// Exact Dirac margins:  margin(lambda, s) = ||(lambda-s)+ + rho||^2 - ||lambda + rho||^2.
//
// A nonnegative margin at s means the Dirac inequality holds there; strictly
// positive margins at every Schmid module certify irreducible unitarity,
// and a first failure (after all-positive lower levels) certifies
// non-unitarity.
//
// Two computation routes with identical results:
//   - exact rationals (always applicable);
//   - doubled int64 (coordinates times 2, margins times 4) when every
//     coordinate is a moderate half-integer -- used by the exhaustive suites.

#include "diracgate/schmid.hpp"
#include "diracgate/weyl.hpp"

namespace diracgate {

enum class MarginSign { Negative, Zero, Positive };

inline std::string to_string(MarginSign s) {
    switch (s) {
        case MarginSign::Negative: return "NEGATIVE";
        case MarginSign::Zero:     return "ZERO";
        case MarginSign::Positive: return "POSITIVE";
    }
    return "?";
}

struct Margin {
    Scalar value;
    MarginSign sign;
};

namespace detail {

inline MarginSign sign_of(const Scalar& v) {
    if (v > 0) return MarginSign::Positive;
    if (v < 0) return MarginSign::Negative;
    return MarginSign::Zero;
}

// Rational route: exact margin from lambda and the materialized s.
inline Scalar margin_rational(const Family& f, const Weight& lambda, const Weight& s_weight) {
    Weight diff(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) diff[i] = lambda[i] - s_weight[i];
    dominant_in_place(f.kind(), f.left_block(), diff);
    const Weight r = rho(f);
    return norm_sq_shifted_kernel(diff, r) - norm_sq_shifted_kernel(lambda, r);
}

inline std::int64_t norm2_doubled(const std::vector<std::int64_t>& v,
                                  const std::vector<std::int64_t>& rho2) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t t = v[i] + rho2[i];
        acc += t * t;
    }
    return acc;
}

// Doubled route: 4 * margin, from doubled coordinates.  scratch avoids
// reallocation in tight loops.
inline std::int64_t margin4_doubled(FamilyKind kind, int left_block,
                                    const std::vector<std::int64_t>& lambda2,
                                    const std::vector<std::int64_t>& s2,
                                    const std::vector<std::int64_t>& rho2,
                                    std::vector<std::int64_t>& scratch) {
    scratch.resize(lambda2.size());
    for (std::size_t i = 0; i < lambda2.size(); ++i) scratch[i] = lambda2[i] - s2[i];
    dominant_in_place(kind, left_block, scratch);
    return norm2_doubled(scratch, rho2) - norm2_doubled(lambda2, rho2);
}

}  // namespace detail

// Margin of lambda at the Schmid module s; lambda must be valid.
inline Margin dirac_margin(const Family& f, const Weight& lambda, const SchmidCoeffs& s) {
    validate_weight(f, lambda);
    if (!(s.family == f))
        throw Error(ErrorKind::LengthMismatch,
                    "Schmid coefficients for " + s.family.to_string() + " used with " +
                        f.to_string());
    const Weight s_weight = materialize(s);

    std::vector<std::int64_t> lambda2, s2;
    if (detail::to_doubled(lambda, lambda2) && detail::to_doubled(s_weight, s2)) {
        std::vector<std::int64_t> scratch;
        std::int64_t m4 = detail::margin4_doubled(f.kind(), f.left_block(), lambda2, s2,
                                                  detail::rho_doubled(f), scratch);
        Scalar value = Scalar(m4) / 4;
        return Margin{value, detail::sign_of(value)};
    }
    Scalar value = detail::margin_rational(f, lambda, s_weight);
    return Margin{value, detail::sign_of(value)};
}

// strict: margin > 0; non-strict: margin >= 0.
inline bool dirac_compare(const Family& f, const Weight& lambda, const SchmidCoeffs& s,
                          bool strict) {
    MarginSign sign = dirac_margin(f, lambda, s).sign;
    return strict ? sign == MarginSign::Positive : sign != MarginSign::Negative;
}

}  // namespace diracgate
