#pragma once

// Shape profiles (q, r, p, p', q', case tags) and the closed-form unitarity
// thresholds, as exact three-way comparisons.
//
// Conventions (all indices 1-based):
//   sp      : q = largest index with lambda_q = lambda_1;
//             r = q extended through the run of lambda_1 - 1 (r = q if none).
//   so*     : Case 1 (lambda_1 > lambda_2): q = largest index with
//             lambda_q = lambda_2;  Case 2 (lambda_1 = lambda_2): p = largest
//             index with lambda_p = lambda_1.
//   su      : p' = leading run of lambda_1 in the left block; q' = trailing
//             run of lambda_n in the right block.
//   so(2,.) : Scalar (tail all 0), Spinor (tail all of absolute value 1/2),
//             General (lambda_2 >= 1; p = largest index with coordinates
//             2..p equal to lambda_2, the last coordinate compared by
//             absolute value).
//
// A threshold returns the comparison of its left-hand side against its
// right-hand side; LessThan/Equal/GreaterThan correspond exactly to
// Positive/Zero/Negative Dirac margin at the matching Schmid module.

#include "diracgate/dirac.hpp"

namespace diracgate {

enum class Cmp { LessThan, Equal, GreaterThan };

inline std::string to_string(Cmp c) {
    switch (c) {
        case Cmp::LessThan:    return "<";
        case Cmp::Equal:       return "=";
        case Cmp::GreaterThan: return ">";
    }
    return "?";
}

struct SpProfile {
    int q;
    int r;
    friend bool operator==(const SpProfile&, const SpProfile&) = default;
};

struct SoStarCase {
    bool case1;  // true: lambda_1 > lambda_2; false: lambda_1 = lambda_2
    int run;     // q for Case 1, p for Case 2
    friend bool operator==(const SoStarCase&, const SoStarCase&) = default;
};

struct SuProfile {
    int p_prime;
    int q_prime;
    friend bool operator==(const SuProfile&, const SuProfile&) = default;
};

enum class SoCaseKind { Scalar, Spinor, General };

struct SoCase {
    SoCaseKind kind;
    int spinor_last_sign;  // Spinor only: sign of the last coordinate (+1/-1)
    int p;                 // General only: end index of the lambda_2 run
    friend bool operator==(const SoCase&, const SoCase&) = default;
};

namespace detail {

inline void require_kind(const Family& f, FamilyKind kind, const char* op) {
    if (f.kind() != kind)
        throw Error(ErrorKind::WrongCase, std::string(op) + " does not apply to " + f.to_string());
}

inline Cmp compare(const Scalar& lhs, const Scalar& rhs) {
    if (lhs < rhs) return Cmp::LessThan;
    if (lhs > rhs) return Cmp::GreaterThan;
    return Cmp::Equal;
}

}  // namespace detail

inline SpProfile sp_profile(const Family& f, const Weight& lambda) {
    detail::require_kind(f, FamilyKind::SpReal, "sp_profile");
    validate_weight(f, lambda);
    const int n = f.coord_count();
    int q = 1;
    while (q < n && lambda[q] == lambda[0]) ++q;
    int r = q;
    while (r < n && lambda[r] == lambda[0] - 1) ++r;
    return SpProfile{q, r};
}

inline SoStarCase sostar_case(const Family& f, const Weight& lambda) {
    detail::require_kind(f, FamilyKind::SoStar, "sostar_case");
    validate_weight(f, lambda);
    const int n = f.coord_count();
    if (lambda[0] > lambda[1]) {
        int q = 2;
        while (q < n && lambda[q] == lambda[1]) ++q;
        return SoStarCase{true, q};
    }
    int p = 2;
    while (p < n && lambda[p] == lambda[0]) ++p;
    return SoStarCase{false, p};
}

inline SuProfile su_profile(const Family& f, const Weight& lambda) {
    detail::require_kind(f, FamilyKind::SU, "su_profile");
    validate_weight(f, lambda);
    const int p = f.left_block();
    const int n = f.coord_count();
    int p_prime = 1;
    while (p_prime < p && lambda[p_prime] == lambda[0]) ++p_prime;
    int q_prime = 1;
    while (q_prime < f.right_block() && lambda[n - 1 - q_prime] == lambda[n - 1]) ++q_prime;
    return SuProfile{p_prime, q_prime};
}

inline SoCase so_case(const Family& f, const Weight& lambda) {
    if (f.kind() != FamilyKind::SoEven && f.kind() != FamilyKind::SoOdd)
        throw Error(ErrorKind::WrongCase, "so_case does not apply to " + f.to_string());
    validate_weight(f, lambda);
    const int n = f.coord_count();
    const Scalar half = make_scalar(1, 2);

    bool all_zero = true, all_half = true;
    for (int i = 1; i < n; ++i) {
        const Scalar a = lambda[i] < 0 ? Scalar(-lambda[i]) : lambda[i];
        if (lambda[i] != 0) all_zero = false;
        if (a != half) all_half = false;
    }
    if (all_zero) return SoCase{SoCaseKind::Scalar, 0, 0};
    if (all_half) return SoCase{SoCaseKind::Spinor, lambda[n - 1] < 0 ? -1 : +1, 0};

    // General: extend the lambda_2 run from position 2; position n joins by
    // absolute value (its sign is a Weyl-group artifact since rho_n = 0).
    int p = 2;
    while (p < n) {
        const Scalar& next = lambda[p];
        const Scalar next_cmp = (p == n - 1 && next < 0) ? Scalar(-next) : next;
        if (next_cmp != lambda[1]) break;
        ++p;
    }
    return SoCase{SoCaseKind::General, 0, p};
}

// Comparison of the family's s_1-condition: LHS vs RHS as documented in
// the header comment of each branch.
inline Cmp basic_threshold(const Family& f, const Weight& lambda) {
    const int n = f.coord_count();
    switch (f.kind()) {
        case FamilyKind::SpReal: {
            SpProfile pr = sp_profile(f, lambda);
            // lambda_1 vs -n + (q+r)/2
            return detail::compare(lambda[0], make_scalar(-2 * n + pr.q + pr.r, 2));
        }
        case FamilyKind::SoStar: {
            SoStarCase c = sostar_case(f, lambda);
            if (c.case1)  // lambda_1 + lambda_2 vs -2n + q + 2
                return detail::compare(lambda[0] + lambda[1], Scalar(-2 * n + c.run + 2));
            // lambda_1 vs -n + p
            return detail::compare(lambda[0], Scalar(-n + c.run));
        }
        case FamilyKind::SU: {
            SuProfile pr = su_profile(f, lambda);
            // lambda_1 - lambda_n vs -n + p' + q'
            return detail::compare(lambda[0] - lambda[n - 1],
                                   Scalar(-n + pr.p_prime + pr.q_prime));
        }
        case FamilyKind::SoEven: {
            SoCase c = so_case(f, lambda);
            switch (c.kind) {
                case SoCaseKind::Scalar:  // lambda_1 vs 0
                    return detail::compare(lambda[0], Scalar(0));
                case SoCaseKind::Spinor:  // lambda_1 vs 3/2 - n
                    return detail::compare(lambda[0], make_scalar(3 - 2 * n, 2));
                case SoCaseKind::General:  // lambda_1 + lambda_2 vs 2 + p - 2n
                    return detail::compare(lambda[0] + lambda[1], Scalar(2 + c.p - 2 * n));
            }
            break;
        }
        case FamilyKind::SoOdd: {
            SoCase c = so_case(f, lambda);
            switch (c.kind) {
                case SoCaseKind::Scalar:  // lambda_1 vs 0
                    return detail::compare(lambda[0], Scalar(0));
                case SoCaseKind::Spinor:  // lambda_1 vs 1 - n
                    return detail::compare(lambda[0], Scalar(1 - n));
                case SoCaseKind::General:  // lambda_1 + lambda_2 vs 1 + p - 2n
                    return detail::compare(lambda[0] + lambda[1], Scalar(1 + c.p - 2 * n));
            }
            break;
        }
    }
    throw Error(ErrorKind::WrongCase, "unreachable");
}

// Comparison of the i-indexed s_i-condition.  Defined for sp (1 <= i <= q),
// so* Case 2 (1 <= i <= floor(p/2)), and su (1 <= i <= min(p', q')); the
// so(2,.) families have no i-schema (their second-module bound lives in
// full_condition).
inline Cmp schmid_threshold(const Family& f, const Weight& lambda, int i) {
    const int n = f.coord_count();
    switch (f.kind()) {
        case FamilyKind::SpReal: {
            SpProfile pr = sp_profile(f, lambda);
            if (i < 1 || i > pr.q)
                throw Error(ErrorKind::IndexOutOfRange,
                            "i = " + std::to_string(i) + " outside [1, q = " +
                                std::to_string(pr.q) + "]",
                            i, i);
            // lambda_1 vs -n + (r + q - i + 1)/2
            return detail::compare(lambda[0], make_scalar(-2 * n + pr.r + pr.q - i + 1, 2));
        }
        case FamilyKind::SoStar: {
            SoStarCase c = sostar_case(f, lambda);
            if (c.case1)
                throw Error(ErrorKind::WrongCase,
                            "so* Case 1 has only the basic threshold");
            if (i < 1 || i > c.run / 2)
                throw Error(ErrorKind::IndexOutOfRange,
                            "i = " + std::to_string(i) + " outside [1, floor(p/2) = " +
                                std::to_string(c.run / 2) + "]",
                            i, i);
            // lambda_1 vs -n + p - i + 1
            return detail::compare(lambda[0], Scalar(-n + c.run - i + 1));
        }
        case FamilyKind::SU: {
            SuProfile pr = su_profile(f, lambda);
            const int bound = std::min(pr.p_prime, pr.q_prime);
            if (i < 1 || i > bound)
                throw Error(ErrorKind::IndexOutOfRange,
                            "i = " + std::to_string(i) + " outside [1, min(p', q') = " +
                                std::to_string(bound) + "]",
                            i, i);
            // lambda_1 - lambda_n vs -n + p' + q' - i + 1
            return detail::compare(lambda[0] - lambda[n - 1],
                                   Scalar(-n + pr.p_prime + pr.q_prime - i + 1));
        }
        case FamilyKind::SoEven:
        case FamilyKind::SoOdd:
            throw Error(ErrorKind::WrongCase,
                        f.to_string() + " has no i-indexed thresholds; see full_condition");
    }
    throw Error(ErrorKind::WrongCase, "unreachable");
}

enum class Guarantee { GuaranteedStrict, GuaranteedNonStrict, NotGuaranteed };

inline std::string to_string(Guarantee g) {
    switch (g) {
        case Guarantee::GuaranteedStrict:    return "guaranteed-strict";
        case Guarantee::GuaranteedNonStrict: return "guaranteed-non-strict";
        case Guarantee::NotGuaranteed:       return "not-guaranteed";
    }
    return "?";
}

struct FullCondition {
    Guarantee tag;
    std::string reason;  // which theorem certifies; empty for NotGuaranteed
    friend bool operator==(const FullCondition&, const FullCondition&) = default;
};

// Whether a family theorem certifies the Dirac inequality for EVERY Schmid
// module: strictly (GuaranteedStrict), non-strictly (GuaranteedNonStrict,
// so(2,.) hypotheses holding with equality), or no claim (NotGuaranteed).
inline FullCondition full_condition(const Family& f, const Weight& lambda) {
    const int n = f.coord_count();
    auto strict_if = [](bool ok, const char* reason) {
        return ok ? FullCondition{Guarantee::GuaranteedStrict, reason}
                  : FullCondition{Guarantee::NotGuaranteed, ""};
    };
    auto graded = [](Cmp c, const char* reason) {
        if (c == Cmp::LessThan) return FullCondition{Guarantee::GuaranteedStrict, reason};
        if (c == Cmp::Equal) return FullCondition{Guarantee::GuaranteedNonStrict, reason};
        return FullCondition{Guarantee::NotGuaranteed, ""};
    };
    switch (f.kind()) {
        case FamilyKind::SpReal: {
            SpProfile pr = sp_profile(f, lambda);
            // lambda_1 < -n + (r+1)/2
            return strict_if(lambda[0] < make_scalar(-2 * n + pr.r + 1, 2),
                             "sp strict-range theorem");
        }
        case FamilyKind::SoStar: {
            SoStarCase c = sostar_case(f, lambda);
            if (c.case1)
                return strict_if(basic_threshold(f, lambda) == Cmp::LessThan,
                                 "so* case-1 theorem");
            // lambda_1 < -n + floor((p+1)/2) + 1
            return strict_if(lambda[0] < Scalar(-n + (c.run + 1) / 2 + 1),
                             "so* case-2 theorem");
        }
        case FamilyKind::SU: {
            SuProfile pr = su_profile(f, lambda);
            // lambda_1 - lambda_n < -n + max(p', q') + 1
            return strict_if(lambda[0] - lambda[n - 1] <
                                 Scalar(-n + std::max(pr.p_prime, pr.q_prime) + 1),
                             "su strict-range theorem");
        }
        case FamilyKind::SoEven: {
            SoCase c = so_case(f, lambda);
            switch (c.kind) {
                case SoCaseKind::Scalar:  // lambda_1 vs 2 - n (the s_2 bound)
                    return graded(detail::compare(lambda[0], Scalar(2 - n)),
                                  "scalar-case theorem");
                case SoCaseKind::Spinor:  // lambda_1 vs 3/2 - n
                    return graded(detail::compare(lambda[0], make_scalar(3 - 2 * n, 2)),
                                  "spinor-case theorem");
                case SoCaseKind::General:
                    return graded(basic_threshold(f, lambda), "general-case theorem");
            }
            break;
        }
        case FamilyKind::SoOdd: {
            SoCase c = so_case(f, lambda);
            switch (c.kind) {
                case SoCaseKind::Scalar:  // lambda_1 vs 3/2 - n (the s_2 bound)
                    return graded(detail::compare(lambda[0], make_scalar(3 - 2 * n, 2)),
                                  "scalar-case theorem");
                case SoCaseKind::Spinor:  // lambda_1 vs 1 - n
                    return graded(detail::compare(lambda[0], Scalar(1 - n)),
                                  "spinor-case theorem");
                case SoCaseKind::General:
                    return graded(basic_threshold(f, lambda), "general-case theorem");
            }
            break;
        }
    }
    throw Error(ErrorKind::WrongCase, "unreachable");
}

}  // namespace diracgate
