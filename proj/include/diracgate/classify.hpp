#pragma once

// The classification engine: scan Schmid modules in level order and decide
// unitary-irreducible / not-unitary / boundary / inconclusive; cross-check
// closed-form thresholds against brute-force margins; verify the two
// norm-rearrangement lemmas on explicit instances.
//
// Classification semantics:
//   - a theorem guarantee (full_condition = GuaranteedStrict) certifies the
//     strict Dirac inequality for ALL Schmid modules -> UnitaryIrreducible;
//   - otherwise scan levels 1..cap; at the first level carrying any
//     non-positive margin, a negative margin wins (NotUnitary, witnessed by
//     the first negative module in enumeration order), else the first zero
//     margin is returned as Boundary.  A strictly-failing module whose
//     strictly-lower levels are all strictly positive certifies
//     non-unitarity; equality certifies nothing and is reported as Boundary.
//   - all levels positive up to cap -> InconclusiveAtCap (a finite scan
//     cannot certify "for all s").

#include "diracgate/criteria.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace diracgate {

enum class VerdictKind { UnitaryIrreducible, NotUnitary, Boundary, InconclusiveAtCap };

inline std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::UnitaryIrreducible: return "unitary-irreducible";
        case VerdictKind::NotUnitary:         return "not-unitary";
        case VerdictKind::Boundary:           return "boundary";
        case VerdictKind::InconclusiveAtCap:  return "inconclusive";
    }
    return "?";
}

struct Verdict {
    VerdictKind kind;
    std::optional<SchmidCoeffs> witness;   // NotUnitary / Boundary only
    std::optional<Scalar> witness_margin;  // margin at the witness
    int cap;
    FullCondition guarantee;
};

// Level cap used when none is requested: the DIRAC_GATE_CAP environment
// variable (a positive integer) when set and well-formed, else 12.
inline int default_cap() {
    if (const char* env = std::getenv("DIRAC_GATE_CAP")) {
        std::string_view t(env);
        if (detail::all_digits(t) && t.size() <= 3) {
            int value = 0;
            for (char c : t) value = value * 10 + (c - '0');
            if (value >= 1) return value;
        }
    }
    return 12;
}

namespace detail {

// Chooses the margin route once per lambda and reuses buffers across the
// many Schmid modules of a level scan.
class MarginEvaluator {
  public:
    MarginEvaluator(const Family& f, const Weight& lambda)
        : family_(f), lambda_(lambda), rho_(rho(f)) {
        if (to_doubled(lambda, lambda2_)) {
            doubled_ = true;
            rho2_ = rho_doubled(f);
        }
    }

    Margin margin(const SchmidCoeffs& s) {
        const Weight s_weight = materialize(s);
        if (doubled_) {
            std::vector<std::int64_t> s2;
            if (to_doubled(s_weight, s2)) {
                std::int64_t m4 = margin4_doubled(family_.kind(), family_.left_block(), lambda2_,
                                                  s2, rho2_, scratch_);
                Scalar value = Scalar(m4) / 4;
                return Margin{value, sign_of(value)};
            }
        }
        Scalar value = margin_rational(family_, lambda_, s_weight);
        return Margin{value, sign_of(value)};
    }

  private:
    Family family_;
    Weight lambda_;
    Weight rho_;
    bool doubled_ = false;
    std::vector<std::int64_t> lambda2_, rho2_, scratch_;
};

}  // namespace detail

inline Verdict classify(const Family& f, const Weight& lambda, int cap) {
    if (cap < 1)
        throw Error(ErrorKind::IndexOutOfRange, "cap must be >= 1, got " + std::to_string(cap));
    validate_weight(f, lambda);

    FullCondition fc = full_condition(f, lambda);
    if (fc.tag == Guarantee::GuaranteedStrict)
        return Verdict{VerdictKind::UnitaryIrreducible, std::nullopt, std::nullopt, cap, fc};

    detail::MarginEvaluator eval(f, lambda);
    for (int lvl = 1; lvl <= cap; ++lvl) {
        std::optional<SchmidCoeffs> first_zero;
        std::optional<Scalar> zero_value;
        for (const SchmidCoeffs& s : schmid_at_level(f, lvl)) {
            Margin m = eval.margin(s);
            if (m.sign == MarginSign::Negative)
                return Verdict{VerdictKind::NotUnitary, s, m.value, cap, fc};
            if (m.sign == MarginSign::Zero && !first_zero) {
                first_zero = s;
                zero_value = m.value;
            }
        }
        if (first_zero)
            return Verdict{VerdictKind::Boundary, first_zero, zero_value, cap, fc};
    }
    return Verdict{VerdictKind::InconclusiveAtCap, std::nullopt, std::nullopt, cap, fc};
}

inline Verdict classify(const Family& f, const Weight& lambda) {
    return classify(f, lambda, default_cap());
}

struct Mismatch {
    std::string check;   // which closed form disagreed
    SchmidCoeffs s;      // the offending Schmid module
    std::string detail;  // expected vs observed
};

namespace detail {

inline MarginSign expected_sign(Cmp c) {
    // LHS < RHS  <=>  strict inequality holds  <=>  positive margin.
    switch (c) {
        case Cmp::LessThan:    return MarginSign::Positive;
        case Cmp::Equal:       return MarginSign::Zero;
        case Cmp::GreaterThan: return MarginSign::Negative;
    }
    return MarginSign::Zero;
}

inline SchmidCoeffs unit_coeffs(const Family& f, int i) {
    SchmidCoeffs sc = schmid_zero(f);
    sc.coeffs[i - 1] = 1;
    return sc;
}

}  // namespace detail

// Compares every closed-form threshold whose Schmid module has level <= cap
// against the brute-force margin sign, and checks that full_condition
// guarantees are honored by every margin up to cap.  Empty result = all
// claims verified on this lambda.
inline std::vector<Mismatch> crosscheck(const Family& f, const Weight& lambda, int cap) {
    validate_weight(f, lambda);
    std::vector<Mismatch> out;
    detail::MarginEvaluator eval(f, lambda);

    auto record = [&](const std::string& check, const SchmidCoeffs& s, MarginSign want,
                      MarginSign got) {
        if (want != got)
            out.push_back(Mismatch{check, s,
                                   "threshold predicts " + to_string(want) + " margin, got " +
                                       to_string(got)});
    };

    // Basic threshold <-> margin at s_1 (level 1).
    if (cap >= 1) {
        SchmidCoeffs s1 = detail::unit_coeffs(f, 1);
        record("basic-threshold", s1, detail::expected_sign(basic_threshold(f, lambda)),
               eval.margin(s1).sign);
    }

    // i-indexed thresholds <-> margins at s_i (level i).
    int max_i = 0;
    switch (f.kind()) {
        case FamilyKind::SpReal: max_i = sp_profile(f, lambda).q; break;
        case FamilyKind::SoStar: {
            SoStarCase c = sostar_case(f, lambda);
            max_i = c.case1 ? 0 : c.run / 2;
            break;
        }
        case FamilyKind::SU: {
            SuProfile pr = su_profile(f, lambda);
            max_i = std::min(pr.p_prime, pr.q_prime);
            break;
        }
        case FamilyKind::SoEven:
        case FamilyKind::SoOdd: max_i = 0; break;
    }
    for (int i = 1; i <= std::min(max_i, cap); ++i) {
        SchmidCoeffs si = detail::unit_coeffs(f, i);
        record("schmid-threshold i=" + std::to_string(i), si,
               detail::expected_sign(schmid_threshold(f, lambda, i)), eval.margin(si).sign);
    }

    // Guarantee <-> margins of every module up to cap.
    FullCondition fc = full_condition(f, lambda);
    if (fc.tag != Guarantee::NotGuaranteed) {
        for (const SchmidCoeffs& s : enumerate_by_level(f, cap)) {
            MarginSign got = eval.margin(s).sign;
            bool ok = fc.tag == Guarantee::GuaranteedStrict ? got == MarginSign::Positive
                                                            : got != MarginSign::Negative;
            if (!ok)
                out.push_back(Mismatch{"full-condition", s,
                                       to_string(fc.tag) + " (" + fc.reason + ") violated by " +
                                           to_string(got) + " margin"});
        }
    }
    return out;
}

// ---------------------------------------------------------------- lemmas

struct BlockShape {
    int u;     // prefix length, >= 1
    int s;     // length of the (x+1)-block, >= 1
    int t;     // length of the x-block, >= 1
    Scalar x;  // block value
};

namespace detail {

inline void require_hypothesis(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::HypothesisViolated, what);
}

inline void require_strictly_decreasing(const Weight& w, const char* name) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        require_hypothesis(w[i] > w[i + 1],
                           std::string(name) + " must be strictly decreasing at position " +
                               std::to_string(i + 1));
}

}  // namespace detail

// Rearrangement lemma, parts 1 and 2: for strictly decreasing mu, nu agreeing
// on a run at (u, v), moving the v-th coordinate to place u (part 1) or the
// u-th to place v (part 2) strictly lowers ||mu+rho||^2 - ||nu+rho||^2.
// Returns whether the strict inequality holds (an always-true oracle).
inline bool verify_red_sp(int part, const Family& rho_source, const Weight& mu, const Weight& nu,
                          int u, int v) {
    if (part != 1 && part != 2)
        throw Error(ErrorKind::IndexOutOfRange,
                    "this form takes part 1 or 2, got " + std::to_string(part));
    detail::check_length(rho_source, mu);
    detail::check_length(rho_source, nu);
    const int n = rho_source.coord_count();
    detail::require_strictly_decreasing(mu, "mu");
    detail::require_strictly_decreasing(nu, "nu");
    detail::require_hypothesis(1 <= u && u < v && v <= n,
                               "need 1 <= u < v <= n, got u = " + std::to_string(u) +
                                   ", v = " + std::to_string(v));
    if (part == 1) {
        for (int j = u; j <= v - 1; ++j)
            detail::require_hypothesis(mu[j - 1] == nu[j - 1],
                                       "mu and nu must agree at positions u..v-1");
        detail::require_hypothesis(mu[v - 1] < nu[v - 1], "need mu_v < nu_v");
    } else {
        detail::require_hypothesis(mu[u - 1] > nu[u - 1], "need mu_u > nu_u");
        for (int j = u + 1; j <= v; ++j)
            detail::require_hypothesis(mu[j - 1] == nu[j - 1],
                                       "mu and nu must agree at positions u+1..v");
    }

    Weight mu_p = mu, nu_p = nu;
    if (part == 1) {
        // v-th coordinate to place u, run shifted right.
        std::rotate(mu_p.begin() + (u - 1), mu_p.begin() + (v - 1), mu_p.begin() + v);
        std::rotate(nu_p.begin() + (u - 1), nu_p.begin() + (v - 1), nu_p.begin() + v);
    } else {
        // u-th coordinate to place v, run shifted left.
        std::rotate(mu_p.begin() + (u - 1), mu_p.begin() + u, mu_p.begin() + v);
        std::rotate(nu_p.begin() + (u - 1), nu_p.begin() + u, nu_p.begin() + v);
    }

    const Weight r = rho(rho_source);
    Scalar lhs = detail::norm_sq_shifted_kernel(mu, r) - detail::norm_sq_shifted_kernel(nu, r);
    Scalar rhs =
        detail::norm_sq_shifted_kernel(mu_p, r) - detail::norm_sq_shifted_kernel(nu_p, r);
    return lhs > rhs;
}

// Rearrangement lemma, part 3: swapping an adjacent (x+1)-block of length s
// with an x-block of length t strictly lowers ||mu+rho||^2.
inline bool verify_red_sp(int part, const Family& rho_source, const Weight& mu,
                          const BlockShape& shape) {
    if (part != 3)
        throw Error(ErrorKind::IndexOutOfRange,
                    "this form takes part 3, got " + std::to_string(part));
    detail::check_length(rho_source, mu);
    const int n = rho_source.coord_count();
    detail::require_hypothesis(shape.s >= 1 && shape.t >= 1, "need s, t >= 1");
    detail::require_hypothesis(1 <= shape.u && shape.u + shape.s + shape.t <= n,
                               "need 1 <= u and u + s + t <= n");
    for (int j = 0; j < shape.s; ++j)
        detail::require_hypothesis(mu[shape.u + j] == shape.x + 1,
                                   "positions u+1..u+s must equal x + 1");
    for (int j = 0; j < shape.t; ++j)
        detail::require_hypothesis(mu[shape.u + shape.s + j] == shape.x,
                                   "positions u+s+1..u+s+t must equal x");

    Weight mu_p = mu;
    for (int j = 0; j < shape.t; ++j) mu_p[shape.u + j] = shape.x;
    for (int j = 0; j < shape.s; ++j) mu_p[shape.u + shape.t + j] = shape.x + 1;

    const Weight r = rho(rho_source);
    return detail::norm_sq_shifted_kernel(mu, r) > detail::norm_sq_shifted_kernel(mu_p, r);
}

// Orbit lemma: the dominant pairing minimizes the shifted norm over the two
// orbits — for all x in orbit(mu), y in orbit(nu),
// ||(x-y)+ + rho||^2 >= ||(mu-nu)+ + rho||^2.  Exhaustive check.
inline bool verify_gen_prv(const Family& f, const Weight& mu, const Weight& nu,
                           std::uint64_t guard = kDefaultOrbitGuard) {
    validate_weight(f, mu);
    validate_weight(f, nu);
    const int n = f.coord_count();

    std::vector<std::int64_t> mu2, nu2;
    if (detail::to_doubled(mu, mu2) && detail::to_doubled(nu, nu2)) {
        auto orbit_mu = detail::orbit_kernel(f.kind(), f.left_block(), mu2, guard);
        auto orbit_nu = detail::orbit_kernel(f.kind(), f.left_block(), nu2, guard);
        const auto rho2 = detail::rho_doubled(f);
        std::vector<std::int64_t> diff(n);
        for (int i = 0; i < n; ++i) diff[i] = mu2[i] - nu2[i];
        detail::dominant_in_place(f.kind(), f.left_block(), diff);
        const std::int64_t base = detail::norm2_doubled(diff, rho2);
        for (const auto& x : orbit_mu)
            for (const auto& y : orbit_nu) {
                for (int i = 0; i < n; ++i) diff[i] = x[i] - y[i];
                detail::dominant_in_place(f.kind(), f.left_block(), diff);
                if (detail::norm2_doubled(diff, rho2) < base) return false;
            }
        return true;
    }

    auto orbit_mu = weyl_orbit(f, mu, guard);
    auto orbit_nu = weyl_orbit(f, nu, guard);
    const Weight r = rho(f);
    Weight diff(n);
    for (int i = 0; i < n; ++i) diff[i] = mu[i] - nu[i];
    detail::dominant_in_place(f.kind(), f.left_block(), diff);
    const Scalar base = detail::norm_sq_shifted_kernel(diff, r);
    for (const auto& x : orbit_mu)
        for (const auto& y : orbit_nu) {
            for (int i = 0; i < n; ++i) diff[i] = x[i] - y[i];
            detail::dominant_in_place(f.kind(), f.left_block(), diff);
            if (detail::norm_sq_shifted_kernel(diff, r) < base) return false;
        }
    return true;
}

}  // namespace diracgate
