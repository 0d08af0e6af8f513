// Exact Dirac margins: pinned values, closed-form oracles per family, and
// agreement between the rational and the doubled-integer evaluation routes.
#include "diracgate/dirac.hpp"
#include "diracgate/criteria.hpp"
#include "diracgate/verify.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace diracgate;

static Weight w_of(std::initializer_list<int> xs) {
    Weight w;
    for (int x : xs) w.push_back(Scalar(x));
    return w;
}

static Margin margin_at(const Family& f, const Weight& lam, std::vector<int> coeffs) {
    return dirac_margin(f, lam, SchmidCoeffs{f, std::move(coeffs)});
}

TEST_CASE("margin pins", "[dirac]") {
    CHECK(margin_at(Family::sp_real(1), w_of({-1}), {1}).value == Scalar(4));
    CHECK(margin_at(Family::sp_real(1), w_of({-1}), {1}).sign == MarginSign::Positive);
    CHECK(margin_at(Family::sp_real(2), w_of({0, 0}), {1, 0}).value == Scalar(0));
    CHECK(margin_at(Family::sp_real(2), w_of({0, 0}), {1, 0}).sign == MarginSign::Zero);
    CHECK(margin_at(Family::so_even(4), w_of({-3, 0, 0, 0}), {0, 1}).value == Scalar(4));
    CHECK(margin_at(Family::su(1, 1), w_of({0, 0}), {1}).value == Scalar(0));
    // margin at the zero module is identically zero
    CHECK(margin_at(Family::so_star(3), w_of({5, 4, 3}), {0}).value == Scalar(0));
}

TEST_CASE("margin with non-half-integer coordinates uses the rational route", "[dirac]") {
    Family f = Family::so_even(4);
    Weight lam{make_scalar(1, 3), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(margin_at(f, lam, {1, 0}).value == make_scalar(-2, 3));  // -2 lambda_1
    Weight lam2{make_scalar(-22, 7), Scalar(1), Scalar(1), Scalar(-1)};
    // general-case closed form at s1: -2(l1+l2) + 2(2+p-2n), p = 4 here
    CHECK(margin_at(f, lam2, {1, 0}).value == Scalar(-2) * (lam2[0] + 1) + Scalar(2 * (2 + 4 - 8)));
}

TEST_CASE("dirac_margin input contracts", "[dirac]") {
    CHECK_THROWS_MATCHES(margin_at(Family::sp_real(2), w_of({0, 1}), {1, 0}), Error,
                         ErrorKindIs(ErrorKind::DominanceViolation));
    // Schmid coordinates must belong to the same family
    CHECK_THROWS_MATCHES(
        dirac_margin(Family::sp_real(2), w_of({0, 0}), SchmidCoeffs{Family::so_star(2), {1}}),
        Error, ErrorKindIs(ErrorKind::LengthMismatch));
}

TEST_CASE("sp margin closed form on the threshold grid", "[dirac]") {
    for (int n : {1, 2, 3}) {
        Family f = Family::sp_real(n);
        for_each_grid_weight(f, [&](const Weight& lam) {
            SpProfile prof = sp_profile(f, lam);
            for (int i = 1; i <= prof.q; ++i) {
                Scalar expected = Scalar(-2 * i) *
                                  (2 * lam[0] + Scalar(2 * n - prof.q - prof.r + i - 1));
                CHECK(margin_at(f, lam, detail::unit_coeffs(f, i).coeffs).value == expected);
            }
        });
    }
}

TEST_CASE("so* margin closed forms", "[dirac]") {
    for (int n : {2, 3, 4}) {
        Family f = Family::so_star(n);
        for_each_grid_weight(f, [&](const Weight& lam) {
            SoStarCase c = sostar_case(f, lam);
            if (c.case1) {
                Scalar expected = Scalar(-2) * (lam[0] + lam[1] + Scalar(2 * n - c.run - 2));
                CHECK(margin_at(f, lam, detail::unit_coeffs(f, 1).coeffs).value == expected);
            } else {
                for (int i = 1; i <= c.run / 2; ++i) {
                    Scalar expected = Scalar(-4 * i) * (lam[0] + Scalar(n - c.run + i - 1));
                    CHECK(margin_at(f, lam, detail::unit_coeffs(f, i).coeffs).value == expected);
                }
            }
        });
    }
}

TEST_CASE("su margin closed form", "[dirac]") {
    for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 2}}) {
        Family f = Family::su(p, q);
        const int n = p + q;
        for_each_grid_weight(f, [&](const Weight& lam) {
            SuProfile prof = su_profile(f, lam);
            for (int i = 1; i <= std::min(prof.p_prime, prof.q_prime); ++i) {
                Scalar expected =
                    Scalar(-2 * i) *
                    (lam[0] - lam[n - 1] + Scalar(n + i - 1 - prof.p_prime - prof.q_prime));
                CHECK(margin_at(f, lam, detail::unit_coeffs(f, i).coeffs).value == expected);
            }
        });
    }
}

TEST_CASE("so margin closed forms by case", "[dirac]") {
    for (const char* fam : {"so-even:4", "so-even:5", "so-odd:3", "so-odd:4"}) {
        Family f = Family::parse(fam);
        const int n = f.coord_count();
        const bool even = f.kind() == FamilyKind::SoEven;
        for_each_grid_weight(f, [&](const Weight& lam) {
            SoCase c = so_case(f, lam);
            Scalar s1 = margin_at(f, lam, {1, 0}).value;
            Scalar s2 = margin_at(f, lam, {0, 1}).value;
            switch (c.kind) {
                case SoCaseKind::Scalar:
                    CHECK(s1 == Scalar(-2) * lam[0]);
                    CHECK(s2 == Scalar(-4) * (lam[0] + Scalar(n - 2)) -
                                    (even ? Scalar(0) : Scalar(2)));
                    break;
                case SoCaseKind::Spinor:
                    CHECK(s1 == Scalar(-2) * lam[0] - Scalar(even ? 2 * n - 3 : 2 * n - 2));
                    break;
                case SoCaseKind::General:
                    CHECK(s1 == Scalar(-2) * (lam[0] + lam[1]) +
                                    Scalar(2 * ((even ? 2 : 1) + c.p - 2 * n)));
                    break;
            }
        });
    }
}

TEST_CASE("rational and doubled routes agree", "[dirac]") {
    std::mt19937_64 rng(314);
    for (const char* fam : {"sp:4", "so*:4", "su:2,3", "so-even:5", "so-odd:4"}) {
        Family f = Family::parse(fam);
        auto modules = enumerate_by_level(f, 5);
        for (int t = 0; t < 400; ++t) {
            Weight lam = random_valid_weight(f, rng);
            for (const SchmidCoeffs& sc : modules) {
                Margin m = dirac_margin(f, lam, sc);  // picks the doubled route
                Scalar direct = detail::margin_rational(f, lam, materialize(sc));
                CHECK(m.value == direct);
                CHECK(m.sign == detail::sign_of(direct));
            }
        }
    }
}
