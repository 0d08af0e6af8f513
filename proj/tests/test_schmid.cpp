// Schmid-module coordinates: basic weights, materialization, levels,
// level-ordered enumeration, and text parsing (coefficients and weight form).
#include "diracgate/schmid.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace diracgate;

static Weight w_of(std::initializer_list<int> xs) {
    Weight w;
    for (int x : xs) w.push_back(Scalar(x));
    return w;
}

TEST_CASE("basic Schmid weights per family", "[schmid]") {
    // sp: s_i = (2 x i, 0...)
    CHECK(materialize({Family::sp_real(4), {0, 1, 0, 0}}) == w_of({2, 2, 0, 0}));
    CHECK(materialize({Family::sp_real(4), {0, 0, 0, 1}}) == w_of({2, 2, 2, 2}));
    // so*: s_i = (1 x 2i, 0...)
    CHECK(basic_schmid(Family::so_star(5), 1) == w_of({1, 1, 0, 0, 0}));
    CHECK(basic_schmid(Family::so_star(5), 2) == w_of({1, 1, 1, 1, 0}));
    // su: s_i = (1 x i | 0..., -1 x i), the -1s at the END of the right block
    CHECK(basic_schmid(Family::su(2, 3), 1) == w_of({1, 0, 0, 0, -1}));
    CHECK(basic_schmid(Family::su(2, 3), 2) == w_of({1, 1, 0, -1, -1}));
    // so families: s_1 = (1,1,0...), s_2 = (2,0,...)
    CHECK(basic_schmid(Family::so_even(5), 1) == w_of({1, 1, 0, 0, 0}));
    CHECK(basic_schmid(Family::so_even(5), 2) == w_of({2, 0, 0, 0, 0}));
    CHECK(basic_schmid(Family::so_odd(3), 2) == w_of({2, 0, 0}));

    CHECK_THROWS_MATCHES(basic_schmid(Family::so_star(5), 3), Error,
                         ErrorKindIs(ErrorKind::IndexOutOfRange));
    CHECK_THROWS_MATCHES(basic_schmid(Family::sp_real(3), 0), Error,
                         ErrorKindIs(ErrorKind::IndexOutOfRange));
}

TEST_CASE("materialize pins and linearity", "[schmid]") {
    CHECK(materialize({Family::sp_real(4), {1, 1, 0, 0}}) == w_of({4, 2, 0, 0}));
    CHECK(materialize({Family::so_even(4), {1, 1}}) == w_of({3, 1, 0, 0}));
    CHECK(materialize({Family::su(2, 3), {2, 1}}) == w_of({3, 1, 0, -1, -3}));
    CHECK(materialize(schmid_zero(Family::so_odd(4))) == w_of({0, 0, 0, 0}));

    std::mt19937_64 rng(5);
    for (const char* fam : {"sp:3", "so*:4", "su:2,2", "so-even:4", "so-odd:3"}) {
        Family f = Family::parse(fam);
        for (int t = 0; t < 100; ++t) {
            SchmidCoeffs x{f, {}}, y{f, {}}, sum{f, {}};
            for (int i = 0; i < f.basic_count(); ++i) {
                int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
                x.coeffs.push_back(a);
                y.coeffs.push_back(b);
                sum.coeffs.push_back(a + b);
            }
            Weight wx = materialize(x), wy = materialize(y), ws = materialize(sum);
            REQUIRE(ws.size() == wx.size());
            for (std::size_t i = 0; i < ws.size(); ++i) CHECK(ws[i] == wx[i] + wy[i]);
            CHECK(level(sum) == level(x) + level(y));
        }
    }
}

TEST_CASE("level formula", "[schmid]") {
    CHECK(level({Family::sp_real(4), {1, 1, 0, 0}}) == 3);
    CHECK(level({Family::su(2, 3), {2, 1}}) == 4);
    CHECK(level({Family::so_odd(3), {1, 1}}) == 3);   // a + 2b
    CHECK(level(schmid_zero(Family::so_even(4))) == 0);
    CHECK(level({Family::sp_real(2), {0, 0}}) == 0);
}

TEST_CASE("coefficient validation", "[schmid]") {
    CHECK_THROWS_MATCHES(materialize({Family::sp_real(3), {1, 0}}), Error,
                         ErrorKindIs(ErrorKind::LengthMismatch));
    CHECK_THROWS_MATCHES(materialize({Family::sp_real(3), {1, -1, 0}}), Error,
                         ErrorKindIs(ErrorKind::DominanceViolation));
}

TEST_CASE("enumerate_by_level pins", "[schmid]") {
    auto seq = enumerate_by_level(Family::sp_real(2), 2);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].coeffs == std::vector<int>{1, 0});
    CHECK(seq[1].coeffs == std::vector<int>{2, 0});
    CHECK(seq[2].coeffs == std::vector<int>{0, 1});

    auto so = enumerate_by_level(Family::so_odd(3), 2);
    REQUIRE(so.size() == 3);
    CHECK(so[0].coeffs == std::vector<int>{1, 0});
    CHECK(so[1].coeffs == std::vector<int>{2, 0});
    CHECK(so[2].coeffs == std::vector<int>{0, 1});

    CHECK(enumerate_by_level(Family::sp_real(2), 1).size() == 1);
    CHECK(enumerate_by_level(Family::sp_real(2), 0).empty());
}

TEST_CASE("enumerate_by_level is exactly the level-capped set", "[schmid]") {
    for (const char* fam : {"sp:3", "so*:5", "su:2,3", "so-even:4", "so-odd:5"}) {
        Family f = Family::parse(fam);
        const int cap = 7;
        auto seq = enumerate_by_level(f, cap);

        // brute force: odometer over coefficient vectors with level <= cap
        std::set<std::vector<int>> expected;
        std::vector<int> c(f.basic_count(), 0);
        while (true) {
            int lvl = 0;
            for (int i = 0; i < f.basic_count(); ++i) lvl += (i + 1) * c[i];
            if (lvl >= 1 && lvl <= cap) expected.insert(c);
            int k = 0;
            while (k < f.basic_count()) {
                ++c[k];
                int l2 = 0;
                for (int i = 0; i < f.basic_count(); ++i) l2 += (i + 1) * c[i];
                if (l2 <= cap) break;
                c[k] = 0;
                ++k;
            }
            if (k == f.basic_count()) break;
        }

        std::set<std::vector<int>> seen;
        int prev_level = 0;
        for (const SchmidCoeffs& sc : seq) {
            CHECK(sc.family == f);
            CHECK(level(sc) >= prev_level);  // nondecreasing level order
            prev_level = level(sc);
            CHECK(seen.insert(sc.coeffs).second);  // no duplicates
        }
        CHECK(seen == expected);
    }
}

TEST_CASE("materialized weights have the family Schmid shape", "[schmid]") {
    for (const char* fam : {"sp:3", "so*:4", "su:2,3", "so-even:4", "so-odd:3"}) {
        Family f = Family::parse(fam);
        for (const SchmidCoeffs& sc : enumerate_by_level(f, 6)) {
            Weight w = materialize(sc);
            validate_weight(f, w);  // every Schmid weight is a valid weight
            // and decomposing it recovers the coefficients
            CHECK(parse_schmid(f, "weight:" + to_string(f, w)).coeffs == sc.coeffs);
        }
    }
}

TEST_CASE("parse_schmid coefficient and weight forms", "[schmid]") {
    CHECK(parse_schmid(Family::sp_real(4), "1,1,0,0").coeffs == std::vector<int>{1, 1, 0, 0});
    CHECK(parse_schmid(Family::sp_real(4), "weight:4,2,0,0").coeffs ==
          std::vector<int>{1, 1, 0, 0});
    CHECK(parse_schmid(Family::su(2, 3), "weight:3,1|0,-1,-3").coeffs == std::vector<int>{2, 1});
    CHECK(parse_schmid(Family::so_even(4), "weight:3,1,0,0").coeffs == std::vector<int>{1, 1});
    CHECK(parse_schmid(Family::so_star(5), "weight:2,2,1,1,0").coeffs == std::vector<int>{1, 1});

    // malformed coefficient lists
    CHECK_THROWS_MATCHES(parse_schmid(Family::sp_real(2), "1"), Error,
                         ErrorKindIs(ErrorKind::LengthMismatch));
    CHECK_THROWS_MATCHES(parse_schmid(Family::sp_real(2), "1,x"), Error,
                         ErrorKindIs(ErrorKind::ParseError));
    CHECK_THROWS_MATCHES(parse_schmid(Family::sp_real(2), "1,-1"), Error,
                         ErrorKindIs(ErrorKind::ParseError));

    // weights that are not Schmid weights
    CHECK_THROWS_MATCHES(parse_schmid(Family::sp_real(2), "weight:3,0"), Error,
                         ErrorKindIs(ErrorKind::ParseError));  // odd entry
    CHECK_THROWS_MATCHES(parse_schmid(Family::so_star(4), "weight:2,1,1,0"), Error,
                         ErrorKindIs(ErrorKind::ParseError));  // unpaired
    CHECK_THROWS_MATCHES(parse_schmid(Family::so_even(4), "weight:2,1,1,0"), Error,
                         ErrorKindIs(ErrorKind::ParseError));  // nonzero past slot 2
    CHECK_THROWS_MATCHES(parse_schmid(Family::so_even(4), "weight:2,3,0,0"), Error,
                         ErrorKindIs(ErrorKind::ParseError));  // w1 - w2 negative
    CHECK_THROWS_MATCHES(parse_schmid(Family::su(1, 1), "weight:1|0"), Error,
                         ErrorKindIs(ErrorKind::ParseError));  // mirror broken
}

TEST_CASE("schmid to_string", "[schmid]") {
    CHECK(to_string(SchmidCoeffs{Family::sp_real(2), {1, 0}}) == "(1,0)");
    CHECK(to_string(SchmidCoeffs{Family::so_odd(3), {0, 2}}) == "(0,2)");
}
