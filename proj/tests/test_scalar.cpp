// Exact rational scalar layer: construction, classification predicates,
// text round-trips, and the doubled-integer fast-path guard.
#include "diracgate/scalar.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace diracgate;

TEST_CASE("make_scalar normalizes signs", "[scalar]") {
    CHECK(make_scalar(1, -2) == make_scalar(-1, 2));
    CHECK(make_scalar(-3, -4) == make_scalar(3, 4));
    CHECK(make_scalar(0, -7) == Scalar(0));
    CHECK(make_scalar(6, 4) == make_scalar(3, 2));
}

TEST_CASE("integer and half-integer predicates", "[scalar]") {
    CHECK(is_integer(Scalar(5)));
    CHECK(!is_integer(make_scalar(1, 2)));
    CHECK(is_half_integer(make_scalar(1, 2)));
    CHECK(is_half_integer(Scalar(-4)));
    CHECK(is_half_integer(make_scalar(-7, 2)));
    CHECK(!is_half_integer(make_scalar(1, 3)));
    CHECK(!is_half_integer(make_scalar(5, 4)));
}

TEST_CASE("to_doubled_int doubles half-integers and rejects the rest", "[scalar]") {
    CHECK(to_doubled_int(make_scalar(5, 2)) == 5);
    CHECK(to_doubled_int(Scalar(-3)) == -6);
    CHECK(to_doubled_int(Scalar(0)) == 0);
    CHECK(!to_doubled_int(make_scalar(1, 3)).has_value());
    // width guard: a doubled value beyond 2^28 declines (exactness over speed)
    CHECK(!to_doubled_int(Scalar(Int(1) << 29)).has_value());
    CHECK(to_doubled_int(Scalar(Int(1) << 27)) == (std::int64_t(1) << 28));
    CHECK(!to_doubled_int(Scalar((Int(1) << 27) + 1)).has_value());
}

TEST_CASE("scalar text round-trip", "[scalar]") {
    for (const char* text : {"0", "7", "-7", "1/2", "-13/8", "25/2"}) {
        Scalar s = parse_scalar(text);
        CHECK(to_string(s) == text);
        CHECK(parse_scalar(to_string(s)) == s);
    }
    CHECK(parse_scalar("  4/6 ") == make_scalar(2, 3));
    CHECK(to_string(make_scalar(4, 6)) == "2/3");
}

TEST_CASE("parse_scalar rejects malformed text", "[scalar]") {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "a", "1.5", "2/-3", "--4", "1 2"}) {
        CHECK_THROWS_MATCHES(parse_scalar(bad), Error, ErrorKindIs(ErrorKind::ParseError));
    }
}
