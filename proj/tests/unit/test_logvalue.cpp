#include <doctest.h>

#include <gent/errors.hpp>
#include <gent/logvalue.hpp>

using namespace gent;

TEST_SUITE_BEGIN("logvalue");

TEST_CASE("log vs rational is exact") {
    // log_2(5) vs 5/2: 5^2 = 25 < 32 = 2^5
    CHECK(compare(LogValue(5ul, 2), Rational(5, 2)) < 0);
    // log_2(6) vs 5/2: 36 > 32
    CHECK(compare(LogValue(6ul, 2), Rational(5, 2)) > 0);
    // log_4(32) = 5/2 exactly: 32^2 = 4^5
    CHECK(compare(LogValue(32ul, 4), Rational(5, 2)) == 0);
    // log_2(1) = 0
    CHECK(compare(LogValue(1ul, 2), Rational(0)) == 0);
    CHECK(compare(LogValue(1ul, 2), Rational(-1, 3)) > 0);
    // empty marker sits below everything
    CHECK(compare(LogValue(0ul, 2), Rational(-1000)) < 0);
}

TEST_CASE("same-base comparison is count comparison") {
    CHECK(LogValue(5ul, 2) > LogValue(4ul, 2));
    CHECK(LogValue(5ul, 2) == LogValue(5ul, 2));
    CHECK(LogValue(0ul, 2) < LogValue(1ul, 2));
}

TEST_CASE("cross-base comparison") {
    // log_2(8) = 3 = log_3(27), both integers
    CHECK(LogValue(8ul, 2) == LogValue(27ul, 3));
    CHECK(LogValue(8ul, 2) < LogValue(81ul, 3));
    // log_2(5) = 2.32... > log_3(9) = 2
    CHECK(LogValue(5ul, 2) > LogValue(9ul, 3));
    // log_2(5) vs log_4(25): exactly equal but neither integer; refuse to guess
    CHECK_THROWS_AS((void)compare(LogValue(5ul, 2), LogValue(25ul, 4)), PrecisionError);
    // but a clear separation is decided
    CHECK(LogValue(5ul, 2) < LogValue(26ul, 4));
}

TEST_CASE("integrality detection") {
    CHECK(LogValue(8ul, 2).is_integer());
    CHECK(LogValue(8ul, 2).integer_value() == 3);
    CHECK(LogValue(1ul, 7).is_integer());
    CHECK(LogValue(1ul, 7).integer_value() == 0);
    CHECK(!LogValue(5ul, 2).is_integer());
    CHECK(!LogValue(0ul, 2).is_integer());
}

TEST_CASE("log sum comparison") {
    // log_2(5) + log_2(7) vs 5: 35 > 32
    CHECK(compare_log_sum(LogValue(5ul, 2), LogValue(7ul, 2), Rational(5)) > 0);
    // log_2(4) + log_2(8) = 5
    CHECK(compare_log_sum(LogValue(4ul, 2), LogValue(8ul, 2), Rational(5)) == 0);
    CHECK_THROWS(compare_log_sum(LogValue(4ul, 2), LogValue(8ul, 3), Rational(5)));
}

TEST_SUITE_END();
