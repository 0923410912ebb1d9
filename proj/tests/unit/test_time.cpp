#include <cmath>

#include "doctest.h"
#include "manazel/errors.hpp"
#include "manazel/time.hpp"

using namespace manazel;

TEST_SUITE("time") {

TEST_CASE("civil day serial anchors") {
    CHECK(days_from_civil(1970, 1, 1) == 0);
    CHECK(days_from_civil(1970, 1, 2) == 1);
    CHECK(days_from_civil(1969, 12, 31) == -1);
    CHECK(days_from_civil(2000, 1, 1) == 10957);
    CHECK(days_from_civil(2024, 3, 11) == 19793);
    // The Hijri epoch day, deep in the proleptic range.
    CHECK(days_from_civil(622, 7, 19) == -492148);
}

TEST_CASE("civil round trip across centuries") {
    for (std::int64_t z = -500000; z <= 60000; z += 997) {
        CivilDate d = civil_from_days(z);
        CHECK(days_from_civil(d.year, d.month, d.day) == z);
        CHECK(is_valid_civil(d.year, d.month, d.day));
    }
}

TEST_CASE("add_days and days_between agree") {
    CivilDate base{2024, 2, 28};
    CHECK(add_days(base, 1) == CivilDate{2024, 2, 29});  // leap year
    CHECK(add_days(base, 2) == CivilDate{2024, 3, 1});
    CHECK(days_between(base, CivilDate{2024, 3, 1}) == 2);
    CHECK(days_between(CivilDate{2024, 3, 1}, base) == -2);
    CHECK(add_days(CivilDate{2023, 2, 28}, 1) == CivilDate{2023, 3, 1});
}

TEST_CASE("gregorian leap rules") {
    CHECK(is_valid_civil(2000, 2, 29));
    CHECK_FALSE(is_valid_civil(1900, 2, 29));
    CHECK(is_valid_civil(2024, 2, 29));
    CHECK_FALSE(is_valid_civil(2023, 2, 29));
    CHECK_FALSE(is_valid_civil(2023, 4, 31));
    CHECK_FALSE(is_valid_civil(2023, 13, 1));
    CHECK_FALSE(is_valid_civil(2023, 0, 1));
    CHECK_FALSE(is_valid_civil(2023, 1, 0));
}

TEST_CASE("julian date anchors") {
    CHECK(jd_from_datetime({2000, 1, 1, 12, 0, 0.0}) == doctest::Approx(2451545.0));
    CHECK(jd_from_datetime({1999, 1, 1, 0, 0, 0.0}) == doctest::Approx(2451179.5));
    CHECK(jd_from_datetime({1987, 6, 19, 12, 0, 0.0}) == doctest::Approx(2446966.0));
    CHECK(jd_from_datetime({1988, 6, 19, 12, 0, 0.0}) == doctest::Approx(2447332.0));
    CHECK(jd_from_datetime({2024, 3, 11, 18, 0, 0.0}) ==
          doctest::Approx(2460381.25).epsilon(1e-12));
}

TEST_CASE("datetime round trip") {
    DateTime t{2024, 3, 11, 18, 31, 27.0};
    DateTime back = datetime_from_jd(jd_from_datetime(t));
    CHECK(back.year == t.year);
    CHECK(back.month == t.month);
    CHECK(back.day == t.day);
    CHECK(back.hour == t.hour);
    CHECK(back.minute == t.minute);
    CHECK(back.second == doctest::Approx(t.second).epsilon(1e-4));
}

TEST_CASE("delta t magnitude over the supported span") {
    // Published observed values, generous tolerances for the polynomial fit.
    CHECK(std::abs(delta_t_seconds(2005.0) - 64.7) < 1.0);
    CHECK(std::abs(delta_t_seconds(1990.0) - 56.9) < 1.0);
    CHECK(std::abs(delta_t_seconds(1955.0) - 31.1) < 1.5);
    CHECK(std::abs(delta_t_seconds(1902.0) - 2.0) < 3.0);
    CHECK(std::abs(delta_t_seconds(2015.0) - 67.6) < 2.0);
    for (double y = 1900.0; y <= 2100.0; y += 0.25) {
        double dt = delta_t_seconds(y);
        CHECK(dt > -100.0);
        CHECK(dt < 200.0);
    }
}

TEST_CASE("instant carries delta t into terrestrial time") {
    Instant t = julian_day({2024, 3, 11, 18, 0, 0.0});
    CHECK(t.jd_tt() == doctest::Approx(t.jd_ut + t.delta_t / 86400.0).epsilon(1e-15));
    CHECK(t.delta_t > 60.0);
    CHECK(t.delta_t < 80.0);
    Instant same = instant_from_jd(t.jd_ut);
    CHECK(same.jd_ut == doctest::Approx(t.jd_ut).epsilon(1e-12));
    CHECK(same.delta_t == doctest::Approx(t.delta_t).epsilon(1e-9));
}

TEST_CASE("epoch range is enforced") {
    CHECK_THROWS_AS((void)julian_day({1899, 12, 31, 23, 0, 0.0}), UnsupportedEpochError);
    CHECK_THROWS_AS((void)julian_day({2101, 1, 1, 1, 0, 0.0}), UnsupportedEpochError);
    CHECK_NOTHROW((void)julian_day({1900, 1, 1, 12, 0, 0.0}));
    CHECK_NOTHROW((void)julian_day({2100, 12, 31, 12, 0, 0.0}));
}

TEST_CASE("invalid calendar input is rejected") {
    CHECK_THROWS_AS((void)julian_day({2023, 2, 29, 0, 0, 0.0}), InputError);
    CHECK_THROWS_AS((void)julian_day({2023, 0, 10, 0, 0, 0.0}), InputError);
    CHECK_THROWS_AS((void)julian_day({2023, 5, 10, 24, 0, 0.0}), InputError);
    CHECK_THROWS_AS((void)julian_day({2023, 5, 10, 12, 60, 0.0}), InputError);
    CHECK_THROWS_AS((void)julian_day({2023, 5, 10, 12, 0, 60.5}), InputError);
}

TEST_CASE("greenwich mean sidereal time") {
    // 1987-04-10 19:21:00 UT; reference value 128.73787 degrees.
    double jd = jd_from_datetime({1987, 4, 10, 19, 21, 0.0});
    CHECK(std::abs(gmst_deg(jd) - 128.73787) < 1e-3);
    // 1987-04-10 00:00 UT: 13h10m46.3668s = 197.693195 degrees.
    double jd0 = jd_from_datetime({1987, 4, 10, 0, 0, 0.0});
    CHECK(std::abs(gmst_deg(jd0) - 197.693195) < 1e-3);
    for (double off = 0.0; off < 1.0; off += 0.13) {
        double g = gmst_deg(jd0 + off);
        CHECK(g >= 0.0);
        CHECK(g < 360.0);
    }
}

TEST_CASE("civil date ordering") {
    CHECK(CivilDate{2024, 3, 11} == CivilDate{2024, 3, 11});
    CHECK(CivilDate{2024, 3, 11} < CivilDate{2024, 3, 12});
    CHECK(CivilDate{2024, 2, 29} < CivilDate{2024, 3, 1});
    CHECK_FALSE(CivilDate{2025, 1, 1} < CivilDate{2024, 12, 31});
}

}  // TEST_SUITE
