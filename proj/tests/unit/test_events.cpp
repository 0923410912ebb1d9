#include <cmath>
#include <fstream>

#include "common/util.hpp"
#include "doctest.h"
#include "manazel/events.hpp"
#include "manazel/geo.hpp"

using namespace manazel;

namespace {

double parse_utc_to_jd(const std::string& iso) {
    int y, mo, d, h, mi, s;
    REQUIRE(std::sscanf(iso.c_str(), "%d-%d-%dT%d:%d:%dZ", &y, &mo, &d, &h, &mi, &s) == 6);
    return jd_from_datetime({y, mo, d, h, mi, static_cast<double>(s)});
}

}  // namespace

TEST_SUITE("events") {

TEST_CASE("rabat sunset and moonset match the precomputed oracle table") {
    std::ifstream in(testutil::ephemeris_oracle_path());
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = testutil::split_csv(line);
        REQUIRE(f.size() == 6);
        int y, mo, d;
        REQUIRE(std::sscanf(f[0].c_str(), "%d-%d-%d", &y, &mo, &d) == 3);
        EveningEvents ev = evening_events({y, mo, d}, rabat());
        INFO("row ", f[0]);
        CHECK(std::abs(ev.sunset.jd_ut - parse_utc_to_jd(f[4])) * 1440.0 < 2.0);
        REQUIRE(ev.moonset_found());
        CHECK(std::abs(ev.moonset->jd_ut - parse_utc_to_jd(f[5])) * 1440.0 < 2.0);
        ++rows;
    }
    CHECK(rows == 10);
}

TEST_CASE("sun altitude at the returned sunset instant") {
    for (const CivilDate& d :
         {CivilDate{2024, 3, 10}, CivilDate{2019, 1, 21}, CivilDate{2015, 6, 30}}) {
        Instant s = sunset_instant(d, rabat());
        double alt = sun_position(s, rabat()).altitude_geometric;
        CHECK(std::abs(alt - (-0.8333)) < 0.02);  // one-second bisection slack
    }
}

TEST_CASE("moon altitude at the returned moonset instant") {
    CivilDate d{2024, 3, 11};
    EveningEvents ev = evening_events(d, rabat());
    REQUIRE(ev.moonset_found());
    BodyState m = moon_position(*ev.moonset, rabat());
    CHECK(std::abs(m.altitude_geometric - (-(0.5667 + m.semidiameter_arcmin / 60.0))) <
          0.02);
}

TEST_CASE("old moon gives a negative lag and best time collapses to sunset") {
    // The evening of a new-moon day: the waning moon set before sunset.
    EveningEvents ev = evening_events({2020, 3, 20}, rabat());
    REQUIRE(ev.moonset_found());
    CHECK(ev.lag_minutes < 0.0);
    CHECK(ev.best_time.jd_ut == doctest::Approx(ev.sunset.jd_ut).epsilon(1e-12));
}

TEST_CASE("full moon sets the following morning") {
    EveningEvents ev = evening_events({2019, 1, 21}, rabat());
    REQUIRE(ev.moonset_found());
    CHECK(ev.lag_minutes > 700.0);  // sets well after midnight
    CHECK(ev.lag_minutes < 1000.0);
    DateTime ms = datetime_from_jd(ev.moonset->jd_ut);
    CHECK(ms.day == 22);
}

TEST_CASE("lag and best time follow the four ninths rule") {
    for (const CivilDate& d : {CivilDate{2024, 3, 11}, CivilDate{2023, 3, 22}}) {
        EveningEvents ev = evening_events(d, rabat());
        REQUIRE(ev.moonset_found());
        CHECK(ev.lag_minutes ==
              doctest::Approx((ev.moonset->jd_ut - ev.sunset.jd_ut) * 1440.0)
                  .epsilon(1e-9));
        REQUIRE(ev.lag_minutes > 0.0);
        double want = ev.sunset.jd_ut + (4.0 / 9.0) * ev.lag_minutes / 1440.0;
        CHECK(ev.best_time.jd_ut == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("polar day and night have no sunset") {
    GeoLocation arctic{78.22, 15.65, 0.0};  // Svalbard
    CHECK_THROWS_AS((void)sunset_instant({2024, 6, 20}, arctic), NoEventError);
    CHECK_THROWS_AS((void)sunset_instant({2024, 12, 21}, arctic), NoEventError);
    // Equinox weeks still have ordinary sunsets up there.
    CHECK_NOTHROW((void)sunset_instant({2024, 3, 20}, arctic));
}

TEST_CASE("sunset moves with longitude") {
    CivilDate d{2024, 3, 11};
    Instant rabat_set = sunset_instant(d, rabat());
    Instant east_set = sunset_instant(d, {34.02, 3.16, 75.0});  // 10 degrees east
    double diff_min = (rabat_set.jd_ut - east_set.jd_ut) * 1440.0;
    CHECK(diff_min == doctest::Approx(40.0).epsilon(0.05));  // 4 min per degree
}

TEST_CASE("events are deterministic") {
    EveningEvents a = evening_events({2023, 3, 22}, rabat());
    EveningEvents b = evening_events({2023, 3, 22}, rabat());
    CHECK(a.sunset.jd_ut == b.sunset.jd_ut);
    CHECK(a.moonset->jd_ut == b.moonset->jd_ut);
    CHECK(a.best_time.jd_ut == b.best_time.jd_ut);
}

}  // TEST_SUITE
