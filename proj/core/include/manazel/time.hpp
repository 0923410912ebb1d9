#pragma once

#include <cstdint>

namespace manazel {

// Proleptic Gregorian calendar date (no instant attached).
struct CivilDate {
    int year = 2000;
    int month = 1;  // 1-12
    int day = 1;    // 1-31
};

bool operator==(const CivilDate& a, const CivilDate& b);
bool operator<(const CivilDate& a, const CivilDate& b);

// A UTC calendar instant.
struct DateTime {
    int year = 2000;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    double second = 0.0;

    CivilDate date() const { return {year, month, day}; }
};

// One point on the timeline: UT Julian Date plus the TT-UT offset that was
// in force there. jd_tt() is what the ephemeris series consume.
struct Instant {
    double jd_ut = 0.0;
    double delta_t = 0.0;  // seconds, within [-100, +200] over 1900-2100

    double jd_tt() const { return jd_ut + delta_t / 86400.0; }
};

bool is_valid_civil(int year, int month, int day);

// Day serial number of a proleptic Gregorian date, 1970-01-01 = 0.
// Valid over the whole proleptic range (needed for the Hijri epoch at 622 CE).
std::int64_t days_from_civil(int year, int month, int day);
CivilDate civil_from_days(std::int64_t z);

CivilDate add_days(const CivilDate& d, std::int64_t n);
std::int64_t days_between(const CivilDate& from, const CivilDate& to);

// Unchecked calendar -> Julian Date; no year restriction.
double jd_from_datetime(const DateTime& t);
DateTime datetime_from_jd(double jd);

// TT-UT in seconds from a piecewise polynomial fit; argument is a decimal year.
double delta_t_seconds(double year);

// Checked conversion for ephemeris work: years 1900-2100 only, delta_t
// filled in. instant_from_jd trusts its caller (event searches step it
// through instants a window may push slightly past a year boundary).
Instant julian_day(const DateTime& t);
Instant instant_from_jd(double jd_ut);

// Greenwich mean sidereal time in degrees, [0, 360).
double gmst_deg(double jd_ut);

}  // namespace manazel
