#include "manazel/time.hpp"

#include <cmath>

#include "manazel/errors.hpp"

namespace manazel {

namespace {

constexpr double kUnixEpochJd = 2440587.5;  // 1970-01-01 00:00 UT

double wrap360(double deg) {
    double x = std::fmod(deg, 360.0);
    return x < 0.0 ? x + 360.0 : x;
}

}  // namespace

bool operator==(const CivilDate& a, const CivilDate& b) {
    return a.year == b.year && a.month == b.month && a.day == b.day;
}

bool operator<(const CivilDate& a, const CivilDate& b) {
    if (a.year != b.year) return a.year < b.year;
    if (a.month != b.month) return a.month < b.month;
    return a.day < b.day;
}

bool is_valid_civil(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1) return false;
    static const int len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int days = len[month - 1];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) days = 29;
    return day <= days;
}

// Days-from-civil and back, valid across the whole proleptic range
// (Hinnant's shift-epoch construction on 400-year eras).
std::int64_t days_from_civil(int year, int month, int day) {
    std::int64_t y = year;
    y -= month <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

CivilDate add_days(const CivilDate& d, std::int64_t n) {
    return civil_from_days(days_from_civil(d.year, d.month, d.day) + n);
}

std::int64_t days_between(const CivilDate& from, const CivilDate& to) {
    return days_from_civil(to.year, to.month, to.day) -
           days_from_civil(from.year, from.month, from.day);
}

double jd_from_datetime(const DateTime& t) {
    const double day_frac = (t.hour * 3600.0 + t.minute * 60.0 + t.second) / 86400.0;
    return kUnixEpochJd + static_cast<double>(days_from_civil(t.year, t.month, t.day)) +
           day_frac;
}

DateTime datetime_from_jd(double jd) {
    const double t = jd - kUnixEpochJd;
    double z = std::floor(t);
    double frac = t - z;
    // Guard against frac rounding up to a full day.
    if (frac >= 1.0) {
        z += 1.0;
        frac = 0.0;
    }
    const CivilDate date = civil_from_days(static_cast<std::int64_t>(z));
    const double secs = frac * 86400.0;
    const int hour = static_cast<int>(secs / 3600.0);
    const int minute = static_cast<int>((secs - hour * 3600.0) / 60.0);
    const double second = secs - hour * 3600.0 - minute * 60.0;
    return {date.year, date.month, date.day, hour, minute, second};
}

// Piecewise polynomial fit to observed/projected TT-UT. The post-2005
// quadratic is carried through 2100: it stays inside the supported
// [-100, +200] s band, which the published long-range extrapolation leaves.
double delta_t_seconds(double year) {
    const double y = year;
    if (y < 1920.0) {
        const double t = y - 1900.0;
        return -2.79 + 1.494119 * t - 0.0598939 * t * t + 0.0061966 * t * t * t -
               0.000197 * t * t * t * t;
    }
    if (y < 1941.0) {
        const double t = y - 1920.0;
        return 21.20 + 0.84493 * t - 0.076100 * t * t + 0.0020936 * t * t * t;
    }
    if (y < 1961.0) {
        const double t = y - 1950.0;
        return 29.07 + 0.407 * t - t * t / 233.0 + t * t * t / 2547.0;
    }
    if (y < 1986.0) {
        const double t = y - 1975.0;
        return 45.45 + 1.067 * t - t * t / 260.0 - t * t * t / 718.0;
    }
    if (y < 2005.0) {
        const double t = y - 2000.0;
        return 63.86 + 0.3345 * t - 0.060374 * t * t + 0.0017275 * t * t * t +
               0.000651814 * t * t * t * t + 0.00002373599 * t * t * t * t * t;
    }
    const double t = y - 2000.0;
    return 62.92 + 0.32217 * t + 0.005589 * t * t;
}

Instant julian_day(const DateTime& t) {
    if (t.year < 1900 || t.year > 2100) {
        throw UnsupportedEpochError("year " + std::to_string(t.year) +
                                    " outside supported range 1900-2100");
    }
    if (!is_valid_civil(t.year, t.month, t.day)) {
        throw InputError("invalid calendar date");
    }
    if (t.hour < 0 || t.hour > 23 || t.minute < 0 || t.minute > 59 ||
        t.second < 0.0 || t.second >= 60.0) {
        throw InputError("invalid time of day");
    }
    const double jd = jd_from_datetime(t);
    const double year_frac = t.year + (t.month - 0.5) / 12.0;
    return {jd, delta_t_seconds(year_frac)};
}

Instant instant_from_jd(double jd_ut) {
    const DateTime t = datetime_from_jd(jd_ut);
    const double year_frac = t.year + (t.month - 0.5) / 12.0;
    return {jd_ut, delta_t_seconds(year_frac)};
}

double gmst_deg(double jd_ut) {
    const double t = (jd_ut - 2451545.0) / 36525.0;
    const double theta = 280.46061837 + 360.98564736629 * (jd_ut - 2451545.0) +
                         0.000387933 * t * t - t * t * t / 38710000.0;
    return wrap360(theta);
}

}  // namespace manazel
