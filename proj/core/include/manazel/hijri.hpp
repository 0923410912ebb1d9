#pragma once

#include "manazel/errors.hpp"
#include "manazel/time.hpp"

namespace manazel {

struct HijriDate {
    int year = 1;   // >= 1
    int month = 1;  // 1-12
    int day = 1;    // 1-30 (month scans consume day = 1 only)
};

// Day beginning at this JD is 1 Muharram 1 AH in the arithmetic calendar.
inline constexpr double kHijriEpochJd = 1948439.5;

// Arithmetic (tabular) calendar: months alternate 30/29, and the 11 leap
// years per 30-year cycle add a day to month 12.
bool is_hijri_leap_year(int year);
int hijri_month_length_tabular(int year, int month);
int hijri_year_length_tabular(int year);

void validate_hijri(const HijriDate& h);

// Days elapsed since the epoch day (0 for 1 Muharram 1 AH).
std::int64_t days_from_hijri_epoch(const HijriDate& h);

CivilDate hijri_to_gregorian_tabular(const HijriDate& h);

}  // namespace manazel
