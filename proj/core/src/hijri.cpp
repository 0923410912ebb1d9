#include <string>

#include "manazel/hijri.hpp"

namespace manazel {

bool is_hijri_leap_year(int year) {
    // Leap years {2,5,7,10,13,16,18,21,24,26,29} of each 30-year cycle.
    return ((11 * static_cast<std::int64_t>(year) + 14) % 30 + 30) % 30 < 11;
}

int hijri_month_length_tabular(int year, int month) {
    if (month == 12) return is_hijri_leap_year(year) ? 30 : 29;
    return month % 2 == 1 ? 30 : 29;
}

int hijri_year_length_tabular(int year) {
    return is_hijri_leap_year(year) ? 355 : 354;
}

void validate_hijri(const HijriDate& h) {
    if (h.year < 1 || h.year > 9999) {
        throw InputError("Hijri year " + std::to_string(h.year) + " outside 1-9999");
    }
    if (h.month < 1 || h.month > 12) {
        throw InputError("Hijri month " + std::to_string(h.month) + " outside 1-12");
    }
    const int len = hijri_month_length_tabular(h.year, h.month);
    if (h.day < 1 || h.day > len) {
        throw InputError("Hijri day " + std::to_string(h.day) + " outside 1-" +
                         std::to_string(len) + " for month " + std::to_string(h.month) +
                         " of year " + std::to_string(h.year));
    }
}

std::int64_t days_from_hijri_epoch(const HijriDate& h) {
    const std::int64_t y = h.year;
    // Whole elapsed years (+11/30 day leap accumulation), whole elapsed
    // months of the alternating 30/29 pattern, then elapsed days.
    return 354 * (y - 1) + (3 + 11 * y) / 30 + 29 * (h.month - 1) + h.month / 2 +
           (h.day - 1);
}

CivilDate hijri_to_gregorian_tabular(const HijriDate& h) {
    validate_hijri(h);
    // kHijriEpochJd names the midnight opening the epoch day; its civil day
    // number is fixed, so conversion is pure integer arithmetic from there.
    constexpr std::int64_t epoch_unix_day = static_cast<std::int64_t>(kHijriEpochJd - 2440587.5);
    return civil_from_days(epoch_unix_day + days_from_hijri_epoch(h));
}

}  // namespace manazel
