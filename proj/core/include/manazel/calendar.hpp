#pragma once

#include <optional>
#include <vector>

#include "manazel/classifiers.hpp"
#include "manazel/hijri.hpp"

namespace manazel {

// One evening probed by the month-start scan. `predicted` is the model's
// output, forced to 0 without a model call when the geometry rules the
// evening out (moon down by sunset).
struct EveningProbe {
    CivilDate evening;
    CrescentGeometry geometry;
    int predicted = 0;
};

struct MonthStartResult {
    HijriDate hijri;           // day 1 of the requested month
    CivilDate g_base;          // tabular baseline conversion
    CivilDate g_doubt;         // evening predicted visible
    CivilDate g_first;         // g_doubt + 1, the month's first civil day
    int offset_used = 0;       // Delta in [-1, n_max]
    CrescentGeometry geometry; // at g_doubt
    std::vector<EveningProbe> probes;  // every evening scanned, in order
};

// The scan ran out of evenings without a predicted sighting. Exit code 4.
// Carries every probe so the caller can show what was rejected.
class ExhaustionError : public Error {
public:
    ExhaustionError(const std::string& msg, std::vector<EveningProbe> probes)
        : Error(msg), probes_(std::move(probes)) {}
    const std::vector<EveningProbe>& probes() const { return probes_; }

private:
    std::vector<EveningProbe> probes_;
};

// Iterative visibility scan: starting at offset -1 from the tabular baseline,
// evaluate the model on each evening's (arcv, w) until it predicts a
// sighting; the month begins the following civil day.
MonthStartResult determine_month_start(int h_year, int h_month, const GeoLocation& site,
                                       const Classifier& model, int n_max = 3);

struct MonthEntry {
    int month = 0;
    std::optional<MonthStartResult> start;  // absent when the scan errored
    std::optional<int> length_days;         // to the next month's start
    bool gap_valid = true;                  // length in {29, 30}
    std::string error;                      // non-empty on scan failure
};

struct YearCalendar {
    int hijri_year = 0;
    std::vector<MonthEntry> months;  // 12 entries
    bool all_valid = true;           // every month resolved with a valid gap
};

// Twelve independent month scans plus a consistency pass over the gaps
// (month 12's length uses the next year's first month). Per-month errors
// are recorded in the entry rather than aborting the year.
YearCalendar generate_year(int h_year, const GeoLocation& site, const Classifier& model,
                           int n_max = 3);

}  // namespace manazel
