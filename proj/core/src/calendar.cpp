#include <cstdio>
#include <string>

#include "manazel/calendar.hpp"

namespace manazel {

namespace {

std::string civil_str(const CivilDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace

MonthStartResult determine_month_start(int h_year, int h_month, const GeoLocation& site,
                                       const Classifier& model, int n_max) {
    if (n_max < 0) throw InputError("n_max must be non-negative");
    validate_location(site);
    const HijriDate target{h_year, h_month, 1};
    const CivilDate g_base = hijri_to_gregorian_tabular(target);

    std::vector<EveningProbe> probes;
    for (int delta = -1; delta <= n_max; ++delta) {
        EveningProbe probe;
        probe.evening = add_days(g_base, delta);
        probe.geometry = compute_geometry(probe.evening, site);
        // An evening the Moon does not outlast the Sun cannot carry a
        // sighting; the model is only consulted on physically live evenings.
        probe.predicted = probe.geometry.below_horizon
                              ? 0
                              : model.predict_one(probe.geometry.arcv, probe.geometry.w);
        probes.push_back(probe);

        if (probe.predicted == 1) {
            MonthStartResult r;
            r.hijri = target;
            r.g_base = g_base;
            r.g_doubt = probe.evening;
            r.g_first = add_days(probe.evening, 1);
            r.offset_used = delta;
            r.geometry = probe.geometry;
            r.probes = std::move(probes);
            return r;
        }
    }
    throw ExhaustionError("no predicted sighting in the " + std::to_string(n_max + 2) +
                              " evenings from " + civil_str(add_days(g_base, -1)) +
                              " for Hijri " + std::to_string(h_year) + "-" +
                              std::to_string(h_month),
                          std::move(probes));
}

YearCalendar generate_year(int h_year, const GeoLocation& site, const Classifier& model,
                           int n_max) {
    YearCalendar cal;
    cal.hijri_year = h_year;
    cal.months.resize(12);

    // Thirteen scans: the twelfth month's length needs the next Muharram.
    std::optional<MonthStartResult> starts[13];
    std::string errors[13];
    for (int i = 0; i < 13; ++i) {
        const int y = i < 12 ? h_year : h_year + 1;
        const int m = i < 12 ? i + 1 : 1;
        try {
            starts[i] = determine_month_start(y, m, site, model, n_max);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    }

    for (int i = 0; i < 12; ++i) {
        MonthEntry& entry = cal.months[static_cast<std::size_t>(i)];
        entry.month = i + 1;
        entry.start = starts[i];
        entry.error = errors[i];
        if (starts[i] && starts[i + 1]) {
            const std::int64_t gap =
                days_between(starts[i]->g_first, starts[i + 1]->g_first);
            entry.length_days = static_cast<int>(gap);
            entry.gap_valid = gap == 29 || gap == 30;
        } else {
            entry.length_days = std::nullopt;
            entry.gap_valid = false;
        }
        if (!starts[i] || !entry.gap_valid) cal.all_valid = false;
    }
    return cal;
}

}  // namespace manazel
