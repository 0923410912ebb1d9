#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "manazel/crescent.hpp"

namespace manazel {

// One labeled evening: features in (arcv, w) order, output 1 = crescent seen.
struct Observation {
    std::string date;  // optional, empty when the CSV has no date column
    double arcv = 0.0;
    double w = 0.0;
    int output = 0;
};

struct Dataset {
    std::vector<Observation> rows;
    bool has_date = false;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
};

// CSV with header `date,arcv,w,output` (date column optional, order free),
// '.' decimal separator, LF or CRLF, optional UTF-8 BOM. Malformed content
// raises ParseError carrying the 1-based line number.
Dataset parse_dataset(std::istream& in);
Dataset load_dataset(const std::string& path);

// Per-variable summary. std is the sample standard deviation (n-1 denominator,
// 0 by convention for a single row); quartiles interpolate linearly between
// order statistics at rank p*(n-1).
struct VariableStats {
    std::size_t count = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double min = 0.0;
    double p25 = 0.0;
    double p50 = 0.0;
    double p75 = 0.0;
    double max = 0.0;
};

VariableStats column_stats(std::vector<double> values);

struct SummaryStats {
    VariableStats arcv;
    VariableStats w;
    VariableStats output;
};

SummaryStats summary_stats(const Dataset& d);

// Zone x output contingency counts under the visibility criterion.
struct ZoneDistribution {
    std::array<std::array<std::size_t, 2>, 4> counts{};  // [zone][output]

    std::size_t count(Zone z, int output) const;
    std::size_t zone_total(Zone z) const;
    std::size_t total() const;
    // Fraction of a zone's rows with output 1; 0 for an empty zone.
    double positive_rate(Zone z) const;
};

ZoneDistribution zone_distribution(const Dataset& d, const OdehCriterion& crit = {});

}  // namespace manazel
