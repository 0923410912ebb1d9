#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "manazel/dataset.hpp"

namespace manazel {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& field, const char* column, long line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(std::string("column '") + column + "' is not a number: '" +
                             field + "'",
                         line_no);
    }
    if (!std::isfinite(value)) {
        throw ParseError(std::string("column '") + column + "' is not finite", line_no);
    }
    return value;
}

}  // namespace

Dataset parse_dataset(std::istream& in) {
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError("missing header row", 1);
    }
    ++line_no;
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB &&
        static_cast<unsigned char>(line[2]) == 0xBF) {
        line.erase(0, 3);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_csv_line(line);
    int col_date = -1, col_arcv = -1, col_w = -1, col_output = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string& name = header[i];
        int* slot = nullptr;
        if (name == "date") slot = &col_date;
        else if (name == "arcv") slot = &col_arcv;
        else if (name == "w") slot = &col_w;
        else if (name == "output") slot = &col_output;
        else throw ParseError("unknown column '" + name + "'", line_no);
        if (*slot != -1) throw ParseError("duplicate column '" + name + "'", line_no);
        *slot = static_cast<int>(i);
    }
    if (col_arcv == -1) throw ParseError("missing required column 'arcv'", line_no);
    if (col_w == -1) throw ParseError("missing required column 'w'", line_no);
    if (col_output == -1) throw ParseError("missing required column 'output'", line_no);

    Dataset d;
    d.has_date = col_date != -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) +
                                 " fields, found " + std::to_string(fields.size()),
                             line_no);
        }

        Observation o;
        if (col_date != -1) o.date = fields[col_date];
        o.arcv = parse_double(fields[col_arcv], "arcv", line_no);
        o.w = parse_double(fields[col_w], "w", line_no);
        if (o.w < 0.0) throw ParseError("column 'w' must be non-negative", line_no);
        const std::string& out = fields[col_output];
        if (out == "0") o.output = 0;
        else if (out == "1") o.output = 1;
        else throw ParseError("column 'output' must be 0 or 1, got '" + out + "'",
                              line_no);
        d.rows.push_back(std::move(o));
    }
    return d;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open dataset file: " + path);
    }
    return parse_dataset(in);
}

VariableStats column_stats(std::vector<double> values) {
    if (values.empty()) {
        throw EmptyInputError("statistics require a non-empty column");
    }
    VariableStats s;
    s.count = values.size();
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(ss / (n - 1.0));
    } else {
        s.std_dev = 0.0;  // single observation: no spread by convention
    }
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    // Linear interpolation between order statistics at rank p*(n-1).
    const auto quantile = [&values](double p) {
        const double pos = p * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] + (values[hi] - values[lo]) * frac;
    };
    s.p25 = quantile(0.25);
    s.p50 = quantile(0.50);
    s.p75 = quantile(0.75);
    return s;
}

SummaryStats summary_stats(const Dataset& d) {
    if (d.empty()) {
        throw EmptyInputError("summary statistics require a non-empty dataset");
    }
    std::vector<double> arcv, w, output;
    arcv.reserve(d.size());
    w.reserve(d.size());
    output.reserve(d.size());
    for (const Observation& o : d.rows) {
        arcv.push_back(o.arcv);
        w.push_back(o.w);
        output.push_back(static_cast<double>(o.output));
    }
    return {column_stats(std::move(arcv)), column_stats(std::move(w)),
            column_stats(std::move(output))};
}

std::size_t ZoneDistribution::count(Zone z, int output) const {
    return counts[static_cast<std::size_t>(z)][static_cast<std::size_t>(output)];
}

std::size_t ZoneDistribution::zone_total(Zone z) const {
    return count(z, 0) + count(z, 1);
}

std::size_t ZoneDistribution::total() const {
    std::size_t t = 0;
    for (const auto& per_zone : counts) t += per_zone[0] + per_zone[1];
    return t;
}

double ZoneDistribution::positive_rate(Zone z) const {
    const std::size_t total = zone_total(z);
    if (total == 0) return 0.0;
    return static_cast<double>(count(z, 1)) / static_cast<double>(total);
}

ZoneDistribution zone_distribution(const Dataset& d, const OdehCriterion& crit) {
    if (d.empty()) {
        throw EmptyInputError("zone distribution requires a non-empty dataset");
    }
    ZoneDistribution dist;
    for (const Observation& o : d.rows) {
        const Zone z = classify_zone(odeh_value(o.arcv, o.w, crit), crit);
        ++dist.counts[static_cast<std::size_t>(z)][static_cast<std::size_t>(o.output)];
    }
    return dist;
}

}  // namespace manazel
