#pragma once

// Shared helpers for the unit and acceptance suites: repository paths,
// synthetic dataset builders, and a popen-based CLI runner.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "manazel/dataset.hpp"

#ifndef MANAZEL_SOURCE_DIR
#error "MANAZEL_SOURCE_DIR must be defined by the build"
#endif
#ifndef MANAZEL_CLI_PATH
#error "MANAZEL_CLI_PATH must be defined by the build"
#endif

namespace testutil {

inline std::string source_dir() { return MANAZEL_SOURCE_DIR; }
inline std::string cli_path() { return MANAZEL_CLI_PATH; }
inline std::string fixture_path() { return source_dir() + "/data/observations.csv"; }
inline std::string ephemeris_oracle_path() {
    return source_dir() + "/tests/data/ephemeris_oracle.csv";
}
inline std::string stats_oracle_path() {
    return source_dir() + "/tests/data/stats_oracle.csv";
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr merged
};

// Runs the CLI with `args` appended verbatim; capture both streams so tests
// can assert on error messages without caring which stream carried them.
inline CliResult run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult r;
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

// Split one CSV line on commas (no quoting — none of our files use it).
inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline manazel::Dataset make_dataset(const std::vector<std::array<double, 2>>& x,
                                     const std::vector<int>& y) {
    manazel::Dataset d;
    for (std::size_t i = 0; i < x.size(); ++i)
        d.rows.push_back({"", x[i][0], x[i][1], y[i]});
    return d;
}

// Two well-separated clusters; any sane classifier fits it perfectly.
inline manazel::Dataset separable_toy(std::size_t per_class = 8) {
    manazel::Dataset d;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    for (std::size_t i = 0; i < per_class; ++i)
        d.rows.push_back({"", 2.0 + jitter(rng), 0.2 + 0.05 * jitter(rng), 0});
    for (std::size_t i = 0; i < per_class; ++i)
        d.rows.push_back({"", 14.0 + jitter(rng), 1.2 + 0.05 * jitter(rng), 1});
    return d;
}

// Feature ranges follow the observation record; labels random so the
// structural oracles (tree, knn) get exercised on non-trivial boundaries.
inline manazel::Dataset random_dataset(std::uint64_t seed, std::size_t n) {
    manazel::Dataset d;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> arcv(0.0, 25.0);
    std::uniform_real_distribution<double> w(0.0, 3.5);
    std::bernoulli_distribution label(0.5);
    for (std::size_t i = 0; i < n; ++i)
        d.rows.push_back({"", arcv(rng), w(rng), label(rng) ? 1 : 0});
    return d;
}

// Random dataset guaranteed to contain both classes.
inline manazel::Dataset random_dataset_two_class(std::uint64_t seed, std::size_t n) {
    for (std::uint64_t s = seed;; ++s) {
        manazel::Dataset d = random_dataset(s, n);
        bool has[2] = {false, false};
        for (const auto& r : d.rows) has[r.output] = true;
        if (has[0] && has[1]) return d;
    }
}

// A 257-row dataset with 153 positives and 104 negatives, labels interleaved
// so stratification has to work for it.
inline manazel::Dataset fixture_257_153() {
    manazel::Dataset d;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> arcv(0.0, 25.0);
    std::uniform_real_distribution<double> w(0.0, 3.5);
    int pos = 0, neg = 0;
    for (int i = 0; i < 257; ++i) {
        int y;
        if (pos < 153 && neg < 104)
            y = (i % 5 == 1 || i % 5 == 3 || i % 5 == 0) ? 1 : 0;
        else
            y = pos < 153 ? 1 : 0;
        (y == 1 ? pos : neg)++;
        d.rows.push_back({"", arcv(rng), w(rng), y});
    }
    return d;
}

inline std::string write_temp_file(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace testutil
