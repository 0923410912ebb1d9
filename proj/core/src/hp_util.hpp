#pragma once

// Internal helpers for hyperparameter string parsing (not installed).

#include <charconv>
#include <optional>
#include <string>

#include "manazel/classifiers.hpp"
#include "manazel/errors.hpp"

namespace manazel::detail {

inline std::optional<std::string> hp_get(const HyperParams& hp, const std::string& key) {
    const auto it = hp.find(key);
    if (it == hp.end()) return std::nullopt;
    return it->second;
}

inline double parse_positive_double(const std::string& value, const std::string& key) {
    double out = 0.0;
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), last, out);
    if (ec != std::errc{} || ptr != last || !(out > 0.0)) {
        throw InputError("hyperparameter '" + key + "' must be a positive number, got '" +
                         value + "'");
    }
    return out;
}

inline int parse_int_min(const std::string& value, const std::string& key, int min) {
    int out = 0;
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), last, out);
    if (ec != std::errc{} || ptr != last || out < min) {
        throw InputError("hyperparameter '" + key + "' must be an integer >= " +
                         std::to_string(min) + ", got '" + value + "'");
    }
    return out;
}

// "none" encodes an unlimited depth; internally -1.
inline int parse_depth(const std::string& value) {
    if (value == "none") return -1;
    return parse_int_min(value, "max_depth", 1);
}

inline std::string depth_to_string(int depth) {
    return depth < 0 ? "none" : std::to_string(depth);
}

}  // namespace manazel::detail
