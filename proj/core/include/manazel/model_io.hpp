#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "manazel/classifiers.hpp"

namespace manazel {

// Line-oriented model text: `manazel-model v1`, `family: <name>`,
// `seed: <u64>` when the family uses one, `hp.<key>: <value>` lines, a
// family-specific parameter block with decimals at 17 significant digits,
// and a trailing `checksum: <crc32 hex>` over every prior byte. LF endings.
// save -> load -> save is byte-identical.
std::string serialize_model(const Classifier& m);
std::unique_ptr<Classifier> deserialize_model(const std::string& text);

void save_model(const Classifier& m, const std::string& path);
std::unique_ptr<Classifier> load_model(const std::string& path);

// CRC-32 (IEEE 802.3, zlib-compatible). Exposed for format tests.
std::uint32_t crc32(std::string_view bytes);

}  // namespace manazel
