#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace freecert {

/// FNV-1a over bytes; used for content digests in reports (stable id, not
/// cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);

std::string to_hex(std::uint64_t value);

/// Current UTC time as ISO-8601 ("2026-01-02T03:04:05Z").
std::string iso8601_utc_now();

}  // namespace freecert
