/// @file snapshot.hpp
/// @brief QNSF binary snapshots.
///
/// Layout, all little-endian: "QNSF", u32 version = 1, u32 d, u32 K, f64 L,
/// d*d f64 theta entries (row-major), u32 field count, then per field M^d
/// (f64 re, f64 im) pairs in grid order.
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qns/qelement.hpp"

namespace qns {

inline constexpr std::uint32_t kQnsfVersion = 1;

/// Encodes fields sharing one grid and theta. Throws PreconditionError on mismatch or empty input.
std::vector<std::uint8_t> encode_snapshot(std::span<const QElement> fields);
/// Throws FormatError on bad magic, version, truncation or trailing bytes.
std::vector<QElement> decode_snapshot(std::span<const std::uint8_t> bytes);

void save_snapshot(const std::filesystem::path& path, std::span<const QElement> fields);
std::vector<QElement> load_snapshot(const std::filesystem::path& path);

}  // namespace qns
