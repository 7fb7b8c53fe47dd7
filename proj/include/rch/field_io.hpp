#pragma once

#include <filesystem>

#include "rch/grid.hpp"

namespace rch::io {

/// CSV with header `x,value`, one row per grid point, 17 significant digits.
void write_csv(const Field& f, const std::filesystem::path& path);
/// Reads a CSV written by write_csv. L is recovered as -2 * x_0.
Field read_csv(const std::filesystem::path& path);

/// Raw dump: float64 L, uint64 N, then N float64 samples, all little-endian.
void write_binary(const Field& f, const std::filesystem::path& path);
Field read_binary(const std::filesystem::path& path);

/// Dispatches on extension: `.csv` or anything else as binary.
Field read_field(const std::filesystem::path& path);

}  // namespace rch::io
