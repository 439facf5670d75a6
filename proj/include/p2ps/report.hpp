#pragma once

#include <filesystem>
#include <span>

#include "p2ps/harness.hpp"

namespace p2ps {

/// Writes a series as CSV with the columns
/// joins,congestion_degree,intra_as_fraction,top_level_as_count,failures
/// (one row per sample; an absent congestion degree is an empty field).
/// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(const MetricsSeries& series, const std::filesystem::path& path);

/// Draws congestion degree versus joins as an SVG line chart, one polyline
/// per series with a legend. smooth_window > 1 plots the trailing moving
/// average instead of the raw values. Throws std::runtime_error naming the
/// path on I/O failure.
void emit_svg(std::span<const MetricsSeries> series_set,
              const std::filesystem::path& path, int smooth_window = 0);

}  // namespace p2ps
