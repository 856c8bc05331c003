#pragma once

// Point-set files. CSV holds one point per line with comma-separated
// coordinates ("p/q", integers or decimals); blank lines and lines starting
// with '#' are skipped. JSON is {"dim": d, "points": [[...], ...]} where each
// coordinate is a number or a string in any of the CSV spellings.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "johnsimplex/geometry.hpp"

namespace johnsimplex {

enum class PointFormat { Csv, Json };

std::string to_string(PointFormat format);

/// "csv" or "json"; anything else throws InvalidArgument.
PointFormat parse_point_format(std::string_view name);

/// Guesses from the extension: ".json" is JSON, everything else CSV.
PointFormat format_for_path(const std::filesystem::path& path);

template <Scalar S>
PointSet<S> parse_points_text(std::string_view text, PointFormat format);

/// Throws ParseError when the file cannot be read or is malformed.
template <Scalar S>
PointSet<S> parse_points(const std::filesystem::path& path, std::optional<PointFormat> format = std::nullopt);

/// Inverse of parse_points_text. Exact coordinates are written as "p/q"
/// strings and parse back to the identical set.
template <Scalar S>
std::string serialize_points(const PointSet<S>& points, PointFormat format);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

extern template PointSet<double> parse_points_text(std::string_view, PointFormat);
extern template PointSet<Rational> parse_points_text(std::string_view, PointFormat);
extern template PointSet<double> parse_points(const std::filesystem::path&, std::optional<PointFormat>);
extern template PointSet<Rational> parse_points(const std::filesystem::path&, std::optional<PointFormat>);
extern template std::string serialize_points(const PointSet<double>&, PointFormat);
extern template std::string serialize_points(const PointSet<Rational>&, PointFormat);

}  // namespace johnsimplex
