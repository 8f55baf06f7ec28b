#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "profsmooth/peaks.hpp"
#include "profsmooth/series.hpp"

namespace profsmooth {

/// Parses one record per line: either a single numeric token, or several
/// tokens separated by comma, semicolon or whitespace, in which case the
/// last token is the value. Blank lines and lines starting with '#' are
/// skipped. Decimal point only. Throws ParseError (with line number) on
/// malformed records and on input without any data record.
Series read_series(std::istream& in);

/// Reads from a file; IoError if the file cannot be opened.
Series read_series_file(const std::filesystem::path& path);

enum class EmitFormat { Csv, Gnuplot, Svg };

/// Shortest decimal representation that round-trips to the same double.
/// All emitted numbers use this, which makes outputs byte-stable.
std::string format_double(double value);

struct SvgOptions {
    double width = 800;
    double height = 480;
    std::optional<std::pair<double, double>> xrange; // original index units
    std::optional<std::pair<double, double>> yrange;
};

// Series writers. Indices are 1-based original positions.
void write_csv(std::ostream& out, const Series& y);          // "index,value"
void write_gnuplot(std::ostream& out, const Series& y);      // "index value"
void write_svg(std::ostream& out, const Series& y, const SvgOptions& opts = {});

// Peak report writers: one row per peak, header included.
void write_csv(std::ostream& out, const PeakReport& report);
void write_gnuplot(std::ostream& out, const PeakReport& report);

/// Writes to a file in the chosen format; IoError (mentioning the path) on
/// failure. Reports cannot be rendered as SVG (ConfigError).
void emit(const Series& y, EmitFormat format, const std::filesystem::path& dest,
          const SvgOptions& opts = {});
void emit(const PeakReport& report, EmitFormat format,
          const std::filesystem::path& dest);

} // namespace profsmooth
