#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqmodp/common.hpp"
#include "sqmodp/simulation.hpp"

namespace sqmodp::report {

/// Tabular output: a header row, data rows of the same arity, and free-form
/// summary lines emitted after the data as `# ...` comments.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;
};

/// RFC 4180 style CSV with '\n' line endings. Fields containing a comma,
/// quote or newline are quoted.
/// @throws InvariantError if a row's arity differs from the header's.
[[nodiscard]] std::string emit_csv(const Table& table);

/// Fixed-point decimal with `precision` digits after the point.
[[nodiscard]] std::string format_decimal(double value, int precision);

/// Integers print exactly; proper fractions as a fixed-point decimal.
[[nodiscard]] std::string format_rational(const Rational& value, int precision);

/// Self-contained SVG bar chart with one bar per observed integer value in
/// [min, max]. The axis captions carry p, iterations and seed.
/// @throws DomainError if the histogram is empty.
[[nodiscard]] std::string emit_svg_histogram(const SimReport& report, std::string_view title);

struct ScatterPoint {
  double x;
  double y;
};

/// Self-contained SVG scatter plot.
/// @throws DomainError if there are no points.
[[nodiscard]] std::string emit_svg_scatter(const std::vector<ScatterPoint>& points,
                                           std::string_view title, std::string_view x_label,
                                           std::string_view y_label);

}  // namespace sqmodp::report
