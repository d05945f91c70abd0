#include "sqmodp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sqmodp::report {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 50;
constexpr double kBottom = 70;

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_decimal(v, 2); }

void open_svg(std::ostringstream& os, std::string_view title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"16\">"
     << xml_escape(title) << "</text>\n";
}

void axes(std::ostringstream& os, std::string_view x_label, std::string_view y_label) {
  const double x0 = kLeft, y0 = kHeight - kBottom;
  os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << kWidth - kRight << "\" y2=\"" << y0
     << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << x0 << "\" y1=\"" << kTop << "\" x2=\"" << x0 << "\" y2=\"" << y0
     << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 20
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(x_label)
     << "</text>\n"
     << "<text x=\"18\" y=\"" << (kTop + y0) / 2 << "\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 18 " << (kTop + y0) / 2
     << ")\">" << xml_escape(y_label) << "</text>\n";
}

void tick(std::ostringstream& os, double x, double y, std::string_view anchor, const std::string& label) {
  os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor
     << "\" font-family=\"sans-serif\" font-size=\"10\">" << xml_escape(label) << "</text>\n";
}

}  // namespace

std::string emit_csv(const Table& table) {
  std::string out;
  const auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  };
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.header.size()) {
      throw InvariantError("csv row " + std::to_string(r) + " has " +
                           std::to_string(table.rows[r].size()) + " fields, header has " +
                           std::to_string(table.header.size()));
    }
  }
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  for (const auto& line : table.footer) out += "# " + line + '\n';
  return out;
}

std::string format_decimal(double value, int precision) {
  precision = std::clamp(precision, 0, 17);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s(buf);
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
    if (s.front() == '-') s.erase(0, 1);
  }
  return s;
}

std::string format_rational(const Rational& value, int precision) {
  if (value.den == 1) return std::to_string(value.num);
  return format_decimal(value.to_double(), precision);
}

std::string emit_svg_histogram(const SimReport& report, std::string_view title) {
  if (report.histogram.empty()) throw DomainError("cannot draw an empty histogram");
  const u64 lo = report.histogram.begin()->first;
  const u64 hi = report.histogram.rbegin()->first;
  u64 peak = 0;
  for (const auto& [v, c] : report.histogram) peak = std::max(peak, c);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double bar_w = plot_w / static_cast<double>(hi - lo + 1);
  const double base = kHeight - kBottom;

  std::ostringstream os;
  open_svg(os, title);
  os << "<g fill=\"steelblue\" stroke=\"none\">\n";
  for (const auto& [v, c] : report.histogram) {
    const double h = plot_h * static_cast<double>(c) / static_cast<double>(peak);
    const double x = kLeft + bar_w * static_cast<double>(v - lo);
    os << "<rect x=\"" << num(x) << "\" y=\"" << num(base - h) << "\" width=\"" << num(bar_w)
       << "\" height=\"" << num(h) << "\"><title>" << v << ": " << c << "</title></rect>\n";
  }
  os << "</g>\n";
  const std::string x_label = report.statistic + " (p=" + std::to_string(report.p) +
                              ", iterations=" + std::to_string(report.config.iterations) +
                              ", seed=" + std::to_string(report.config.seed) + ")";
  axes(os, x_label, "count");
  tick(os, kLeft + bar_w / 2, base + 15, "middle", std::to_string(lo));
  if (hi != lo) tick(os, kLeft + bar_w * (static_cast<double>(hi - lo) + 0.5), base + 15, "middle", std::to_string(hi));
  tick(os, kLeft - 5, kTop + 4, "end", std::to_string(peak));
  tick(os, kLeft - 5, base, "end", "0");
  tick(os, kWidth - kRight, kTop - 6, "end",
       "mean " + format_decimal(report.sample_mean, 2) + ", sd " + format_decimal(report.sample_sd, 2));
  os << "</svg>\n";
  return os.str();
}

std::string emit_svg_scatter(const std::vector<ScatterPoint>& points, std::string_view title,
                             std::string_view x_label, std::string_view y_label) {
  if (points.empty()) throw DomainError("cannot draw an empty scatter plot");
  double xmin = points[0].x, xmax = points[0].x, ymin = points[0].y, ymax = points[0].y;
  for (const auto& pt : points) {
    xmin = std::min(xmin, pt.x);
    xmax = std::max(xmax, pt.x);
    ymin = std::min(ymin, pt.y);
    ymax = std::max(ymax, pt.y);
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double xr = xmax > xmin ? xmax - xmin : 1.0;
  const double yr = ymax > ymin ? ymax - ymin : 1.0;
  const double base = kHeight - kBottom;

  std::ostringstream os;
  open_svg(os, title);
  os << "<g fill=\"firebrick\">\n";
  for (const auto& pt : points) {
    const double cx = kLeft + 5 + (plot_w - 10) * (pt.x - xmin) / xr;
    const double cy = base - 5 - (plot_h - 10) * (pt.y - ymin) / yr;
    os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"2\"/>\n";
  }
  os << "</g>\n";
  axes(os, x_label, y_label);
  tick(os, kLeft + 5, base + 15, "middle", format_decimal(xmin, 0));
  tick(os, kWidth - kRight - 5, base + 15, "middle", format_decimal(xmax, 0));
  tick(os, kLeft - 5, base - 5, "end", format_decimal(ymin, 0));
  tick(os, kLeft - 5, kTop + 9, "end", format_decimal(ymax, 0));
  os << "</svg>\n";
  return os.str();
}

}  // namespace sqmodp::report
