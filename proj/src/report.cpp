#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "swipt/sweep.hpp"

namespace swipt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v, int digits) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string prob(double v) { return fmt(v, 9); }
std::string full(double v) { return fmt(v, 17); }

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
  out.push_back(cur);
  return out;
}

double cell(const std::string& s) {
  if (s.empty()) return kNaN;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad CSV number '" + s + "'");
  return v;
}

}  // namespace

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> h = {
      "variable", "value",     "mode",      "analytic_pu", "analytic_su",
      "mc_pu",    "mc_pu_se",  "mc_su",     "mc_su_se",    "oracle_pu",
      "oracle_su", "se",       "ee",        "flags",       "error"};
  return h;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto& h = csv_header();
  for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
  out << '\n';
  for (const SweepRow& r : rows) {
    out << quote(r.variable) << ',' << full(r.value) << ',' << quote(r.mode) << ','
        << prob(r.analytic_pu) << ',' << prob(r.analytic_su) << ',' << prob(r.mc_pu) << ','
        << full(r.mc_pu_se) << ',' << prob(r.mc_su) << ',' << full(r.mc_su_se) << ','
        << prob(r.oracle_pu) << ',' << prob(r.oracle_su) << ',' << full(r.se) << ','
        << full(r.ee) << ',' << quote(r.flags) << ',' << quote(r.error) << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (split_csv_line(line) != csv_header()) throw std::invalid_argument("unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != csv_header().size()) throw std::invalid_argument("wrong CSV column count");
    SweepRow r;
    r.variable = f[0];
    r.value = cell(f[1]);
    r.mode = f[2];
    r.analytic_pu = cell(f[3]);
    r.analytic_su = cell(f[4]);
    r.mc_pu = cell(f[5]);
    r.mc_pu_se = cell(f[6]);
    r.mc_su = cell(f[7]);
    r.mc_su_se = cell(f[8]);
    r.oracle_pu = cell(f[9]);
    r.oracle_su = cell(f[10]);
    r.se = cell(f[11]);
    r.ee = cell(f[12]);
    r.flags = f[13];
    r.error = f[14];
    rows.push_back(std::move(r));
  }
  return rows;
}

PlotMetric parse_plot_metric(std::string_view s) {
  if (s == "outage") return PlotMetric::outage;
  if (s == "se") return PlotMetric::se;
  if (s == "ee") return PlotMetric::ee;
  throw std::invalid_argument("unknown plot metric '" + std::string(s) + "'");
}

void write_svg(std::ostream& out, const std::vector<SweepRow>& rows, PlotMetric metric) {
  struct Series {
    std::vector<std::pair<double, double>> pts;
    bool dashed = false;
  };
  std::map<std::string, Series> series;
  const bool log_y = metric == PlotMetric::outage;
  constexpr double kFloor = 1e-6;
  const auto add = [&](const std::string& name, double x, double y, bool dashed) {
    if (std::isnan(y)) return;
    if (log_y) y = std::log10(std::max(y, kFloor));
    auto& s = series[name];
    s.dashed = dashed;
    s.pts.emplace_back(x, y);
  };
  for (const SweepRow& r : rows) {
    if (metric == PlotMetric::outage) {
      add(r.mode + " PU analytic", r.value, r.analytic_pu, false);
      add(r.mode + " SU analytic", r.value, r.analytic_su, true);
      add(r.mode + " PU MC", r.value, r.mc_pu, false);
      add(r.mode + " SU MC", r.value, r.mc_su, true);
      add(r.mode + " PU oracle", r.value, r.oracle_pu, false);
      add(r.mode + " SU oracle", r.value, r.oracle_su, true);
    } else {
      add(r.mode, r.value, metric == PlotMetric::se ? r.se : r.ee, false);
    }
  }

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& [name, s] : series) {
    for (const auto& [x, y] : s.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (series.empty()) xmin = ymin = 0.0, xmax = ymax = 1.0;
  if (log_y) {
    ymin = std::floor(ymin);
    ymax = std::max(std::ceil(ymax), ymin + 1.0);
  } else if (ymax <= ymin) {
    ymax = ymin + 1.0;
  }
  if (xmax <= xmin) xmax = xmin + 1.0;

  const double W = 760, H = 480, L = 70, R = 190, T = 30, B = 50;
  const auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  const auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

  std::string variable = rows.empty() ? "" : rows.front().variable;
  const char* ylabel = metric == PlotMetric::outage ? "outage probability (log10)"
                       : metric == PlotMetric::se   ? "SE [bps/Hz]"
                                                    : "EE [bps/Hz/W]";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
      << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = xmin + (xmax - xmin) * i / 5.0;
    const double y = ymin + (ymax - ymin) * i / 5.0;
    out << "<text x=\"" << px(x) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">"
        << fmt(x, 4) << "</text>\n";
    out << "<text x=\"" << L - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">"
        << (log_y ? "1e" + fmt(y, 3) : fmt(y, 4)) << "</text>\n";
  }
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">"
      << variable << "</text>\n";
  out << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (T + H - B) / 2 << ")\">" << ylabel << "</text>\n";

  int idx = 0;
  for (const auto& [name, s] : series) {
    const char* color = colors[idx % 8];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6 3\"" : "") << " points=\"";
    for (const auto& [x, y] : s.pts) out << px(x) << ',' << py(y) << ' ';
    out << "\"/>\n";
    const double ly = T + 14 + 16 * idx;
    out << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - R + 34
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6 3\"" : "") << "/>\n";
    out << "<text x=\"" << W - R + 40 << "\" y=\"" << ly << "\">" << name << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
}

}  // namespace swipt
