#include "genopt/cli/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace genopt::cli {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string trace_csv(const RunTrace& trace, std::size_t params, std::size_t wells) {
  std::ostringstream out;
  out << "generation,best_cost,mean_cost,median_cost";
  for (std::size_t j = 0; j < params; ++j) out << ",best_x_" << j;
  out << ",diversity,evaluations";
  for (std::size_t w = 0; w < wells; ++w) out << ",niche_" << w;
  out << '\n';
  for (const auto& row : trace.rows) {
    out << row.generation << ',' << format_number(row.best_cost) << ','
        << format_number(row.mean_cost) << ',' << format_number(row.median_cost);
    for (std::size_t j = 0; j < params; ++j)
      out << ',' << format_number(row.best_x[static_cast<Eigen::Index>(j)]);
    out << ',' << format_number(row.diversity) << ',' << row.evaluations;
    for (std::size_t w = 0; w < wells; ++w)
      out << ',' << (w < row.niche_counts.size() ? row.niche_counts[w] : 0);
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("trace: bad number '" + s + "'");
  return v;
}

long long parse_integer(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::runtime_error("trace: bad integer '" + s + "'");
  return v;
}

}  // namespace

RunTrace parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("trace: missing header");
  const auto header = split(line);
  std::size_t params = 0;
  std::size_t wells = 0;
  for (const auto& h : header) {
    if (h.rfind("best_x_", 0) == 0) ++params;
    if (h.rfind("niche_", 0) == 0) ++wells;
  }
  if (header.size() != 6 + params + wells) throw std::runtime_error("trace: unexpected header");

  RunTrace trace;
  while (std::getline(in, line)) {
    const auto cells = split(line);
    if (cells.size() != header.size()) throw std::runtime_error("trace: ragged row");
    TraceRow row;
    std::size_t c = 0;
    row.generation = static_cast<int>(parse_integer(cells[c++]));
    row.best_cost = parse_double(cells[c++]);
    row.mean_cost = parse_double(cells[c++]);
    row.median_cost = parse_double(cells[c++]);
    row.best_x.resize(static_cast<Eigen::Index>(params));
    for (std::size_t j = 0; j < params; ++j)
      row.best_x[static_cast<Eigen::Index>(j)] = parse_double(cells[c++]);
    row.diversity = parse_double(cells[c++]);
    row.evaluations = parse_integer(cells[c++]);
    for (std::size_t w = 0; w < wells; ++w)
      row.niche_counts.push_back(static_cast<std::size_t>(parse_integer(cells[c++])));
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "seed,ga_best,ga_in_global_basin,ps_best,ps_in_global_basin\n";
  std::size_t ga_hits = 0;
  std::size_t ps_hits = 0;
  for (const auto& r : rows) {
    out << r.seed << ',' << format_number(r.ga_best) << ',' << (r.ga_in_global_basin ? 1 : 0) << ','
        << format_number(r.ps_best) << ',' << (r.ps_in_global_basin ? 1 : 0) << '\n';
    ga_hits += r.ga_in_global_basin;
    ps_hits += r.ps_in_global_basin;
  }
  const double n = static_cast<double>(rows.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out << "success_rate,," << format_number(rows.empty() ? nan : ga_hits / n) << ",,"
      << format_number(rows.empty() ? nan : ps_hits / n) << '\n';
  return out.str();
}

std::string front_csv(const std::vector<FrontMember>& members) {
  std::ostringstream out;
  const auto p = members.empty() ? 0 : members.front().x.size();
  const auto k = members.empty() ? 0 : members.front().objectives.size();
  bool first = true;
  auto sep = [&]() -> std::ostream& {
    if (!first) out << ',';
    first = false;
    return out;
  };
  for (Eigen::Index j = 0; j < p; ++j) sep() << "x_" << j;
  for (Eigen::Index i = 0; i < k; ++i) sep() << "f_" << i;
  out << '\n';
  for (const auto& m : members) {
    first = true;
    for (Eigen::Index j = 0; j < p; ++j) sep() << format_number(m.x[j]);
    for (Eigen::Index i = 0; i < k; ++i) sep() << format_number(m.objectives[i]);
    out << '\n';
  }
  return out.str();
}

std::string blocks_csv(const std::vector<BlockStep>& history) {
  std::ostringstream out;
  out << "cycle,block_index,incumbent_cost\n";
  for (const auto& s : history)
    out << s.cycle << ',' << s.block << ',' << format_number(s.incumbent_cost) << '\n';
  return out.str();
}

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 50.0;

struct Frame {
  double x0, x1, y0, y1;

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin); }
  double py(double y) const { return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin); }
};

std::string header(const Frame& f, const std::string& xlabel, const std::string& ylabel) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << kSize - kMargin
      << "\" y2=\"" << kSize - kMargin << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kSize - kMargin << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 12 << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"12\">" << xlabel << "</text>\n"
      << "<text x=\"14\" y=\"" << kSize / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"12\" transform=\"rotate(-90 14 " << kSize / 2 << ")\">" << ylabel << "</text>\n";
  for (double v : {f.x0, f.x1})
    out << "<text x=\"" << format_number(f.px(v)) << "\" y=\"" << kSize - kMargin + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_number(v) << "</text>\n";
  for (double v : {f.y0, f.y1})
    out << "<text x=\"" << kMargin - 6 << "\" y=\"" << format_number(f.py(v) + 3)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << format_number(v)
        << "</text>\n";
  return out.str();
}

std::string shade(double fraction) {
  // light blue at the start, dark blue at the end
  const auto r = static_cast<int>(std::lround(198 - 190 * fraction));
  const auto g = static_cast<int>(std::lround(219 - 171 * fraction));
  const auto b = static_cast<int>(std::lround(239 - 132 * fraction));
  char buffer[16];
  std::snprintf(buffer, sizeof buffer, "#%02x%02x%02x", r, g, b);
  return buffer;
}

}  // namespace

std::string population_svg(const std::vector<Snapshot>& snapshots, const GenomeSpec& genome,
                           const std::vector<Well>& wells) {
  const Frame f{genome.param(0).lo, genome.param(0).hi, genome.param(1).lo, genome.param(1).hi};
  std::ostringstream out;
  out << header(f, genome.param(0).name, genome.param(1).name);
  for (std::size_t s = 0; s < snapshots.size(); ++s) {
    const double fraction =
        snapshots.size() > 1 ? static_cast<double>(s) / static_cast<double>(snapshots.size() - 1) : 1.0;
    const auto colour = shade(fraction);
    out << "<g fill=\"" << colour << "\" fill-opacity=\"0.8\"><title>generation "
        << snapshots[s].generation << "</title>\n";
    const auto& pts = snapshots[s].points;
    for (Eigen::Index i = 0; i < pts.rows(); ++i)
      out << "<circle cx=\"" << format_number(f.px(pts(i, 0))) << "\" cy=\""
          << format_number(f.py(pts(i, 1))) << "\" r=\"3\"/>\n";
    out << "</g>\n";
    out << "<text x=\"" << kSize - kMargin + 4 << "\" y=\"" << kMargin + 14 * s
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"" << colour << "\">g="
        << snapshots[s].generation << "</text>\n";
  }
  for (const auto& w : wells) {
    const double cx = f.px(w.center[0]);
    const double cy = f.py(w.center[1]);
    out << "<path d=\"M " << format_number(cx - 6) << ' ' << format_number(cy - 6) << " L "
        << format_number(cx + 6) << ' ' << format_number(cy + 6) << " M " << format_number(cx - 6)
        << ' ' << format_number(cy + 6) << " L " << format_number(cx + 6) << ' '
        << format_number(cy - 6) << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string front_svg(const std::vector<FrontMember>& members) {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (!members.empty()) {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -std::numeric_limits<double>::infinity();
    for (const auto& m : members) {
      x0 = std::min(x0, m.objectives[0]);
      x1 = std::max(x1, m.objectives[0]);
      y0 = std::min(y0, m.objectives[1]);
      y1 = std::max(y1, m.objectives[1]);
    }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
  }
  const Frame f{x0, x1, y0, y1};
  std::ostringstream out;
  out << header(f, "f_0", "f_1");
  out << "<g fill=\"#084594\">\n";
  for (const auto& m : members)
    out << "<circle cx=\"" << format_number(f.px(m.objectives[0])) << "\" cy=\""
        << format_number(f.py(m.objectives[1])) << "\" r=\"3\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace genopt::cli
