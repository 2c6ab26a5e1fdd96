#include "awop/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "awop/awoperator.hpp"
#include "awop/conformal.hpp"
#include "awop/qhermite.hpp"
#include "awop/theta.hpp"

namespace awop {

namespace {
constexpr double pi = std::numbers::pi;
constexpr const char* kVersion = "0.1.0";

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end != '\0') {
    if (!std::isspace(static_cast<unsigned char>(*end))) return false;
    ++end;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> linspace(double lo, double hi, int n, bool include_hi) {
  std::vector<double> v(n);
  double step = (hi - lo) / (include_hi ? std::max(n - 1, 1) : n);
  for (int i = 0; i < n; ++i) v[i] = lo + step * i;
  return v;
}
}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const GridExport& grid) {
  std::ostringstream out;
  out << "# command=" << grid.command << "\n";
  for (const auto& [k, v] : grid.meta) out << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < grid.axes.size(); ++i) out << grid.axes[i].first << ",";
  out << "value\n";
  if (grid.axes.size() == 1) {
    const auto& ax = grid.axes[0].second;
    for (std::size_t i = 0; i < ax.size(); ++i)
      out << format_double(ax[i]) << "," << format_double(grid.values[i]) << "\n";
  } else if (grid.axes.size() == 2) {
    const auto& ax = grid.axes[0].second;
    const auto& ay = grid.axes[1].second;
    for (std::size_t i = 0; i < ax.size(); ++i)
      for (std::size_t j = 0; j < ay.size(); ++j)
        out << format_double(ax[i]) << "," << format_double(ay[j]) << ","
            << format_double(grid.values[i * ay.size() + j]) << "\n";
  } else {
    throw std::logic_error("io::to_csv: only 1- and 2-axis grids supported");
  }
  return out.str();
}

std::string to_json(const GridExport& grid) {
  nlohmann::json j;
  nlohmann::json axes = nlohmann::json::object();
  nlohmann::json order = nlohmann::json::array();
  for (const auto& [name, vals] : grid.axes) {
    axes[name] = vals;
    order.push_back(name);
  }
  j["axes"] = axes;
  j["axis_order"] = order;
  j["values"] = grid.values;
  nlohmann::json meta = nlohmann::json::object();
  meta["command"] = grid.command;
  meta["version"] = kVersion;
  for (const auto& [k, v] : grid.meta) {
    double num;
    if (parse_double(v, num))
      meta[k] = num;
    else
      meta[k] = v;
  }
  j["meta"] = meta;
  return j.dump(2) + "\n";
}

std::vector<double> read_coefficients(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    double v;
    if (!parse_double(s, v))
      throw InputError("io::read_coefficients: line " + std::to_string(lineno) +
                       " is not a number: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

void write_coefficients(std::ostream& out, std::span<const double> coeffs) {
  for (double c : coeffs) out << format_double(c) << "\n";
}

std::vector<std::pair<double, double>> read_samples(std::istream& in) {
  std::vector<std::pair<double, double>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream row(s);
    std::string a, b, extra;
    row >> a >> b;
    double node, value;
    if (!parse_double(a, node) || !parse_double(b, value) || (row >> extra))
      throw InputError("io::read_samples: line " + std::to_string(lineno) +
                       " is not 'node value': '" + strip(line) + "'");
    out.emplace_back(node, value);
  }
  return out;
}

void write_samples(std::ostream& out, std::span<const double> nodes,
                   std::span<const double> values) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out << format_double(nodes[i]) << " " << format_double(values[i]) << "\n";
}

void validate_nodes(std::span<const std::pair<double, double>> samples,
                    std::span<const double> expected, const std::string& family_name) {
  if (samples.size() != expected.size())
    throw InputError("io::validate_nodes: expected " + std::to_string(expected.size()) +
                     " " + family_name + " nodes, got " + std::to_string(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (std::abs(samples[i].first - expected[i]) > 1e-12)
      throw InputError("io::validate_nodes: node " + std::to_string(i) + " = " +
                       format_double(samples[i].first) + " does not match the " +
                       family_name + " grid value " + format_double(expected[i]));
  }
}

GridExport grid_theta_logderiv(const QParameter& q, int n_points, const Tolerance& tol) {
  GridExport g;
  g.command = "export-grid/theta-logderiv";
  g.meta["q"] = format_double(q.q());
  auto zs = linspace(-pi, pi, n_points, false);
  g.values.resize(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    g.values[i] = theta4_logderiv(zs[i], q, tol, ThetaMethod::FourierSeries);
  g.axes.emplace_back("z", std::move(zs));
  return g;
}

GridExport grid_kernel_F(const QParameter& q, int nx, int ny, const Tolerance& tol) {
  GridExport g;
  g.command = "export-grid/kernel-F";
  g.meta["q"] = format_double(q.q());
  auto xs = linspace(-1.0, 1.0, nx, true);
  auto ys = linspace(-1.0, 1.0, ny, true);
  g.values.resize(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      g.values[i * ys.size() + j] = kernel_F(xs[i], ys[j], q, tol);
  g.axes.emplace_back("x", std::move(xs));
  g.axes.emplace_back("y", std::move(ys));
  return g;
}

GridExport grid_kernel_H(const QParameter& q, int nt, int np, const Tolerance& tol) {
  GridExport g;
  g.command = "export-grid/kernel-H";
  g.meta["q"] = format_double(q.q());
  g.meta["r"] = format_double(q.sqrt_q());
  auto ts = linspace(0.0, pi, nt, true);
  auto ps = linspace(0.0, pi, np, true);
  g.values.resize(ts.size() * ps.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      g.values[i * ps.size() + j] = kernel_H_closed(ts[i], ps[j], q.sqrt_q(), q, tol);
  g.axes.emplace_back("theta", std::move(ts));
  g.axes.emplace_back("phi", std::move(ps));
  return g;
}

GridExport grid_weight_w(const QParameter& q, int n_points, const Tolerance& tol) {
  GridExport g;
  g.command = "export-grid/weight-w";
  g.meta["q"] = format_double(q.q());
  // the weight blows up like (1-x^2)^{-1/2}; clip the grid at |x| = 1 - 1e-6
  const double clip = 1e-6;
  g.meta["clip"] = format_double(clip);
  auto xs = linspace(-1.0 + clip, 1.0 - clip, n_points, true);
  g.values.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) g.values[i] = weight_w(xs[i], q, tol);
  g.axes.emplace_back("x", std::move(xs));
  return g;
}

GridExport grid_map_modulus(double b, double zeta, double shrink, int n_points,
                            const Tolerance& tol) {
  GridExport g;
  g.command = "export-grid/map-modulus";
  g.meta["b"] = format_double(b);
  g.meta["zeta"] = format_double(zeta);
  g.meta["shrink"] = format_double(shrink);
  EllipseGeometry geom = ellipse_from_b(b);
  g.meta["q"] = format_double(geom.q);
  auto ts = linspace(0.0, 2.0 * pi, n_points, false);
  g.values.resize(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::complex<double> z =
        shrink * std::complex<double>(geom.a * std::cos(ts[i]), geom.b * std::sin(ts[i]));
    g.values[i] = std::abs(riemann_map(z, {zeta, 0.0}, geom, tol));
  }
  g.axes.emplace_back("t", std::move(ts));
  return g;
}

}  // namespace awop
