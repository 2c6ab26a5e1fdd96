#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "awop/qcore.hpp"

namespace awop {

// Malformed or mismatching user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rectangular grid of values over one or two named axes, plus metadata.
// values are row-major over the axes in listed order.
struct GridExport {
  std::string command;
  std::vector<std::pair<std::string, std::vector<double>>> axes;
  std::vector<double> values;
  std::map<std::string, std::string> meta;  // sorted keys keep output deterministic
};

std::string format_double(double v);  // 17 significant digits

// CSV: '#'-prefixed meta lines, a header row of axis names plus "value",
// then one row per grid point. JSON: {"axes": {...}, "axis_order": [...],
// "values": [...], "meta": {...}} with numeric meta emitted as numbers.
std::string to_csv(const GridExport& grid);
std::string to_json(const GridExport& grid);

// Line-oriented interchange: one coefficient per line, index implicit from 0.
std::vector<double> read_coefficients(std::istream& in);
void write_coefficients(std::ostream& out, std::span<const double> coeffs);

// Two columns (node, value); comma or whitespace separated on input.
std::vector<std::pair<double, double>> read_samples(std::istream& in);
void write_samples(std::ostream& out, std::span<const double> nodes,
                   std::span<const double> values);

// Check sampled nodes against a declared rule's nodes to 1e-12.
void validate_nodes(std::span<const std::pair<double, double>> samples,
                    std::span<const double> expected, const std::string& family_name);

// Builders for the export-grid targets.
GridExport grid_theta_logderiv(const QParameter& q, int n_points, const Tolerance& tol);
GridExport grid_kernel_F(const QParameter& q, int nx, int ny, const Tolerance& tol);
GridExport grid_kernel_H(const QParameter& q, int nt, int np, const Tolerance& tol);
GridExport grid_weight_w(const QParameter& q, int n_points, const Tolerance& tol);
GridExport grid_map_modulus(double b, double zeta, double shrink, int n_points,
                            const Tolerance& tol);

}  // namespace awop
