#include "awop/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace awop {

namespace {
constexpr double pi = std::numbers::pi;
}

QuadratureRule gauss_chebyshev_first(int m) {
  if (m < 1) throw std::invalid_argument("quadrature::gauss_chebyshev_first: M >= 1 required");
  QuadratureRule rule{RuleFamily::GaussChebyshevFirst, {}, {}};
  rule.nodes.resize(m);
  rule.weights.assign(m, pi / m);
  // cos((2k+1)pi/(2M)) is decreasing in k; fill ascending.
  for (int i = 0; i < m; ++i) {
    int k = m - 1 - i;
    rule.nodes[i] = std::cos((2.0 * k + 1.0) * pi / (2.0 * m));
  }
  return rule;
}

QuadratureRule gauss_chebyshev_second(int m) {
  if (m < 1) throw std::invalid_argument("quadrature::gauss_chebyshev_second: M >= 1 required");
  QuadratureRule rule{RuleFamily::GaussChebyshevSecond, {}, {}};
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    int k = m - i;  // k = 1..M descending in node value, so ascending here
    double t = k * pi / (m + 1.0);
    double s = std::sin(t);
    rule.nodes[i] = std::cos(t);
    rule.weights[i] = pi / (m + 1.0) * s * s;
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int m) {
  if (m < 2) throw std::invalid_argument("quadrature::periodic_trapezoid: M >= 2 required");
  QuadratureRule rule{RuleFamily::PeriodicTrapezoid, {}, {}};
  rule.nodes.resize(m);
  rule.weights.assign(m, 2.0 * pi / m);
  for (int j = 0; j < m; ++j) rule.nodes[j] = -pi + 2.0 * pi * j / m;
  return rule;
}

SampledFunction::SampledFunction(QuadratureRule r, std::vector<double> v)
    : rule(std::move(r)), values(std::move(v)) {
  if (values.size() != rule.nodes.size())
    throw std::invalid_argument("quadrature::SampledFunction: values/nodes length mismatch");
}

SampledFunction sample(const QuadratureRule& rule, const std::function<double(double)>& f) {
  std::vector<double> v(rule.nodes.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(rule.nodes[i]);
  return SampledFunction(rule, std::move(v));
}

double integrate(const SampledFunction& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.rule.weights[i] * f.values[i];
  return acc;
}

}  // namespace awop
