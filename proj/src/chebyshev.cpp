#include "awop/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace awop {

namespace {
constexpr double pi = std::numbers::pi;

void trim_trailing_zeros(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}
}  // namespace

void ChebyshevSeriesT::trim() { trim_trailing_zeros(coeffs); }

ChebyshevSeriesU::ChebyshevSeriesU(std::vector<double> c) : coeffs(std::move(c)) {
  if (!coeffs.empty() && coeffs[0] != 0.0)
    throw std::invalid_argument("chebyshev::ChebyshevSeriesU: slot 0 must be 0");
}

void ChebyshevSeriesU::trim() {
  trim_trailing_zeros(coeffs);
  if (coeffs.size() == 1) coeffs.clear();  // a lone zero slot carries nothing
}

double synthesize(const ChebyshevSeriesT& f, double x) {
  const auto& c = f.coeffs;
  if (c.empty()) return 0.0;
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

double synthesize(const ChebyshevSeriesU& g, double x) {
  const auto& c = g.coeffs;
  if (c.size() < 2) return 0.0;
  // Coefficient of U_m is g_{m+1}; Clenshaw over the U basis ends at b0.
  double b1 = 0.0, b2 = 0.0;
  for (int m = static_cast<int>(c.size()) - 2; m >= 0; --m) {
    double b0 = c[m + 1] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

ChebyshevSeriesT analyze_T(const SampledFunction& f, int degree) {
  if (f.rule.family != RuleFamily::GaussChebyshevFirst)
    throw std::invalid_argument("chebyshev::analyze_T: samples not on first-kind Gauss nodes");
  if (degree < 0) throw std::invalid_argument("chebyshev::analyze_T: degree >= 0 required");
  const std::size_t m = f.rule.nodes.size();
  if (m < static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("chebyshev::analyze_T: need M >= N+1 samples");

  std::vector<double> c(degree + 1, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double x = f.rule.nodes[k];
    const double wf = f.rule.weights[k] * f.values[k];
    double tp = 1.0, tc = x;
    c[0] += wf;
    if (degree >= 1) c[1] += wf * x;
    for (int n = 2; n <= degree; ++n) {
      double tn = 2.0 * x * tc - tp;
      tp = tc;
      tc = tn;
      c[n] += wf * tn;
    }
  }
  c[0] /= pi;
  for (int n = 1; n <= degree; ++n) c[n] *= 2.0 / pi;
  return ChebyshevSeriesT(std::move(c));
}

ChebyshevSeriesU analyze_U(const SampledFunction& g, int degree) {
  if (g.rule.family != RuleFamily::GaussChebyshevSecond)
    throw std::invalid_argument("chebyshev::analyze_U: samples not on second-kind Gauss nodes");
  if (degree < 1) throw std::invalid_argument("chebyshev::analyze_U: degree >= 1 required");
  const std::size_t m = g.rule.nodes.size();
  if (m < static_cast<std::size_t>(degree))
    throw std::invalid_argument("chebyshev::analyze_U: need M >= N samples");

  std::vector<double> c(degree + 1, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double y = g.rule.nodes[k];
    const double wg = g.rule.weights[k] * g.values[k];
    double up = 1.0, uc = 2.0 * y;
    c[1] += wg;  // U_0
    if (degree >= 2) c[2] += wg * uc;
    for (int n = 3; n <= degree; ++n) {
      double un = 2.0 * y * uc - up;
      up = uc;
      uc = un;
      c[n] += wg * un;
    }
  }
  for (int n = 1; n <= degree; ++n) c[n] *= 2.0 / pi;
  return ChebyshevSeriesU(std::move(c));
}

}  // namespace awop
