#include "awop/awoperator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "awop/theta.hpp"

namespace awop {

namespace {
constexpr double pi = std::numbers::pi;

double mu_of(double q, int n) {
  // (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}); both parts negative for
  // 0 < q < 1, so the ratio is positive.
  double h = 0.5 * static_cast<double>(n);
  return (std::pow(q, h) - std::pow(q, -h)) / (std::sqrt(q) - 1.0 / std::sqrt(q));
}
}  // namespace

AWCoefficientMap::AWCoefficientMap(const QParameter& q, int n_max) : q_(q) {
  if (n_max < 1)
    throw std::invalid_argument("awoperator::AWCoefficientMap: n_max >= 1 required");
  mu_.resize(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) mu_[n] = mu_of(q.q(), n);
  mu_[1] = 1.0;  // exact by definition
}

double AWCoefficientMap::mu(int n) const {
  if (n < 1 || n > n_max())
    throw std::out_of_range("awoperator::AWCoefficientMap: index outside [1, n_max]");
  return mu_[n];
}

EllipseOfAnalyticity::EllipseOfAnalyticity(const QParameter& q_in)
    : q(q_in),
      semi_major(0.5 * (1.0 / q_in.sqrt_q() + q_in.sqrt_q())),
      semi_minor(0.5 * (1.0 / q_in.sqrt_q() - q_in.sqrt_q())) {}

ChebyshevSeriesU dq_spectral(const ChebyshevSeriesT& f, const QParameter& q) {
  std::vector<double> g(f.coeffs.size(), 0.0);
  for (std::size_t n = 1; n < f.coeffs.size(); ++n)
    g[n] = mu_of(q.q(), static_cast<int>(n)) * f.coeffs[n];
  if (g.size() == 1) g.clear();
  return ChebyshevSeriesU(std::move(g));
}

ChebyshevSeriesT dq_inverse_spectral(const ChebyshevSeriesU& g, const QParameter& q) {
  std::vector<double> f(g.coeffs.size(), 0.0);
  for (std::size_t n = 1; n < g.coeffs.size(); ++n)
    f[n] = g.coeffs[n] / mu_of(q.q(), static_cast<int>(n));
  return ChebyshevSeriesT(std::move(f));
}

double dq_pointwise(const std::function<std::complex<double>(std::complex<double>)>& fbreve,
                    double x, const QParameter& q) {
  const double s = 1.0 - x * x;
  if (s < 0.0 || std::sqrt(std::max(s, 0.0)) < 1e-10)
    throw std::domain_error("awoperator::dq_pointwise: x at or outside the endpoints");
  const double sin_theta = std::sqrt(s);
  const std::complex<double> w(x, sin_theta);  // e^{i theta}
  const double sq = q.sqrt_q();
  std::complex<double> num = fbreve(sq * w) - fbreve(w / sq);
  std::complex<double> den = std::complex<double>(0.0, (sq - 1.0 / sq) * sin_theta);
  std::complex<double> val = num / den;
  if (std::abs(val.imag()) > 1e-10)
    throw std::domain_error(
        "awoperator::dq_pointwise: non-real result; fbreve is not an analytic extension");
  return val.real();
}

QDifferentiabilityReport check_q_differentiable(const std::function<double(int)>& coeff,
                                                const QParameter& q, int horizon) {
  if (horizon < 1)
    throw std::invalid_argument("awoperator::check_q_differentiable: horizon >= 1");
  const double qq = q.q();
  std::vector<double> terms(horizon + 1, 0.0);
  QDifferentiabilityReport rep;
  rep.partial_sums.resize(horizon + 1, 0.0);
  double acc = 0.0;
  double qn = 1.0;
  for (int n = 0; n <= horizon; ++n) {
    double t = (1.0 - qn) * std::pow(qq, -0.5 * n) * coeff(n);
    terms[n] = t * t;
    acc += terms[n];
    rep.partial_sums[n] = acc;
    qn *= qq;
  }
  // Geometric fit of the tail: ratio between the last and the mid nonzero
  // term, annualised per step. Dead-zero tails classify as converging.
  int hi = horizon;
  while (hi >= 1 && terms[hi] == 0.0) --hi;
  int mid = std::max(1, horizon / 2);
  while (mid < hi && terms[mid] == 0.0) ++mid;
  if (hi <= mid || terms[mid] == 0.0) {
    rep.tail_ratio = 0.0;
    rep.classification = QDiffClass::Converging;
    return rep;
  }
  rep.tail_ratio = std::pow(terms[hi] / terms[mid], 1.0 / static_cast<double>(hi - mid));
  const double delta = 0.02;
  if (rep.tail_ratio < 1.0 - delta)
    rep.classification = QDiffClass::Converging;
  else if (rep.tail_ratio > 1.0 + delta)
    rep.classification = QDiffClass::Diverging;
  else
    rep.classification = QDiffClass::Inconclusive;
  return rep;
}

QDifferentiabilityReport check_q_differentiable(const ChebyshevSeriesT& f,
                                                const QParameter& q, int horizon) {
  return check_q_differentiable(
      [&f](int n) {
        return n < static_cast<int>(f.coeffs.size()) ? f.coeffs[n] : 0.0;
      },
      q, horizon);
}

double kernel_F(double x, double y, const QParameter& q, const Tolerance& tol) {
  tol.validate();
  const double qq = q.q();
  const double thresh = tol.rel_eps * (1.0 - qq);
  const double pref = 2.0 * (1.0 - qq) / (pi * q.sqrt_q());
  double qh = q.sqrt_q();  // q^{n/2}
  double qn = qq;          // q^n
  // simultaneous recurrences for T_n(x) and U_{n-1}(y)
  double tp = 1.0, tc = x;
  double up = 0.0, uc = 1.0;
  double sum = 0.0;
  for (std::size_t n = 1;; ++n) {
    if (qh < thresh) return pref * sum;
    if (n > tol.max_terms)
      throw TruncationFailure("awoperator::kernel_F", pref * sum, n - 1);
    sum += tc * uc * qh / (1.0 - qn);
    double tn = 2.0 * x * tc - tp;
    tp = tc;
    tc = tn;
    double un = 2.0 * y * uc - up;
    up = uc;
    uc = un;
    qh *= q.sqrt_q();
    qn *= qq;
  }
}

IntegralInverse::IntegralInverse(const QParameter& q, QuadratureRule grid,
                                 std::vector<double> theta_out, KernelArgument arg,
                                 const Tolerance& tol)
    : grid_(std::move(grid)), theta_out_(std::move(theta_out)) {
  if (grid_.family != RuleFamily::PeriodicTrapezoid)
    throw std::invalid_argument(
        "awoperator::IntegralInverse: samples must live on a periodic trapezoid grid");
  const QParameter nome(q.sqrt_q());
  const double pref = (1.0 - q.q()) / (4.0 * pi * q.sqrt_q());
  const std::size_t m = grid_.nodes.size();
  kernel_.resize(theta_out_.size() * m);
  for (std::size_t i = 0; i < theta_out_.size(); ++i) {
    const double theta = theta_out_[i];
    for (std::size_t j = 0; j < m; ++j) {
      const double phi = grid_.nodes[j];
      const double zarg = (arg == KernelArgument::PhiMinusTheta) ? 0.5 * (phi - theta)
                                                                 : 0.5 * (theta - phi);
      kernel_[i * m + j] = pref * grid_.weights[j] *
                           theta4_logderiv(zarg, nome, tol, ThetaMethod::FourierSeries) *
                           std::sin(phi);
    }
  }
}

std::vector<double> IntegralInverse::apply(std::span<const double> samples) const {
  const std::size_t m = grid_.nodes.size();
  if (samples.size() != m)
    throw std::invalid_argument("awoperator::IntegralInverse: sample count mismatch");
  std::vector<double> out(theta_out_.size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    const double* row = kernel_.data() + i * m;
    for (std::size_t j = 0; j < m; ++j) acc += row[j] * samples[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> dq_inverse_integral(const SampledFunction& g, const QParameter& q,
                                        std::span<const double> theta_out,
                                        KernelArgument arg, const Tolerance& tol) {
  IntegralInverse op(q, g.rule, std::vector<double>(theta_out.begin(), theta_out.end()),
                     arg, tol);
  return op.apply(g.values);
}

std::vector<double> dq_inverse_series_kernel(const SampledFunction& g, const QParameter& q,
                                             std::span<const double> theta_out,
                                             const Tolerance& tol) {
  if (g.rule.family != RuleFamily::PeriodicTrapezoid)
    throw std::invalid_argument(
        "awoperator::dq_inverse_series_kernel: samples must live on a periodic trapezoid grid");
  const std::size_t m = g.rule.nodes.size();
  std::vector<double> out(theta_out.size(), 0.0);
  for (std::size_t i = 0; i < theta_out.size(); ++i) {
    const double x = std::cos(theta_out[i]);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double phi = g.rule.nodes[j];
      const double sp = std::sin(phi);
      acc += 0.5 * g.rule.weights[j] * kernel_F(x, std::cos(phi), q, tol) *
             g.values[j] * sp * sp;
    }
    out[i] = acc;
  }
  return out;
}

std::vector<LimitTableRow> dp_limit_table(const std::function<double(double)>& g,
                                          const QParameter& q, double x,
                                          std::span<const double> p_values,
                                          int degree, int grid_m, const Tolerance& tol) {
  for (double p : p_values)
    if (!(p > q.q() && p < 1.0))
      throw std::invalid_argument("awoperator::dp_limit_table: need q < p < 1");

  QuadratureRule grid = periodic_trapezoid(grid_m);
  std::vector<double> samples(grid.nodes.size());
  for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = g(std::cos(grid.nodes[j]));

  // Analysis grid large enough that trapezoid alias harmonics (near grid_m)
  // stay above the retained degrees.
  const int m1 = std::max(grid_m, 2 * (degree + 1));
  QuadratureRule gc1 = gauss_chebyshev_first(m1);
  std::vector<double> theta_out(gc1.nodes.size());
  for (std::size_t i = 0; i < theta_out.size(); ++i) theta_out[i] = std::acos(gc1.nodes[i]);

  IntegralInverse inv(q, grid, theta_out, KernelArgument::PhiMinusTheta, tol);
  SampledFunction h(gc1, inv.apply(samples));
  ChebyshevSeriesT f = analyze_T(h, degree);

  const double gx = g(x);
  std::vector<LimitTableRow> table;
  table.reserve(p_values.size());
  for (double p : p_values) {
    ChebyshevSeriesU u = dq_spectral(f, QParameter(p));
    double val = synthesize(u, x);
    table.push_back({p, val, std::abs(val - gx)});
  }
  return table;
}

}  // namespace awop
