#include "awop/qhermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace awop {

namespace {
constexpr double pi = std::numbers::pi;

std::vector<double> qfactorial_table(double q, int n) {
  // (q;q)_j for j = 0..n
  std::vector<double> t(n + 1);
  t[0] = 1.0;
  double qj = q;
  for (int j = 1; j <= n; ++j) {
    t[j] = t[j - 1] * (1.0 - qj);
    qj *= q;
  }
  return t;
}

// Four-factor product D(s) = prod over the phase pairs theta+phi, theta-phi
// of (1 - 2 s q^j cos(.) + s^2 q^{2j}), all j >= 0. Real by construction.
double four_product(double s, double cos_sum, double cos_diff, double q,
                    const Tolerance& tol) {
  double prod = 1.0;
  double sj = std::abs(s);
  double sq = s;
  for (std::size_t j = 0;; ++j) {
    if (sj * (2.0 + sj) < tol.rel_eps) return prod;
    if (j > tol.max_terms)
      throw TruncationFailure("qhermite::four_product", prod, j);
    double s2 = sq * sq;
    prod *= (1.0 - 2.0 * sq * cos_sum + s2) * (1.0 - 2.0 * sq * cos_diff + s2);
    sq *= q;
    sj *= q;
  }
}
}  // namespace

double qhermite_eval(int n, double x, const QParameter& q) {
  if (n <= 0) return 1.0;
  double prev = 1.0, cur = 2.0 * x;
  double qk = q.q();
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * x * cur - (1.0 - qk) * prev;
    prev = cur;
    cur = next;
    qk *= q.q();
  }
  return cur;
}

double qhermite_direct(int n, double theta, const QParameter& q) {
  if (n == 0) return 1.0;
  auto fac = qfactorial_table(q.q(), n);
  // terms k and n-k share the same coefficient, so the exponentials fold
  // into cosines
  double sum = 0.0;
  for (int k = 0; 2 * k < n; ++k)
    sum += 2.0 * fac[n] / (fac[k] * fac[n - k]) * std::cos((n - 2 * k) * theta);
  if (n % 2 == 0) {
    int h = n / 2;
    sum += fac[n] / (fac[h] * fac[h]);
  }
  return sum;
}

double weight_product(double x, const QParameter& q, const Tolerance& tol) {
  tol.validate();
  const double c2 = 2.0 * x * x - 1.0;  // cos(2 theta)
  double prod = 1.0;
  double qn = 1.0;
  for (std::size_t n = 0;; ++n) {
    if (qn * (2.0 * std::abs(c2) + qn) < tol.rel_eps) return prod;
    if (n > tol.max_terms)
      throw TruncationFailure("qhermite::weight_product", prod, n);
    prod *= 1.0 - 2.0 * c2 * qn + qn * qn;
    qn *= q.q();
  }
}

double weight_w(double x, const QParameter& q, const Tolerance& tol) {
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("qhermite::weight_w: |x| < 1 required");
  return weight_product(x, q, tol) / std::sqrt(1.0 - x * x);
}

double weight_w_poch(double x, const QParameter& q, const Tolerance& tol) {
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("qhermite::weight_w_poch: |x| < 1 required");
  const double sin_theta = std::sqrt(1.0 - x * x);
  const std::complex<double> e2(2.0 * x * x - 1.0, 2.0 * x * sin_theta);  // e^{2 i theta}
  const std::complex<double> args[2] = {e2, std::conj(e2)};
  std::complex<double> p = qpochhammer_multi(std::span<const std::complex<double>>(args, 2),
                                             q, n_infinity, tol);
  return p.real() / sin_theta;
}

double generating_function(double x, double r, const QParameter& q, const Tolerance& tol) {
  tol.validate();
  if (!(std::abs(r) < 1.0))
    throw std::invalid_argument("qhermite::generating_function: |r| < 1 required");
  double prod = 1.0;
  double rn = r;
  double an = std::abs(r);
  for (std::size_t n = 0;; ++n) {
    if (an * (2.0 * std::abs(x) + an) < tol.rel_eps) return 1.0 / prod;
    if (n > tol.max_terms)
      throw TruncationFailure("qhermite::generating_function", 1.0 / prod, n);
    double f = 1.0 - 2.0 * x * rn + rn * rn;
    if (std::abs(f) < 1e-300)
      throw std::domain_error("qhermite::generating_function: vanishing factor");
    prod *= f;
    rn *= q.q();
    an *= q.q();
  }
}

double orthogonality_check(int m, int n, const QParameter& q, int grid_m,
                           const Tolerance& tol) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("qhermite::orthogonality_check: nonnegative orders");
  QuadratureRule rule = gauss_chebyshev_first(grid_m);
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    double t = rule.nodes[k];
    acc += rule.weights[k] * qhermite_eval(m, t, q) * qhermite_eval(n, t, q) *
           weight_product(t, q, tol);
  }
  return acc;
}

double poisson_kernel(double theta, double phi, double r, const QParameter& q,
                      const Tolerance& tol) {
  tol.validate();
  if (!(std::abs(r) < 1.0))
    throw std::invalid_argument("qhermite::poisson_kernel: |r| < 1 required");
  double num = qpochhammer(r * r, q, n_infinity, tol);
  double den = four_product(r, std::cos(theta + phi), std::cos(theta - phi), q.q(), tol);
  return num / den;
}

double synthesize(const QHermiteSeries& f, double x) {
  // forward accumulation alongside the recurrence
  double acc = 0.0;
  if (f.coeffs.empty()) return acc;
  double prev = 1.0, cur = 2.0 * x;
  acc += f.coeffs[0];
  if (f.coeffs.size() > 1) acc += f.coeffs[1] * cur;
  double qk = f.q.q();
  for (std::size_t n = 2; n < f.coeffs.size(); ++n) {
    double next = 2.0 * x * cur - (1.0 - qk) * prev;
    prev = cur;
    cur = next;
    qk *= f.q.q();
    acc += f.coeffs[n] * cur;
  }
  return acc;
}

QHermiteSeries dq_hermite_spectral(const QHermiteSeries& f) {
  const double q = f.q.q();
  std::vector<double> out(f.coeffs.size() > 1 ? f.coeffs.size() - 1 : 0, 0.0);
  double qn = q;
  for (std::size_t n = 1; n < f.coeffs.size(); ++n) {
    out[n - 1] = f.coeffs[n] * 2.0 * std::pow(q, 0.5 * (1.0 - static_cast<double>(n))) *
                 (1.0 - qn) / (1.0 - q);
    qn *= q;
  }
  return {f.q, std::move(out)};
}

QHermiteSeries dq_inverse_hermite_spectral(const QHermiteSeries& g) {
  const double q = g.q.q();
  std::vector<double> out(g.coeffs.empty() ? 0 : g.coeffs.size() + 1, 0.0);
  double qn = q;
  for (std::size_t n = 1; n <= g.coeffs.size(); ++n) {
    out[n] = g.coeffs[n - 1] * (1.0 - q) *
             std::pow(q, 0.5 * (static_cast<double>(n) - 1.0)) / (2.0 * (1.0 - qn));
    qn *= q;
  }
  return {g.q, std::move(out)};
}

double kernel_H_series(double theta, double phi, double r, const QParameter& q,
                       int n_terms) {
  if (!(std::abs(r) < 1.0))
    throw std::invalid_argument("qhermite::kernel_H_series: |r| < 1 required");
  const double x = std::cos(theta), t = std::cos(phi);
  const double qq = q.q();
  double sum = 0.0;
  double rn = r;
  double fac = 1.0 - qq;   // (q;q)_n
  double qn = qq;          // q^n
  double qn_m1 = 1.0;      // q^{n-1}
  // H_n(x) and H_{n-1}(t) advance together
  double hx_prev = 1.0, hx_cur = 2.0 * x;
  double ht_prev = 0.0, ht_cur = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    sum += rn * hx_cur * ht_cur / fac;
    double hx_next = 2.0 * x * hx_cur - (1.0 - qn) * hx_prev;
    hx_prev = hx_cur;
    hx_cur = hx_next;
    double ht_next = (n == 1) ? 2.0 * t
                              : 2.0 * t * ht_cur - (1.0 - qn_m1) * ht_prev;
    ht_prev = ht_cur;
    ht_cur = ht_next;
    qn_m1 = qn;
    qn *= qq;
    fac *= 1.0 - qn;
    rn *= r;
  }
  return sum;
}

double kernel_H_closed(double theta, double phi, double r, const QParameter& q,
                       const Tolerance& tol) {
  tol.validate();
  if (!(std::abs(r) < 1.0))
    throw std::invalid_argument("qhermite::kernel_H_closed: |r| < 1 required");
  const double qq = q.q();
  const double cos_sum = std::cos(theta + phi), cos_diff = std::cos(theta - phi);
  const double ct = std::cos(theta), cp = std::cos(phi);
  double sum = 0.0;
  double s = r;  // r q^k
  for (std::size_t k = 0;; ++k) {
    if (std::abs(s) < tol.rel_eps) return sum;
    if (k > tol.max_terms) throw TruncationFailure("qhermite::kernel_H_closed", sum, k);
    double num = qpochhammer(s * s * qq, q, n_infinity, tol);
    double den = four_product(s, cos_sum, cos_diff, qq, tol);
    sum += 2.0 * s * (ct - s * cp) * num / den;
    s *= qq;
  }
}

double hermite_inverse_constant(const QParameter& q, const Tolerance& tol) {
  return (1.0 - q.q()) * qpochhammer(q.q(), q, n_infinity, tol) /
         (4.0 * pi * q.sqrt_q());
}

HermiteIntegralInverse::HermiteIntegralInverse(const QParameter& q, QuadratureRule grid,
                                               std::vector<double> x_out,
                                               double normalization, const Tolerance& tol)
    : grid_(std::move(grid)), x_out_(std::move(x_out)) {
  if (grid_.family != RuleFamily::GaussChebyshevFirst)
    throw std::invalid_argument(
        "qhermite::HermiteIntegralInverse: samples must live on a first-kind Gauss grid");
  const double c = (normalization == 0.0) ? hermite_inverse_constant(q, tol) : normalization;
  const double rr = q.sqrt_q();
  const std::size_t m = grid_.nodes.size();
  std::vector<double> wp(m);
  for (std::size_t k = 0; k < m; ++k) wp[k] = weight_product(grid_.nodes[k], q, tol);
  kernel_.resize(x_out_.size() * m);
  for (std::size_t i = 0; i < x_out_.size(); ++i) {
    const double th = std::acos(x_out_[i]);
    for (std::size_t k = 0; k < m; ++k) {
      kernel_[i * m + k] = c * grid_.weights[k] *
                           kernel_H_closed(th, std::acos(grid_.nodes[k]), rr, q, tol) *
                           wp[k];
    }
  }
}

std::vector<double> HermiteIntegralInverse::apply(std::span<const double> samples) const {
  const std::size_t m = grid_.nodes.size();
  if (samples.size() != m)
    throw std::invalid_argument("qhermite::HermiteIntegralInverse: sample count mismatch");
  std::vector<double> out(x_out_.size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    const double* row = kernel_.data() + i * m;
    for (std::size_t k = 0; k < m; ++k) acc += row[k] * samples[k];
    out[i] = acc;
  }
  return out;
}

std::vector<double> dq_inverse_hermite_integral(const SampledFunction& g, const QParameter& q,
                                                std::span<const double> x_out,
                                                double normalization, const Tolerance& tol) {
  HermiteIntegralInverse op(q, g.rule, std::vector<double>(x_out.begin(), x_out.end()),
                            normalization, tol);
  return op.apply(g.values);
}

QHermiteSeries analyze_hermite(const SampledFunction& f, const QParameter& q, int n_max,
                               const Tolerance& tol) {
  if (f.rule.family != RuleFamily::GaussChebyshevFirst)
    throw std::invalid_argument(
        "qhermite::analyze_hermite: samples must live on a first-kind Gauss grid");
  const std::size_t m = f.rule.nodes.size();
  const double qinf = qpochhammer(q.q(), q, n_infinity, tol);
  auto fac = qfactorial_table(q.q(), n_max);
  std::vector<double> c(n_max + 1, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = f.rule.nodes[k];
    const double wf = f.rule.weights[k] * f.values[k] * weight_product(t, q, tol);
    double prev = 1.0, cur = 2.0 * t;
    c[0] += wf;
    if (n_max >= 1) c[1] += wf * cur;
    double qk = q.q();
    for (int n = 2; n <= n_max; ++n) {
      double next = 2.0 * t * cur - (1.0 - qk) * prev;
      prev = cur;
      cur = next;
      qk *= q.q();
      c[n] += wf * cur;
    }
  }
  for (int n = 0; n <= n_max; ++n) c[n] *= qinf / (2.0 * pi * fac[n]);
  return {q, std::move(c)};
}

}  // namespace awop
