#pragma once

#include <span>
#include <vector>

#include "awop/qcore.hpp"
#include "awop/quadrature.hpp"

namespace awop {

// H_n(x|q) by the three-term recurrence H_{n+1} = 2x H_n - (1-q^n) H_{n-1}.
double qhermite_eval(int n, double x, const QParameter& q);

// Same polynomial from the cosine-folded defining sum at x = cos(theta);
// O(n^2) and kept as a permanent oracle for the recurrence.
double qhermite_direct(int n, double theta, const QParameter& q);

// Orthogonality weight on (-1,1):
//   w(x) = (1-x^2)^{-1/2} prod_{n>=0} (1 - 2(2x^2-1) q^n + q^{2n}).
double weight_w(double x, const QParameter& q, const Tolerance& tol = {});

// The same weight through the complex q-shifted factorial form
// (e^{2 i theta}, e^{-2 i theta}; q)_inf / sin(theta); independent route.
double weight_w_poch(double x, const QParameter& q, const Tolerance& tol = {});

// Product part of the weight, i.e. w(x) sqrt(1-x^2); what first-kind Gauss
// quadrature needs alongside its built-in (1-x^2)^{-1/2}.
double weight_product(double x, const QParameter& q, const Tolerance& tol = {});

// sum_n H_n(x|q) r^n/(q;q)_n = 1/((r e^{i theta}, r e^{-i theta}; q)_inf),
// evaluated as a product of real quadratic factors. Requires |r| < 1.
double generating_function(double x, double r, const QParameter& q,
                           const Tolerance& tol = {});

// int H_m H_n w dx by first-kind Gauss quadrature with M nodes; contract
// value 2 pi (q;q)_n / (q;q)_inf * delta_{mn}.
double orthogonality_check(int m, int n, const QParameter& q, int grid_m,
                           const Tolerance& tol = {});

// Bilinear Poisson kernel sum_n H_n(cos theta) H_n(cos phi) r^n/(q;q)_n in
// closed product form; |r| < 1.
double poisson_kernel(double theta, double phi, double r, const QParameter& q,
                      const Tolerance& tol = {});

struct QHermiteSeries {
  QParameter q;
  std::vector<double> coeffs;  // coeffs[n] multiplies H_n(x|q)
};

double synthesize(const QHermiteSeries& f, double x);

// Coefficient action: H_n -> 2 q^{(1-n)/2} (1-q^n)/(1-q) H_{n-1}.
QHermiteSeries dq_hermite_spectral(const QHermiteSeries& f);

// Right inverse on coefficients: H_{n-1} -> (1-q) q^{(n-1)/2}/(2(1-q^n)) H_n,
// with the H_0 component of the output gauged to zero.
QHermiteSeries dq_inverse_hermite_spectral(const QHermiteSeries& g);

// Kernel of the weighted-space inverse, as a truncated series:
//   sum_{n=1}^{N} r^n H_n(cos theta|q) H_{n-1}(cos phi|q) / (q;q)_n.
double kernel_H_series(double theta, double phi, double r, const QParameter& q,
                       int n_terms);

// Same kernel in closed form, telescoped from the single-step identity
//   H(., ., s) - H(., ., s q) = 2 s (cos theta - s cos phi) (s^2 q; q)_inf / D(s),
// where D(s) is the four-factor product (s e^{+-i(theta +- phi)}; q)_inf:
//   H = sum_{k>=0} 2 r q^k (cos theta - r q^k cos phi) (r^2 q^{2k+1}; q)_inf / D(r q^k).
double kernel_H_closed(double theta, double phi, double r, const QParameter& q,
                       const Tolerance& tol = {});

// Normalization of the weighted integral form of the inverse,
// (1-q)(q;q)_inf/(4 pi sqrt q); fixed by the roundtrip against the
// coefficient map and pinned by a calibration test.
double hermite_inverse_constant(const QParameter& q, const Tolerance& tol = {});

// Integral form of the inverse on L^2[w]:
//   out(x) = c * sum_k w_k H(x, t_k, sqrt q) g(t_k) weight_product(t_k)
// over a first-kind Gauss grid. normalization = 0 selects the shipped
// constant; any other value substitutes it (calibration experiments).
class HermiteIntegralInverse {
 public:
  HermiteIntegralInverse(const QParameter& q, QuadratureRule grid, std::vector<double> x_out,
                         double normalization = 0.0, const Tolerance& tol = {});

  std::vector<double> apply(std::span<const double> samples) const;
  const std::vector<double>& x_out() const { return x_out_; }

 private:
  QuadratureRule grid_;
  std::vector<double> x_out_;
  std::vector<double> kernel_;  // (n_out x M) row-major, weights folded in
};

std::vector<double> dq_inverse_hermite_integral(const SampledFunction& g, const QParameter& q,
                                                std::span<const double> x_out,
                                                double normalization = 0.0,
                                                const Tolerance& tol = {});

// w-weighted projections onto H_0..H_n_max over a first-kind Gauss grid.
QHermiteSeries analyze_hermite(const SampledFunction& f, const QParameter& q, int n_max,
                               const Tolerance& tol = {});

}  // namespace awop
