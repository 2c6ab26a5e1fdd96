#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "awop/chebyshev.hpp"
#include "awop/qcore.hpp"
#include "awop/quadrature.hpp"

namespace awop {

// Spectral multipliers mu_n = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
// The divided-difference operator maps T_n -> mu_n U_{n-1}; the multipliers
// are symmetric under q -> 1/q and strictly increasing with mu_1 = 1.
class AWCoefficientMap {
 public:
  AWCoefficientMap(const QParameter& q, int n_max);

  double mu(int n) const;  // n in [1, n_max]
  int n_max() const { return static_cast<int>(mu_.size()) - 1; }
  const QParameter& q() const { return q_; }

 private:
  QParameter q_;
  std::vector<double> mu_;  // slot 0 unused
};

// Ellipse with foci +-1 and semi-axes (q^{-1/2} +- q^{1/2})/2; functions the
// inverse operator produces extend analytically to its interior.
struct EllipseOfAnalyticity {
  QParameter q;
  double semi_major;
  double semi_minor;

  explicit EllipseOfAnalyticity(const QParameter& q_in);
};

// Coefficient action: g_n = mu_n f_n for n >= 1; the constant term dies.
ChebyshevSeriesU dq_spectral(const ChebyshevSeriesT& f, const QParameter& q);

// Right inverse on coefficients: f_n = g_n / mu_n, f_0 = 0 (gauge choice;
// constants are not recoverable).
ChebyshevSeriesT dq_inverse_spectral(const ChebyshevSeriesU& g, const QParameter& q);

// Pointwise divided difference at x = cos(theta) in (-1,1), from a
// caller-supplied analytic extension fbreve evaluated at q^{+-1/2} e^{i theta}.
// A non-real residual above 1e-10 means fbreve is not the analytic extension
// of a real function and is reported as an error; so are the endpoints.
double dq_pointwise(const std::function<std::complex<double>(std::complex<double>)>& fbreve,
                    double x, const QParameter& q);

enum class QDiffClass { Converging, Diverging, Inconclusive };

struct QDifferentiabilityReport {
  std::vector<double> partial_sums;  // partial sums of |(1-q^n) q^{-n/2} f_n|^2
  double tail_ratio;                 // estimated geometric ratio of the tail terms
  QDiffClass classification;
};

// Diagnostic for the summability condition sum |(1-q^n) q^{-n/2} f_n|^2.
QDifferentiabilityReport check_q_differentiable(const std::function<double(int)>& coeff,
                                                const QParameter& q, int horizon);
QDifferentiabilityReport check_q_differentiable(const ChebyshevSeriesT& f,
                                                const QParameter& q, int horizon);

// Bilinear kernel of the inverse against the weight sqrt(1-y^2):
// (2(1-q)/(pi sqrt q)) sum_{n>=1} T_n(x) U_{n-1}(y) q^{n/2}/(1-q^n).
double kernel_F(double x, double y, const QParameter& q, const Tolerance& tol = {});

// Orientation of the convolution-kernel argument. PhiMinusTheta is the
// calibrated choice under which the integral operator equals
// dq_inverse_spectral; ThetaMinusPhi produces its negative and is retained
// for the calibration experiment.
enum class KernelArgument { PhiMinusTheta, ThetaMinusPhi };

// Theta-kernel integral form of the right inverse:
//   out(theta) = (1-q)/(4 pi sqrt q) * sum_j w_j K((phi_j - theta)/2) g_j sin(phi_j)
// with K the Fourier-series logarithmic derivative of vartheta_4 at nome
// sqrt(q), and g_j = g(cos phi_j) on a periodic trapezoid grid.
class IntegralInverse {
 public:
  IntegralInverse(const QParameter& q, QuadratureRule grid, std::vector<double> theta_out,
                  KernelArgument arg = KernelArgument::PhiMinusTheta,
                  const Tolerance& tol = {});

  std::vector<double> apply(std::span<const double> samples) const;
  const std::vector<double>& theta_out() const { return theta_out_; }

 private:
  QuadratureRule grid_;
  std::vector<double> theta_out_;
  std::vector<double> kernel_;  // (n_out x M) row-major, weights folded in
};

std::vector<double> dq_inverse_integral(const SampledFunction& g, const QParameter& q,
                                        std::span<const double> theta_out,
                                        KernelArgument arg = KernelArgument::PhiMinusTheta,
                                        const Tolerance& tol = {});

// Same operator through the truncated bilinear kernel; independent route
// used to cross-check the theta-kernel path.
std::vector<double> dq_inverse_series_kernel(const SampledFunction& g, const QParameter& q,
                                             std::span<const double> theta_out,
                                             const Tolerance& tol = {});

struct LimitTableRow {
  double p;
  double value;
  double error;
};

// Error table for applying the operator at parameter p to the inverse taken
// at parameter q, p decreasing toward q from above. The operator at p acts
// spectrally on the degree-capped analysis of the inverse, which is the only
// definition available for merely piecewise-continuous g.
std::vector<LimitTableRow> dp_limit_table(const std::function<double(double)>& g,
                                          const QParameter& q, double x,
                                          std::span<const double> p_values,
                                          int degree = 128, int grid_m = 256,
                                          const Tolerance& tol = {});

}  // namespace awop
