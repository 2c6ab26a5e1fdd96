#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace awop {

// Truncation policy shared by every infinite product/series in the library.
// rel_eps is a relative threshold; max_terms is a hard cap.
struct Tolerance {
  double rel_eps = 1e-15;
  std::size_t max_terms = 1000000;

  void validate() const;
};

// Base parameter q restricted to the open interval (0,1). Every series in
// the library converges geometrically in some power of q, so construction
// warns on the diagnostic channel when q > 0.999.
class QParameter {
 public:
  explicit QParameter(double q);

  double q() const noexcept { return q_; }
  double sqrt_q() const noexcept { return sqrt_q_; }

 private:
  double q_;
  double sqrt_q_;
};

// Raised when a truncated product/series hits max_terms before reaching its
// threshold. Carries the magnitude of the partial value accumulated so far.
class TruncationFailure : public std::runtime_error {
 public:
  TruncationFailure(const std::string& where, double partial, std::size_t terms);

  double partial_value;
  std::size_t terms_used;
};

// Order argument denoting the infinite product.
inline constexpr std::size_t n_infinity = std::numeric_limits<std::size_t>::max();

// q-shifted factorial (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j); empty product
// is 1. For n_infinity the product stops once |a q^j| < rel_eps.
double qpochhammer(double a, const QParameter& q, std::size_t n,
                   const Tolerance& tol = {});
std::complex<double> qpochhammer(std::complex<double> a, const QParameter& q,
                                 std::size_t n, const Tolerance& tol = {});

// prod_k (a_k;q)_n over a nonempty parameter list.
double qpochhammer_multi(std::span<const double> a, const QParameter& q,
                         std::size_t n, const Tolerance& tol = {});
std::complex<double> qpochhammer_multi(std::span<const std::complex<double>> a,
                                       const QParameter& q, std::size_t n,
                                       const Tolerance& tol = {});

}  // namespace awop
