#include "awop/qcore.hpp"

#include <cmath>
#include <iostream>

namespace awop {

void Tolerance::validate() const {
  if (!(rel_eps > 0.0))
    throw std::invalid_argument("qcore::Tolerance: rel_eps must be > 0");
  if (max_terms < 1)
    throw std::invalid_argument("qcore::Tolerance: max_terms must be >= 1");
}

QParameter::QParameter(double q) : q_(q), sqrt_q_(std::sqrt(q)) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("qcore::QParameter: q must lie strictly in (0,1)");
  if (q > 0.999)
    std::cerr << "awop: warning: q = " << q
              << " is close to 1; term counts scale like 1/(1-q)\n";
}

TruncationFailure::TruncationFailure(const std::string& where, double partial,
                                     std::size_t terms)
    : std::runtime_error(where + ": term cap reached before truncation threshold"),
      partial_value(partial),
      terms_used(terms) {}

namespace {

template <typename Scalar>
Scalar qpoch_impl(Scalar a, const QParameter& q, std::size_t n, const Tolerance& tol) {
  tol.validate();
  Scalar prod(1.0);
  if (n == 0) return prod;
  if (n != n_infinity) {
    double qj = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      prod *= Scalar(1.0) - a * qj;
      qj *= q.q();
    }
    return prod;
  }
  // Infinite product: factors differ from 1 by a q^j, which decays
  // geometrically; stop once that deviation is below rel_eps.
  const double mag_a = std::abs(a);
  double qj = 1.0;
  for (std::size_t j = 0; j < tol.max_terms; ++j) {
    if (mag_a * qj < tol.rel_eps) return prod;
    prod *= Scalar(1.0) - a * qj;
    qj *= q.q();
  }
  throw TruncationFailure("qcore::qpochhammer", std::abs(prod), tol.max_terms);
}

template <typename Scalar>
Scalar qpoch_multi_impl(std::span<const Scalar> a, const QParameter& q, std::size_t n,
                        const Tolerance& tol) {
  if (a.empty())
    throw std::invalid_argument("qcore::qpochhammer_multi: parameter list is empty");
  Scalar prod(1.0);
  for (const Scalar& ak : a) prod *= qpoch_impl<Scalar>(ak, q, n, tol);
  return prod;
}

}  // namespace

double qpochhammer(double a, const QParameter& q, std::size_t n, const Tolerance& tol) {
  return qpoch_impl<double>(a, q, n, tol);
}

std::complex<double> qpochhammer(std::complex<double> a, const QParameter& q,
                                 std::size_t n, const Tolerance& tol) {
  return qpoch_impl<std::complex<double>>(a, q, n, tol);
}

double qpochhammer_multi(std::span<const double> a, const QParameter& q, std::size_t n,
                         const Tolerance& tol) {
  return qpoch_multi_impl<double>(a, q, n, tol);
}

std::complex<double> qpochhammer_multi(std::span<const std::complex<double>> a,
                                       const QParameter& q, std::size_t n,
                                       const Tolerance& tol) {
  return qpoch_multi_impl<std::complex<double>>(a, q, n, tol);
}

}  // namespace awop
