#pragma once

#include <complex>
#include <vector>

#include "awop/quadrature.hpp"

namespace awop {

// T_n and U_n by the forward three-term recurrence. Valid for real and
// complex arguments; complex evaluation never goes through arccos, so all
// branch decisions stay with the caller.
template <typename Scalar>
Scalar eval_T(int n, Scalar x) {
  if (n <= 0) return Scalar(1.0);
  Scalar prev(1.0), cur = x;
  for (int k = 1; k < n; ++k) {
    Scalar next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename Scalar>
Scalar eval_U(int n, Scalar x) {
  if (n <= 0) return Scalar(1.0);
  Scalar prev(1.0), cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    Scalar next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Expansion over T_n; coeffs[n] multiplies T_n. Trailing zeros are legal;
// trim() produces the canonical form.
struct ChebyshevSeriesT {
  std::vector<double> coeffs;

  ChebyshevSeriesT() = default;
  explicit ChebyshevSeriesT(std::vector<double> c) : coeffs(std::move(c)) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  void trim();
};

// Expansion g = sum_{n>=1} g_n U_{n-1}; coeffs[n] is g_n and slot 0 is
// unused, kept identically zero so indices match the n >= 1 convention.
struct ChebyshevSeriesU {
  std::vector<double> coeffs;

  ChebyshevSeriesU() = default;
  explicit ChebyshevSeriesU(std::vector<double> c);

  int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
  void trim();
};

// Clenshaw evaluation (backward recurrence; stable on [-1,1]).
double synthesize(const ChebyshevSeriesT& f, double x);
double synthesize(const ChebyshevSeriesU& g, double x);

// Discrete projections. analyze_T needs first-kind samples with M >= N+1;
// analyze_U needs second-kind samples with M >= N.
ChebyshevSeriesT analyze_T(const SampledFunction& f, int degree);
ChebyshevSeriesU analyze_U(const SampledFunction& g, int degree);

}  // namespace awop
