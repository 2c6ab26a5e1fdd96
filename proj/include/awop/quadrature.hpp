#pragma once

#include <functional>
#include <vector>

namespace awop {

enum class RuleFamily { GaussChebyshevFirst, GaussChebyshevSecond, PeriodicTrapezoid };

struct QuadratureRule {
  RuleFamily family;
  std::vector<double> nodes;    // strictly increasing, inside the open domain
  std::vector<double> weights;  // all positive
};

// Nodes cos((2k+1)pi/(2M)), equal weights pi/M; absorbs (1-x^2)^{-1/2}.
QuadratureRule gauss_chebyshev_first(int m);

// Nodes cos(k pi/(M+1)), weights (pi/(M+1)) sin^2(k pi/(M+1)); absorbs (1-x^2)^{1/2}.
QuadratureRule gauss_chebyshev_second(int m);

// Uniform nodes -pi + 2 pi j/M, weights 2 pi/M; spectrally accurate on
// smooth 2 pi-periodic integrands.
QuadratureRule periodic_trapezoid(int m);

// Function values aligned with a rule's nodes.
struct SampledFunction {
  QuadratureRule rule;
  std::vector<double> values;

  SampledFunction(QuadratureRule r, std::vector<double> v);
};

SampledFunction sample(const QuadratureRule& rule, const std::function<double(double)>& f);

// Fixed-order weighted reduction (deterministic).
double integrate(const SampledFunction& f);

}  // namespace awop
