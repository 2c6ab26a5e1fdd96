#pragma once

#include <cstddef>

#include "awop/qcore.hpp"

namespace awop {

enum class ThetaMethod { DefiningSeries, FourierSeries };

struct ThetaEvaluation {
  double value;
  std::size_t terms_used;
  ThetaMethod method;
};

// vartheta_4(z, q) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2nz), entire in z.
ThetaEvaluation theta4_eval(double z, const QParameter& q, const Tolerance& tol = {});
double theta4(double z, const QParameter& q, const Tolerance& tol = {});

// Logarithmic derivative d/dz log vartheta_4(z, q).
//
// FourierSeries sums 4 sum_{n>=1} q^n/(1-q^{2n}) sin(2nz) in double with
// compensated accumulation. DefiningSeries forms the ratio of the
// term-differentiated theta series; both sums of that ratio run in
// double-double internally because near the minima of vartheta_4 (z = 0
// mod pi, q near 1) the value sits many orders below the largest term.
// The two methods share no truncation logic and cross-check each other.
double theta4_logderiv(double z, const QParameter& q, const Tolerance& tol = {},
                       ThetaMethod method = ThetaMethod::FourierSeries);

}  // namespace awop
