#include "awop/theta.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace awop {
namespace {

// ---------------------------------------------------------------------------
// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Only what the theta sums need; not exposed outside this translation unit.
// ---------------------------------------------------------------------------

struct dd {
  double hi = 0.0, lo = 0.0;
};

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = dd_add(a, dd_neg(dd_mul(b, q1)));
  double q2 = r.hi / b.hi;
  r = dd_add(r, dd_neg(dd_mul(b, q2)));
  double q3 = r.hi / b.hi;
  dd s = quick_two_sum(q1, q2);
  return dd_add(s, dd{q3, 0.0});
}

// pi/2 split across three doubles; hi+mid is the usual double-double value,
// lo extends it to ~1e-33.
constexpr double kPio2Hi = 1.5707963267948966;
constexpr double kPio2Mid = 6.123233995736766e-17;
constexpr double kPio2Lo = -1.497384905065873e-33;

// Reciprocal factorial tables for the Taylor kernels, built once.
struct InvFactTable {
  std::array<dd, 24> inv;  // inv[k] = 1/k!
  InvFactTable() {
    inv[0] = {1.0, 0.0};
    for (std::size_t k = 1; k < inv.size(); ++k)
      inv[k] = dd_div(inv[k - 1], dd{static_cast<double>(k), 0.0});
  }
};

const InvFactTable& inv_fact() {
  static const InvFactTable table;
  return table;
}

// cos/sin on |r| <= pi/4 + ulp by Taylor series in dd.
void sincos_kernel(dd r, dd& s, dd& c) {
  const auto& f = inv_fact().inv;
  dd r2 = dd_mul(r, r);
  c = {1.0, 0.0};
  s = {1.0, 0.0};  // to be multiplied by r
  dd pc = {1.0, 0.0};
  dd ps = {1.0, 0.0};
  double sign = -1.0;
  for (std::size_t k = 1; k <= 11; ++k) {
    pc = dd_mul(pc, r2);
    ps = dd_mul(ps, r2);
    dd tc = dd_mul(dd_mul(pc, f[2 * k]), sign);
    dd ts = dd_mul(dd_mul(ps, f[2 * k + 1]), sign);
    c = dd_add(c, tc);
    s = dd_add(s, ts);
    sign = -sign;
    if (std::abs(tc.hi) < 1e-35 && std::abs(ts.hi) < 1e-35) break;
  }
  s = dd_mul(s, r);
}

// cos/sin of an exact dd angle x (|x| up to ~1e9) with dd accuracy.
void dd_sincos(dd x, dd& sin_out, dd& cos_out) {
  double k = std::nearbyint(x.hi / kPio2Hi);
  dd r = dd_add(x, dd_neg(two_prod(k, kPio2Hi)));
  r = dd_add(r, dd_neg(two_prod(k, kPio2Mid)));
  r = dd_add(r, dd{-k * kPio2Lo, 0.0});
  dd s, c;
  sincos_kernel(r, s, c);
  long quad = static_cast<long>(k) & 3L;
  if (quad < 0) quad += 4;
  switch (quad) {
    case 0: sin_out = s; cos_out = c; break;
    case 1: sin_out = c; cos_out = dd_neg(s); break;
    case 2: sin_out = dd_neg(s); cos_out = dd_neg(c); break;
    default: sin_out = dd_neg(c); cos_out = s; break;
  }
}

// Both theta sums at once: value = 1 + 2 sum (-1)^n q^{n^2} cos(2nz),
// deriv = -4 sum (-1)^n n q^{n^2} sin(2nz). The stop rule is value-relative:
// the tail is dominated by q^{n^2}(4n+2), and the threshold tracks the
// running |value| so the lacunary cancellation at the theta minima does not
// eat the budget.
struct ThetaCore {
  dd value;
  dd deriv;
  std::size_t terms;
};

ThetaCore theta4_core(double z, const QParameter& q, const Tolerance& tol) {
  tol.validate();
  ThetaCore out{{1.0, 0.0}, {0.0, 0.0}, 1};
  const dd qd = {q.q(), 0.0};
  const dd q2 = dd_mul(qd, qd);
  dd qodd = qd;  // q^{2n-1}
  dd qpow = qd;  // q^{n^2}
  double sign = -1.0;
  for (std::size_t n = 1;; ++n) {
    double bound = qpow.hi * (4.0 * static_cast<double>(n) + 2.0);
    if (bound < 0.01 * tol.rel_eps * std::abs(out.value.hi)) return out;
    if (n > tol.max_terms)
      throw TruncationFailure("theta::theta4", out.value.hi, n - 1);
    dd s, c;
    dd_sincos(two_prod(2.0 * static_cast<double>(n), z), s, c);
    out.value = dd_add(out.value, dd_mul(dd_mul(qpow, c), 2.0 * sign));
    out.deriv = dd_add(out.deriv,
                       dd_mul(dd_mul(qpow, s), -4.0 * sign * static_cast<double>(n)));
    out.terms = n + 1;
    sign = -sign;
    qodd = dd_mul(qodd, q2);
    qpow = dd_mul(qpow, qodd);
  }
}

double logderiv_fourier(double z, const QParameter& q, const Tolerance& tol) {
  tol.validate();
  const double qq = q.q();
  const double thresh = tol.rel_eps * (1.0 - qq);
  double qn = qq;        // q^n
  double q2n = qq * qq;  // q^{2n}
  const double q2 = qq * qq;
  double sum = 0.0, comp = 0.0;  // compensated accumulation
  for (std::size_t n = 1;; ++n) {
    if (qn < thresh) return sum;
    if (n > tol.max_terms)
      throw TruncationFailure("theta::theta4_logderiv(fourier)", sum, n - 1);
    double term = 4.0 * qn / (1.0 - q2n) * std::sin(2.0 * static_cast<double>(n) * z);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    qn *= qq;
    q2n *= q2;
  }
}

}  // namespace

ThetaEvaluation theta4_eval(double z, const QParameter& q, const Tolerance& tol) {
  ThetaCore core = theta4_core(z, q, tol);
  return {core.value.hi + core.value.lo, core.terms, ThetaMethod::DefiningSeries};
}

double theta4(double z, const QParameter& q, const Tolerance& tol) {
  return theta4_eval(z, q, tol).value;
}

double theta4_logderiv(double z, const QParameter& q, const Tolerance& tol,
                       ThetaMethod method) {
  if (method == ThetaMethod::FourierSeries) return logderiv_fourier(z, q, tol);
  ThetaCore core = theta4_core(z, q, tol);
  if (std::abs(core.value.hi) < 1e-12)
    throw std::domain_error(
        "theta::theta4_logderiv: |theta4| < 1e-12, ratio is ill-conditioned");
  dd r = dd_div(core.deriv, core.value);
  return r.hi + r.lo;
}

}  // namespace awop
