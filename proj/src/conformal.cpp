#include "awop/conformal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "awop/chebyshev.hpp"

namespace awop {

namespace {
constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;
}  // namespace

EllipseGeometry ellipse_from_b(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("conformal::ellipse_from_b: b > 0 required");
  EllipseGeometry g;
  g.b = b;
  g.a = std::sqrt(b * b + 1.0);
  double ab = g.a + b;
  g.rho = ab * ab;
  g.q = 1.0 / (g.rho * g.rho);
  g.u = std::asinh(b);
  return g;
}

cd joukowski_w(cd z) { return z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0); }

bool is_interior(cd z, const EllipseGeometry& geom, double margin) {
  return std::abs(joukowski_w(z)) < geom.a + geom.b - margin;
}

namespace {

void require_interior(cd z, const EllipseGeometry& geom, const char* where) {
  if (!is_interior(z, geom))
    throw std::domain_error(std::string(where) + ": point not strictly inside the ellipse");
}

// Shared envelope-driven truncation state. Term bounds use
// |T_n(z)| <= |w|^n and |U_n(z)| <= (n+1)|w|^n, valid for |w| >= 1, which
// certify the tail even close to the boundary where raw term magnitudes
// fluctuate through zero.
struct EnvelopeStop {
  double rel_eps;
  std::size_t max_terms;
  double scale = 0.0;

  bool done(double bound, double partial_mag, std::size_t n, const char* where,
            double partial_for_error) {
    scale = std::max(scale, partial_mag);
    if (bound < rel_eps * std::max(scale, 1e-300)) return true;
    if (n > max_terms) throw TruncationFailure(where, partial_for_error, n);
    return false;
  }
};

}  // namespace

cd bergman_kernel(cd z, cd zeta, const EllipseGeometry& geom, const Tolerance& tol) {
  tol.validate();
  require_interior(z, geom, "conformal::bergman_kernel");
  require_interior(zeta, geom, "conformal::bergman_kernel");
  const double rho = geom.rho;
  const cd zc = std::conj(zeta);
  const double az = std::abs(joukowski_w(z));
  const double azc = std::abs(joukowski_w(zc));

  cd sum = 0.0;
  // U_n recurrences for both arguments
  cd uz_prev = 0.0, uz = 1.0;
  cd uc_prev = 0.0, uc = 1.0;
  double rp = rho;          // rho^{n+1}
  double env = 1.0;         // (az*azc)^n
  EnvelopeStop stop{tol.rel_eps, tol.max_terms};
  for (std::size_t n = 0;; ++n) {
    double np1 = static_cast<double>(n) + 1.0;
    double denom = rp - 1.0 / rp;
    double bound = np1 * np1 * env / denom;
    if (stop.done(bound, std::abs(sum), n, "conformal::bergman_kernel", std::abs(sum)))
      break;
    sum += np1 * uz * uc / denom;
    cd uz_next = 2.0 * z * uz - uz_prev;
    uz_prev = uz;
    uz = uz_next;
    cd uc_next = 2.0 * zc * uc - uc_prev;
    uc_prev = uc;
    uc = uc_next;
    rp *= rho;
    env *= az * azc;
  }
  return 4.0 / pi * sum;
}

cd mapping_g(cd z, cd zeta, const EllipseGeometry& geom, const Tolerance& tol) {
  tol.validate();
  require_interior(z, geom, "conformal::mapping_g");
  require_interior(zeta, geom, "conformal::mapping_g");
  cd k_diag = bergman_kernel(zeta, zeta, geom, tol);
  if (!(k_diag.real() > 0.0))
    throw std::domain_error("conformal::mapping_g: Bergman diagonal not positive");
  const double rho = geom.rho;
  const cd zc = std::conj(zeta);
  const double az = std::abs(joukowski_w(z));
  const double azc = std::abs(joukowski_w(zc));

  cd sum = 0.0;
  cd t_prev = 1.0, t_cur = z;    // T_m(z), starting at m = 1
  cd u_prev = 0.0, u_cur = 1.0;  // U_{m-1}(conj zeta), starting at m = 1
  double rp = rho;               // rho^m
  double env = az;               // az^m * azc^{m-1}
  EnvelopeStop stop{tol.rel_eps, tol.max_terms};
  for (std::size_t m = 1;; ++m) {
    double denom = rp - 1.0 / rp;
    double bound = static_cast<double>(m) * env / denom;
    if (stop.done(bound, std::abs(sum), m, "conformal::mapping_g", std::abs(sum))) break;
    sum += t_cur * u_cur / denom;
    cd t_next = 2.0 * z * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
    cd u_next = 2.0 * zc * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
    rp *= rho;
    env *= az * azc;
  }
  return std::sqrt(pi / k_diag.real()) * (4.0 / pi) * sum;
}

cd riemann_map(cd z, cd zeta, const EllipseGeometry& geom, const Tolerance& tol) {
  return mapping_g(z, zeta, geom, tol) - mapping_g(zeta, zeta, geom, tol);
}

}  // namespace awop
