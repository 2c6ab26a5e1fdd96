#pragma once

#include <complex>

#include "awop/qcore.hpp"

namespace awop {

// Ellipse with foci +-1 described by its semi-minor axis b; rho = (a+b)^2
// and the attached q = (a+b)^{-4} satisfy rho = q^{-1/2}.
struct EllipseGeometry {
  double b;    // semi-minor
  double a;    // semi-major = sqrt(b^2 + 1)
  double rho;  // (a+b)^2
  double q;    // (a+b)^{-4}
  double u;    // arcsinh(b), so q = exp(-4u)
};

EllipseGeometry ellipse_from_b(double b);

// z + sqrt(z^2 - 1) with the branch that behaves like z at infinity
// (computed as sqrt(z-1) sqrt(z+1)); |w| = 1 exactly on [-1,1] and
// |w| = a + b on the ellipse boundary.
std::complex<double> joukowski_w(std::complex<double> z);

bool is_interior(std::complex<double> z, const EllipseGeometry& geom, double margin = 1e-9);

// Bergman kernel of the ellipse interior:
//   K(z, zeta) = (4/pi) sum_{n>=0} (n+1) U_n(z) conj(U_n(zeta)) / (rho^{n+1} - rho^{-n-1}).
std::complex<double> bergman_kernel(std::complex<double> z, std::complex<double> zeta,
                                    const EllipseGeometry& geom, const Tolerance& tol = {});

// Antiderivative of the normalized Bergman kernel in z:
//   g(z, zeta) = sqrt(pi/K(zeta,zeta)) (4/pi) sum_{m>=1} T_m(z) conj(U_{m-1}(zeta))
//                / (rho^m - rho^{-m}),
// so that dg/dz = sqrt(pi/K(zeta,zeta)) K(z, zeta).
std::complex<double> mapping_g(std::complex<double> z, std::complex<double> zeta,
                               const EllipseGeometry& geom, const Tolerance& tol = {});

// Riemann map of the ellipse interior onto the open unit disc, normalized by
// f(zeta, zeta) = 0 and f'(zeta, zeta) > 0: f(z, zeta) = g(z, zeta) - g(zeta, zeta).
std::complex<double> riemann_map(std::complex<double> z, std::complex<double> zeta,
                                 const EllipseGeometry& geom, const Tolerance& tol = {});

}  // namespace awop
