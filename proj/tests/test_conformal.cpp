#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "awop/awoperator.hpp"
#include "awop/conformal.hpp"

using namespace awop;

namespace {
constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;
}  // namespace

TEST_CASE("ellipse geometry") {
  SUBCASE("b = 0.75 closed forms") {
    EllipseGeometry g = ellipse_from_b(0.75);
    CHECK(g.a == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(g.rho == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(g.q == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(g.a * g.a - g.b * g.b == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("sinh parametrization roundtrip") {
    for (double u : {0.2, 1.0, 2.0}) {
      EllipseGeometry g = ellipse_from_b(std::sinh(u));
      CHECK(g.u == doctest::Approx(u).epsilon(1e-13));
      CHECK(g.q == doctest::Approx(std::exp(-4.0 * u)).epsilon(1e-13));
      CHECK(g.rho == doctest::Approx(1.0 / std::sqrt(g.q)).epsilon(1e-13));
    }
  }
  SUBCASE("q decreases as b grows") {
    double prev = 1.0;
    for (double b : {1.0, 10.0, 100.0}) {
      EllipseGeometry g = ellipse_from_b(b);
      CHECK(g.q < prev);
      CHECK(g.q > 0.0);
      prev = g.q;
    }
  }
  SUBCASE("b <= 0 rejected") {
    CHECK_THROWS_AS(ellipse_from_b(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ellipse_from_b(-1.0), std::invalid_argument);
  }
}

TEST_CASE("joukowski branch") {
  // like z at infinity, |w| = 1 on the slit
  CHECK(joukowski_w({5.0, 0.0}).real() == doctest::Approx(5.0 + std::sqrt(24.0)));
  CHECK(joukowski_w({-5.0, 0.0}).real() == doctest::Approx(-5.0 - std::sqrt(24.0)));
  for (double x : {-0.9, 0.0, 0.5}) CHECK(std::abs(joukowski_w({x, 0.0})) == doctest::Approx(1.0));
}

TEST_CASE("bergman kernel") {
  EllipseGeometry geom = ellipse_from_b(0.75);
  SUBCASE("hermitian symmetry at random interior pairs") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> xs(-1.1, 1.1), ys(-0.6, 0.6);
    int tested = 0;
    while (tested < 10) {
      cd z(xs(rng), ys(rng)), zeta(xs(rng), ys(rng));
      if (!is_interior(z, geom) || !is_interior(zeta, geom)) continue;
      ++tested;
      cd a = bergman_kernel(z, zeta, geom);
      cd b = bergman_kernel(zeta, z, geom);
      CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
  SUBCASE("diagonal at 0 matches a long direct sum") {
    double direct = 0.0;
    for (int n = 0; n <= 200; ++n) {
      double un = eval_U(n, 0.0);
      direct += (n + 1.0) * un * un /
                (std::pow(geom.rho, n + 1) - std::pow(geom.rho, -(n + 1)));
    }
    direct *= 4.0 / pi;
    CHECK(bergman_kernel({0.0, 0.0}, {0.0, 0.0}, geom).real() ==
          doctest::Approx(direct).epsilon(1e-13));
  }
  SUBCASE("diagonal positivity") {
    for (double b : {0.5, 0.75, 1.0}) {
      EllipseGeometry g = ellipse_from_b(b);
      CHECK(bergman_kernel({0.0, 0.0}, {0.0, 0.0}, g).real() > 0.0);
    }
  }
  SUBCASE("exterior points rejected") {
    CHECK_THROWS_AS(bergman_kernel({1.3, 0.0}, {0.0, 0.0}, geom), std::domain_error);
    CHECK_THROWS_AS(bergman_kernel({0.0, 0.0}, {0.0, 0.76}, geom), std::domain_error);
  }
}

TEST_CASE("mapping function g") {
  EllipseGeometry geom = ellipse_from_b(0.75);
  SUBCASE("real on the real axis") {
    cd v = mapping_g({0.6, 0.0}, {0.2, 0.0}, geom);
    CHECK(std::abs(v.imag()) <= 1e-14 * std::max(1.0, std::abs(v.real())));
  }
  SUBCASE("60 terms are enough at b = 0.75") {
    cd zeta(0.2, 0.0), z(0.9, 0.3);
    cd full = mapping_g(z, zeta, geom);
    // truncated replica
    cd kz = bergman_kernel(zeta, zeta, geom);
    cd sum = 0.0;
    for (int m = 1; m <= 60; ++m)
      sum += eval_T(m, z) * eval_U(m - 1, std::conj(zeta)) /
             (std::pow(geom.rho, m) - std::pow(geom.rho, -m));
    cd trunc = std::sqrt(pi / kz.real()) * (4.0 / pi) * sum;
    CHECK(std::abs(full - trunc) <= 1e-12 * std::max(1.0, std::abs(full)));
  }
  SUBCASE("proportionality to the bilinear kernel, constant across points") {
    // g(z,zeta) sqrt(K(zeta,zeta)/pi) / F(z,zeta) = 2 sqrt(q)/(1-q) for all
    // real interior pairs; ties the mapping series to the operator kernel.
    QParameter q(geom.q);
    double expect = 2.0 * q.sqrt_q() / (1.0 - q.q());
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> ang(0.15, pi - 0.15);
    double first = 0.0;
    for (int t = 0; t < 20; ++t) {
      double theta = ang(rng), phi = ang(rng);
      cd z(std::cos(theta), 0.0), zeta(std::cos(phi), 0.0);
      double kd = bergman_kernel(zeta, zeta, geom).real();
      double ratio = mapping_g(z, zeta, geom).real() * std::sqrt(kd / pi) /
                     kernel_F(z.real(), zeta.real(), q);
      if (t == 0) first = ratio;
      CHECK(ratio == doctest::Approx(expect).epsilon(1e-8));
      CHECK(ratio == doctest::Approx(first).epsilon(1e-8));
    }
  }
}

TEST_CASE("riemann map") {
  EllipseGeometry geom = ellipse_from_b(0.75);
  cd zeta(0.2, 0.0);
  SUBCASE("normalization point maps to 0 exactly") {
    CHECK(riemann_map(zeta, zeta, geom) == cd(0.0, 0.0));
  }
  SUBCASE("derivative at the normalization point is positive") {
    double h = 1e-6;
    cd d = (riemann_map(zeta + h, zeta, geom) - riemann_map(zeta - h, zeta, geom)) /
           (2.0 * h);
    CHECK(d.real() > 0.0);
    CHECK(std::abs(d.imag()) <= 1e-9);
    // and equals sqrt(pi K(zeta,zeta))
    double expect = std::sqrt(pi * bergman_kernel(zeta, zeta, geom).real());
    CHECK(d.real() == doctest::Approx(expect).epsilon(1e-8));
  }
  SUBCASE("modulus approaches 1 at the boundary") {
    auto sweep = [&](double shrink) {
      double worst = 0.0;
      for (int i = 0; i < 64; ++i) {
        double t = 2.0 * pi * i / 64.0;
        cd z = shrink * cd(geom.a * std::cos(t), geom.b * std::sin(t));
        worst = std::max(worst, std::abs(std::abs(riemann_map(z, zeta, geom)) - 1.0));
      }
      return worst;
    };
    CHECK(sweep(0.999) <= 1e-2);
    CHECK(sweep(0.9999) <= 1e-3);
  }
  SUBCASE("Cauchy-Riemann residual on a 5-point stencil") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> xs(-0.9, 0.9), ys(-0.5, 0.5);
    const double h = 1e-4;
    int tested = 0;
    while (tested < 10) {
      cd z(xs(rng), ys(rng));
      if (!is_interior(z, geom)) continue;
      ++tested;
      cd fx = (riemann_map(z + cd(h, 0), zeta, geom) -
               riemann_map(z - cd(h, 0), zeta, geom)) /
              (2.0 * h);
      cd fy = (riemann_map(z + cd(0, h), zeta, geom) -
               riemann_map(z - cd(0, h), zeta, geom)) /
              (2.0 * h);
      CHECK(std::abs(fx + cd(0, 1) * fy) <= 1e-6);
    }
  }
}
