#include <doctest.h>

#include <cmath>
#include <numbers>

#include "awop/theta.hpp"

using namespace awop;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("theta4 frozen values") {
  QParameter q(0.5);
  // oracles: partial sums 1 - 2q + 2q^4 - 2q^9 + ..., frozen at high precision
  CHECK(theta4(0.0, q) == doctest::Approx(0.12112420800258050).epsilon(1e-13));
  CHECK(theta4(pi / 2.0, q) == doctest::Approx(2.1289368272118772).epsilon(1e-14));
}

TEST_CASE("theta4 near q -> 0 degenerates to 1") {
  QParameter q(1e-30);
  for (double z : {0.0, 0.4, 2.0, -1.3}) CHECK(theta4(z, q) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("theta4 periodicity and positivity at the minimum") {
  for (double qq : {0.1, 0.5, 0.9}) {
    QParameter q(qq);
    CHECK(theta4(0.0, q) > 0.0);
    for (double z : {0.3, 1.1, 2.9}) {
      CHECK(theta4(z + 2.0 * pi, q) == doctest::Approx(theta4(z, q)).epsilon(1e-12));
    }
  }
}

TEST_CASE("theta4 term counting and cap") {
  QParameter q(0.5);
  ThetaEvaluation ev = theta4_eval(0.3, q);
  CHECK(ev.terms_used >= 6);
  CHECK(ev.terms_used <= 12);
  Tolerance tight{1e-15, 2};
  CHECK_THROWS_AS(theta4(0.3, q, tight), TruncationFailure);
}

TEST_CASE("logderiv basics") {
  for (double qq : {0.1, 0.5, 0.9}) {
    QParameter q(qq);
    for (auto method : {ThetaMethod::FourierSeries, ThetaMethod::DefiningSeries}) {
      CHECK(theta4_logderiv(0.0, q, {}, method) == doctest::Approx(0.0).epsilon(1e-30));
      // odd in z
      for (double z : {0.2, 0.9, 1.4})
        CHECK(theta4_logderiv(-z, q, {}, method) ==
              doctest::Approx(-theta4_logderiv(z, q, {}, method)).epsilon(1e-13));
    }
    // pi-periodic
    for (double z : {0.3, 1.0}) {
      double a = theta4_logderiv(z, q);
      double b = theta4_logderiv(z + pi, q);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("logderiv frozen spot value") {
  QParameter q(0.3);
  CHECK(theta4_logderiv(0.7, q, {}, ThetaMethod::FourierSeries) ==
        doctest::Approx(1.3147479257302439).epsilon(1e-14));
  CHECK(theta4_logderiv(0.7, q, {}, ThetaMethod::DefiningSeries) ==
        doctest::Approx(1.3147479257302439).epsilon(1e-14));
}

TEST_CASE("cross-method agreement over a 200-point grid") {
  for (double qq : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    QParameter q(qq);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      double z = -pi + 2.0 * pi * i / 200.0;
      double f = theta4_logderiv(z, q, {}, ThetaMethod::FourierSeries);
      double d = theta4_logderiv(z, q, {}, ThetaMethod::DefiningSeries);
      worst = std::max(worst, std::abs(f - d));
    }
    CHECK(worst <= 1e-11);
  }
}
