#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <complex>
#include <numbers>
#include <random>

#include "awop/chebyshev.hpp"

using namespace awop;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("eval_T basics") {
  CHECK(eval_T(3, 0.5) == doctest::Approx(-1.0));
  for (int n = 0; n <= 10; ++n) CHECK(eval_T(n, 1.0) == doctest::Approx(1.0));
  CHECK(eval_T(2, 1.5) == doctest::Approx(3.5));
}

TEST_CASE("eval_U basics") {
  CHECK(eval_U(1, 0.3) == doctest::Approx(0.6));
  for (int n = 0; n <= 10; ++n) CHECK(eval_U(n, 1.0) == doctest::Approx(n + 1.0));
  CHECK(eval_U(2, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("recurrence matches the trigonometric forms on [-1,1]") {
  for (int i = 0; i < 1000; ++i) {
    double theta = pi * (i + 0.5) / 1000.0;
    double x = std::cos(theta);
    for (int n : {1, 7, 23, 50}) {
      CHECK(std::abs(eval_T(n, x) - std::cos(n * theta)) <= 1e-12);
      if (std::abs(std::sin(theta)) > 1e-1)
        CHECK(std::abs(eval_U(n, x) - std::sin((n + 1) * theta) / std::sin(theta)) <= 1e-12);
    }
  }
}

TEST_CASE("complex arguments satisfy the Joukowski identity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mag(1.01, 2.0), arg(0.0, 2.0 * pi);
  for (int t = 0; t < 40; ++t) {
    std::complex<double> w = std::polar(mag(rng), arg(rng));
    std::complex<double> z = 0.5 * (w + 1.0 / w);
    for (int n : {1, 5, 17, 30}) {
      std::complex<double> expect = 0.5 * (std::pow(w, n) + std::pow(w, -n));
      CHECK(std::abs(eval_T(n, z) - expect) <= 1e-10 * std::abs(expect));
    }
  }
}

TEST_CASE("synthesize") {
  SUBCASE("single-term T series") {
    ChebyshevSeriesT f({0.0, 0.0, 1.0});
    CHECK(synthesize(f, 0.5) == doctest::Approx(-0.5));
  }
  SUBCASE("empty series") {
    CHECK(synthesize(ChebyshevSeriesT{}, 0.3) == 0.0);
    CHECK(synthesize(ChebyshevSeriesU{}, 0.3) == 0.0);
  }
  SUBCASE("x^2 = (T_0 + T_2)/2") {
    ChebyshevSeriesT f({0.5, 0.0, 0.5});
    for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0})
      CHECK(std::abs(synthesize(f, x) - x * x) <= 1e-14);
  }
  SUBCASE("U series and slot-0 invariant") {
    CHECK_THROWS_AS(ChebyshevSeriesU({1.0, 0.0}), std::invalid_argument);
    ChebyshevSeriesU g({0.0, 0.0, 0.5});  // y/... g = 0.5 U_1 = y
    CHECK(synthesize(g, 0.4) == doctest::Approx(0.4));
  }
}

TEST_CASE("analyze_T") {
  auto rule = gauss_chebyshev_first(8);
  SUBCASE("orthogonality picks out T_2") {
    auto f = sample(rule, [](double x) { return eval_T(2, x); });
    auto c = analyze_T(f, 5);
    for (int n = 0; n <= 5; ++n)
      CHECK(std::abs(c.coeffs[n] - (n == 2 ? 1.0 : 0.0)) <= 1e-14);
  }
  SUBCASE("x^2 decomposes as (T_0+T_2)/2") {
    auto f = sample(rule, [](double x) { return x * x; });
    auto c = analyze_T(f, 4);
    CHECK(c.coeffs[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(c.coeffs[1]) <= 1e-15);
    CHECK(c.coeffs[2] == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("exp roundtrip at random points") {
    auto big = gauss_chebyshev_first(32);
    auto f = sample(big, [](double x) { return std::exp(x); });
    auto c = analyze_T(f, 16);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      double x = xs(rng);
      CHECK(std::abs(synthesize(c, x) - std::exp(x)) <= 1e-12);
    }
  }
  SUBCASE("grid family is enforced") {
    auto wrong = sample(gauss_chebyshev_second(8), [](double x) { return x; });
    CHECK_THROWS_AS(analyze_T(wrong, 4), std::invalid_argument);
    auto small = sample(gauss_chebyshev_first(3), [](double x) { return x; });
    CHECK_THROWS_AS(analyze_T(small, 4), std::invalid_argument);
  }
}

TEST_CASE("analyze_U") {
  auto rule = gauss_chebyshev_second(8);
  SUBCASE("constant is U_0") {
    auto g = sample(rule, [](double) { return 1.0; });
    auto c = analyze_U(g, 5);
    CHECK(c.coeffs[1] == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 2; n <= 5; ++n) CHECK(std::abs(c.coeffs[n]) <= 1e-14);
  }
  SUBCASE("U_3 lands in slot 4") {
    auto g = sample(rule, [](double y) { return eval_U(3, y); });
    auto c = analyze_U(g, 6);
    for (int n = 1; n <= 6; ++n)
      CHECK(std::abs(c.coeffs[n] - (n == 4 ? 1.0 : 0.0)) <= 1e-14);
  }
  SUBCASE("y = U_1/2") {
    auto g = sample(rule, [](double y) { return y; });
    auto c = analyze_U(g, 4);
    CHECK(c.coeffs[2] == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("analysis-synthesis roundtrip on coefficients") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> cd(-1.0, 1.0);
  const int degree = 12;
  SUBCASE("first kind") {
    std::vector<double> c(degree + 1);
    for (auto& v : c) v = cd(rng);
    ChebyshevSeriesT f(c);
    auto rule = gauss_chebyshev_first(degree + 1);
    auto s = sample(rule, [&](double x) { return synthesize(f, x); });
    auto back = analyze_T(s, degree);
    for (int n = 0; n <= degree; ++n)
      CHECK(std::abs(back.coeffs[n] - c[n]) <= 1e-13);
  }
  SUBCASE("second kind") {
    std::vector<double> c(degree + 1);
    c[0] = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n) c[n] = cd(rng);
    ChebyshevSeriesU g(c);
    auto rule = gauss_chebyshev_second(degree);
    auto s = sample(rule, [&](double y) { return synthesize(g, y); });
    auto back = analyze_U(s, degree);
    for (int n = 1; n <= degree; ++n)
      CHECK(std::abs(back.coeffs[n] - c[n]) <= 1e-13);
  }
}

TEST_CASE("trim") {
  ChebyshevSeriesT f({1.0, 2.0, 0.0, 0.0});
  f.trim();
  CHECK(f.coeffs.size() == 2);
  ChebyshevSeriesU g({0.0, 0.0});
  g.trim();
  CHECK(g.coeffs.empty());
}
