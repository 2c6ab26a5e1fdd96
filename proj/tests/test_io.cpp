#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "awop/io.hpp"

using namespace awop;

TEST_CASE("coefficient files") {
  SUBCASE("roundtrip") {
    std::vector<double> c = {0.0, 1.0, -0.25, 3.141592653589793};
    std::ostringstream out;
    write_coefficients(out, c);
    std::istringstream in(out.str());
    auto back = read_coefficients(in);
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(back[i] == c[i]);
  }
  SUBCASE("comments and blanks are skipped") {
    std::istringstream in("# header\n\n1.5\n\n2.5\n");
    auto v = read_coefficients(in);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == 1.5);
    CHECK(v[1] == 2.5);
  }
  SUBCASE("garbage is an input error") {
    std::istringstream in("1.0\nnot-a-number\n");
    CHECK_THROWS_AS(read_coefficients(in), InputError);
  }
}

TEST_CASE("sample files") {
  SUBCASE("roundtrip with both separators") {
    std::istringstream in("0.1 2.0\n0.2,3.0\n");
    auto rows = read_samples(in);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].first == 0.2);
    CHECK(rows[1].second == 3.0);
  }
  SUBCASE("wrong arity is an input error") {
    std::istringstream in("0.1 2.0 9.9\n");
    CHECK_THROWS_AS(read_samples(in), InputError);
    std::istringstream in2("0.1\n");
    CHECK_THROWS_AS(read_samples(in2), InputError);
  }
  SUBCASE("node validation against a declared family") {
    std::vector<std::pair<double, double>> rows = {{0.0, 1.0}, {0.5, 2.0}};
    std::vector<double> expected = {0.0, 0.5};
    CHECK_NOTHROW(validate_nodes(rows, expected, "test"));
    rows[1].first += 1e-9;
    CHECK_THROWS_AS(validate_nodes(rows, expected, "test"), InputError);
  }
}

TEST_CASE("grid exports") {
  QParameter q(0.5);
  Tolerance tol;
  SUBCASE("csv layout for a 1d grid") {
    auto g = grid_theta_logderiv(q, 10, tol);
    std::string csv = to_csv(g);
    CHECK(csv.find("z,value\n") != std::string::npos);
    // 10 rows after the header
    std::size_t rows = 0;
    std::istringstream in(csv);
    std::string line;
    bool past_header = false;
    while (std::getline(in, line)) {
      if (!past_header) {
        past_header = line == "z,value";
        continue;
      }
      if (!line.empty()) ++rows;
    }
    CHECK(rows == 10);
  }
  SUBCASE("csv and json parse to the same values") {
    auto g = grid_kernel_F(q, 6, 5, tol);
    CHECK(g.values.size() == 30);
    std::string csv = to_csv(g);
    auto j = nlohmann::json::parse(to_json(g));
    REQUIRE(j["values"].size() == g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
      CHECK(j["values"][i].get<double>() == g.values[i]);
    // spot-parse one csv row against the json values
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
      if (line == "x,y,value") break;
    std::getline(in, line);
    auto c1 = line.find(','), c2 = line.rfind(',');
    double v = std::strtod(line.substr(c2 + 1).c_str(), nullptr);
    CHECK(v == g.values[0]);
    CHECK(j["meta"]["q"].get<double>() == 0.5);
    CHECK(j["axis_order"][0] == "x");
  }
  SUBCASE("exports are byte-deterministic") {
    auto g1 = grid_weight_w(q, 16, tol);
    auto g2 = grid_weight_w(q, 16, tol);
    CHECK(to_csv(g1) == to_csv(g2));
    CHECK(to_json(g1) == to_json(g2));
  }
  SUBCASE("weight grid is clipped and recorded") {
    auto g = grid_weight_w(q, 8, tol);
    CHECK(g.meta.count("clip") == 1);
    for (double x : g.axes[0].second) CHECK(std::abs(x) <= 1.0 - 1e-6 + 1e-15);
    for (double v : g.values) CHECK(std::isfinite(v));
  }
  SUBCASE("map modulus sweep stays near 1 at shrink 0.999") {
    auto g = grid_map_modulus(0.75, 0.2, 0.999, 16, tol);
    for (double v : g.values) CHECK(std::abs(v - 1.0) <= 1e-2);
  }
}

TEST_CASE("format_double gives 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
}
