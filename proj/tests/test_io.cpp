#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>

#include "crown/io.hpp"

using namespace crown;
using nlohmann::json;

TEST_CASE("points round-trip through JSON bit-exactly") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXcd c(4);
    for (int j = 0; j < 4; ++j) c[j] = Cx(g(rng) * std::pow(10.0, i % 7 - 3), g(rng));
    CPoint z(c);
    std::string text = point_to_json(z).dump();
    CPoint back = point_from_json(json::parse(text));
    CHECK((back.coords - z.coords).norm() == 0.0);
  }
}

TEST_CASE("printf %.17g round-trips doubles (CSV contract)") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double v = g(rng) * std::pow(10.0, (i % 13) - 6);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    CHECK(std::strtod(buf, nullptr) == v);
  }
}

TEST_CASE("parse_point: pairs and named points") {
  CPoint z = parse_point("1:0,0:0,0:1.5", 2);
  CHECK(z[0] == Cx(1, 0));
  CHECK(z[2] == Cx(0, 1.5));
  CHECK((parse_point("e0", 3).coords - basis_point(3, 0).coords).norm() == 0.0);
  CHECK((parse_point("en", 3).coords - basis_point(3, 3).coords).norm() == 0.0);
  CHECK((parse_point("xi0", 2).coords - xi0_point(2).coords).norm() == 0.0);
  // bare reals are allowed
  CPoint r = parse_point("0.5,0,0.25", 2);
  CHECK(r[0] == Cx(0.5, 0));
  CHECK_THROWS_AS(parse_point("1:0,2:0", 2), domain_error);
  CHECK_THROWS_AS(parse_point("a:b,c:d,e:f", 2), domain_error);
}

TEST_CASE("parse_word builds generator products") {
  int n = 3;
  LorentzElement g = parse_word("boost:1.2,horo:0.3,0.1", n);
  Eigen::VectorXd v(2);
  v << 0.3, 0.1;
  LorentzElement expect = make_boost(n, 1.2) * make_horospherical(v);
  CHECK((g.L - expect.L).cwiseAbs().maxCoeff() < 1e-14);
  LorentzElement rot = parse_word("rot:1,3,0.7", n);
  CHECK(std::abs(rot.L(1, 1) - std::cos(0.7)) < 1e-15);
  CHECK_THROWS_AS(parse_word("twist:1", n), domain_error);
  CHECK_THROWS_AS(parse_word("horo:1,2,3,4", n), domain_error);
  CHECK_THROWS_AS(parse_word("1.5", n), domain_error);
}

TEST_CASE("lorentz elements round-trip as row-major real matrices") {
  std::mt19937_64 rng(43);
  LorentzElement g = random_word(3, rng, 5, 1.5, 1.5);
  json j = element_to_json(g);
  LorentzElement back = element_from_json(j, 3);
  CHECK((back.L - g.L).cwiseAbs().maxCoeff() == 0.0);
}
