#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crown/quadrature.hpp"

using namespace crown;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("sphere rules integrate the probability measure") {
  for (int d : {1, 2, 3}) {
    QuadratureRule q = sphere_rule(d, 12);
    double total = 0.0;
    for (double w : q.weights) {
      CHECK(w > 0.0);
      total += w;
    }
    CHECK(std::abs(total - 1.0) < 1e-13);
    for (const auto& u : q.nodes) CHECK(std::abs(u.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("sphere rules: monomial exactness spot checks") {
  for (int d : {1, 2, 3}) {
    QuadratureRule q = sphere_rule(d, 10);
    for (int j = 0; j <= d; ++j) {
      Cx lin = integrate(q, [&](const Eigen::VectorXd& u) { return Cx(u[j], 0); });
      CHECK(std::abs(lin) < 1e-12);
      Cx sq = integrate(q, [&](const Eigen::VectorXd& u) { return Cx(u[j] * u[j], 0); });
      CHECK(std::abs(sq - 1.0 / (d + 1.0)) < 1e-12);
    }
    Cx cub = integrate(q, [&](const Eigen::VectorXd& u) { return Cx(std::pow(u[0], 3), 0); });
    CHECK(std::abs(cub) < 1e-12);
  }
}

TEST_CASE("gauss_jacobi reproduces beta moments") {
  // int (1-t)^a (1+t)^b dt = 2^(a+b+1) B(a+1, b+1)
  for (double a : {-0.5, 0.0, 0.5, 1.0}) {
    for (double b : {-0.5, 0.0, 1.5}) {
      Rule1D r = gauss_jacobi(24, a, b);
      double mass = 0.0, first = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        mass += r.weights[i];
        first += r.weights[i] * r.nodes[i];
      }
      double expect = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                               std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
      CHECK(std::abs(mass - expect) < 1e-12 * expect);
      CHECK(std::abs(first - expect * (b - a) / (a + b + 2.0)) < 1e-12 * expect);
    }
  }
}

TEST_CASE("radial integral basics") {
  for (int n : {1, 2, 3, 4}) {
    CHECK(std::abs(radial_integral(n, [](double) { return 1.0; }) - 1.0) < 1e-12);
    double second = radial_integral(n, [](double t) { return t * t; });
    CHECK(std::abs(second - 1.0 / (n + 1.0)) < 1e-10);
    double odd = radial_integral(n, [](double t) { return t * t * t; });
    CHECK(std::abs(odd) < 1e-12);
  }
}

TEST_CASE("tanh_sinh handles endpoint singularities") {
  double v = tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(std::abs(v + 1.0) < 1e-10);
  double w = tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::abs(w - 2.0) < 1e-10);
}

TEST_CASE("cap_singular_rule matches the radial reduction of the weight") {
  for (int d : {1, 2, 3}) {
    double s = -0.3;
    Eigen::VectorXd axis = Eigen::VectorXd::Zero(d + 1);
    axis[d] = 1.0;
    QuadratureRule q = cap_singular_rule(d, 60, s, axis);
    double total = 0.0;
    for (double w : q.weights) total += w;
    // closed form: c_d 2^{s+d-1} B(s+d/2, d/2)
    double cd = std::exp(std::lgamma((d + 1.0) / 2.0) - 0.5 * std::log(kPi) -
                         std::lgamma(d / 2.0));
    double ref = cd * std::exp((s + d - 1.0) * std::log(2.0) +
                               std::lgamma(s + d / 2.0) + std::lgamma(d / 2.0) -
                               std::lgamma(s + d));
    CHECK(std::abs(total - ref) < 1e-11 * std::abs(ref));
    // convergence on a smooth factor under axis rotation
    Eigen::VectorXd axis2 = Eigen::VectorXd::Ones(d + 1);
    axis2 /= axis2.norm();
    auto value_at = [&](int order) {
      QuadratureRule qq = cap_singular_rule(d, order, s, axis2);
      Cx acc = 0.0;
      for (std::size_t i = 0; i < qq.nodes.size(); ++i)
        acc += qq.weights[i] * std::exp(qq.nodes[i][0]);
      return acc;
    };
    CHECK(std::abs(value_at(60) - value_at(120)) < 1e-10 * (1.0 + std::abs(value_at(120))));
  }
}

TEST_CASE("adaptive sphere quadrature converges and reports node count") {
  auto f = [](const Eigen::VectorXd& u) { return Cx(std::exp(u[0]), 0); };
  AdaptiveResult r = integrate_sphere_adaptive(2, f, 1e-10);
  // int exp(u0) dmu over S^2 = sinh(1)
  CHECK(std::abs(r.value - std::sinh(1.0)) < 1e-10);
  CHECK(r.nodes_used > 0);
  CHECK_THROWS_AS(
      integrate_sphere_adaptive(
          2,
          [](const Eigen::VectorXd& u) {
            return Cx(std::pow(std::abs(1.0 - u[2]) + 1e-300, -0.45), 0);
          },
          1e-13, 400),
      numeric_error);
}
