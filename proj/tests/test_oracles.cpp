#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crown/oracles.hpp"
#include "crown/quadrature.hpp"

using namespace crown;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gegenbauer recurrence") {
  CHECK(gegenbauer(0, 0.7, 0.3) == 1.0);
  CHECK(gegenbauer(1, 1.0, 0.5) == 1.0);  // 2 alpha s
  // Legendre P2(1) = 1 via alpha = 1/2; brute-force expansion value at s=1
  CHECK(std::abs(gegenbauer(2, 0.5, 1.0) - 1.0) < 1e-14);
  // P3(s) = (5 s^3 - 3 s)/2 brute force against the recurrence
  for (double s = -1.0; s <= 1.0; s += 0.25)
    CHECK(std::abs(gegenbauer(3, 0.5, s) - 0.5 * (5 * s * s * s - 3 * s)) < 1e-13);
}

TEST_CASE("zonal projector normalization and reproducing property") {
  CHECK(zonal_projector(2, 0, 0.3) == 1.0);
  for (int n : {2, 3}) {
    for (int q : {1, 2, 5}) {
      CHECK(std::abs(zonal_projector(n, q, 1.0) - harmonic_dimension(q, n)) <
            1e-11 * harmonic_dimension(q, n));
    }
  }
  CHECK(harmonic_dimension(3, 2) == 7.0);       // 2q+1 on S^2
  CHECK(harmonic_dimension(3, 3) == 16.0);      // (q+1)^2 on S^3
  CHECK_THROWS_AS(zonal_projector(1, 2, 0.5), domain_error);
  // reproducing: int Z_q(x.y) Z_q'(y.e0) dmu(y) = delta_qq' Z_q(x.e0)
  for (int n : {2, 3}) {
    QuadratureRule rule = sphere_rule(n, 24);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n + 1);
    x[0] = std::cos(0.8);
    x[n] = std::sin(0.8);
    for (int q : {1, 3}) {
      for (int qp : {1, 3, 4}) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          const auto& y = rule.nodes[i];
          acc += rule.weights[i] * zonal_projector(n, q, x.dot(y)) *
                 zonal_projector(n, qp, y[0]);
        }
        double expect = (q == qp) ? zonal_projector(n, q, x[0]) : 0.0;
        CHECK(std::abs(acc - expect) < 1e-8 * (1.0 + std::abs(expect)));
      }
    }
  }
}

TEST_CASE("spectral series coefficients are positive and decreasing") {
  SpectralSeries s = spectral_series(2, 0.8, 200);
  CHECK(s.coefficients.size() == 201);
  for (std::size_t q = 0; q < s.coefficients.size(); ++q) {
    CHECK(s.coefficients[q] > 0.0);
    if (q > 0) CHECK(s.coefficients[q] < s.coefficients[q - 1]);
  }
  // consistency with the resummed evaluation on a short truncation
  double c = -0.4;
  double direct = 0.0;
  for (int q = 0; q <= 200; ++q)
    direct += zonal_projector(2, q, c) * s.coefficients[q];
  SeriesResult full = phi_series(2, 0.8, c, 40000);
  // a Q=200 raw truncation is only ~1e-3 accurate; the bound is generous
  CHECK(std::abs(direct - full.value) < 5e-3);
}

TEST_CASE("phi_series n=1 equals the closed form") {
  // gamma_{1,m} cosh((pi - t) m) at m = 1, t = 1
  double m = 1.0, t = 1.0;
  SeriesResult r = phi_series(1, m, std::cos(t), 10000);
  double gamma = kPi / (m * std::sinh(kPi * m));
  double expect = gamma * std::cosh((kPi - t) * m);
  CHECK(std::abs(r.value - expect) < r.tail_bound + 1e-8);
  CHECK(std::abs(r.value - expect) < 1e-10);
  CHECK(r.tail_bound < 1e-9);
}

TEST_CASE("phi_series m^2-weighted limit is the constant projector") {
  for (int n : {1, 2, 3}) {
    double m = 1e-3;
    SeriesResult r = phi_series_auto(n, m, -0.4, 1e-7);
    CHECK(std::abs(m * m * r.value - 1.0) < 1e-4);
  }
}

TEST_CASE("phi_series converges with honest tails") {
  for (int n : {2, 3}) {
    for (double m : {0.5, 1.0, 3.0}) {
      for (double c : {-0.9, -0.5, 0.0, 0.45, 0.9}) {
        SeriesResult lo = phi_series(n, m, c, 3000);
        SeriesResult hi = phi_series(n, m, c, 24000);
        CHECK(std::abs(lo.value - hi.value) <= lo.tail_bound + hi.tail_bound + 1e-10);
        CHECK(hi.tail_bound < 1e-8);
      }
    }
  }
  // the antipode is representable (theta = pi)
  SeriesResult anti = phi_series(3, 1.3, -1.0, 4000);
  CHECK(std::isfinite(anti.value));
  CHECK_THROWS_AS(phi_series(2, 0.0, 0.3, 1000), domain_error);
  CHECK_THROWS_AS(phi_series(2, 1.0, 1.0, 1000), domain_error);
}

TEST_CASE("circle model invariants") {
  CircleModel md = build_circle_model(64, 1.0);
  // row sums of the laplacian vanish
  for (int i = 0; i < md.N; ++i) CHECK(std::abs(md.laplacian.row(i).sum()) < 1e-10);
  // symmetry
  CHECK((md.laplacian - md.laplacian.transpose()).cwiseAbs().maxCoeff() == 0.0);
  // smallest eigenvalue of m^2 - Delta is m^2 (constant eigenvector)
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(md.N, md.N) - md.laplacian;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  CHECK(std::abs(es.eigenvalues().minCoeff() - 1.0) < 1e-10);
  // full spectrum: (2/h^2)(1 - cos(2 pi k / N)) + m^2
  std::vector<double> expected;
  for (int k = 0; k < md.N; ++k)
    expected.push_back(2.0 / (md.h * md.h) * (1.0 - std::cos(2.0 * kPi * k / md.N)) + 1.0);
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < md.N; ++k)
    CHECK(std::abs(es.eigenvalues()[k] - expected[k]) < 1e-8 * expected[k]);
  CHECK_THROWS_AS(build_circle_model(7, 1.0), domain_error);
  CHECK_THROWS_AS(build_circle_model(64, 0.0), domain_error);
}

TEST_CASE("twisted gram is PSD on one-sided supports") {
  for (auto [N, m] : std::vector<std::pair<int, double>>{{64, 1.0}, {256, 0.3}}) {
    CircleModel md = build_circle_model(N, m);
    std::vector<int> plus;
    for (int i = 1; i < N / 2; ++i) plus.push_back(i);
    GramReport rep = twisted_gram(md, plus);
    CHECK(rep.psd);
  }
  // control: crossing the reflection line can break positivity
  CircleModel md = build_circle_model(32, 1.0);
  bool found_negative = false;
  for (int seed = 0; seed < 40 && !found_negative; ++seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> pickn(4, 10);
    std::uniform_int_distribution<int> pick(0, md.N - 1);
    std::vector<int> idx;
    for (int k = pickn(rng); k > 0; --k) idx.push_back(pick(rng));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Eigen::MatrixXd G(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        G(i, j) = md.resolvent(md.reflection[idx[i]], idx[j]);
    Eigen::MatrixXd Gs = 0.5 * (G + G.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gs);
    if (es.eigenvalues().minCoeff() < -1e-10 * Gs.trace()) found_negative = true;
  }
  CHECK(found_negative);
  CHECK_THROWS_AS(twisted_gram(md, {0}), domain_error);
}

TEST_CASE("markov property of the circle model") {
  CHECK(markov_check(build_circle_model(64, 1.0)) <= 1e-10);
  CHECK(markov_check(build_circle_model(32, 2.0)) <= 1e-10);
  Rng rng(5);
  CHECK(markov_interface_check(build_circle_model(64, 1.0), rng, 20) <= 1e-10);
}

TEST_CASE("discrete kernel converges to the continuum Green's function at order 2") {
  ConvergenceTable table = discrete_kernel_convergence(1.0, {64, 128, 256, 512});
  double gamma = kPi / std::sinh(kPi);
  CHECK(table.rows.back().max_err < 1e-3 * gamma);
  CHECK(table.slope > 1.7);
  CHECK(table.slope < 2.3);
  // theta = pi value is the kernel minimum gamma_{1,m}
  CircleModel md = build_circle_model(256, 1.0);
  double at_pi = 2.0 * kPi / md.h * md.resolvent(md.N / 2, 0);
  CHECK(std::abs(at_pi - gamma) < 1e-3 * gamma);
}
