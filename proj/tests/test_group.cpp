#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crown/geometry.hpp"
#include "crown/group.hpp"
#include "crown/quadrature.hpp"

using namespace crown;

TEST_CASE("generators satisfy the stated actions") {
  int n = 3;
  double t = 0.8;
  LorentzElement at = make_boost(n, t);
  CPoint e0 = basis_point(n, 0);
  CPoint img = act(at, e0);
  CHECK(std::abs(img[0] - Cx(std::cosh(t), 0)) < 1e-14);
  CHECK(std::abs(img[n] - Cx(0, std::sinh(t))) < 1e-14);
  // a_t . xi0 = e^t xi0
  CPoint xi = xi0_point(n);
  CPoint bx = act(at, xi);
  CHECK((bx.coords - std::exp(t) * xi.coords).norm() < 1e-12);
  // n_v stabilizes xi0
  Eigen::VectorXd v(n - 1);
  v << 0.4, -1.1;
  CPoint nx = act(make_horospherical(v), xi);
  CHECK((nx.coords - xi.coords).norm() < 1e-12);
  // one-parameter group laws
  LorentzElement a2 = make_boost(n, 0.5) * make_boost(n, 0.3);
  CHECK((a2.L - make_boost(n, 0.8).L).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::VectorXd w(n - 1);
  w << -0.2, 0.7;
  LorentzElement nvw = make_horospherical(v) * make_horospherical(w);
  CHECK((nvw.L - make_horospherical(v + w).L).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("make_m embeds O(n-1) in the stabilizer of xi0 and e_n") {
  std::mt19937_64 rng(10);
  int n = 3;
  Eigen::MatrixXd A = random_orthogonal(n - 1, rng);
  LorentzElement mA = make_m(A);
  CPoint xi = xi0_point(n);
  CHECK((act(mA, xi).coords - xi.coords).norm() < 1e-13);
  CHECK((act(mA, basis_point(n, 0)).coords - basis_point(n, 0).coords).norm() < 1e-13);
  CHECK((act(mA, basis_point(n, n)).coords - basis_point(n, n).coords).norm() < 1e-13);
}

TEST_CASE("element invariants survive words and inverses") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 10; ++i) {
      LorentzElement g = random_word(n, rng, 20, 2.0, 2.0);
      CHECK(is_lorentz(g.L, 1e-8));
      CHECK(g.L(0, 0) > 0.0);
      LorentzElement gi = g.inverse();
      // cancellation in g g^{-1} scales with the square of the entries
      double scale = std::max(1.0, std::pow(g.L.cwiseAbs().maxCoeff(), 2));
      CHECK(((g * gi).L - Eigen::MatrixXd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() <
            1e-8 * scale);
    }
  }
}

TEST_CASE("action preserves the bilinear form and the crown") {
  std::mt19937_64 rng(12);
  for (int n : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      LorentzElement g = random_word(n, rng, 6, 2.0, 2.0);
      CPoint z = sample_crown(n, rng, 2.0), w = sample_crown(n, rng, 2.0);
      Cx before = bilinear(z, w);
      Cx after = bilinear(act(g, z), act(g, w));
      CHECK(std::abs(after - before) < 1e-9 * (1.0 + std::abs(before)));
      CHECK(in_crown(act(g, z), 1e-7));
    }
  }
  LorentzElement id = identity_element(2);
  CPoint z = sample_crown(2, rng);
  CHECK((act(id, z).coords - z.coords).norm() == 0.0);
}

TEST_CASE("boundary action: unit norm, positivity, cone equivariance") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n : {2, 3}) {
    for (int i = 0; i < 30; ++i) {
      LorentzElement g = random_word(n, rng, 6, 2.0, 2.0);
      Eigen::VectorXd u(n);
      for (int j = 0; j < n; ++j) u[j] = gauss(rng);
      u /= u.norm();
      BoundaryAction ba = boundary_action(g, u);
      CHECK(std::abs(ba.u.norm() - 1.0) < 1e-10);
      CHECK(ba.j > 0.0);
      // g xi_u = j xi_{g.u}
      CPoint lhs = act(g, xi_u_point(u));
      CPoint rhs(ba.j * xi_u_point(ba.u).coords);
      CHECK((lhs.coords - rhs.coords).norm() < 1e-10 * (1.0 + ba.j));
      // j via pairing with e_0
      CHECK(std::abs(bilinear(lhs, basis_point(n, 0)) - Cx(ba.j, 0)) < 1e-12 * ba.j);
    }
  }
}

TEST_CASE("cocycle law and jacobian values") {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int n = 3;
  // rotations have j = 1
  Eigen::VectorXd u(n);
  u << 0.0, 0.6, 0.8;
  LorentzElement k = make_rotation(random_orthogonal(n, rng));
  CHECK(std::abs(boundary_action(k, u).j - 1.0) < 1e-12);
  // boost at u = e_n: j = e^t
  Eigen::VectorXd en(n);
  en << 0.0, 0.0, 1.0;
  CHECK(std::abs(boundary_action(make_boost(n, 1.3), en).j - std::exp(1.3)) < 1e-12);
  // j_lambda(a_t, e_n) = e^{-(lambda+rho) t}; n = 3, lambda = 0 -> e^{-t}
  CHECK(std::abs(jlambda(make_boost(n, 1.0), en, Cx(0, 0)) - Cx(std::exp(-1.0), 0)) <
        1e-12);
  // full KAN-type word: j_lambda(k a_t n~, e_n) = e^{-(lambda+rho) t}
  {
    Eigen::VectorXd hv(n - 1);
    hv << 0.4, -0.9;
    LorentzElement kan = make_rotation(random_orthogonal(n, rng)) *
                         make_boost(n, 0.8) * make_horospherical(hv);
    Cx lam(0.2, 0.7);
    Cx expect = std::exp(-(lam + 1.0) * 0.8);  // rho = 1 for n = 3
    CHECK(std::abs(jlambda(kan, en, lam) - expect) < 1e-12 * std::abs(expect));
  }
  // cocycle: j(g1 g2, u) = j(g1, g2.u) j(g2, u)
  for (int i = 0; i < 50; ++i) {
    LorentzElement g1 = random_word(n, rng, 4, 2.0, 2.0);
    LorentzElement g2 = random_word(n, rng, 4, 2.0, 2.0);
    Eigen::VectorXd uu(n);
    for (int j = 0; j < n; ++j) uu[j] = gauss(rng);
    uu /= uu.norm();
    double lhs = boundary_action(g1 * g2, uu).j;
    BoundaryAction b2 = boundary_action(g2, uu);
    double rhs = boundary_action(g1, b2.u).j * b2.j;
    CHECK(std::abs(lhs - rhs) < 1e-12 * rhs);
    // and for j_lambda with a complex lambda
    Cx lam(0.3, 1.1);
    Cx jl = jlambda(g1 * g2, uu, lam);
    Cx jr = jlambda(g1, b2.u, lam) * jlambda(g2, uu, lam);
    CHECK(std::abs(jl - jr) < 1e-11 * std::abs(jr));
  }
}

TEST_CASE("block view reassembles the complex realization") {
  std::mt19937_64 rng(15);
  int n = 3;
  for (int i = 0; i < 10; ++i) {
    LorentzElement g = random_word(n, rng, 6, 2.0, 2.0);
    BlockView b = block_view(g);
    CHECK(b.a >= 1.0 - 1e-12);  // orthochronous
    Eigen::MatrixXcd re(n + 1, n + 1);
    re(0, 0) = b.a;
    for (int j = 0; j < n; ++j) {
      re(0, j + 1) = Cx(0, b.v[j]);
      re(j + 1, 0) = Cx(0, b.w[j]);
      for (int kk = 0; kk < n; ++kk) re(j + 1, kk + 1) = b.A(j, kk);
    }
    CHECK((re - g.g).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("measure invariance of the boundary action") {
  // int phi(g.u) j(g,u)^{-2 rho} dmu(u) = int phi dmu for a degree-4 polynomial
  std::mt19937_64 rng(16);
  for (int n : {2, 3}) {
    double rho = (n - 1.0) / 2.0;
    auto phi = [](const Eigen::VectorXd& x) {
      double s = x[0];
      return 1.0 + s + s * s - 0.5 * std::pow(s, 3) + 0.25 * std::pow(x[x.size() - 1], 4);
    };
    QuadratureRule rule = sphere_rule(n - 1, 120);
    double base = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      base += rule.weights[i] * phi(rule.nodes[i]);
    for (int i = 0; i < 5; ++i) {
      LorentzElement g = random_word(n, rng, 4, 1.2, 1.2);
      double moved = 0.0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        BoundaryAction ba = boundary_action(g, rule.nodes[j]);
        moved += rule.weights[j] * phi(ba.u) * std::pow(ba.j, -2.0 * rho);
      }
      CHECK(std::abs(moved - base) < 1e-8 * (1.0 + std::abs(base)));
    }
  }
}
