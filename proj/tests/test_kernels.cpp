#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crown/group.hpp"
#include "crown/kernels.hpp"
#include "crown/special.hpp"

using namespace crown;

namespace {
constexpr double kPi = 3.14159265358979323846;

CPoint sphere_point_t(int n, double t) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[0] = std::cos(t);
  c[n] = std::sin(t);
  return CPoint(c);
}

CPoint hyp_point_t(int n, double t) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[0] = std::cosh(t);
  c[n] = Cx(0, std::sinh(t));
  return CPoint(c);
}
}  // namespace

TEST_CASE("mass_param regimes") {
  MassParam p1 = mass_param(1, 0.7);
  CHECK(p1.rho == 0.0);
  CHECK(std::abs(p1.lambda - Cx(0, 0.7)) < 1e-15);
  MassParam p3 = mass_param(3, 1.0);
  CHECK(p3.lambda == Cx(0, 0));
  MassParam p5 = mass_param(5, 1.0);
  CHECK(std::abs(p5.lambda - Cx(std::sqrt(3.0), 0)) < 1e-15);
  // lambda^2 = rho^2 - m^2
  for (int n : {1, 2, 3, 4, 6}) {
    for (double m : {0.1, 0.5, 1.0, 2.5}) {
      MassParam p = mass_param(n, m);
      Cx l2 = p.lambda * p.lambda;
      CHECK(std::abs(l2 - Cx(p.rho * p.rho - m * m, 0)) < 1e-14 * (1.0 + std::abs(l2)));
      CHECK(p.lambda.real() >= 0.0);
      CHECK(p.lambda.real() <= p.rho + 1e-15);
    }
  }
  CHECK_THROWS_AS(mass_param(2, -0.1), domain_error);
}

TEST_CASE("gamma constant") {
  for (double m : {0.1, 1.0, 10.0}) {
    double expect = kPi / (m * std::sinh(kPi * m));
    CHECK(std::abs(gamma_const(mass_param(1, m)) - expect) < 1e-12 * expect);
  }
  // n=3, m=1 (lambda = 0): Gamma(1)^2/Gamma(3) = 1/2
  CHECK(std::abs(gamma_const(mass_param(3, 1.0)) - 0.5) < 1e-13);
  // m^2 gamma_{n,m} -> 1 as m -> 0
  for (int n : {1, 2, 3}) {
    double m = 1e-3;
    CHECK(std::abs(m * m * gamma_const(mass_param(n, m)) - 1.0) < 1e-5);
  }
  CHECK_THROWS_AS(gamma_const(mass_param(2, 0.0)), domain_error);
}

TEST_CASE("psi kernel basics") {
  for (int n : {1, 2, 3}) {
    for (double m : {0.4, 1.3}) {
      MassParam p = mass_param(n, m);
      CPoint e0 = basis_point(n, 0);
      CHECK(std::abs(psi_kernel(p, e0, e0) - Cx(gamma_const(p), 0)) < 1e-12);
    }
  }
  // n=1: Psi((cos t, sin t), e0) = gamma cosh(m t) on 0 < t < pi
  for (double m : {0.5, 2.0}) {
    MassParam p = mass_param(1, m);
    double g = gamma_const(p);
    for (double t = 0.2; t < kPi; t += 0.4) {
      Cx v = psi_kernel(p, sphere_point_t(1, t), basis_point(1, 0));
      CHECK(std::abs(v - Cx(g * std::cosh(m * t), 0)) < 1e-10 * g * std::cosh(m * t));
    }
  }
}

TEST_CASE("phi kernel and the flip identity") {
  std::mt19937_64 rng(21);
  for (int n : {1, 2, 3}) {
    MassParam p = mass_param(n, 0.8);
    // antipodal points: value gamma
    CPoint x = sample_half_sphere(n, rng);
    CPoint anti(-x.coords);
    CHECK(std::abs(phi_kernel(p, x, anti) - Cx(gamma_const(p), 0)) < 1e-11);
    // flip: Phi(x, r0 y) = Psi(x, y) for real sphere points
    for (int i = 0; i < 12; ++i) {
      CPoint a = sample_half_sphere(n, rng), b = sample_half_sphere(n, rng);
      Cx lhs = phi_kernel(p, a, reflect(b, 0));
      Cx rhs = psi_kernel(p, a, b);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
    }
    // diagonal singularity rejected
    CHECK_THROWS_AS(phi_kernel(p, x, x), domain_error);
  }
  // n=1 closed form: Phi((cos t, sin t), e0) = gamma cosh((pi - t) m), 0<t<2pi
  MassParam p1 = mass_param(1, 1.2);
  double g = gamma_const(p1);
  for (double t = 0.3; t < 2.0 * kPi; t += 0.5) {
    Cx v = phi_kernel(p1, sphere_point_t(1, t), basis_point(1, 0));
    double expect = g * std::cosh((kPi - t) * 1.2);
    CHECK(std::abs(v - Cx(expect, 0)) < 1e-10 * std::abs(expect));
  }
}

TEST_CASE("hermitian symmetry and invariance of Psi") {
  std::mt19937_64 rng(22);
  for (int n : {1, 2, 3}) {
    for (double m : {0.45, 1.7}) {
      MassParam p = mass_param(n, m);
      for (int i = 0; i < 10; ++i) {
        CPoint z = sample_crown(n, rng, 1.5), w = sample_crown(n, rng, 1.5);
        Cx a = psi_kernel(p, z, w), b = psi_kernel(p, w, z);
        CHECK(std::abs(a - std::conj(b)) < 1e-11 * (1.0 + std::abs(a)));
        LorentzElement gel = random_word(n, rng, 6, 1.5, 1.5);
        Cx c = psi_kernel(p, act(gel, z), act(gel, w));
        CHECK(std::abs(c - a) < 1e-9 * (1.0 + std::abs(a)));
      }
    }
  }
}

TEST_CASE("spherical function and phi_c") {
  for (int n : {2, 3}) {
    for (double m : {0.4, 1.5}) {
      MassParam p = mass_param(n, m);
      CPoint e0 = basis_point(n, 0);
      CHECK(std::abs(spherical_function(p, e0) - Cx(1, 0)) < 1e-13);
      // t-form agrees with the kernel form on the geodesic
      for (double t = 0.3; t <= 2.1; t += 0.6) {
        Cx a = spherical_function(p, hyp_point_t(n, t));
        Cx b = spherical_function_t(p, t);
        CHECK(std::abs(a - b) < 1e-11 * (1.0 + std::abs(b)));
        CHECK(std::abs(a.imag()) < 1e-11 * (1.0 + std::abs(a)));
      }
      // relation to Psi via (n-1)! / (Gamma(rho+lambda) Gamma(rho-lambda))
      double t = 0.9;
      Cx lg = log_gamma(Cx(p.rho, 0) + p.lambda) + log_gamma(Cx(p.rho, 0) - p.lambda);
      double pref = std::tgamma(n) / std::exp(lg.real()) / std::cos(lg.imag());
      Cx lhs = spherical_function(p, hyp_point_t(n, t));
      Cx rhs = pref * psi_kernel(p, hyp_point_t(n, t), e0);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs)));
    }
  }
  // m = 0 convention
  CHECK(phi_c_kernel(mass_param(2, 0.0), basis_point(2, 0), basis_point(2, 0)) ==
        Cx(1, 0));
}

TEST_CASE("odd-n closed form matches the 2F1 kernel") {
  // n = 1
  MassParam p1 = mass_param(1, 1.4);
  for (double t = 0.3; t < kPi; t += 0.7) {
    Cx closed = odd_n_closed_form(p1, t);
    Cx kern = psi_kernel(p1, sphere_point_t(1, t), basis_point(1, 0));
    CHECK(std::abs(closed - kern) < 1e-9 * std::abs(kern));
  }
  // n = 3 above and below rho, n = 5
  for (auto [n, m] : std::vector<std::pair<int, double>>{{3, 2.0}, {3, 0.6}, {5, 2.7}}) {
    MassParam p = mass_param(n, m);
    for (double t = 0.25; t < kPi; t += 0.5) {
      Cx closed = odd_n_closed_form(p, t);
      Cx kern = psi_kernel(p, sphere_point_t(n, t), basis_point(n, 0));
      CHECK(std::abs(closed - kern) < 1e-7 * (1.0 + std::abs(kern)));
    }
  }
  // n = 3, m = 2, t = 1: the derivative-chain value (the paper's printed
  // sin(mt) variant does not match; the correct base is cos(lambda t))
  MassParam p32 = mass_param(3, 2.0);
  double mu = std::sqrt(3.0);
  double expect = gamma_const(p32) * std::sinh(mu * 1.0) / (mu * std::sin(1.0));
  CHECK(std::abs(odd_n_closed_form(p32, 1.0) - Cx(expect, 0)) < 1e-10 * expect);
  CHECK_THROWS_AS(odd_n_closed_form(mass_param(2, 1.0), 0.5), domain_error);
  CHECK_THROWS_AS(odd_n_closed_form(mass_param(3, 1.0), 0.5), domain_error);
}

TEST_CASE("radial ODE residual") {
  // n=1 exact solution cosh(mt)
  MassParam p1 = mass_param(1, 1.0);
  CHECK(radial_ode_residual(p1, 1.0, 1e-4) <= 1e-6 * std::cosh(1.0) +
                                                  1e-5 * gamma_const(p1));
  CHECK(radial_ode_residual(mass_param(2, 1.0), kPi / 2, 1e-4) <= 1e-5);
  CHECK(radial_ode_residual(mass_param(3, 2.0), 0.3, 1e-4) <= 1e-5);
  CHECK_THROWS_AS(radial_ode_residual(p1, 1e-5, 1e-4), domain_error);
}

TEST_CASE("canonical kernel on Xi'") {
  CPoint e0 = basis_point(3, 0);
  CHECK(std::abs(canonical_kernel(1.0, e0, e0) - Cx(1, 0)) < 1e-15);
  for (double t = 0.2; t < 2.0; t += 0.4) {
    CPoint x = hyp_point_t(3, t);
    Cx v = canonical_kernel(0.8, x, e0);
    CHECK(std::abs(v - Cx(std::pow(std::cosh(t), -1.6), 0)) < 1e-12);
    CHECK(xi_prime_contains(x));
  }
  // Gram PSD on hyperboloid points (C_lambda = integral of Psi_m dmu)
  std::mt19937_64 rng(23);
  std::vector<CPoint> pts;
  for (int i = 0; i < 30; ++i) pts.push_back(sample_hyperboloid(3, rng, 1.5));
  GramReport rep = gram_report(
      pts, [&](const CPoint& z, const CPoint& w) { return canonical_kernel(1.0, z, w); });
  CHECK(rep.psd);
  CHECK(rep.min_eig >= -1e-10 * std::max(1.0, rep.trace));
}

TEST_CASE("Q_nu kernel") {
  CPoint e0 = basis_point(4, 0);
  CHECK(std::abs(q_nu_kernel(0.7, e0, e0) - Cx(1, 0)) < 1e-15);
  for (double t = 0.3; t < 2.0; t += 0.5) {
    CPoint x = hyp_point_t(4, t);
    Cx v = q_nu_kernel(0.9, x, e0);
    double expect = std::pow(std::cosh(t / 2.0), -1.8);
    CHECK(std::abs(v - Cx(expect, 0)) < 1e-12);
  }
}

TEST_CASE("boundary values on de Sitter space") {
  int n = 2;
  MassParam p = mass_param(n, 1.0);
  CPoint en = basis_point(n, n), e0 = basis_point(n, 0);
  // x = e_n, w = e_0: argument (1 - 0)/2 = 1/2
  Cx v = boundary_kernel_ds(p, en, e0);
  Cx expect = gauss_2f1(Cx(p.rho, 0) + p.lambda, Cx(p.rho, 0) - p.lambda,
                        Cx(n / 2.0, 0), Cx(0.5, 0));
  CHECK(std::abs(v - expect) < 1e-12 * (1.0 + std::abs(expect)));
  // limit along the epsilon-path z_eps = (eps e0 + e_n)/sqrt(1+eps^2)
  std::mt19937_64 rng(24);
  CPoint w = sample_crown(n, rng, 1.0);
  auto path = [&](double eps) {
    Eigen::VectorXcd c = (eps * e0.coords + en.coords) / std::sqrt(1.0 + eps * eps);
    return phi_c_kernel(p, CPoint(c), w);
  };
  Cx lim2 = path(2e-7), lim1 = path(1e-7);
  Cx extrap = 2.0 * lim1 - lim2;
  Cx bval = boundary_kernel_ds(p, en, w);
  CHECK(std::abs(extrap - bval) < 1e-6 * (1.0 + std::abs(bval)));
  // pair-value property: real [z,x] stays in (-1,1)
  for (int i = 0; i < 2000; ++i) {
    CPoint z = sample_crown(n, rng, 2.0);
    LorentzElement g = random_word(n, rng, 4, 2.0, 2.0);
    CPoint x = act(g, en);
    Cx val = bilinear(z, x);
    if (std::abs(val.imag()) < 1e-14 * (1.0 + std::abs(val.real())))
      CHECK(std::abs(val.real()) < 1.0);
  }
  // mirrored variant at y = e_n: argument (1 + [z,e_n])/2, finite
  CPoint z = sample_crown(n, rng, 1.0);
  Cx mv = boundary_kernel_ds_mirror(p, z, en);
  CHECK(std::isfinite(mv.real()));
  CHECK_THROWS_AS(boundary_kernel_ds(p, e0, w), domain_error);
}

TEST_CASE("gram_report verdict and hermiticity") {
  std::mt19937_64 rng(25);
  MassParam p = mass_param(2, 0.9);
  std::vector<CPoint> pts;
  for (int i = 0; i < 15; ++i) pts.push_back(sample_crown(2, rng, 1.2));
  GramReport rep = gram_report(
      pts, [&](const CPoint& z, const CPoint& w) { return psi_kernel(p, z, w); });
  CHECK(rep.psd);
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j)
      CHECK(std::abs(rep.matrix(i, j) - std::conj(rep.matrix(j, i))) < 1e-12);
  CHECK(rep.trace > 0.0);
}
