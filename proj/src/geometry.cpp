#include "crown/geometry.hpp"

#include <cmath>

#include "crown/group.hpp"
#include "crown/special.hpp"

namespace crown {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

CPoint basis_point(int n, int j) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[j] = 1.0;
  return CPoint(c);
}

CPoint xi0_point(int n) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[0] = 1.0;
  c[n] = Cx(0, 1);
  return CPoint(c);
}

CPoint xi_u_point(const Eigen::VectorXd& u) {
  Eigen::VectorXcd c(u.size() + 1);
  c[0] = 1.0;
  for (Eigen::Index j = 0; j < u.size(); ++j) c[j + 1] = Cx(0, u[j]);
  return CPoint(c);
}

Cx bilinear(const CPoint& z, const CPoint& w) {
  if (z.coords.size() != w.coords.size())
    throw domain_error("bilinear: dimension mismatch");
  Cx s = 0.0;
  for (Eigen::Index j = 0; j < z.coords.size(); ++j) s += z.coords[j] * w.coords[j];
  return s;
}

CPoint sigma_R(const CPoint& z) { return CPoint(z.coords.conjugate()); }

CPoint sigma_V(const CPoint& z) {
  Eigen::VectorXcd c = -z.coords.conjugate();
  c[0] = -c[0];
  return CPoint(c);
}

CPoint reflect(const CPoint& z, int j) {
  Eigen::VectorXcd c = z.coords;
  c[j] = -c[j];
  return CPoint(c);
}

VDecomposition v_decompose(const CPoint& z) {
  int n = z.n();
  Eigen::VectorXcd u(n + 1), v(n + 1);
  u[0] = Cx(z[0].real(), 0);
  v[0] = Cx(z[0].imag(), 0);
  for (int j = 1; j <= n; ++j) {
    u[j] = Cx(0, z[j].imag());
    v[j] = Cx(0, -z[j].real());
  }
  return {CPoint(u), CPoint(v)};
}

bool on_sphere(const CPoint& z, double tol) {
  return std::abs(bilinear(z, z) - Cx(1, 0)) <= tol;
}

bool in_V(const CPoint& z, double tol) {
  if (std::abs(z[0].imag()) > tol) return false;
  for (int j = 1; j <= z.n(); ++j)
    if (std::abs(z[j].real()) > tol) return false;
  return true;
}

bool in_crown(const CPoint& z, double tol) {
  if (!on_sphere(z, tol)) return false;
  if (!(z[0].real() > 0.0)) return false;
  double uu = z[0].real() * z[0].real();
  for (int j = 1; j <= z.n(); ++j) uu -= z[j].imag() * z[j].imag();
  return uu > 0.0;
}

BoundaryClass classify_boundary(const CPoint& z, double tol) {
  VDecomposition d = v_decompose(z);
  Cx uu = bilinear(d.u, d.u), vv = bilinear(d.v, d.v), uv = bilinear(d.u, d.v);
  if (std::abs(uu) > tol) return BoundaryClass::NotBoundary;
  if (d.u[0].real() < -tol) return BoundaryClass::NotBoundary;
  if (std::abs(vv + Cx(1, 0)) > tol) return BoundaryClass::NotBoundary;
  if (std::abs(uv) > tol) return BoundaryClass::NotBoundary;
  if (d.u.coords.norm() <= tol) return BoundaryClass::DeSitter;
  return BoundaryClass::LightRayOrbit;
}

CPoint exp_point(const CPoint& p, const CPoint& v, double tol) {
  if (std::abs(bilinear(p, p) - Cx(1, 0)) > tol)
    throw domain_error("exp_point: base point off the sphere");
  if (std::abs(bilinear(p, v)) > tol)
    throw domain_error("exp_point: tangency violated");
  Cx v2 = bilinear(v, v);
  Eigen::VectorXcd c = entire_C(v2) * p.coords + entire_S(v2) * v.coords;
  return CPoint(c);
}

CPoint crown_from_de_sitter(const CPoint& v) {
  int n = v.n();
  // v in R_+ e_0 + i R^{n-1}: real positive 0th coordinate, imaginary middle
  // block, vanishing n-th coordinate.
  if (!(v[0].real() > 0.0) || std::abs(v[0].imag()) > 1e-12)
    throw domain_error("crown_from_de_sitter: v_0 must be positive real");
  for (int j = 1; j < n; ++j)
    if (std::abs(v[j].real()) > 1e-12)
      throw domain_error("crown_from_de_sitter: middle block must be imaginary");
  if (std::abs(v[n]) > 1e-12)
    throw domain_error("crown_from_de_sitter: v_n must vanish");
  double vv = bilinear(v, v).real();
  if (!(vv > 0.0 && vv < kPi * kPi))
    throw domain_error("crown_from_de_sitter: need 0 < [v,v] < pi^2");
  return exp_point(basis_point(n, n), v);
}

CPoint crown_from_de_sitter(double t, const CPoint& direction) {
  return crown_from_de_sitter(CPoint(t * direction.coords));
}

CPoint ray_inversion(const CPoint& z) {
  Cx d = bilinear(z, z);
  if (std::abs(d) < 1e-300) throw domain_error("ray_inversion: z^2 = 0");
  return CPoint(z.coords / d);
}

CPoint jordan_product(const CPoint& x, const CPoint& y) {
  if (x.coords.size() != y.coords.size())
    throw domain_error("jordan_product: dimension mismatch");
  int n = x.n();
  Eigen::VectorXcd c(n + 1);
  Cx zz = 0.0;
  for (int j = 1; j <= n; ++j) zz += x[j] * y[j];
  c[0] = x[0] * y[0] - zz;
  for (int j = 1; j <= n; ++j) c[j] = x[0] * y[j] + y[0] * x[j];
  return CPoint(c);
}

CPoint jordan_inverse(const CPoint& x) {
  Cx d = bilinear(x, x);
  if (std::abs(d) < 1e-300) throw domain_error("jordan_inverse: singular element");
  return CPoint(alpha_flip(x).coords / d);
}

CPoint alpha_flip(const CPoint& z) {
  Eigen::VectorXcd c = -z.coords;
  c[0] = -c[0];
  return CPoint(c);
}

CPoint cayley(const CPoint& z) {
  int n = z.n();
  CPoint e = basis_point(n, 0);
  CPoint zp(z.coords + e.coords);
  if (std::abs(bilinear(zp, zp)) < 1e-14)
    throw domain_error("cayley: z + e is singular");
  return jordan_product(CPoint(z.coords - e.coords), jordan_inverse(zp));
}

bool lie_ball_contains(const CPoint& w, double tol) {
  double uu = 0.0, vv = 0.0, uv = 0.0;
  for (int j = 0; j <= w.n(); ++j) {
    double a = w[j].real(), b = w[j].imag();
    uu += a * a;
    vv += b * b;
    uv += a * b;
  }
  double rad = uu * vv - uv * uv;
  double lie2 = uu + vv + 2.0 * std::sqrt(std::max(0.0, rad));
  return lie2 < 1.0 + tol;
}

CPoint zeta_map(Cx z) {
  if (std::abs(z) < 1e-300) throw domain_error("zeta_map: zero input");
  Eigen::VectorXcd c(2);
  c[0] = 0.5 * (z + 1.0 / z);
  c[1] = (z - 1.0 / z) / Cx(0, 2);
  return CPoint(c);
}

Cx zeta_inverse(const CPoint& p) {
  if (p.n() != 1) throw domain_error("zeta_inverse: expects a point of S^1_C");
  return p[0] + Cx(0, 1) * p[1];
}

CPoint sample_half_sphere(int n, Rng& rng, double t_max) {
  std::uniform_real_distribution<double> ang(-t_max, t_max);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double t = ang(rng);
  // random direction in the e_1..e_n block
  Eigen::VectorXd u(n);
  do {
    for (int j = 0; j < n; ++j) u[j] = gauss(rng);
  } while (u.norm() < 1e-8);
  u /= u.norm();
  Eigen::VectorXcd c(n + 1);
  c[0] = std::cos(t);
  for (int j = 0; j < n; ++j) c[j + 1] = std::sin(t) * u[j];
  return CPoint(c);
}

CPoint sample_crown(int n, Rng& rng, double max_boost, double t_max) {
  CPoint x = sample_half_sphere(n, rng, t_max);
  LorentzElement g = random_word(n, rng, 4, max_boost, 0.0);
  return act(g, x);
}

CPoint sample_hyperboloid(int n, Rng& rng, double max_boost) {
  CPoint x = basis_point(n, 0);
  LorentzElement g = random_word(n, rng, 4, max_boost, 1.0);
  return act(g, x);
}

CPoint sample_tube(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.1, 2.0);
  // u in V_+: u_0 > |u-spatial|
  Eigen::VectorXd a(n);
  for (int j = 0; j < n; ++j) a[j] = gauss(rng);
  double r = unif(rng);
  double u0 = a.norm() * (1.0 + r);
  Eigen::VectorXcd c(n + 1);
  c[0] = Cx(u0, gauss(rng));
  for (int j = 0; j < n; ++j) c[j + 1] = Cx(-gauss(rng), a[j]);
  return CPoint(c);
}

}  // namespace crown
