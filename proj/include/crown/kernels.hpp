#pragma once

#include <Eigen/Dense>
#include <vector>

#include "crown/geometry.hpp"
#include "crown/types.hpp"

namespace crown {

/// Mass/spectral parameters: rho = (n-1)/2 and
/// lambda = sqrt(rho^2 - m^2) for m <= rho (complementary regime),
/// lambda = i sqrt(m^2 - rho^2) for m >= rho (principal regime).
struct MassParam {
  int n;
  double m;
  double rho;
  Cx lambda;
  bool principal;  // m >= rho

  static MassParam make(int n, double m);
};

inline MassParam mass_param(int n, double m) { return MassParam::make(n, m); }

/// gamma_{n,m} = Gamma(rho+lambda) Gamma(rho-lambda) / Gamma(n); m > 0.
double gamma_const(const MassParam& p);

/// Psi_m(z,w) = gamma * 2F1(rho+lambda, rho-lambda; n/2; (1 - [z, sigma_V w])/2).
Cx psi_kernel(const MassParam& p, const CPoint& z, const CPoint& w);

/// Phi_m(x,y) = gamma * 2F1(...; (1 + x . sigma_R(y))/2).
Cx phi_kernel(const MassParam& p, const CPoint& x, const CPoint& y);

/// Phi_m^c = Psi_m / gamma (and == 1 for m = 0).
Cx phi_c_kernel(const MassParam& p, const CPoint& z, const CPoint& w);

/// Spherical function phi_m(x) = Phi_m^c(x, e_0) on H^n_V;
/// the t-form is 2F1(rho+lambda, rho-lambda; n/2; -sinh^2(t/2)).
Cx spherical_function(const MassParam& p, const CPoint& x);
Cx spherical_function_t(const MassParam& p, double t);

/// Closed form for odd n = 2k+1 via the derivative chain
/// (1/sin t d/dt)^k applied to cos(lambda t), scaled by
/// gamma (n-2)(n-4)...1 / prod_{j<k}(j^2 + m^2 - rho^2).
Cx odd_n_closed_form(const MassParam& p, double t);

/// Residual of eta'' + (n-1) cot(t) eta' - m^2 eta at eta(t) = Psi_m(x_t, e_0),
/// central differences with step h.
double radial_ode_residual(const MassParam& p, double t, double h);

/// Canonical kernel C_lambda(z,w) = [z, sigma_V(w)]^(-2 lambda) on Xi'.
Cx canonical_kernel(double lambda, const CPoint& z, const CPoint& w);
/// Xi' = {z in Xi : beta(z) = |z_0|^2 - |zz|^2 > 0}.
bool xi_prime_contains(const CPoint& z, double tol = 1e-9);

/// Q_nu(z,w) = ((1 + [z, sigma_V(w)])/2)^(-nu).
Cx q_nu_kernel(double nu, const CPoint& z, const CPoint& w);

/// Boundary values on de Sitter space:
/// x in dS^n, w in Xi:   2F1(...; (1 - [x, sigma_V w])/2)
/// z in Xi, y in dS^n:   2F1(...; (1 + [z, y])/2)
Cx boundary_kernel_ds(const MassParam& p, const CPoint& x, const CPoint& w);
Cx boundary_kernel_ds_mirror(const MassParam& p, const CPoint& z, const CPoint& y);

/// Sampled Gram matrix with eigenvalue summary.
struct GramReport {
  std::vector<CPoint> points;
  Eigen::MatrixXcd matrix;
  double min_eig;
  double trace;
  bool psd;
  double tol;
};

/// Build a Gram report from a kernel functor; PSD verdict at
/// min_eig >= -tol * max(1, trace).
template <class Kernel>
GramReport gram_report(const std::vector<CPoint>& pts, Kernel&& k, double tol = 1e-10) {
  int N = static_cast<int>(pts.size());
  Eigen::MatrixXcd M(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j) {
      Cx v = k(pts[i], pts[j]);
      M(i, j) = v;
      M(j, i) = std::conj(v);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  GramReport r;
  r.points = pts;
  r.matrix = M;
  r.min_eig = es.eigenvalues().minCoeff();
  r.trace = M.trace().real();
  r.tol = tol;
  r.psd = r.min_eig >= -tol * std::max(1.0, r.trace);
  return r;
}

}  // namespace crown
