#pragma once

#include <Eigen/Dense>
#include <vector>

#include "crown/kernels.hpp"
#include "crown/types.hpp"

namespace crown {

/// Gegenbauer C_q^(alpha) by the three-term recurrence.
double gegenbauer(int q, double alpha, double s);

/// Dimension of the degree-q spherical harmonics on S^n.
double harmonic_dimension(int q, int n);

/// Zonal projector kernel Z_q(s) = d_{q,n} C_q^{rho}(s)/C_q^{rho}(1), n >= 2.
double zonal_projector(int n, int q, double s);

/// Eigenvalue data of the truncated resolvent series: coefficients
/// 1/(q(q+n-1)+m^2) for q = 0..Q (strictly positive and decreasing).
struct SpectralSeries {
  int n;
  double m;
  int max_degree;
  std::vector<double> coefficients;
};
SpectralSeries spectral_series(int n, double m, int Q);

/// Partial sum of the spectral series for the resolvent kernel,
/// sum_q Z_q(c)/(q(q+n-1)+m^2), with a rigorous tail bound.  The slowly
/// convergent part is resummed against an exact comparison series, so the
/// bound is tight (the crude |Z_q| <= d_q envelope does not even converge
/// for n >= 2).
struct SeriesResult {
  double value;
  double tail_bound;
  int terms_used;
};
SeriesResult phi_series(int n, double m, double c, int Q);

/// Q chosen adaptively until tail_bound <= tol (cap 10^5, then error).
SeriesResult phi_series_auto(int n, double m, double c, double tol = 1e-8);

/// Finite circulant-Laplacian model of the circle.
struct CircleModel {
  int N;
  double h;
  double m;
  Eigen::MatrixXd laplacian;   // Delta_N
  Eigen::MatrixXd resolvent;   // C = (m^2 I - Delta_N)^{-1}
  std::vector<int> reflection;  // theta: i -> -i (mod N)
};

CircleModel build_circle_model(int N, double m);

/// Gram of the twisted kernel (theta C) restricted to plus indices
/// (grid points with theta_i in (0, pi)).
GramReport twisted_gram(const CircleModel& model, const std::vector<int>& plus_indices);

/// Markov identity: spectral norm of P_- P_+ - P_0 in the C-inner product.
double markov_check(const CircleModel& model);

/// Interface identity deviation: max |<phi,psi>_C - <P0 phi, P0 psi>_C| over
/// random pairs phi in E_+, psi in E_-.
double markov_interface_check(const CircleModel& model, Rng& rng, int pairs = 20);

/// Convergence of the discrete Green's function to
/// gamma_{1,m} cosh((pi-|theta|) m).
struct ConvergenceRow {
  int N;
  double max_err;
};
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double slope;  // log-log fit of max_err vs N
};
ConvergenceTable discrete_kernel_convergence(double m, const std::vector<int>& N_list);

}  // namespace crown
