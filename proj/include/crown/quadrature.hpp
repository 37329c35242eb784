#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "crown/types.hpp"

namespace crown {

/// Nodes/weights on the sphere S^d, normalized to the invariant
/// probability measure.  exact_degree: polynomial exactness (spot-checked).
struct QuadratureRule {
  int dim = 0;                              // sphere S^dim
  std::vector<Eigen::VectorXd> nodes;       // unit vectors in R^{dim+1}
  std::vector<double> weights;              // positive, sum to 1
  int exact_degree = 0;
};

/// 1D Gauss rules on [-1,1].
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre (weight 1).
Rule1D gauss_legendre(int n);

/// Gauss-Jacobi with weight (1-t)^alpha (1+t)^beta, alpha,beta > -1.
Rule1D gauss_jacobi(int n, double alpha, double beta);

/// Equispaced trapezoid rule on the circle (exact for trig degree < n).
Rule1D trapezoid_circle(int n);  // nodes are angles in [0, 2pi)

/// sphere_rule(d, order): d=1 trapezoid, d=2 Gauss-Legendre x trapezoid,
/// d=3 Gauss-Jacobi(1/2,1/2) x the d=2 rule.  order >= 2.
QuadratureRule sphere_rule(int d, int order);

/// Integral of f over S^d against the probability measure.
Cx integrate(const QuadratureRule& rule, const std::function<Cx(const Eigen::VectorXd&)>& f);

/// Adaptive sphere quadrature: doubles the order until two successive values
/// agree to `tol` or the node count would exceed `max_nodes` (then throws).
struct AdaptiveResult {
  Cx value;
  double est_error;
  int nodes_used;
};
AdaptiveResult integrate_sphere_adaptive(int d,
                                         const std::function<Cx(const Eigen::VectorXd&)>& f,
                                         double tol = 1e-8, int max_nodes = 10000);

/// Quadrature adapted to a factor (1 - u.axis)^s on S^d:
/// sum w_i f(u_i) ~ integral f(u) (1 - u.axis)^s dmu(u) for smooth f.
/// Needs s + (d-1)/2 > -1 resp. s > -1/2 for d=1.
QuadratureRule cap_singular_rule(int d, int order, double s, const Eigen::VectorXd& axis);

/// Integral over S^n of a zonal function alpha(x_0) against the probability
/// measure, via the 1D reduction with weight (1-t^2)^{n/2-1}.
/// Gauss-Jacobi based, adaptive doubling from >= 64 nodes; falls back to
/// tanh-sinh refinement when the integrand has an endpoint singularity.
double radial_integral(int n, const std::function<double(double)>& alpha,
                       double tol = 1e-9);

/// tanh-sinh quadrature of f over (a,b).  Handles integrable endpoint
/// singularities; at a nonzero endpoint the attainable accuracy is limited
/// by double rounding to ~eps^(1-p) for a pole of order p.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

}  // namespace crown
