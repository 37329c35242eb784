#pragma once

#include <functional>

#include "crown/kernels.hpp"
#include "crown/quadrature.hpp"

namespace crown {

/// Function on the light cone restricted to {xi_u}, represented by node
/// samples plus the homogeneity tag: phi(t xi) = t^(-lambda-rho) phi(xi).
struct BoundaryFunctionSamples {
  QuadratureRule rule;  // on S^{n-1}
  std::vector<Cx> values;
  Cx lambda;
};

/// Callable variant (needed where the integrand is singular and no fixed
/// node set can represent phi faithfully).
struct BoundaryFunction {
  std::function<Cx(const Eigen::VectorXd&)> eval;  // u on S^{n-1} -> phi(xi_u)
  Cx lambda;
};

/// Materialize a callable on a rule.
BoundaryFunctionSamples sample_boundary(const BoundaryFunction& phi,
                                        const QuadratureRule& rule);

/// The constant function 1_lambda(xi) = [e_0, xi]^(-lambda-rho) (== 1 at xi_u).
BoundaryFunction one_lambda(Cx lambda);

/// Closed-form constant of the light-cone integral:
/// 2^(lambda+(n-3)/2)/sqrt(pi) * Gamma(n/2)Gamma(lambda)/Gamma(lambda+rho).
Cx lightcone_constant(int n, Cx lambda);

/// integral over S^{n-1} of [x, xi_u]^(lambda-rho) dmu(u), x on the forward
/// light cone, Re lambda > 0.  Quadrature with the algebraic singularity
/// absorbed into a Gauss-Jacobi weight.
Cx lightcone_integral(int n, Cx lambda, const CPoint& x, int order = 80);

/// Poisson kernel P_lambda(z, xi) = [z, xi]^(-lambda-rho).
Cx poisson_kernel(const MassParam& p, const CPoint& z, const CPoint& xi);

/// (P_lambda phi)(z) = integral P_lambda(z, xi_u) phi(xi_u) dmu(u) over the
/// sample rule.
Cx poisson_transform(const MassParam& p, const BoundaryFunctionSamples& phi,
                     const CPoint& z);

/// Intertwiner (A_lambda phi)(x), Re lambda > 0, x on the light cone.
Cx intertwiner_A(const MassParam& p, const BoundaryFunction& phi, const CPoint& x,
                 int order = 80);
Cx intertwiner_A_lambda(int n, Cx lambda, const BoundaryFunction& phi,
                        const CPoint& x, int order = 80);

/// Plane-wave representation of Phi_m^c (adaptive quadrature):
/// integral [sigma_V(w), xi_u]^(lambda-rho) [z, xi_u]^(-lambda-rho) dmu(u).
AdaptiveResult phi_c_via_planewaves(const MassParam& p, const CPoint& z,
                                    const CPoint& w, double tol = 1e-8,
                                    int max_nodes = 10000);

/// Spherical function by its plane-wave integral at x = a_t.e_0.
AdaptiveResult spherical_function_via_integral(const MassParam& p, double t,
                                               double tol = 1e-9,
                                               int max_nodes = 10000);

/// integral of psi_m over S^n (should equal 1/m^2).
double l2_normalization(const MassParam& p);

}  // namespace crown
