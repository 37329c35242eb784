#include "crown/integral_reps.hpp"

#include <cmath>

#include "crown/special.hpp"

namespace crown {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// x on the forward light cone decomposes as x = r xi_u0, r = x_0 > 0.
void cone_decompose(const CPoint& x, double& r, Eigen::VectorXd& u0) {
  int n = x.n();
  if (std::abs(x[0].imag()) > 1e-9 || !(x[0].real() > 0.0))
    throw domain_error("light cone point: x_0 must be positive real");
  r = x[0].real();
  u0.resize(n);
  for (int j = 1; j <= n; ++j) {
    if (std::abs(x[j].real()) > 1e-9 * std::max(1.0, r))
      throw domain_error("light cone point: spatial part must be imaginary");
    u0[j - 1] = x[j].imag() / r;
  }
  if (std::abs(u0.norm() - 1.0) > 1e-7)
    throw domain_error("light cone point: [x,x] != 0");
  u0 /= u0.norm();
}

}  // namespace

BoundaryFunctionSamples sample_boundary(const BoundaryFunction& phi,
                                        const QuadratureRule& rule) {
  BoundaryFunctionSamples s;
  s.rule = rule;
  s.lambda = phi.lambda;
  s.values.reserve(rule.nodes.size());
  for (const auto& u : rule.nodes) s.values.push_back(phi.eval(u));
  return s;
}

BoundaryFunction one_lambda(Cx lambda) {
  return {[](const Eigen::VectorXd&) { return Cx(1, 0); }, lambda};
}

Cx lightcone_constant(int n, Cx lambda) {
  double rho = (n - 1.0) / 2.0;
  Cx lg = log_gamma(Cx(n / 2.0, 0)) + log_gamma(lambda) -
          log_gamma(lambda + rho);
  return std::exp((lambda + (n - 3.0) / 2.0) * std::log(Cx(2, 0)) + lg) /
         std::sqrt(kPi);
}

Cx lightcone_integral(int n, Cx lambda, const CPoint& x, int order) {
  if (!(lambda.real() > 0.0))
    throw domain_error("lightcone_integral: Re lambda > 0 required");
  double rho = (n - 1.0) / 2.0;
  double r;
  Eigen::VectorXd u0;
  cone_decompose(x, r, u0);
  // [x, xi_u] = r (1 - u0.u): absorb (1 - u0.u)^(lambda-rho) partially --
  // the real part of the exponent goes into the Jacobi weight, the rest
  // (purely oscillatory power) stays in the integrand.
  double s = lambda.real() - rho;
  Cx rest = lambda - Cx(s + rho, 0);  // purely imaginary part of the exponent
  QuadratureRule rule = cap_singular_rule(n - 1, order, s, u0);
  std::vector<Cx> vals(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double c = 1.0 - u0.dot(rule.nodes[i]);
    vals[i] = rule.weights[i] * std::exp(rest * std::log(Cx(c, 0)));
  }
  Cx integral = pairwise_sum(vals);
  return std::exp((lambda - rho) * std::log(Cx(r, 0))) * integral;
}

Cx poisson_kernel(const MassParam& p, const CPoint& z, const CPoint& xi) {
  if (!in_crown(z, 1e-7))
    throw domain_error("poisson_kernel: z not in the crown");
  Cx pairing = bilinear(z, xi);
  if (!(pairing.real() > 0.0))
    throw numeric_error("poisson_kernel: Re[z,xi] <= 0");
  return cpow_principal(pairing, -p.lambda - p.rho);
}

Cx poisson_transform(const MassParam& p, const BoundaryFunctionSamples& phi,
                     const CPoint& z) {
  if (phi.rule.dim != z.n() - 1)
    throw domain_error("poisson_transform: rule dimension mismatch");
  std::vector<Cx> vals(phi.rule.nodes.size());
  for (std::size_t i = 0; i < phi.rule.nodes.size(); ++i) {
    CPoint xi = xi_u_point(phi.rule.nodes[i]);
    vals[i] = phi.rule.weights[i] * poisson_kernel(p, z, xi) * phi.values[i];
  }
  return pairwise_sum(vals);
}

Cx intertwiner_A_lambda(int n, Cx lambda, const BoundaryFunction& phi,
                        const CPoint& x, int order) {
  if (!(lambda.real() > 0.0))
    throw domain_error("intertwiner_A: Re lambda > 0 required");
  double rho = (n - 1.0) / 2.0;
  double r;
  Eigen::VectorXd u0;
  cone_decompose(x, r, u0);
  double s = lambda.real() - rho;
  Cx rest = lambda - Cx(s + rho, 0);
  QuadratureRule rule = cap_singular_rule(n - 1, order, s, u0);
  std::vector<Cx> vals(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double c = 1.0 - u0.dot(rule.nodes[i]);
    vals[i] = rule.weights[i] * std::exp(rest * std::log(Cx(c, 0))) *
              phi.eval(rule.nodes[i]);
  }
  Cx integral = std::exp((lambda - rho) * std::log(Cx(r, 0))) * pairwise_sum(vals);
  return integral / lightcone_constant(n, lambda);
}

Cx intertwiner_A(const MassParam& p, const BoundaryFunction& phi, const CPoint& x,
                 int order) {
  if (!(p.m < p.rho))
    throw domain_error("intertwiner_A: complementary regime (m < rho) required");
  return intertwiner_A_lambda(p.n, p.lambda, phi, x, order);
}

AdaptiveResult phi_c_via_planewaves(const MassParam& p, const CPoint& z,
                                    const CPoint& w, double tol, int max_nodes) {
  int n = z.n();
  if (n < 2 || n > 4)
    throw domain_error("phi_c_via_planewaves: quadrature dimension n-1 in {1,2,3}");
  if (!in_crown(z, 1e-7) || !in_crown(w, 1e-7))
    throw domain_error("phi_c_via_planewaves: points must lie in the crown");
  CPoint sw = sigma_V(w);
  auto f = [&](const Eigen::VectorXd& u) {
    CPoint xi = xi_u_point(u);
    Cx a = bilinear(sw, xi);
    Cx b = bilinear(z, xi);
    return cpow_principal(a, p.lambda - p.rho) *
           cpow_principal(b, -p.lambda - p.rho);
  };
  return integrate_sphere_adaptive(n - 1, f, tol, max_nodes);
}

AdaptiveResult spherical_function_via_integral(const MassParam& p, double t,
                                               double tol, int max_nodes) {
  int n = p.n;
  if (n < 2 || n > 4)
    throw domain_error("spherical_function_via_integral: n in {2,3,4}");
  double ch = std::cosh(t), sh = std::sinh(t);
  auto f = [&](const Eigen::VectorXd& u) {
    // [a_t e_0, xi_u] = cosh t - sinh t u_n
    double c = ch - sh * u[u.size() - 1];
    return std::exp((-p.lambda - p.rho) * std::log(Cx(c, 0)));
  };
  return integrate_sphere_adaptive(n - 1, f, tol, max_nodes);
}

double l2_normalization(const MassParam& p) {
  if (!(p.m > 0.0)) throw domain_error("l2_normalization: m > 0");
  double g = gamma_const(p);
  HypParams hp(Cx(p.rho, 0) + p.lambda, Cx(p.rho, 0) - p.lambda,
               Cx(p.n / 2.0, 0));
  auto alpha = [&](double t) {
    double arg = 0.5 * (1.0 - t);
    // quadrature nodes rounded onto t = -1 would land exactly on the branch
    // point; the sliver they represent carries negligible mass
    if (arg >= 1.0) arg = 1.0 - 1.1e-16;
    return g * gauss_2f1(hp, Cx(arg, 0)).real();
  };
  return radial_integral(p.n, alpha, 1e-9);
}

}  // namespace crown
