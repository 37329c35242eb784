#include "crown/kernels.hpp"

#include <cmath>

#include "crown/special.hpp"

namespace crown {

MassParam MassParam::make(int n, double m) {
  if (n < 1) throw domain_error("mass_param: n >= 1");
  if (m < 0.0) throw domain_error("mass_param: m >= 0");
  MassParam p;
  p.n = n;
  p.m = m;
  p.rho = (n - 1.0) / 2.0;
  if (m <= p.rho) {
    p.lambda = Cx(std::sqrt(p.rho * p.rho - m * m), 0.0);
    p.principal = (m == p.rho);
  } else {
    p.lambda = Cx(0.0, std::sqrt(m * m - p.rho * p.rho));
    p.principal = true;
  }
  return p;
}

double gamma_const(const MassParam& p) {
  if (!(p.m > 0.0)) throw domain_error("gamma_const: pole at m = 0");
  Cx lg = log_gamma(Cx(p.rho, 0) + p.lambda) + log_gamma(Cx(p.rho, 0) - p.lambda) -
          log_gamma(Cx(p.n, 0));
  double g = std::exp(lg.real()) * std::cos(lg.imag());
  if (!(g > 0.0)) throw numeric_error("gamma_const: expected a positive value");
  return g;
}

namespace {

Cx kernel_2f1(const MassParam& p, Cx arg) {
  HypParams hp(Cx(p.rho, 0) + p.lambda, Cx(p.rho, 0) - p.lambda, Cx(p.n / 2.0, 0));
  return gauss_2f1(hp, arg);
}

}  // namespace

Cx psi_kernel(const MassParam& p, const CPoint& z, const CPoint& w) {
  Cx pairing = bilinear(z, sigma_V(w));
  Cx arg = 0.5 * (1.0 - pairing);
  if (arg.imag() == 0.0 && arg.real() >= 1.0)
    throw domain_error("psi_kernel: pairing on the excluded ray (-inf,-1]");
  return gamma_const(p) * kernel_2f1(p, arg);
}

Cx phi_kernel(const MassParam& p, const CPoint& x, const CPoint& y) {
  Cx pairing = bilinear(x, sigma_R(y));
  Cx arg = 0.5 * (1.0 + pairing);
  if (arg.imag() == 0.0 && arg.real() >= 1.0)
    throw domain_error("phi_kernel: diagonal singularity (x.y -> 1)");
  return gamma_const(p) * kernel_2f1(p, arg);
}

Cx phi_c_kernel(const MassParam& p, const CPoint& z, const CPoint& w) {
  if (p.m == 0.0) return 1.0;
  Cx pairing = bilinear(z, sigma_V(w));
  Cx arg = 0.5 * (1.0 - pairing);
  if (arg.imag() == 0.0 && arg.real() >= 1.0)
    throw domain_error("phi_c_kernel: pairing on the excluded ray");
  return kernel_2f1(p, arg);
}

Cx spherical_function(const MassParam& p, const CPoint& x) {
  return phi_c_kernel(p, x, basis_point(x.n(), 0));
}

Cx spherical_function_t(const MassParam& p, double t) {
  if (p.m == 0.0) return 1.0;
  double sh = std::sinh(t / 2.0);
  return kernel_2f1(p, Cx(-sh * sh, 0));
}

namespace {

// Tiny symbolic engine for (1/sin t d/dt)^k cos(lambda t):
// linear combinations of cos(lambda t) resp. sin(lambda t) times
// cos^q(t) / sin^p(t).
struct Term {
  Cx coeff;
  int p;        // power of 1/sin(t)
  int q;        // power of cos(t)
  bool is_sin;  // sin(lambda t) vs cos(lambda t)
};

std::vector<Term> apply_op(const std::vector<Term>& terms, Cx lambda) {
  std::vector<Term> out;
  auto add = [&out](Term t) {
    if (std::abs(t.coeff) == 0.0) return;
    for (Term& o : out)
      if (o.p == t.p && o.q == t.q && o.is_sin == t.is_sin) {
        o.coeff += t.coeff;
        return;
      }
    out.push_back(t);
  };
  for (const Term& t : terms) {
    // d/dt [ f(lambda t) cos^q / sin^p ] with f in {cos, sin}
    // derivative of the trig-of-lambda factor
    Term d1 = t;
    d1.is_sin = !t.is_sin;
    d1.coeff = t.is_sin ? t.coeff * lambda : -t.coeff * lambda;
    // cos^q -> -q cos^{q-1} sin : merges into 1/sin^{p-1}... p -> p-1? No:
    // cos^q/sin^p d/dt gives -q cos^{q-1} sin^{1-p}; represent as p-1.
    Term d2 = t;
    d2.coeff = -static_cast<double>(t.q) * t.coeff;
    d2.q = t.q - 1;
    d2.p = t.p - 1;
    // 1/sin^p -> -p cos / sin^{p+1}
    Term d3 = t;
    d3.coeff = -static_cast<double>(t.p) * t.coeff;
    d3.q = t.q + 1;
    d3.p = t.p + 1;
    // then divide everything by sin(t): p += 1
    d1.p += 1;
    d2.p += 1;
    d3.p += 1;
    add(d1);
    if (t.q != 0) add(d2);
    if (t.p != 0) add(d3);
  }
  return out;
}

Cx eval_terms(const std::vector<Term>& terms, Cx lambda, double t) {
  Cx s = 0.0;
  double st = std::sin(t), ct = std::cos(t);
  for (const Term& tm : terms) {
    Cx trig = tm.is_sin ? std::sin(lambda * t) : std::cos(lambda * t);
    s += tm.coeff * trig * std::pow(ct, tm.q) / std::pow(st, tm.p);
  }
  return s;
}

}  // namespace

Cx odd_n_closed_form(const MassParam& p, double t) {
  if (p.n % 2 == 0) throw domain_error("odd_n_closed_form: n must be odd");
  if (!(t > 0.0 && t < 3.14159265358979323846))
    throw domain_error("odd_n_closed_form: need 0 < t < pi");
  int k = (p.n - 1) / 2;
  double gamma = gamma_const(p);
  if (k == 0) {
    // n = 1: gamma * cos(lambda t) = gamma * cosh(m t)  (lambda = i m)
    return gamma * std::cos(p.lambda * Cx(t, 0));
  }
  double dfact = 1.0;  // (n-2)(n-4)...3.1
  for (int j = p.n - 2; j >= 1; j -= 2) dfact *= j;
  Cx denom = 1.0;
  for (int j = 0; j < k; ++j) {
    double factor = j * j + p.m * p.m - p.rho * p.rho;
    if (std::abs(factor) < 1e-12)
      throw domain_error("odd_n_closed_form: vanishing denominator factor");
    denom *= factor;
  }
  std::vector<Term> terms = {{Cx(1, 0), 0, 0, false}};  // cos(lambda t)
  for (int j = 0; j < k; ++j) terms = apply_op(terms, p.lambda);
  return gamma * dfact / denom * eval_terms(terms, p.lambda, t);
}

double radial_ode_residual(const MassParam& p, double t, double h) {
  if (!(h > 0.0 && h <= 1e-3)) throw domain_error("radial_ode_residual: h <= 1e-3");
  if (!(t - 2.0 * h > 1e-3 && t + 2.0 * h < 3.14159265358979323846 - 1e-3))
    throw domain_error("radial_ode_residual: t too close to {0, pi}");
  auto eta = [&](double s) {
    double x = std::sin(s / 2.0);
    return (gamma_const(p) * kernel_2f1(p, Cx(x * x, 0))).real();
  };
  double em = eta(t - h), e0 = eta(t), ep = eta(t + h);
  double d2 = (ep - 2.0 * e0 + em) / (h * h);
  double d1 = (ep - em) / (2.0 * h);
  return std::abs(d2 + (p.n - 1.0) / std::tan(t) * d1 - p.m * p.m * e0);
}

Cx canonical_kernel(double lambda, const CPoint& z, const CPoint& w) {
  if (!(lambda > 0.0)) throw domain_error("canonical_kernel: lambda > 0");
  Cx pairing = bilinear(z, sigma_V(w));
  if (pairing.real() <= 0.0)
    throw domain_error("canonical_kernel: Re[z, sigma_V w] <= 0 (leave Xi')");
  return cpow_principal(pairing, Cx(-2.0 * lambda, 0));
}

bool xi_prime_contains(const CPoint& z, double tol) {
  if (!in_crown(z, tol)) return false;
  double beta = std::norm(z[0]);
  for (int j = 1; j <= z.n(); ++j) beta -= std::norm(z[j]);
  return beta > 0.0;
}

Cx q_nu_kernel(double nu, const CPoint& z, const CPoint& w) {
  if (nu < 0.0) throw domain_error("q_nu_kernel: nu >= 0");
  Cx base = 0.5 * (1.0 + bilinear(z, sigma_V(w)));
  if (base.imag() == 0.0 && base.real() <= 0.0)
    throw domain_error("q_nu_kernel: base on the cut");
  return cpow_principal(base, Cx(-nu, 0));
}

Cx boundary_kernel_ds(const MassParam& p, const CPoint& x, const CPoint& w) {
  if (classify_boundary(x, 1e-8) != BoundaryClass::DeSitter)
    throw domain_error("boundary_kernel_ds: x not on de Sitter space");
  Cx arg = 0.5 * (1.0 - bilinear(x, sigma_V(w)));
  if (arg.imag() == 0.0 && arg.real() >= 1.0)
    throw domain_error("boundary_kernel_ds: branch violation");
  return kernel_2f1(p, arg);
}

Cx boundary_kernel_ds_mirror(const MassParam& p, const CPoint& z, const CPoint& y) {
  if (classify_boundary(y, 1e-8) != BoundaryClass::DeSitter)
    throw domain_error("boundary_kernel_ds_mirror: y not on de Sitter space");
  Cx arg = 0.5 * (1.0 + bilinear(z, y));
  if (arg.imag() == 0.0 && arg.real() >= 1.0)
    throw domain_error("boundary_kernel_ds_mirror: branch violation");
  return kernel_2f1(p, arg);
}

}  // namespace crown
