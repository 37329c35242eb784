#include "crown/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace crown {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

double lbeta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}
}  // namespace

Rule1D gauss_legendre(int n) {
  // Newton iteration on the Legendre recurrence
  Rule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.nodes[i] = -x;
    r.weights[i] = w;
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

Rule1D gauss_jacobi(int n, double alpha, double beta) {
  if (alpha <= -1.0 || beta <= -1.0)
    throw domain_error("gauss_jacobi: weight exponents must exceed -1");
  if (alpha == 0.0 && beta == 0.0) return gauss_legendre(n);
  // Golub-Welsch: nodes are eigenvalues of the Jacobi recurrence matrix.
  Eigen::VectorXd diag(n), sub(n - 1);
  double ab = alpha + beta;
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double dk = k;
    diag[k] = (beta * beta - alpha * alpha) /
              ((2.0 * dk + ab) * (2.0 * dk + ab + 2.0));
  }
  if (n > 1) {
    // k = 1 with the (1+ab) factor cancelled (needed when ab = -1)
    sub[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                       ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
  }
  for (int k = 2; k < n; ++k) {
    double dk = k;
    double num = 4.0 * dk * (dk + alpha) * (dk + beta) * (dk + ab);
    double den = (2.0 * dk + ab) * (2.0 * dk + ab) * (2.0 * dk + ab + 1.0) *
                 (2.0 * dk + ab - 1.0);
    sub[k - 1] = std::sqrt(num / den);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  Eigen::VectorXd x = es.eigenvalues();

  // Weights from w_i = mu0 / sum_k p_k(x_i)^2 with orthonormal p_k.
  double mu0 = std::exp((ab + 1.0) * std::log(2.0) + lbeta(alpha + 1.0, beta + 1.0));
  Rule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    double pm = 0.0, pc = 1.0 / std::sqrt(mu0);  // orthonormal p_0
    double ssq = pc * pc;
    for (int k = 0; k < n - 1; ++k) {
      double bk = sub[k];
      double pn = ((xi - diag[k]) * pc - (k > 0 ? sub[k - 1] : 0.0) * pm) / bk;
      pm = pc;
      pc = pn;
      ssq += pc * pc;
    }
    r.nodes[i] = xi;
    r.weights[i] = 1.0 / ssq;
  }
  return r;
}

Rule1D trapezoid_circle(int n) {
  Rule1D r;
  r.nodes.resize(n);
  r.weights.assign(n, 2.0 * kPi / n);
  for (int i = 0; i < n; ++i) r.nodes[i] = 2.0 * kPi * i / n;
  return r;
}

QuadratureRule sphere_rule(int d, int order) {
  if (order < 2) throw domain_error("sphere_rule: order >= 2 required");
  QuadratureRule q;
  q.dim = d;
  q.exact_degree = 2 * order - 1;
  if (d == 1) {
    int N = 2 * order;
    for (int i = 0; i < N; ++i) {
      double th = 2.0 * kPi * i / N;
      Eigen::VectorXd u(2);
      u << std::cos(th), std::sin(th);
      q.nodes.push_back(u);
      q.weights.push_back(1.0 / N);
    }
  } else if (d == 2) {
    Rule1D lat = gauss_legendre(order);
    Rule1D lon = trapezoid_circle(2 * order);
    for (int i = 0; i < order; ++i) {
      double t = lat.nodes[i];  // t = cos(theta)
      double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (std::size_t j = 0; j < lon.nodes.size(); ++j) {
        Eigen::VectorXd u(3);
        u << s * std::cos(lon.nodes[j]), s * std::sin(lon.nodes[j]), t;
        q.nodes.push_back(u);
        // measure: dmu = (1/4pi) sin(theta) dtheta dphi = (1/4pi) dt dphi
        q.weights.push_back(lat.weights[i] * lon.weights[j] / (4.0 * kPi));
      }
    }
  } else if (d == 3) {
    // S^3: u = (sin(psi) v, cos(psi)), v in S^2, weight sin^2(psi).
    Rule1D psi = gauss_jacobi(order, 0.5, 0.5);  // t = cos(psi), weight (1-t^2)^{1/2}
    QuadratureRule base = sphere_rule(2, order);
    double norm = 0.0;
    for (double w : psi.weights) norm += w;  // = pi/2
    for (int i = 0; i < order; ++i) {
      double t = psi.nodes[i];
      double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (std::size_t j = 0; j < base.nodes.size(); ++j) {
        Eigen::VectorXd u(4);
        u << s * base.nodes[j][0], s * base.nodes[j][1], s * base.nodes[j][2], t;
        q.nodes.push_back(u);
        q.weights.push_back(psi.weights[i] / norm * base.weights[j]);
      }
    }
  } else {
    throw domain_error("sphere_rule: unsupported dimension");
  }
  double total = 0.0;
  for (double w : q.weights) total += w;
  for (double& w : q.weights) w /= total;
  return q;
}

Cx integrate(const QuadratureRule& rule, const std::function<Cx(const Eigen::VectorXd&)>& f) {
  std::vector<Cx> vals(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    vals[i] = rule.weights[i] * f(rule.nodes[i]);
  return pairwise_sum(vals);
}

namespace {
int sphere_rule_nodes(int d, int order) {
  if (d == 1) return 2 * order;
  if (d == 2) return 2 * order * order;
  return 2 * order * order * order;
}
}  // namespace

AdaptiveResult integrate_sphere_adaptive(int d,
                                         const std::function<Cx(const Eigen::VectorXd&)>& f,
                                         double tol, int max_nodes) {
  int order = 8;
  Cx prev = integrate(sphere_rule(d, order), f);
  bool at_cap = false;
  while (true) {
    int next = std::max(order + 4, static_cast<int>(order * 1.5));
    if (sphere_rule_nodes(d, next) > max_nodes) {
      // one last shot at the largest order fitting under the cap
      while (sphere_rule_nodes(d, next) > max_nodes && next > order) --next;
      if (next <= order || at_cap)
        throw numeric_error(
            "integrate_sphere_adaptive: node cap exceeded before convergence");
      at_cap = true;
    }
    order = next;
    QuadratureRule rule = sphere_rule(d, order);
    Cx cur = integrate(rule, f);
    double diff = std::abs(cur - prev);
    if (diff < tol)
      return {cur, diff, static_cast<int>(rule.nodes.size())};
    prev = cur;
  }
}

QuadratureRule cap_singular_rule(int d, int order, double s, const Eigen::VectorXd& axis) {
  if (axis.size() != d + 1) throw domain_error("cap_singular_rule: axis dimension");
  Eigen::VectorXd e = axis / axis.norm();
  QuadratureRule q;
  q.dim = d;
  q.exact_degree = order;
  // Householder frame mapping e_last -> e.
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(d + 1, d + 1);
  Eigen::VectorXd en = Eigen::VectorXd::Zero(d + 1);
  en[d] = 1.0;
  Eigen::VectorXd v = e - en;
  if (v.norm() > 1e-14) H -= 2.0 / v.squaredNorm() * (v * v.transpose());

  if (d == 1) {
    if (s <= -0.5) throw domain_error("cap_singular_rule: s <= -1/2 not integrable on S^1");
    // (1/2pi) int (1-cos w)^s [g(+w)+g(-w)] dw, t = cos w:
    // weight (1-t)^{s-1/2} (1+t)^{-1/2}
    Rule1D gj = gauss_jacobi(order, s - 0.5, -0.5);
    for (int i = 0; i < order; ++i) {
      double t = gj.nodes[i];
      double sn = std::sqrt(std::max(0.0, 1.0 - t * t));
      double w = gj.weights[i] / (2.0 * kPi);
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd u(2);
        u << sn * sign, t;  // angle measured from the axis
        q.nodes.push_back(H * u);
        q.weights.push_back(w);
      }
    }
  } else if (d == 2 || d == 3) {
    if (s + d / 2.0 <= 0.0)
      throw domain_error("cap_singular_rule: singularity not integrable");
    // dmu = c_d (1-t^2)^{d/2-1} dt x dsigma(S^{d-1}), t = u.axis
    // c_d = Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2))
    double cd = std::exp(std::lgamma((d + 1.0) / 2.0) - 0.5 * std::log(kPi) -
                         std::lgamma(d / 2.0));
    Rule1D gj = gauss_jacobi(order, s + d / 2.0 - 1.0, d / 2.0 - 1.0);
    QuadratureRule lower = sphere_rule(d - 1, std::max(2, order));
    for (int i = 0; i < order; ++i) {
      double t = gj.nodes[i];
      double sn = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (std::size_t j = 0; j < lower.nodes.size(); ++j) {
        Eigen::VectorXd u(d + 1);
        u.head(d) = sn * lower.nodes[j];
        u[d] = t;
        q.nodes.push_back(H * u);
        q.weights.push_back(cd * gj.weights[i] * lower.weights[j]);
      }
    }
  } else {
    throw domain_error("cap_singular_rule: unsupported dimension");
  }
  return q;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
  // map (a,b) -> (-1,1), x = tanh(pi/2 sinh t).  Abscissas are carried as
  // distances to the endpoints so endpoint singularities see full precision.
  double r = 0.5 * (b - a);
  auto eval_level = [&](double h, int level) {
    double sum = 0.0;
    int kmax = static_cast<int>(std::ceil(6.0 / h));
    for (int k = (level == 0 ? 0 : 1); k <= kmax; k += (level == 0 ? 1 : 2)) {
      for (int sign : {1, -1}) {
        if (k == 0 && sign < 0) continue;
        double t = sign * k * h;
        double u = 0.5 * kPi * std::sinh(t);
        double w = 0.5 * kPi * std::cosh(t) / std::pow(std::cosh(u), 2);
        if (w < 1e-320) continue;
        // distance from the near endpoint: 1 - |tanh(u)| = 2/(exp(2|u|)+1)
        double delta = 2.0 * r / (std::exp(2.0 * std::abs(u)) + 1.0);
        double xx = (t >= 0.0) ? b - delta : a + delta;
        if (xx <= a || xx >= b) continue;
        double v = f(xx);
        if (std::isfinite(v)) sum += w * v;
      }
    }
    return sum;
  };
  double h = 0.5;
  double total = eval_level(h, 0);
  double prev = total * h * r;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    total += eval_level(h, 1);
    double cur = total * h * r;
    if (std::abs(cur - prev) < tol * (1.0 + std::abs(cur)) && level >= 4) return cur;
    prev = cur;
  }
  return prev;
}

double radial_integral(int n, const std::function<double(double)>& alpha, double tol) {
  if (n < 1) throw domain_error("radial_integral: n >= 1");
  double expo = n / 2.0 - 1.0;
  double cn = std::exp(std::lgamma((n + 1.0) / 2.0) - 0.5 * std::log(kPi) -
                       std::lgamma(n / 2.0));
  auto eval = [&](int order) {
    Rule1D gj = gauss_jacobi(order, expo, expo);
    std::vector<double> vals(gj.nodes.size());
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
      double v = alpha(gj.nodes[i]);
      if (!std::isfinite(v)) throw domain_error("radial_integral: non-finite integrand");
      vals[i] = gj.weights[i] * v;
    }
    double s = 0.0;
    for (double v : vals) s += v;
    return cn * s;
  };
  int order = 64;
  double prev = eval(order);
  while (order < 4096) {
    order *= 2;
    double cur = eval(order);
    if (std::abs(cur - prev) < tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  // Endpoint-singular alpha (kernel integrands): tanh-sinh refinement.
  double ts = cn * tanh_sinh(
                       [&](double t) {
                         return alpha(t) * std::pow(1.0 - t * t, expo);
                       },
                       -1.0, 1.0, tol);
  return ts;
}

}  // namespace crown
