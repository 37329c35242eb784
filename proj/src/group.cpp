#include "crown/group.hpp"

#include <cmath>

namespace crown {

namespace {

Eigen::MatrixXd minkowski_eta(int n) {
  Eigen::VectorXd d(n + 1);
  d[0] = 1.0;
  for (int j = 1; j <= n; ++j) d[j] = -1.0;
  return d.asDiagonal();
}

Eigen::MatrixXcd complexify(const Eigen::MatrixXd& L) {
  int n = static_cast<int>(L.rows()) - 1;
  Eigen::MatrixXcd g(n + 1, n + 1);
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) {
      Cx f = 1.0;
      if (r > 0) f *= Cx(0, 1);
      if (c > 0) f /= Cx(0, 1);
      g(r, c) = f * L(r, c);
    }
  return g;
}

LorentzElement wrap(const Eigen::MatrixXd& L, double extra_scale = 1.0) {
  int n = static_cast<int>(L.rows()) - 1;
  Eigen::MatrixXd eta = minkowski_eta(n);
  double scale =
      extra_scale * std::max(1.0, std::pow(L.cwiseAbs().maxCoeff(), 2));
  if ((L.transpose() * eta * L - eta).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw domain_error("LorentzElement: L^T eta L != eta");
  if (!(L(0, 0) > 0.0)) throw domain_error("LorentzElement: not orthochronous");
  LorentzElement e;
  e.L = L;
  e.g = complexify(L);
  Eigen::MatrixXcd gram = e.g.transpose() * e.g;
  if ((gram - Eigen::MatrixXcd::Identity(L.rows(), L.cols())).cwiseAbs().maxCoeff() >
      1e-10 * scale)
    throw domain_error("LorentzElement: complex form not orthogonal");
  return e;
}

}  // namespace

bool is_lorentz(const Eigen::MatrixXd& L, double tol) {
  int n = static_cast<int>(L.rows()) - 1;
  Eigen::MatrixXd eta = minkowski_eta(n);
  double scale = std::max(1.0, std::pow(L.cwiseAbs().maxCoeff(), 2));
  return (L.transpose() * eta * L - eta).cwiseAbs().maxCoeff() <= tol * scale;
}

LorentzElement identity_element(int n) {
  return wrap(Eigen::MatrixXd::Identity(n + 1, n + 1));
}

LorentzElement make_boost(int n, double t) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n + 1, n + 1);
  L(0, 0) = std::cosh(t);
  L(0, n) = std::sinh(t);
  L(n, 0) = std::sinh(t);
  L(n, n) = std::cosh(t);
  return wrap(L);
}

LorentzElement make_horospherical(const Eigen::VectorXd& v) {
  int n = static_cast<int>(v.size()) + 1;
  if (n < 2) throw domain_error("make_horospherical: needs n >= 2");
  double q = 0.5 * v.squaredNorm();
  // Complex block form (rows/cols split 1 | n-1 | 1):
  //   [ 1+q     -i v^T    i q   ]
  //   [ i v      I        -v    ]
  //   [ i q      v^T      1-q   ]
  // Real form L = iota^{-1} g iota.
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n + 1, n + 1);
  L(0, 0) = 1.0 + q;
  L(0, n) = -q;
  L(n, 0) = q;
  L(n, n) = 1.0 - q;
  for (int j = 0; j < n - 1; ++j) {
    L(0, j + 1) = v[j];
    L(j + 1, 0) = v[j];
    L(j + 1, n) = -v[j];
    L(n, j + 1) = v[j];
  }
  return wrap(L);
}

LorentzElement make_rotation(const Eigen::MatrixXd& k) {
  int n = static_cast<int>(k.rows());
  if ((k.transpose() * k - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
    throw domain_error("make_rotation: k not orthogonal");
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n + 1, n + 1);
  L.block(1, 1, n, n) = k;
  return wrap(L);
}

LorentzElement make_m(const Eigen::MatrixXd& A) {
  int m = static_cast<int>(A.rows());
  if ((A.transpose() * A - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-12)
    throw domain_error("make_m: A not orthogonal");
  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(m + 1, m + 1);
  k.block(0, 0, m, m) = A;
  return make_rotation(k);
}

LorentzElement from_real_matrix(const Eigen::MatrixXd& L) { return wrap(L); }

LorentzElement LorentzElement::inverse() const {
  int nn = n();
  Eigen::MatrixXd eta = minkowski_eta(nn);
  double s = std::max(1.0, std::pow(L.cwiseAbs().maxCoeff(), 2));
  return wrap(eta * L.transpose() * eta, s);
}

LorentzElement operator*(const LorentzElement& x, const LorentzElement& y) {
  double s = std::max(1.0, std::pow(x.L.cwiseAbs().maxCoeff() *
                                        y.L.cwiseAbs().maxCoeff(),
                                    2));
  return wrap(x.L * y.L, s);
}

CPoint act(const LorentzElement& g, const CPoint& z) {
  if (g.L.rows() != z.coords.size()) throw domain_error("act: dimension mismatch");
  return CPoint(g.g * z.coords);
}

BlockView block_view(const LorentzElement& e, double tol) {
  int n = e.n();
  BlockView b;
  b.a = e.g(0, 0).real();
  b.v.resize(n);
  b.w.resize(n);
  b.A.resize(n, n);
  for (int j = 0; j < n; ++j) {
    b.v[j] = e.g(0, j + 1).imag();
    b.w[j] = e.g(j + 1, 0).imag();
    for (int k = 0; k < n; ++k) b.A(j, k) = e.g(j + 1, k + 1).real();
  }
  // reassembly check
  double err = std::abs(e.g(0, 0) - Cx(b.a, 0));
  for (int j = 0; j < n; ++j) {
    err = std::max(err, std::abs(e.g(0, j + 1) - Cx(0, b.v[j])));
    err = std::max(err, std::abs(e.g(j + 1, 0) - Cx(0, b.w[j])));
    for (int k = 0; k < n; ++k)
      err = std::max(err, std::abs(e.g(j + 1, k + 1) - Cx(b.A(j, k), 0)));
  }
  if (err > tol) throw numeric_error("block_view: reassembly mismatch");
  return b;
}

BoundaryAction boundary_action(const LorentzElement& g, const Eigen::VectorXd& u) {
  if (std::abs(u.norm() - 1.0) > 1e-12)
    throw domain_error("boundary_action: u must be a unit vector");
  BlockView b = block_view(g);
  double j = b.a - b.v.dot(u);
  if (!(j > 0.0)) throw numeric_error("boundary_action: cocycle not positive");
  BoundaryAction r;
  r.j = j;
  r.u = (b.A * u + b.w) / j;
  return r;
}

Cx jlambda(const LorentzElement& g, const Eigen::VectorXd& u, Cx lambda) {
  double rho = (static_cast<double>(u.size()) - 1.0) / 2.0;
  BoundaryAction ba = boundary_action(g, u);
  return std::exp((-lambda - rho) * std::log(ba.j));
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
  Eigen::MatrixXd Q = qr.householderQ();
  return Q;
}

LorentzElement random_word(int n, Rng& rng, int length, double max_boost,
                           double max_horo) {
  std::uniform_int_distribution<int> pick(0, (n >= 2 && max_horo > 0.0) ? 2 : 1);
  std::uniform_real_distribution<double> boost(-max_boost, max_boost);
  std::uniform_real_distribution<double> horo(-max_horo, max_horo);
  LorentzElement g = identity_element(n);
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0:
        g = g * make_rotation(random_orthogonal(n, rng));
        break;
      case 1:
        g = g * make_boost(n, boost(rng));
        break;
      default: {
        Eigen::VectorXd v(n - 1);
        for (int j = 0; j < n - 1; ++j) v[j] = horo(rng);
        g = g * make_horospherical(v);
        break;
      }
    }
  }
  return g;
}

}  // namespace crown
