#pragma once

#include <Eigen/Dense>

#include "crown/geometry.hpp"
#include "crown/types.hpp"

namespace crown {

/// Element of the orthochronous Lorentz group, kept in two synchronized
/// realizations: the real matrix L in O(1,n)^ and its complex form
/// g = iota L iota^{-1} acting on C^{n+1} (iota = diag(1, i, ..., i)).
/// The complex form is authoritative for actions.
struct LorentzElement {
  Eigen::MatrixXd L;
  Eigen::MatrixXcd g;

  int n() const { return static_cast<int>(L.rows()) - 1; }
  LorentzElement inverse() const;
  friend LorentzElement operator*(const LorentzElement& x, const LorentzElement& y);
};

/// Block data of the complex realization g = (a, i v; i w^T, A).
struct BlockView {
  double a;
  Eigen::VectorXd v, w;
  Eigen::MatrixXd A;
};
BlockView block_view(const LorentzElement& g, double tol = 1e-12);

LorentzElement identity_element(int n);
/// Boost a_t in the (e_0, e_n) plane.
LorentzElement make_boost(int n, double t);
/// Horospherical n_v, v in R^{n-1} (stabilizes xi0); needs n >= 2.
LorentzElement make_horospherical(const Eigen::VectorXd& v);
/// Rotation block diag(1, k), k in O(n).
LorentzElement make_rotation(const Eigen::MatrixXd& k);
/// m_A = diag(1, A, 1), A in O(n-1).
LorentzElement make_m(const Eigen::MatrixXd& A);
/// From a real matrix in O(1,n)^ (validated).
LorentzElement from_real_matrix(const Eigen::MatrixXd& L);

/// Linear action on C^{n+1}.
CPoint act(const LorentzElement& g, const CPoint& z);

/// Boundary action on S^{n-1}: g.u = (A u + w)/(a - v.u) and the cocycle
/// j(g,u) = a - v.u > 0, with g.xi_u = j(g,u) xi_{g.u}.
struct BoundaryAction {
  Eigen::VectorXd u;  // g.u
  double j;
};
BoundaryAction boundary_action(const LorentzElement& g, const Eigen::VectorXd& u);

/// j_lambda(g,u) = j(g,u)^(-lambda - rho), rho = (n-1)/2.
Cx jlambda(const LorentzElement& g, const Eigen::VectorXd& u, Cx lambda);

/// Random word in {rotations, boosts |t| <= max_boost, horosphericals
/// |v| <= max_horo} of the given length.  Deterministic under a fixed rng.
LorentzElement random_word(int n, Rng& rng, int length, double max_boost = 2.0,
                           double max_horo = 2.0);
/// Random rotation in O(n) (Haar-ish via QR of a Gaussian matrix).
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

/// Invariant checks used by the constructors and the tests.
bool is_lorentz(const Eigen::MatrixXd& L, double tol = 1e-10);

}  // namespace crown
