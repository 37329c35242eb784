#pragma once

#include <Eigen/Dense>

#include "crown/types.hpp"

namespace crown {

/// A point of C^{n+1}; carries the ambient complex bilinear form.  Membership
/// in the sphere, V, the crown etc. is tested by explicit predicates, not at
/// construction time.
struct CPoint {
  Eigen::VectorXcd coords;

  CPoint() = default;
  explicit CPoint(Eigen::VectorXcd c) : coords(std::move(c)) {
    for (Eigen::Index i = 0; i < coords.size(); ++i)
      require_finite(coords[i], "CPoint");
  }
  int n() const { return static_cast<int>(coords.size()) - 1; }
  Cx operator[](int j) const { return coords[j]; }
};

/// Standard basis vector e_j in C^{n+1}.
CPoint basis_point(int n, int j);
/// xi0 = e_0 + i e_n (base point of the light cone).
CPoint xi0_point(int n);
/// xi_u = (1, i u) for u on S^{n-1}.
CPoint xi_u_point(const Eigen::VectorXd& u);

/// Complex bilinear form z.w = sum z_j w_j; on V this is the Lorentzian form.
Cx bilinear(const CPoint& z, const CPoint& w);

/// Antilinear involutions fixing R^{n+1} resp. V = R e_0 + i R^n.
CPoint sigma_R(const CPoint& z);
CPoint sigma_V(const CPoint& z);
/// Coordinate reflection r_j.
CPoint reflect(const CPoint& z, int j);

/// z = u + i v with u, v in V.
struct VDecomposition {
  CPoint u, v;
};
VDecomposition v_decompose(const CPoint& z);

/// Membership predicates (tol fuzzes the equality constraints).
bool on_sphere(const CPoint& z, double tol = 1e-9);
bool in_V(const CPoint& z, double tol = 1e-9);
/// z in Xi = T_{V+} \cap S^n_C.  The open-cone conditions are tested
/// strictly; tol bounds |z^2 - 1|.
bool in_crown(const CPoint& z, double tol = 1e-9);

enum class BoundaryClass { DeSitter, LightRayOrbit, NotBoundary };
BoundaryClass classify_boundary(const CPoint& z, double tol = 1e-9);

/// Exp_p(v) = C(v^2) p + S(v^2) v; requires p on the sphere and v tangent.
CPoint exp_point(const CPoint& p, const CPoint& v, double tol = 1e-10);

/// Exp_{e_n}(v) for v in the forward cone at e_n with 0 < [v,v] < pi^2;
/// lands in the crown.
CPoint crown_from_de_sitter(const CPoint& v);
CPoint crown_from_de_sitter(double t, const CPoint& direction);

/// Ray inversion r(z) = z / z^2.
CPoint ray_inversion(const CPoint& z);

/// Spin-factor Jordan algebra on C e_0 + C^n with unit e_0 and
/// determinant Delta(z) = z.z.
CPoint jordan_product(const CPoint& x, const CPoint& y);
CPoint jordan_inverse(const CPoint& x);
/// Cayley transform C(z) = (z - e)(z + e)^{-1}.
CPoint cayley(const CPoint& z);
/// alpha(z_0, zz) = (z_0, -zz).
CPoint alpha_flip(const CPoint& z);
/// Lie-ball membership: ||u||^2 + ||v||^2 + 2 sqrt(||u||^2||v||^2 - (u,v)^2) < 1 + tol.
bool lie_ball_contains(const CPoint& w, double tol = 1e-9);

/// n=1 parametrization zeta: C^x -> S^1_C and its inverse.
CPoint zeta_map(Cx z);
Cx zeta_inverse(const CPoint& p);

/// Crown sampler: g.(cos t e_0 + sin t e_n), t uniform in (-t_max, t_max),
/// g a word of random rotations and boosts (|boost| <= max_boost).
/// t_max < pi/2 keeps the samples uniformly inside the crown.
CPoint sample_crown(int n, Rng& rng, double max_boost = 3.0, double t_max = 1.5697);
/// Sample a point of the half-sphere S^n_+ (|t| < t_max).
CPoint sample_half_sphere(int n, Rng& rng, double t_max = 1.5697);
/// Sample a point of H^n_V = iota(H^n).
CPoint sample_hyperboloid(int n, Rng& rng, double max_boost = 3.0);
/// Sample a point of the tube T_{V+}.
CPoint sample_tube(int n, Rng& rng);

}  // namespace crown
