#pragma once

#include "crown/types.hpp"

namespace crown {

/// Parameter triple of the Gauss hypergeometric function.
/// c must stay off the non-positive integers (series denominators).
struct HypParams {
  Cx a, b, c;
  HypParams(Cx a_, Cx b_, Cx c_) : a(a_), b(b_), c(c_) {
    require_finite(a, "HypParams");
    require_finite(b, "HypParams");
    require_finite(c, "HypParams");
    if (is_nonpositive_integer(c))
      throw domain_error("HypParams: c is a non-positive integer");
  }
};

/// log Gamma, principal determination on the right half plane,
/// reflection formula for Re z <= 0.  Poles rejected.
Cx log_gamma(Cx z);

/// Gamma through exp(log_gamma).
Cx cgamma(Cx z);

/// Digamma psi(z) = Gamma'(z)/Gamma(z); asymptotic series plus recurrence,
/// reflection for Re z < 1/2.
Cx digamma(Cx z);

/// Gauss 2F1(a,b;c;z) on the principal analytic continuation, z off [1,inf).
Cx gauss_2f1(const HypParams& p, Cx z);
inline Cx gauss_2f1(Cx a, Cx b, Cx c, Cx z) { return gauss_2f1(HypParams(a, b, c), z); }

/// Entire functions with C(t^2) = cos t and S(t^2) = sin(t)/t.
Cx entire_C(Cx z);
Cx entire_S(Cx z);

namespace detail {
/// Maclaurin series of 2F1; converges for |z| < 1.  Exposed for the tests'
/// brute-force oracle role.
Cx hyp2f1_series(Cx a, Cx b, Cx c, Cx z);
}  // namespace detail

}  // namespace crown
