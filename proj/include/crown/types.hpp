#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace crown {

using Cx = std::complex<double>;

/// Domain violation (bad argument, branch cut hit, membership failure).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to reach its tolerance (never silent).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Cx z, const char* where) {
  if (!is_finite(z)) throw domain_error(std::string(where) + ": non-finite argument");
}

/// Distance from z to the nearest integer (in the complex plane).
inline double dist_to_integer(Cx z) {
  double k = std::round(z.real());
  return std::abs(z - Cx(k, 0.0));
}

inline bool is_nonpositive_integer(Cx z, double tol = 1e-12) {
  double k = std::round(z.real());
  return k <= 0.0 && std::abs(z - Cx(k, 0.0)) <= tol;
}

/// Principal power w^mu = exp(mu Log w); w must avoid (-inf, 0].
inline Cx cpow_principal(Cx w, Cx mu) {
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw domain_error("cpow_principal: base on the cut (-inf,0]");
  return std::exp(mu * std::log(w));
}

/// Deterministic pairwise (tree) reduction; bit-stable regardless of caller threading.
template <class T>
T pairwise_sum(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
  std::size_t len = hi - lo;
  if (len == 0) return T{};
  if (len <= 8) {
    T s = v[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + len / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v, 0, v.size());
}

/// Seeded RNG used by every sampler; tests fix seeds so runs are reproducible.
using Rng = std::mt19937_64;

}  // namespace crown
