#include "crown/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace crown {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kMaxTerms = 10000;
constexpr double kTermCutoff = 1e-17;

// Lanczos g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

Cx log_gamma_lanczos(Cx z) {
  // valid for Re z > 0, principal on that half plane
  Cx zm1 = z - 1.0;
  Cx sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k)
    sum += kLanczos[k] / (zm1 + static_cast<double>(k));
  Cx base = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(base) - base +
         std::log(sum);
}

// log(sin(pi z)) stable for large |Im z|.
Cx log_sin_pi(Cx z) {
  Cx ipz = Cx(0, 1) * kPi * z;
  if (z.imag() > 7.0) {
    // sin(pi z) ~ exp(-i pi z) (i/2) (1 - exp(2 i pi z))
    return -ipz + std::log(Cx(0, 0.5)) + std::log(1.0 - std::exp(2.0 * ipz));
  }
  if (z.imag() < -7.0) {
    // sin(pi z) ~ exp(i pi z) (-i/2) (1 - exp(-2 i pi z))
    return ipz + std::log(Cx(0, -0.5)) + std::log(1.0 - std::exp(-2.0 * ipz));
  }
  return std::log(std::sin(kPi * z));
}

}  // namespace

Cx log_gamma(Cx z) {
  require_finite(z, "log_gamma");
  if (is_nonpositive_integer(z))
    throw domain_error("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(Cx(kPi)) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

Cx digamma(Cx z) {
  require_finite(z, "digamma");
  if (is_nonpositive_integer(z))
    throw domain_error("digamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // reflection: psi(1-z) - psi(z) = pi cot(pi z)
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  Cx acc = 0.0;
  while (z.real() < 16.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // asymptotic series with Bernoulli numbers
  static const double b2k[] = {1.0 / 6,   -1.0 / 30, 1.0 / 42,   -1.0 / 30,
                               5.0 / 66,  -691.0 / 2730, 7.0 / 6};
  Cx w = 1.0 / (z * z);
  Cx s = std::log(z) - 0.5 / z;
  Cx wp = w;
  for (int k = 0; k < 7; ++k) {
    s -= b2k[k] / (2.0 * (k + 1.0)) * wp;
    wp *= w;
  }
  return acc + s;
}

Cx cgamma(Cx z) { return std::exp(log_gamma(z)); }

namespace detail {

Cx hyp2f1_series(Cx a, Cx b, Cx c, Cx z) {
  Cx term = 1.0, sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    double dk = static_cast<double>(k);
    term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
    sum += term;
    if (std::abs(term) < kTermCutoff * std::abs(sum) && k > 2) return sum;
  }
  throw numeric_error("gauss_2f1: series did not converge in 10000 terms");
}

}  // namespace detail

namespace {

using detail::hyp2f1_series;

// Polynomial case: a (or b) a non-positive integer.
Cx hyp2f1_polynomial(Cx a, Cx b, Cx c, Cx z) {
  if (!is_nonpositive_integer(a)) std::swap(a, b);
  int n = static_cast<int>(-std::round(a.real()));
  Cx term = 1.0, sum = 1.0;
  for (int k = 0; k < n; ++k) {
    double dk = static_cast<double>(k);
    term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
    sum += term;
  }
  return sum;
}

Cx gamma_ratio(std::initializer_list<Cx> num, std::initializer_list<Cx> den) {
  Cx s = 0.0;
  for (Cx x : num) s += log_gamma(x);
  for (Cx x : den) s -= log_gamma(x);
  return std::exp(s);
}

// Principal power (1-z)^mu etc. used by the transformations.  The bases stay
// off (-inf,0] for z off [1,inf), which the entry point guarantees.
Cx pw(Cx w, Cx mu) {
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw numeric_error("gauss_2f1: transformation base hit the cut");
  return std::exp(mu * std::log(w));
}

Cx eval_2f1(Cx a, Cx b, Cx c, Cx z, int depth);

// Pfaff: F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1)).
Cx via_pfaff(Cx a, Cx b, Cx c, Cx z) {
  return pw(1.0 - z, -a) * hyp2f1_series(a, c - b, c, z / (z - 1.0));
}

// DLMF 15.8.4 (argument 1-z); needs c-a-b off the integers.
Cx via_1mz(Cx a, Cx b, Cx c, Cx z, int depth) {
  Cx s = c - a - b;
  Cx t1 = gamma_ratio({c, s}, {c - a, c - b}) * eval_2f1(a, b, 1.0 - s, 1.0 - z, depth + 1);
  Cx t2 = gamma_ratio({c, -s}, {a, b}) * pw(1.0 - z, s) *
          eval_2f1(c - a, c - b, 1.0 + s, 1.0 - z, depth + 1);
  return t1 + t2;
}

// Logarithmic 1-z connection for c - a - b = mm in Z (argument w = 1-z,
// |w| < 1): the degenerate-case analogues of the 1-z formula.
Cx via_1mz_log(Cx a, Cx b, Cx c, Cx z) {
  Cx w = 1.0 - z;
  Cx logw = std::log(w);
  int mm = static_cast<int>(std::round((c - a - b).real()));
  const int nmax = 2000;
  if (mm == 0) {
    // F(a,b;a+b;z) = G Sum ((a)_n(b)_n/(n!)^2) w^n [2 psi(n+1) - psi(a+n) - psi(b+n) - ln w]
    Cx G = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b));
    Cx coeff = 1.0, sum = 0.0;
    for (int n = 0; n < nmax; ++n) {
      Cx bracket = 2.0 * digamma(Cx(n + 1.0, 0)) - digamma(a + static_cast<double>(n)) -
                   digamma(b + static_cast<double>(n)) - logw;
      Cx term = coeff * bracket;
      sum += term;
      if (n > 2 && std::abs(term) < kTermCutoff * std::abs(sum)) return G * sum;
      coeff *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
               ((n + 1.0) * (n + 1.0)) * w;
    }
    throw numeric_error("gauss_2f1: log-case series did not converge");
  }
  if (mm > 0) {
    // c = a + b + m (AS 15.3.11)
    double m = mm;
    Cx A = std::exp(log_gamma(Cx(m, 0)) + log_gamma(c) - log_gamma(a + m) -
                    log_gamma(b + m));
    Cx finite = 0.0, coeff = 1.0;
    for (int n = 0; n < mm; ++n) {
      finite += coeff;
      coeff *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
               ((n + 1.0) * (1.0 - m + n)) * w;
    }
    double msign = (mm % 2 == 0) ? 1.0 : -1.0;
    Cx B = msign * std::exp(log_gamma(c) - log_gamma(a) - log_gamma(b));
    Cx series = 0.0;
    Cx c2 = std::exp(-std::lgamma(m + 1.0));  // 1/(0! m!)
    for (int n = 0; n < nmax; ++n) {
      Cx bracket = logw - digamma(Cx(n + 1.0, 0)) - digamma(Cx(n + m + 1.0, 0)) +
                   digamma(a + m + static_cast<double>(n)) +
                   digamma(b + m + static_cast<double>(n));
      Cx term = c2 * bracket;
      series += term;
      if (n > 2 && std::abs(term) < kTermCutoff * std::abs(series)) break;
      if (n + 1 == nmax)
        throw numeric_error("gauss_2f1: log-case series did not converge");
      c2 *= (a + m + static_cast<double>(n)) * (b + m + static_cast<double>(n)) /
            ((n + 1.0) * (n + m + 1.0)) * w;
    }
    return A * finite - B * std::pow(w, mm) * series;
  }
  // c = a + b - m (AS 15.3.12), m = -mm > 0
  double m = -mm;
  Cx A = std::exp(log_gamma(Cx(m, 0)) + log_gamma(c) - log_gamma(a) - log_gamma(b));
  Cx finite = 0.0, coeff = 1.0;
  for (int n = 0; n < -mm; ++n) {
    finite += coeff;
    coeff *= (a - m + static_cast<double>(n)) * (b - m + static_cast<double>(n)) /
             ((n + 1.0) * (1.0 - m + n)) * w;
  }
  double msign = ((-mm) % 2 == 0) ? 1.0 : -1.0;
  if (is_nonpositive_integer(a - m) || is_nonpositive_integer(b - m))
    return A * std::pow(w, mm) * finite;  // 1/Gamma pole kills the series
  Cx B = msign * std::exp(log_gamma(c) - log_gamma(a - m) - log_gamma(b - m));
  Cx series = 0.0;
  Cx c2 = std::exp(-std::lgamma(m + 1.0));
  for (int n = 0; n < nmax; ++n) {
    Cx bracket = logw - digamma(Cx(n + 1.0, 0)) - digamma(Cx(n + m + 1.0, 0)) +
                 digamma(a + static_cast<double>(n)) + digamma(b + static_cast<double>(n));
    Cx term = c2 * bracket;
    series += term;
    if (n > 2 && std::abs(term) < kTermCutoff * std::abs(series)) break;
    if (n + 1 == nmax)
      throw numeric_error("gauss_2f1: log-case series did not converge");
    c2 *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
          ((n + 1.0) * (n + m + 1.0)) * w;
  }
  return A * std::pow(w, mm) * finite - B * series;
}

// DLMF 15.8.2 (argument 1/z); needs a-b off the integers.
Cx via_1oz(Cx a, Cx b, Cx c, Cx z, int depth) {
  Cx t1 = gamma_ratio({c, b - a}, {b, c - a}) * pw(-z, -a) *
          eval_2f1(a, a - c + 1.0, a - b + 1.0, 1.0 / z, depth + 1);
  Cx t2 = gamma_ratio({c, a - b}, {a, c - b}) * pw(-z, -b) *
          eval_2f1(b, b - c + 1.0, b - a + 1.0, 1.0 / z, depth + 1);
  return t1 + t2;
}

// DLMF 15.8.3 (argument 1/(1-z)); needs a-b off the integers.
Cx via_1o1mz(Cx a, Cx b, Cx c, Cx z, int depth) {
  Cx w = 1.0 / (1.0 - z);
  Cx t1 = gamma_ratio({c, b - a}, {b, c - a}) * pw(1.0 - z, -a) *
          eval_2f1(a, c - b, a - b + 1.0, w, depth + 1);
  Cx t2 = gamma_ratio({c, a - b}, {a, c - b}) * pw(1.0 - z, -b) *
          eval_2f1(b, c - a, b - a + 1.0, w, depth + 1);
  return t1 + t2;
}

// DLMF 15.8.5 (argument 1-1/z); needs c-a-b off the integers.
Cx via_1m1oz(Cx a, Cx b, Cx c, Cx z, int depth) {
  Cx s = c - a - b;
  Cx w = 1.0 - 1.0 / z;
  Cx t1 = gamma_ratio({c, s}, {c - a, c - b}) * pw(z, -a) *
          eval_2f1(a, a - c + 1.0, 1.0 - s, w, depth + 1);
  Cx t2 = gamma_ratio({c, -s}, {a, b}) * pw(z, a - c) * pw(1.0 - z, s) *
          eval_2f1(c - a, 1.0 - a, 1.0 + s, w, depth + 1);
  return t1 + t2;
}

// Analytic continuation by local Taylor expansion along a path from 0 to z.
// Fallback for the region where no single transformation converges (|w|~1
// around exp(+-i pi/3)).  Coefficients f_k = F^(k)(z0)/k! obey
//   A (k+2)(k+1) f_{k+2} = [(2 z0 - 1)(k+1)k - B (k+1)] f_{k+1} + (k+a)(k+b) f_k
// with A = z0(1-z0), B = c - (a+b+1) z0, from the hypergeometric ODE.
Cx via_taylor_path(Cx a, Cx b, Cx c, Cx z) {
  std::vector<Cx> waypoints;
  double side = (z.imag() >= 0.0) ? 1.0 : -1.0;
  waypoints.push_back(0.4 * z / std::abs(z));
  bool near_cut = std::abs(z - 1.0) < 1.4 || (z.real() > 0.3 && std::abs(z.imag()) < 1.0);
  if (near_cut) waypoints.push_back(Cx(0.5, side * 1.5));
  waypoints.push_back(z);

  Cx z0 = waypoints.front();
  Cx f = hyp2f1_series(a, b, c, z0);
  Cx fp = a * b / c * hyp2f1_series(a + 1.0, b + 1.0, c + 1.0, z0);

  for (std::size_t leg = 1; leg < waypoints.size(); ++leg) {
    Cx target = waypoints[leg];
    while (std::abs(target - z0) > 1e-15) {
      double r_sing = std::min(std::abs(z0 - 1.0), std::abs(z0));
      double step = 0.38 * r_sing;
      Cx dir = (target - z0) / std::abs(target - z0);
      Cx h = (std::abs(target - z0) <= step) ? (target - z0) : step * dir;
      Cx A = z0 * (1.0 - z0);
      Cx B = c - (a + b + 1.0) * z0;
      std::vector<Cx> fk = {f, fp};
      Cx sum = f + fp * h;
      Cx hpow = h;
      const int kmax = 700;
      bool converged = false;
      for (int k = 0; k + 2 <= kmax; ++k) {
        double dk = static_cast<double>(k);
        Cx fk2 = (((2.0 * z0 - 1.0) * dk - B) * (dk + 1.0) * fk[k + 1] +
                  (dk + a) * (dk + b) * fk[k]) /
                 (A * (dk + 2.0) * (dk + 1.0));
        fk.push_back(fk2);
        hpow *= h;
        Cx term = fk2 * hpow;
        sum += term;
        if (k > 4 && std::abs(term) < 1e-18 * std::abs(sum) &&
            std::abs(fk[k + 1] * hpow / h) < 1e-18 * std::abs(sum)) {
          converged = true;
          break;
        }
      }
      if (!converged)
        throw numeric_error("gauss_2f1: Taylor continuation failed to converge");
      Cx dsum = fk[1];
      Cx hp = 1.0;
      for (std::size_t k = 2; k < fk.size(); ++k) {
        hp *= h;
        dsum += static_cast<double>(k) * fk[k] * hp;
      }
      z0 += h;
      f = sum;
      fp = dsum;
    }
  }
  return f;
}

struct Candidate {
  int kind;       // 0 direct, 1 pfaff, 2 via_1mz, 3 via_1oz, 4 via_1o1mz, 5 via_1m1oz
  double absw;
  double pardist;  // distance of the governing parameter difference to Z (-1: none)
};

Cx eval_2f1(Cx a, Cx b, Cx c, Cx z, int depth) {
  if (depth >= 1)  // transformations only feed |w| <= ~0.93 to the series
    return hyp2f1_series(a, b, c, z);
  if (z == Cx(0, 0)) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return hyp2f1_polynomial(a, b, c, z);
  if (std::abs(z) <= 0.5) return hyp2f1_series(a, b, c, z);

  double dcab = dist_to_integer(c - a - b);
  double dab = dist_to_integer(a - b);
  std::array<Candidate, 6> cand = {{
      {0, std::abs(z), -1.0},
      {1, std::abs(z / (z - 1.0)), -1.0},
      {2, std::abs(1.0 - z), dcab},
      {3, std::abs(1.0 / z), dab},
      {4, std::abs(1.0 / (1.0 - z)), dab},
      {5, std::abs(1.0 - 1.0 / z), dcab},
  }};
  std::sort(cand.begin(), cand.end(),
            [](const Candidate& x, const Candidate& y) { return x.absw < y.absw; });

  auto run = [&](const Candidate& cd) -> Cx {
    switch (cd.kind) {
      case 0: return hyp2f1_series(a, b, c, z);
      case 1: return via_pfaff(a, b, c, z);
      case 2: return via_1mz(a, b, c, z, depth);
      case 3: return via_1oz(a, b, c, z, depth);
      case 4: return via_1o1mz(a, b, c, z, depth);
      default: return via_1m1oz(a, b, c, z, depth);
    }
  };

  // Well-conditioned transformation with a small argument wins.  Exactly
  // integer c-a-b near z = 1 goes to the logarithmic connection series;
  // other degenerate differences fall through to series/Taylor routes.
  for (const Candidate& cd : cand) {
    if (cd.absw > 0.72) break;
    if (cd.pardist < 0.0 || cd.pardist > 0.05) return run(cd);
    if (cd.kind == 2 && cd.pardist < 1e-12) return via_1mz_log(a, b, c, z);
  }

  // Fall back to a slow direct / Pfaff series, then to Taylor continuation.
  if (std::abs(z) <= 0.93) return hyp2f1_series(a, b, c, z);
  if (std::abs(z / (z - 1.0)) <= 0.93) return via_pfaff(a, b, c, z);
  if (std::abs(1.0 - z) >= 0.02) return via_taylor_path(a, b, c, z);
  throw numeric_error(
      "gauss_2f1: argument near 1 with near-degenerate parameters; no "
      "convergent representation reached tolerance");
}

}  // namespace

Cx gauss_2f1(const HypParams& p, Cx z) {
  require_finite(z, "gauss_2f1");
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw domain_error("gauss_2f1: argument on the branch cut [1,inf)");
  // canonical (a,b) order so the (a,b) symmetry holds bit-exactly
  Cx a = p.a, b = p.b;
  if (a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()))
    std::swap(a, b);
  return eval_2f1(a, b, p.c, z, 0);
}

Cx entire_C(Cx z) {
  require_finite(z, "entire_C");
  if (std::abs(z) <= 1.0) {
    Cx term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
      term *= -z / ((2.0 * k - 1.0) * (2.0 * k));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return std::cos(std::sqrt(z));  // even in the square root: branch-free
}

Cx entire_S(Cx z) {
  require_finite(z, "entire_S");
  if (std::abs(z) <= 1.0) {
    Cx term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
      term *= -z / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  Cx w = std::sqrt(z);
  return std::sin(w) / w;
}

}  // namespace crown
