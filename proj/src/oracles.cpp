#include "crown/oracles.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <cmath>

#include "crown/quadrature.hpp"
#include "crown/special.hpp"

namespace crown {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double gegenbauer(int q, double alpha, double s) {
  if (q < 0 || alpha <= 0.0 || s < -1.0 || s > 1.0)
    throw domain_error("gegenbauer: bad arguments");
  if (q == 0) return 1.0;
  double c0 = 1.0, c1 = 2.0 * alpha * s;
  for (int k = 2; k <= q; ++k) {
    double c2 = (2.0 * s * (k + alpha - 1.0) * c1 - (k + 2.0 * alpha - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double harmonic_dimension(int q, int n) {
  if (q == 0) return 1.0;
  // (2q+n-1)/(n-1) * binom(q+n-2, q), evaluated exactly
  double binom = 1.0;
  for (int j = 1; j <= n - 2; ++j) binom *= static_cast<double>(q + j) / j;
  return (2.0 * q + n - 1.0) / (n - 1.0) * binom;
}

double zonal_projector(int n, int q, double s) {
  if (n < 2) throw domain_error("zonal_projector: n >= 2 (use the Fourier path for n=1)");
  double rho = (n - 1.0) / 2.0;
  return harmonic_dimension(q, n) * gegenbauer(q, rho, s) / gegenbauer(q, rho, 1.0);
}

namespace {

// n = 1: Fourier series 1/m^2 + 2 sum cos(q theta)/(q^2+m^2), resummed
// against sum cos(q theta)/q^2 = pi^2/6 - pi theta/2 + theta^2/4.
SeriesResult series_n1(double m, double theta, int Q) {
  double c2 = kPi * kPi / 6.0 - kPi * theta / 2.0 + theta * theta / 4.0;
  std::vector<double> terms(Q);
  for (int q = 1; q <= Q; ++q) {
    double q2 = static_cast<double>(q) * q;
    terms[q - 1] = std::cos(q * theta) / (q2 * (q2 + m * m));
  }
  double s = pairwise_sum(terms);
  SeriesResult r;
  r.value = 1.0 / (m * m) + 2.0 * (c2 - m * m * s);
  r.tail_bound = 2.0 * m * m / (3.0 * std::pow(static_cast<double>(Q), 3)) + 1e-12;
  r.terms_used = Q;
  return r;
}

// n = 2: 2 sum P_q(c)/(q+1/2) - 2a sum P_q(c)/((q+1/2)((q+1/2)^2+a)),
// a = m^2 - 1/4; the first sum equals int_0^1 t^{-1/2}(1-2ct+t^2)^{-1/2} dt.
SeriesResult series_n2(double m, double c, int Q) {
  double a = m * m - 0.25;
  double I1 = tanh_sinh(
      [&](double t) {
        return 1.0 / (std::sqrt(t) * std::sqrt(1.0 - 2.0 * c * t + t * t));
      },
      0.0, 1.0, 1e-13);
  std::vector<double> terms(Q + 1);
  double p0 = 1.0, p1 = c;
  for (int q = 0; q <= Q; ++q) {
    double pq = (q == 0) ? 1.0 : (q == 1 ? c : 0.0);
    if (q >= 2) {
      double p2 = ((2.0 * q - 1.0) * c * p1 - (q - 1.0) * p0) / q;
      p0 = p1;
      p1 = p2;
      pq = p2;
    }
    double w = q + 0.5;
    terms[q] = pq / (w * (w * w + a));
  }
  double s = pairwise_sum(terms);
  SeriesResult r;
  r.value = 2.0 * I1 - 2.0 * a * s;
  double sint = std::sqrt(std::max(0.0, 1.0 - c * c));
  double envelope = (sint > 1e-6) ? std::min(1.0, std::sqrt(2.0 / (kPi * Q * sint))) : 1.0;
  r.tail_bound = 2.0 * std::abs(a) * envelope / (2.0 * Q * Q) /
                     std::max(0.5, 1.0 + a / (Q * Q)) +
                 1e-11;
  r.terms_used = Q;
  return r;
}

// n = 3: with k = q+1, a = m^2 - 1,
//   value = E1/sin - a E3/sin + a^2 sum U_{k-1}(c)/(k^3(k^2+a)),
// E1 = (pi-th)/2, E3 = (2 pi^2 th - 3 pi th^2 + th^3)/12.
SeriesResult series_n3(double m, double c, int Q) {
  double theta = std::acos(std::clamp(c, -1.0, 1.0));
  double delta = kPi - theta;
  double e1s, e3s;
  if (delta < 1e-4) {
    double d2 = delta * delta;
    e1s = 0.5 * (1.0 + d2 / 6.0);
    e3s = (kPi * kPi - d2) / 12.0 * (1.0 + d2 / 6.0);
  } else {
    double sint = std::sin(theta);
    e1s = (kPi - theta) / (2.0 * sint);
    e3s = (2.0 * kPi * kPi * theta - 3.0 * kPi * theta * theta +
           theta * theta * theta) /
          12.0 / sint;
  }
  double a = m * m - 1.0;
  std::vector<double> terms(Q);
  double u0 = 1.0, u1 = 2.0 * c;  // U_0, U_1
  for (int k = 1; k <= Q; ++k) {
    double uk;  // U_{k-1}(c)
    if (k == 1)
      uk = u0;
    else if (k == 2)
      uk = u1;
    else {
      double u2 = 2.0 * c * u1 - u0;
      u0 = u1;
      u1 = u2;
      uk = u2;
    }
    double dk = static_cast<double>(k);
    terms[k - 1] = uk / (dk * dk * dk * (dk * dk + a));
  }
  double s = pairwise_sum(terms);
  SeriesResult r;
  r.value = e1s - a * e3s + a * a * s;
  // |U_{k-1}| <= k gives tail <= a^2 sum_{k>Q} k^{-4} <= a^2/(3Q^3)
  r.tail_bound = a * a / (3.0 * std::pow(static_cast<double>(Q), 3)) /
                     std::max(0.5, 1.0 + a / (Q * Q)) +
                 1e-12;
  r.terms_used = Q;
  return r;
}

}  // namespace

SpectralSeries spectral_series(int n, double m, int Q) {
  if (!(m > 0.0)) throw domain_error("spectral_series: m > 0");
  SpectralSeries s;
  s.n = n;
  s.m = m;
  s.max_degree = Q;
  s.coefficients.reserve(Q + 1);
  for (int q = 0; q <= Q; ++q)
    s.coefficients.push_back(1.0 / (static_cast<double>(q) * (q + n - 1.0) + m * m));
  return s;
}

SeriesResult phi_series(int n, double m, double c, int Q) {
  if (!(m > 0.0)) throw domain_error("phi_series: m > 0");
  if (c < -1.0 || c >= 1.0) throw domain_error("phi_series: c in [-1, 1)");
  if (Q < 8) throw domain_error("phi_series: Q too small");
  switch (n) {
    case 1: return series_n1(m, std::acos(std::clamp(c, -1.0, 1.0)), Q);
    case 2: return series_n2(m, c, Q);
    case 3: return series_n3(m, c, Q);
    default:
      throw domain_error("phi_series: supported dimensions are n in {1,2,3}");
  }
}

SeriesResult phi_series_auto(int n, double m, double c, double tol) {
  int Q = 256;
  while (true) {
    SeriesResult r = phi_series(n, m, c, Q);
    if (r.tail_bound <= tol) return r;
    if (Q >= 100000)
      throw numeric_error("phi_series: tail too large at cap Q = 1e5");
    Q *= 2;
    if (Q > 100000) Q = 100000;
  }
}

CircleModel build_circle_model(int N, double m) {
  if (N < 8 || N % 2 != 0) throw domain_error("build_circle_model: N even, >= 8");
  if (!(m > 0.0)) throw domain_error("build_circle_model: m > 0");
  CircleModel md;
  md.N = N;
  md.h = 2.0 * kPi / N;
  md.m = m;
  md.laplacian = Eigen::MatrixXd::Zero(N, N);
  double ih2 = 1.0 / (md.h * md.h);
  for (int i = 0; i < N; ++i) {
    md.laplacian(i, i) = -2.0 * ih2;
    md.laplacian(i, (i + 1) % N) = ih2;
    md.laplacian(i, (i + N - 1) % N) = ih2;
  }
  Eigen::MatrixXd A = m * m * Eigen::MatrixXd::Identity(N, N) - md.laplacian;
  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success)
    throw numeric_error("build_circle_model: resolvent not positive definite");
  md.resolvent = llt.solve(Eigen::MatrixXd::Identity(N, N));
  md.reflection.resize(N);
  for (int i = 0; i < N; ++i) md.reflection[i] = (N - i) % N;
  // theta Delta theta = Delta
  Eigen::MatrixXd D2(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) D2(i, j) = md.laplacian(md.reflection[i], md.reflection[j]);
  if ((D2 - md.laplacian).cwiseAbs().maxCoeff() > 1e-12)
    throw numeric_error("build_circle_model: reflection does not commute");
  return md;
}

GramReport twisted_gram(const CircleModel& model, const std::vector<int>& plus_indices) {
  int M = static_cast<int>(plus_indices.size());
  for (int i : plus_indices) {
    if (i < 0 || i >= model.N) throw domain_error("twisted_gram: index out of range");
    double theta = 2.0 * kPi * i / model.N;
    if (!(theta > 0.0 && theta < kPi))
      throw domain_error("twisted_gram: plus indices must satisfy theta in (0,pi)");
  }
  Eigen::MatrixXcd G(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      G(i, j) = model.resolvent(model.reflection[plus_indices[i]], plus_indices[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  GramReport r;
  r.matrix = G;
  r.min_eig = es.eigenvalues().minCoeff();
  r.trace = G.trace().real();
  r.tol = 1e-12;
  r.psd = r.min_eig >= -r.tol * std::max(1.0, r.trace);
  return r;
}

namespace {

Eigen::MatrixXd projector(const Eigen::MatrixXd& C, const std::vector<int>& idx) {
  int N = static_cast<int>(C.rows()), M = static_cast<int>(idx.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(N, M);
  for (int j = 0; j < M; ++j) B(idx[j], j) = 1.0;
  Eigen::MatrixXd small = B.transpose() * C * B;
  return B * small.ldlt().solve(B.transpose() * C);
}

}  // namespace

double markov_check(const CircleModel& model) {
  int N = model.N;
  if (N % 4 != 0) throw domain_error("markov_check: N divisible by 4");
  std::vector<int> plus, minus, interface;
  for (int i = 0; i < N; ++i) {
    double theta = 2.0 * kPi * i / N;
    if (theta <= kPi + 1e-12) plus.push_back(i);
    if (theta >= kPi - 1e-12 || i == 0) minus.push_back(i);
  }
  interface = {0, N / 2};
  const Eigen::MatrixXd& C = model.resolvent;
  Eigen::MatrixXd Pp = projector(C, plus), Pm = projector(C, minus),
                  P0 = projector(C, interface);
  Eigen::MatrixXd M = Pm * Pp - P0;
  // spectral norm in the C-inner product: || L^T M L^{-T} ||_2, C = L L^T
  Eigen::LLT<Eigen::MatrixXd> llt(C);
  Eigen::MatrixXd L = llt.matrixL();
  Eigen::MatrixXd X =
      L.triangularView<Eigen::Lower>().solve(M.transpose()).transpose();
  Eigen::MatrixXd A = L.transpose() * X;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  return svd.singularValues()(0);
}

double markov_interface_check(const CircleModel& model, Rng& rng, int pairs) {
  int N = model.N;
  std::vector<int> plus, minus, interface;
  for (int i = 0; i < N; ++i) {
    double theta = 2.0 * kPi * i / N;
    if (theta <= kPi + 1e-12) plus.push_back(i);
    if (theta >= kPi - 1e-12 || i == 0) minus.push_back(i);
  }
  interface = {0, N / 2};
  const Eigen::MatrixXd& C = model.resolvent;
  Eigen::MatrixXd P0 = projector(C, interface);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int p = 0; p < pairs; ++p) {
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(N), psi = Eigen::VectorXd::Zero(N);
    for (int i : plus) phi[i] = gauss(rng);
    for (int i : minus) psi[i] = gauss(rng);
    double lhs = phi.dot(C * psi);
    Eigen::VectorXd p0phi = P0 * phi, p0psi = P0 * psi;
    double rhs = p0phi.dot(C * p0psi);
    worst = std::max(worst, std::abs(lhs - rhs) /
                                std::max(1.0, std::abs(lhs)));
  }
  return worst;
}

ConvergenceTable discrete_kernel_convergence(double m, const std::vector<int>& N_list) {
  ConvergenceTable table;
  double lg = (log_gamma(Cx(0, m)) + log_gamma(Cx(0, -m))).real();
  double gamma1m = std::exp(lg);  // pi/(m sinh(pi m))
  for (int N : N_list) {
    CircleModel md = build_circle_model(N, m);
    double maxerr = 0.0;
    for (int i = 0; i < N; ++i) {
      double theta = 2.0 * kPi * i / N;
      double dist = std::min(theta, 2.0 * kPi - theta);
      double exact = gamma1m * std::cosh((kPi - dist) * m);
      double got = 2.0 * kPi / md.h * md.resolvent(i, 0);
      maxerr = std::max(maxerr, std::abs(got - exact));
    }
    table.rows.push_back({N, maxerr});
  }
  // least-squares slope of log(err) against log(N)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = static_cast<int>(table.rows.size());
  for (const auto& row : table.rows) {
    double x = std::log(static_cast<double>(row.N)), y = std::log(row.max_err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  table.slope = -(k * sxy - sx * sy) / (k * sxx - sx * sx);
  return table;
}

}  // namespace crown
