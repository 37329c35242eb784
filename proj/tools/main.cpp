// crownkern command line: kernel evaluation, parameter sweeps, verification
// suites, plane-wave quadrature, discrete oracles, and geometry queries.
//
// Exit codes: 0 success, 1 failed verification, 2 parse error, 3 numeric
// failure.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crown/geometry.hpp"
#include "crown/group.hpp"
#include "crown/integral_reps.hpp"
#include "crown/io.hpp"
#include "crown/kernels.hpp"
#include "crown/oracles.hpp"
#include "crown/verify.hpp"

using nlohmann::json;
using namespace crown;

namespace {

struct Output {
  std::string path;  // empty: stdout
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw domain_error("cannot open output file " + path);
    }
    return file;
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json eval_record(const MassParam& p, Cx value) {
  return json{{"n", p.n},
              {"m", p.m},
              {"lambda", complex_to_json(p.lambda)},
              {"value", complex_to_json(value)}};
}

// "a:b:c" -> {a, a+b, ..., <= c}; bare number -> {value}
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || parts[1] <= 0.0)
    throw domain_error("range syntax is start:step:stop");
  std::vector<double> out;
  for (double v = parts[0]; v <= parts[2] + 1e-12; v += parts[1]) out.push_back(v);
  return out;
}

int run_verify(const std::string& suite, Output& out) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_criteria();
  } else {
    int k = criterion_for_suite(suite);
    if (k == 0) {
      std::cerr << "unknown suite '" << suite << "'; known:";
      for (const auto& s : suite_names()) std::cerr << " " << s;
      std::cerr << " all\n";
      return 2;
    }
    results.push_back(run_criterion(k));
  }
  bool all_pass = true;
  auto& os = out.stream();
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      json line{{"suite", r.suite},    {"criterion", r.criterion},
                {"name", c.name},      {"expected", c.expected},
                {"got", c.got},        {"tol", c.tol},
                {"pass", c.pass}};
      if (!c.note.empty()) line["note"] = c.note;
      os << line.dump() << "\n";
      all_pass = all_pass && c.pass;
    }
    os << (r.pass() ? "[PASS] " : "[FAIL] ") << "criterion " << r.criterion << " ("
       << r.suite << ")\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflection-positive kernels on the sphere and its crown"};
  app.require_subcommand(1);

  int n = 2;
  double m = 1.0;
  double t = 1.0;
  double tol = 1e-9;
  int max_nodes = 10000;
  std::uint64_t seed = 0;
  std::string out_path, format = "json", zspec, wspec, mrange, suite = "all";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "sphere dimension");
    cmd->add_option("--m", m, "mass parameter");
    cmd->add_option("--seed", seed, "rng seed");
    cmd->add_option("--tol", tol, "tolerance");
    cmd->add_option("--max-nodes", max_nodes, "quadrature node cap");
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "json or csv");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate Psi_m at a point pair");
  add_common(eval);
  eval->add_option("--t", t, "geodesic angle (x = (cos t,0,...,sin t))");
  eval->add_option("--z", zspec, "first point (re:im pairs or e0/en/xi0)");
  eval->add_option("--w", wspec, "second point");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep m over a grid");
  add_common(sweep);
  sweep->add_option("--m-range", mrange, "m grid start:step:stop")->required();
  sweep->add_option("--t", t, "geodesic angle");

  CLI::App* verify = app.add_subcommand("verify", "run acceptance suites");
  add_common(verify);
  verify->add_option("--suite", suite, "suite name or 'all'");

  CLI::App* planewave =
      app.add_subcommand("planewave", "plane-wave quadrature of Phi_m^c");
  add_common(planewave);
  planewave->add_option("--z", zspec, "first point")->required();
  planewave->add_option("--w", wspec, "second point")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "independent oracles");
  add_common(oracle);
  std::string which = "series";
  int N = 64, Q = 4000;
  double cval = 0.0;
  oracle->add_option("kind", which, "series or circle");
  oracle->add_option("--N", N, "largest grid size (circle)");
  oracle->add_option("--Q", Q, "series cutoff");
  oracle->add_option("--c", cval, "cosine argument (series)");

  CLI::App* geometry = app.add_subcommand("geometry", "point predicates");
  add_common(geometry);
  geometry->add_option("--z", zspec, "point")->required();
  geometry->add_option("--w", wspec, "optional second point");
  std::string word;
  geometry->add_option("--word", word, "generator word rot:i,j,a boost:t horo:v...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.path = out_path;

  try {
    if (*eval) {
      MassParam p = mass_param(n, m);
      CPoint z, w = wspec.empty() ? basis_point(n, 0) : parse_point(wspec, n);
      if (zspec.empty()) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
        c[0] = std::cos(t);
        c[n] = std::sin(t);
        z = CPoint(c);
      } else {
        z = parse_point(zspec, n);
      }
      Cx v = psi_kernel(p, z, w);
      out.stream() << eval_record(p, v).dump() << "\n";
      return 0;
    }
    if (*sweep) {
      std::vector<double> ms = parse_range(mrange);
      struct Row {
        double m;
        Cx lambda, psi;
      };
      std::vector<Row> rows(ms.size());
      // grid points are independent; a small pool fills the table, output
      // stays sorted by construction
      unsigned nthreads =
          std::max(1u, std::min(std::thread::hardware_concurrency(),
                                static_cast<unsigned>(ms.size())));
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      for (unsigned th = 0; th < nthreads; ++th) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < ms.size(); i = next++) {
            MassParam p = mass_param(n, ms[i]);
            Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
            c[0] = std::cos(t);
            c[n] = std::sin(t);
            rows[i] = {ms[i], p.lambda, psi_kernel(p, CPoint(c), basis_point(n, 0))};
          }
        });
      }
      for (auto& th : pool) th.join();
      auto& os = out.stream();
      if (format == "csv") {
        os << "n,m,lambda_re,lambda_im,psi_re,psi_im\n";
        for (const Row& r : rows)
          os << n << "," << num(r.m) << "," << num(r.lambda.real()) << ","
             << num(r.lambda.imag()) << "," << num(r.psi.real()) << ","
             << num(r.psi.imag()) << "\n";
      } else {
        for (const Row& r : rows) {
          json line{{"n", n},
                    {"m", r.m},
                    {"lambda", complex_to_json(r.lambda)},
                    {"psi", complex_to_json(r.psi)}};
          os << line.dump() << "\n";
        }
      }
      return 0;
    }
    if (*verify) return run_verify(suite, out);
    if (*planewave) {
      MassParam p = mass_param(n, m);
      CPoint z = parse_point(zspec, n), w = parse_point(wspec, n);
      AdaptiveResult r = phi_c_via_planewaves(p, z, w, tol, max_nodes);
      json rec{{"n", n},
               {"m", m},
               {"value", complex_to_json(r.value)},
               {"nodes", r.nodes_used},
               {"est_error", r.est_error}};
      out.stream() << rec.dump() << "\n";
      return 0;
    }
    if (*oracle) {
      auto& os = out.stream();
      if (which == "series") {
        SeriesResult r = phi_series(n, m, cval, Q);
        json rec{{"n", n},
                 {"m", m},
                 {"c", cval},
                 {"value", r.value},
                 {"tail_bound", r.tail_bound},
                 {"terms", r.terms_used}};
        os << rec.dump() << "\n";
      } else if (which == "circle") {
        std::vector<int> Ns;
        for (int NN = 64; NN <= N; NN *= 2) Ns.push_back(NN);
        if (Ns.empty()) Ns.push_back(N);
        ConvergenceTable table = discrete_kernel_convergence(m, Ns);
        os << "N,max_err,slope\n";
        for (const auto& row : table.rows)
          os << row.N << "," << num(row.max_err) << "," << num(table.slope) << "\n";
      } else {
        std::cerr << "oracle kind must be series or circle\n";
        return 2;
      }
      return 0;
    }
    if (*geometry) {
      CPoint z = parse_point(zspec, n);
      if (!word.empty()) z = act(parse_word(word, n), z);
      json rec{{"point", point_to_json(z)},
               {"z2", complex_to_json(bilinear(z, z))},
               {"on_sphere", on_sphere(z, tol)},
               {"in_crown", in_crown(z, tol)}};
      switch (classify_boundary(z, tol)) {
        case BoundaryClass::DeSitter: rec["boundary"] = "de_sitter"; break;
        case BoundaryClass::LightRayOrbit: rec["boundary"] = "light_ray"; break;
        case BoundaryClass::NotBoundary: rec["boundary"] = "none"; break;
      }
      if (!wspec.empty()) {
        CPoint w = parse_point(wspec, n);
        rec["pairing"] = complex_to_json(bilinear(z, w));
        rec["pairing_sigma_v"] = complex_to_json(bilinear(z, sigma_V(w)));
      }
      out.stream() << rec.dump() << "\n";
      return 0;
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
