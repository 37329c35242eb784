#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crown/geometry.hpp"
#include "crown/group.hpp"
#include "crown/integral_reps.hpp"
#include "crown/kernels.hpp"
#include "crown/oracles.hpp"
#include "crown/special.hpp"
#include "crown/verify.hpp"

namespace py = pybind11;
using namespace crown;

namespace {

CPoint to_point(const Eigen::VectorXcd& v) { return CPoint(v); }

}  // namespace

PYBIND11_MODULE(_crownkern, m) {
  m.doc() = "Reflection-positive kernels on the sphere and the crown of the "
            "hyperboloid";

  py::register_exception<domain_error>(m, "DomainError");
  py::register_exception<numeric_error>(m, "NumericError");

  // special functions
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def(
      "gauss_2f1",
      [](Cx a, Cx b, Cx c, Cx z) { return gauss_2f1(a, b, c, z); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("entire_C", &entire_C, py::arg("z"));
  m.def("entire_S", &entire_S, py::arg("z"));

  // mass parameters and kernels
  py::class_<MassParam>(m, "MassParam")
      .def_readonly("n", &MassParam::n)
      .def_readonly("m", &MassParam::m)
      .def_readonly("rho", &MassParam::rho)
      .def_readonly("lam", &MassParam::lambda)
      .def_readonly("principal", &MassParam::principal);
  m.def("mass_param", &mass_param, py::arg("n"), py::arg("m"));
  m.def("gamma_const", &gamma_const);

  auto kern2 = [](Cx (*f)(const MassParam&, const CPoint&, const CPoint&)) {
    return [f](const MassParam& p, const Eigen::VectorXcd& z,
               const Eigen::VectorXcd& w) { return f(p, to_point(z), to_point(w)); };
  };
  m.def("psi_kernel", kern2(&psi_kernel));
  m.def("phi_kernel", kern2(&phi_kernel));
  m.def("phi_c_kernel", kern2(&phi_c_kernel));
  m.def("boundary_kernel_ds", kern2(&boundary_kernel_ds));
  m.def("spherical_function_t", &spherical_function_t, py::arg("p"), py::arg("t"));
  m.def("odd_n_closed_form", &odd_n_closed_form, py::arg("p"), py::arg("t"));
  m.def("radial_ode_residual", &radial_ode_residual, py::arg("p"), py::arg("t"),
        py::arg("h"));
  m.def("canonical_kernel",
        [](double lam, const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
          return canonical_kernel(lam, to_point(z), to_point(w));
        });
  m.def("q_nu_kernel",
        [](double nu, const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
          return q_nu_kernel(nu, to_point(z), to_point(w));
        });

  // geometry
  m.def("bilinear", [](const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
    return bilinear(to_point(z), to_point(w));
  });
  m.def("sigma_v",
        [](const Eigen::VectorXcd& z) { return sigma_V(to_point(z)).coords; });
  m.def("in_crown", [](const Eigen::VectorXcd& z, double tol) {
    return in_crown(to_point(z), tol);
  }, py::arg("z"), py::arg("tol") = 1e-9);
  m.def("classify_boundary", [](const Eigen::VectorXcd& z, double tol) {
    switch (classify_boundary(to_point(z), tol)) {
      case BoundaryClass::DeSitter: return "de_sitter";
      case BoundaryClass::LightRayOrbit: return "light_ray";
      default: return "none";
    }
  }, py::arg("z"), py::arg("tol") = 1e-9);
  m.def("exp_point", [](const Eigen::VectorXcd& p, const Eigen::VectorXcd& v) {
    return exp_point(to_point(p), to_point(v)).coords;
  });
  m.def("cayley",
        [](const Eigen::VectorXcd& z) { return cayley(to_point(z)).coords; });

  // group action
  m.def("boost_matrix", [](int n, double t) { return make_boost(n, t).g; });
  m.def("boundary_action",
        [](int n, double t, const Eigen::VectorXd& u) {
          BoundaryAction ba = boundary_action(make_boost(n, t), u);
          return py::make_tuple(ba.u, ba.j);
        });

  // integral representations and oracles
  m.def("phi_c_via_planewaves",
        [](const MassParam& p, const Eigen::VectorXcd& z, const Eigen::VectorXcd& w,
           double tol, int max_nodes) {
          AdaptiveResult r = phi_c_via_planewaves(p, to_point(z), to_point(w), tol,
                                                  max_nodes);
          return py::make_tuple(r.value, r.est_error, r.nodes_used);
        },
        py::arg("p"), py::arg("z"), py::arg("w"), py::arg("tol") = 1e-8,
        py::arg("max_nodes") = 10000);
  m.def("l2_normalization", &l2_normalization);
  m.def("lightcone_integral",
        [](int n, Cx lam, const Eigen::VectorXcd& x, int order) {
          return lightcone_integral(n, lam, to_point(x), order);
        },
        py::arg("n"), py::arg("lam"), py::arg("x"), py::arg("order") = 80);
  m.def("phi_series", [](int n, double m_, double c, int Q) {
    SeriesResult r = phi_series(n, m_, c, Q);
    return py::make_tuple(r.value, r.tail_bound, r.terms_used);
  });
  m.def("markov_check",
        [](int N, double m_) { return markov_check(build_circle_model(N, m_)); });
  m.def("twisted_gram_min_eig", [](int N, double m_) {
    CircleModel md = build_circle_model(N, m_);
    std::vector<int> plus;
    for (int i = 1; i < N / 2; ++i) plus.push_back(i);
    return twisted_gram(md, plus).min_eig;
  });

  // acceptance suites
  m.def("run_criterion", [](int k) {
    SuiteResult r = run_criterion(k);
    py::list checks;
    for (const auto& c : r.checks)
      checks.append(py::make_tuple(c.name, c.expected, c.got, c.tol, c.pass));
    return py::make_tuple(r.suite, r.pass(), checks);
  });
}
