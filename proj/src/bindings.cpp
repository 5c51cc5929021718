#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosserat/curvature.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/geometry.hpp"
#include "cosserat/homogenization.hpp"
#include "cosserat/oracle.hpp"
#include "cosserat/thin_limit.hpp"
#include "cosserat/verify.hpp"

namespace py = pybind11;
using namespace cosserat;

namespace {

Surface make_surface(const std::string& type, double radius, const std::string& height) {
  if (type == "plane") return Surface::plane();
  if (type == "cylinder") return Surface::cylinder(radius);
  if (type == "sphere") return Surface::sphere(radius);
  if (type == "graph") return Surface::graph(height);
  throw std::invalid_argument("unknown surface type '" + type + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cosserat shell curvature measures, energies and homogenized densities";

  m.def("axl", [](const Mat3& a) { return skew_of(a).axial(); },
        "Axial vector of the skew part of a 3x3 matrix");
  m.def("anti", [](const Vec3& v) { return anti(v).matrix(); },
        "Skew matrix acting as the cross product with v");
  m.def("sym", &sym);
  m.def("skew", &skew);
  m.def("dev_sym", &dev_sym);
  m.def("lift_flat", &lift_flat, "Embed a 2x2 matrix in the upper-left 3x3 block");
  m.def("rotation_exp", &rotation_exp, "Rodrigues exponential of an axis-angle vector");

  m.def("nye_gamma_to_alpha", &nye_gamma_to_alpha);
  m.def("nye_alpha_to_gamma", &nye_alpha_to_gamma);

  py::class_<MaterialParams>(m, "MaterialParams")
      .def(py::init(&MaterialParams::make), py::arg("mu") = 1.0, py::arg("lam") = 1.0,
           py::arg("mu_c") = 1.0, py::arg("L_c") = 1.0, py::arg("b1") = 1.0, py::arg("b2") = 1.0,
           py::arg("b3") = 1.0)
      .def_readonly("mu", &MaterialParams::mu)
      .def_readonly("lam", &MaterialParams::lambda)
      .def_readonly("mu_c", &MaterialParams::mu_c)
      .def_readonly("kappa", &MaterialParams::kappa)
      .def_readonly("L_c", &MaterialParams::L_c)
      .def_readonly("b1", &MaterialParams::b1)
      .def_readonly("b2", &MaterialParams::b2)
      .def_readonly("b3", &MaterialParams::b3)
      .def_readonly("a3", &MaterialParams::a3);

  py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
      .def_readonly("sym_term", &EnergyBreakdown::sym_term)
      .def_readonly("skew_term", &EnergyBreakdown::skew_term)
      .def_readonly("trace_term", &EnergyBreakdown::trace_term)
      .def_readonly("normal_term", &EnergyBreakdown::normal_term)
      .def_readonly("total", &EnergyBreakdown::total)
      .def("__repr__", [](const EnergyBreakdown& b) {
        return "EnergyBreakdown(total=" + std::to_string(b.total) + ")";
      });

  m.def("w_mp", &w_mp, py::arg("u"), py::arg("params"));
  m.def("w_curv_gamma", &w_curv_gamma, py::arg("gamma"), py::arg("params"));
  m.def("w_curv_alpha", &w_curv_alpha, py::arg("alpha"), py::arg("params"));
  m.def("w_curv_devsym", &w_curv_devsym, py::arg("gamma"), py::arg("params"));

  py::class_<SurfaceFrame>(m, "SurfaceFrame")
      .def_readonly("dy0", &SurfaceFrame::dy0)
      .def_readonly("n0", &SurfaceFrame::n0)
      .def_readonly("dtheta0", &SurfaceFrame::dtheta0)
      .def_readonly("first_form", &SurfaceFrame::first_form)
      .def_readonly("second_form", &SurfaceFrame::second_form)
      .def_readonly("weingarten", &SurfaceFrame::weingarten)
      .def_readonly("tangential_projector", &SurfaceFrame::tangential_projector)
      .def_readonly("surface_element", &SurfaceFrame::surface_element)
      .def_readonly("q0", &SurfaceFrame::q0)
      .def_readonly("u0", &SurfaceFrame::u0);

  py::class_<Surface>(m, "Surface")
      .def(py::init(&make_surface), py::arg("type"), py::arg("radius") = 2.0,
           py::arg("height") = "")
      .def("position", [](const Surface& s, double x1, double x2) {
        return s.position(Vec2(x1, x2));
      })
      .def("frame_at",
           [](const Surface& s, double x1, double x2) { return s.frame_at(Vec2(x1, x2)); })
      .def("dtheta_thick", [](const Surface& s, double x1, double x2, double x3) {
        return s.dtheta_thick(Vec2(x1, x2), x3);
      });

  m.def(
      "membrane_strain",
      [](const Mat3& qe0, const Mat32& dm, const SurfaceFrame& f) {
        return membrane_strain(qe0, dm, f).value;
      },
      py::arg("qe0"), py::arg("dm"), py::arg("frame"));
  m.def(
      "bending_strain",
      [](const Vec3& g1, const Vec3& g2, const Mat3& dtheta_inv) {
        return bending_strain(g1, g2, dtheta_inv).value;
      },
      py::arg("gamma1"), py::arg("gamma2"), py::arg("dtheta_inv"));

  m.def(
      "optimal_director",
      [](const Mat3& e, const SurfaceFrame& f, const MaterialParams& p, const Mat3& qe0) {
        return optimal_director(MembraneStrain{e}, f, p, qe0);
      },
      py::arg("e"), py::arg("frame"), py::arg("params"),
      py::arg("qe0") = Mat3::Identity().eval());
  m.def(
      "membrane_energy_hom",
      [](const Mat3& e, const SurfaceFrame& f, const MaterialParams& p) {
        return membrane_energy_hom(MembraneStrain{e}, f, p);
      },
      py::arg("e"), py::arg("frame"), py::arg("params"));
  m.def(
      "optimal_curvature_completion",
      [](const Mat3& k, const SurfaceFrame& f, const MaterialParams& p) {
        return optimal_curvature_completion(BendingStrain{k}, f, p);
      },
      py::arg("k"), py::arg("frame"), py::arg("params"));
  m.def(
      "curvature_energy_hom",
      [](const Mat3& k, const SurfaceFrame& f, const MaterialParams& p) {
        return curvature_energy_hom(BendingStrain{k}, f, p);
      },
      py::arg("k"), py::arg("frame"), py::arg("params"));
  m.def("curvature_energy_hom_plate", &curvature_energy_hom_plate, py::arg("gamma0"),
        py::arg("params"));

  m.def(
      "minimize_quadratic",
      [](const std::function<double(const Vec3&)>& f) {
        const QuadraticMinimum min = minimize_quadratic(f);
        return py::make_tuple(min.argmin, min.value);
      },
      "Normal-equation minimizer for an exactly quadratic objective over R^3");

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("h", &ConvergenceRow::h)
      .def_readonly("energy", &ConvergenceRow::energy)
      .def_readonly("limit", &ConvergenceRow::limit)
      .def_readonly("abs_err", &ConvergenceRow::abs_err)
      .def_readonly("rate", &ConvergenceRow::rate);

  m.def(
      "convergence_study",
      [](const std::string& ansatz, const std::vector<double>& h_list, bool corrections) {
        AnsatzCase c = documented_ansatz(ansatz);
        if (!corrections) {
          c.ansatz.director = DirectorMode::none;
          c.ansatz.completion_correction = false;
        }
        const MaterialParams p = MaterialParams::make(1, 1, 1, 1, 2.0, 0.5, 1.0);
        const ConvergenceStudy study = convergence_study(c.ansatz, p, c.surface, h_list);
        return py::make_tuple(study.rows, study.slope, study.monotone);
      },
      py::arg("ansatz"), py::arg("h_list") = std::vector<double>{0.2, 0.1, 0.05, 0.025},
      py::arg("corrections") = true);

  m.def("documented_ansatz_names", &documented_ansatz_names);

  m.def(
      "verify_suites",
      [](std::uint64_t seed, long instances, double tol) {
        verify::Options opt;
        opt.seed = seed;
        opt.instances = instances;
        opt.tol = tol;
        py::list out;
        for (const verify::SuiteResult& r : verify::run_all(opt)) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["worst"] = r.worst;
          d["tolerance"] = r.tolerance;
          d["count"] = r.count;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 42, py::arg("instances") = 200, py::arg("tol") = 1e-10);
}
