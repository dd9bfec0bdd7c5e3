#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "thurston4/curvature.hpp"
#include "thurston4/geodesic.hpp"
#include "thurston4/group.hpp"
#include "thurston4/isometry.hpp"
#include "thurston4/kahler.hpp"
#include "thurston4/roots.hpp"

namespace py = pybind11;
using namespace thurston4;

namespace {

std::array<py::ssize_t, 4> shape4() { return {4, 4, 4, 4}; }

py::array_t<double> riemann_array(const CurvatureTensor& r) {
  py::array_t<double> out(shape4());
  auto view = out.mutable_unchecked<4>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) view(i, j, k, l) = r.r[i][j][k][l];
  return out;
}

}  // namespace

PYBIND11_MODULE(_thurston4, m) {
  m.doc() =
      "Numerical engine for the non-product four-dimensional Thurston "
      "geometries Sol40, Sol4mn, Sol41 and Nil4";

  py::enum_<GeometryKind>(m, "GeometryKind")
      .value("Sol40", GeometryKind::Sol40)
      .value("Sol4mn", GeometryKind::Sol4mn)
      .value("Sol41", GeometryKind::Sol41)
      .value("Nil4", GeometryKind::Nil4);

  py::class_<Point>(m, "Point")
      .def(py::init([](double t, double x, double y, double z) {
             return Point{t, x, y, z};
           }),
           py::arg("t") = 0.0, py::arg("x") = 0.0, py::arg("y") = 0.0,
           py::arg("z") = 0.0)
      .def_readwrite("t", &Point::t)
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def_readwrite("z", &Point::z)
      .def("vec", &Point::vec)
      .def_static("of", &Point::of)
      .def("__repr__", [](const Point& p) {
        std::ostringstream os;
        os << "Point(t=" << p.t << ", x=" << p.x << ", y=" << p.y
           << ", z=" << p.z << ")";
        return os.str();
      });

  py::class_<GeometrySpec>(m, "GeometrySpec")
      .def_readonly("kind", &GeometrySpec::kind)
      .def_readonly("m", &GeometrySpec::m)
      .def_readonly("n", &GeometrySpec::n)
      .def_readonly("a", &GeometrySpec::a)
      .def_readonly("b", &GeometrySpec::b)
      .def_readonly("c", &GeometrySpec::c)
      .def_static("sol40", &GeometrySpec::sol40)
      .def_static("sol4mn", &GeometrySpec::sol4mn, py::arg("m"), py::arg("n"))
      .def_static("sol41", &GeometrySpec::sol41, py::arg("tau1") = 1.0,
                  py::arg("tau2") = 1.0)
      .def_static("nil4", &GeometrySpec::nil4, py::arg("tau1") = 1.0,
                  py::arg("tau2") = 1.0, py::arg("tau3") = 1.0,
                  py::arg("alpha") = 0.0)
      .def("__repr__", [](const GeometrySpec& s) {
        return "GeometrySpec(" + to_string(s.kind) + ")";
      });

  // Group operations.
  m.def("identity", &identity);
  m.def("multiply", &multiply);
  m.def("inverse", &inverse);
  m.def("to_matrix", &to_matrix);
  m.def("structure_constants", [](const GeometrySpec& spec) {
    StructureConstants c = structure_constants(spec);
    py::array_t<double> out(std::array<py::ssize_t, 3>{4, 4, 4});
    auto view = out.mutable_unchecked<3>();
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) view(k, i, j) = c[k][i][j];
    return out;
  });

  // Metric and frames.
  m.def("metric_at", &metric_at);
  m.def("inverse_metric_at", &inverse_metric_at);
  m.def("frame_at", &frame_at);
  m.def("orthonormal_frame_at", &orthonormal_frame_at);

  // Curvature.
  m.def("riemann_at",
        [](const GeometrySpec& spec, const Point& p) {
          return riemann_array(riemann_at(spec, p));
        });
  m.def("riemann_fd_at",
        [](const GeometrySpec& spec, const Point& p, double step) {
          return riemann_array(riemann_fd_at(spec, p, step));
        },
        py::arg("spec"), py::arg("p"), py::arg("step") = 1e-3);
  m.def("sectional", &sectional);
  m.def("ricci_at", &ricci_at);
  m.def("scalar_at", &scalar_at);

  // Geodesics.
  py::class_<ShootingResult>(m, "ShootingResult")
      .def_readonly("velocity", &ShootingResult::velocity)
      .def_readonly("endpoint_error", &ShootingResult::endpoint_error)
      .def_readonly("length", &ShootingResult::length)
      .def_readonly("iterations", &ShootingResult::iterations)
      .def_readonly("converged", &ShootingResult::converged);

  m.def("exp_map", &exp_map, py::arg("spec"), py::arg("p"), py::arg("v"),
        py::arg("dt") = 1e-3);
  m.def("integrate_geodesic",
        [](const GeometrySpec& spec, const Point& p, const Eigen::Vector4d& v,
           double T, double dt) {
          Trajectory traj = integrate_geodesic(spec, p, v, T, dt);
          std::vector<std::pair<double, Eigen::Vector4d>> samples;
          samples.reserve(traj.samples.size());
          for (const auto& st : traj.samples)
            samples.emplace_back(st.s, st.position.vec());
          return py::make_tuple(
              samples, traj.status == TrajectoryStatus::Complete,
              traj.max_energy_drift);
        },
        py::arg("spec"), py::arg("p"), py::arg("v"), py::arg("T"),
        py::arg("dt") = 1e-3,
        "Returns ([(s, position)], complete, max_energy_drift).");
  m.def("distance",
        [](const GeometrySpec& spec, const Point& p, const Point& q) {
          return distance_shooting(spec, p, q);
        });

  // Isometries and reports.
  m.def("invariance_max_residual",
        [](const GeometrySpec& spec, int samples, std::uint64_t seed) {
          return invariance_report(spec, samples, seed).max_residual;
        },
        py::arg("spec"), py::arg("samples") = 100, py::arg("seed") = 1);
  m.def("invariance_report_text",
        [](const GeometrySpec& spec, int samples, std::uint64_t seed) {
          std::ostringstream os;
          write_report(os, invariance_report(spec, samples, seed));
          return os.str();
        },
        py::arg("spec"), py::arg("samples") = 100, py::arg("seed") = 1);

  // Almost complex structures.
  m.def("kahler_scan_text",
        [](const GeometrySpec& spec, int points, std::uint64_t seed) {
          std::ostringstream os;
          write_report(os, kahler_scan(spec, points, seed));
          return os.str();
        },
        py::arg("spec"), py::arg("points") = 100, py::arg("seed") = 1);
  m.def("kahler_best_residuals",
        [](const GeometrySpec& spec, int points, std::uint64_t seed) {
          KahlerScan scan = kahler_scan(spec, points, seed);
          return py::make_tuple(scan.best_raw, scan.best_rescaled);
        },
        py::arg("spec"), py::arg("points") = 100, py::arg("seed") = 1);

  // Root classification.
  py::enum_<RootKind>(m, "RootKind")
      .value("ThreeDistinct", RootKind::ThreeDistinct)
      .value("DoubleRoot", RootKind::DoubleRoot)
      .value("ProductCase", RootKind::ProductCase)
      .value("Invalid", RootKind::Invalid);

  py::class_<RootClassification>(m, "RootClassification")
      .def_readonly("kind", &RootClassification::kind)
      .def_readonly("lambdas", &RootClassification::lambda)
      .def_readonly("a", &RootClassification::a)
      .def_readonly("b", &RootClassification::b)
      .def_readonly("c", &RootClassification::c);

  m.def("solve_roots", &solve_roots, py::arg("m"), py::arg("n"));
}
