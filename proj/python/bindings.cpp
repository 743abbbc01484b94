#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadric/cli/report_io.hpp"
#include "quadric/surface/generators.hpp"
#include "quadric/surface/tube.hpp"
#include "quadric/verify/suite.hpp"

namespace py = pybind11;
using namespace quadric;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Vec<double> to_vec(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
  return Vec<double>(std::vector<double>(a.data(), a.data() + a.shape(0)));
}

Matrix<double> to_mat(const Array& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
  Matrix<double> m(a.shape(0), a.shape(1));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

Array from_vec(const Vec<double>& v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Array from_mat(const Matrix<double>& m) {
  Array out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

int dimension_m(const Vec<double>& n) {
  if (n.size() % 2 != 0) throw py::value_error("vectors must have even length 2m");
  return static_cast<int>(n.size() / 2);
}

surface::HypersurfacePoint<double> point(const Array& n, const Array& shape) {
  const auto nv = to_vec(n);
  const auto q = model::build_quadric_point<double>(dimension_m(nv));
  return surface::make_hypersurface_point(q, nv, to_mat(shape));
}

std::string run_suite_json(std::vector<int> m, const std::string& mode, std::vector<std::string> u,
                           std::vector<double> r, std::vector<std::uint64_t> seeds,
                           std::vector<std::string> suite, int trials,
                           std::optional<double> tolerance, const std::string& perturb_lambda) {
  cli::RunConfig cfg;
  if (mode != "exact" && mode != "float" && mode != "both") {
    throw py::value_error("mode must be exact, float or both");
  }
  for (int x : m) {
    if (x < 3) throw py::value_error("m must be at least 3");
  }
  cfg.mode = mode;
  cfg.suite.m_values = std::move(m);
  cfg.suite.exact = mode != "float";
  cfg.suite.floating = mode != "exact";
  cfg.suite.u_values.clear();
  for (const auto& s : u) cfg.suite.u_values.push_back(parse_rational(s));
  cfg.suite.r_values = std::move(r);
  cfg.suite.seeds = std::move(seeds);
  cfg.suite.filters = std::move(suite);
  cfg.suite.trials = trials;
  cfg.suite.tolerance = tolerance;
  cfg.suite.lambda_shift = parse_rational(perturb_lambda);
  cfg.format = cli::Format::Json;
  verify::SuiteResult result;
  {
    py::gil_scoped_release release;
    result = verify::run_suite(cfg.suite);
  }
  return cli::to_json(result, cfg).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature operators of real hypersurfaces in the complex quadric (float bindings).";

  py::register_exception<Error>(m, "QuadricError", PyExc_ValueError);

  m.def(
      "ambient_curvature",
      [](const Array& x, const Array& y, const Array& z, double theta) {
        const auto xv = to_vec(x);
        const auto q = model::build_quadric_point<double>(dimension_m(xv));
        return from_vec(model::ambient_curvature(q, model::conjugation_at(q, theta), xv, to_vec(y),
                                                 to_vec(z)));
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("theta") = 0.0,
      "R(X, Y)Z of the quadric at the reference point, using the conjugation A_theta.");

  m.def(
      "classify_normal",
      [](const Array& n) {
        const auto nv = to_vec(n);
        const auto q = model::build_quadric_point<double>(dimension_m(nv));
        const auto s = model::classify_singularity(q, nv);
        py::dict d;
        d["kind"] = model::to_string(s.kind);
        d["t"] = s.t;
        d["cos2t"] = s.cos2t;
        return d;
      },
      py::arg("n"));

  m.def(
      "normal_jacobi", [](const Array& n, const Array& s) { return from_mat(surface::normal_jacobi(point(n, s))); },
      py::arg("n"), py::arg("shape"));
  m.def(
      "structure_jacobi",
      [](const Array& n, const Array& s) { return from_mat(surface::structure_jacobi(point(n, s))); },
      py::arg("n"), py::arg("shape"));
  m.def(
      "jacobi_rx",
      [](const Array& n, const Array& s, const Array& x) {
        return from_mat(surface::jacobi_rx(point(n, s), to_vec(x)));
      },
      py::arg("n"), py::arg("shape"), py::arg("x"));
  m.def(
      "commutator_norm",
      [](const Array& p, const Array& q) { return frobenius_norm(commutator(to_mat(p), to_mat(q))); },
      py::arg("p"), py::arg("q"));

  m.def(
      "tube",
      [](int mm, const std::string& u) {
        const auto t = surface::build_type_B_tube<double>(surface::TubeSpec::from_u(mm, parse_rational(u)));
        py::dict d;
        d["normal"] = from_vec(t.point.normal());
        d["shape"] = from_mat(t.point.shape());
        d["alpha"] = t.alpha;
        d["lambda"] = t.lambda;
        d["mu"] = t.mu;
        return d;
      },
      py::arg("m"), py::arg("u"), "Reference point of the tube with parameter u = tan(sqrt2 r).");

  m.def(
      "principal_curvatures",
      [](const Array& n, const Array& s) {
        std::vector<std::pair<double, int>> out;
        for (const auto& c : surface::eigenstructure(point(n, s)).clusters) {
          out.emplace_back(c.value.as_float(), c.multiplicity);
        }
        return out;
      },
      py::arg("n"), py::arg("shape"));

  m.def("check_names", [] {
    std::vector<std::string> names;
    for (const auto& d : verify::registry()) names.push_back(d.name);
    return names;
  });

  m.def("run_suite_json", &run_suite_json, py::arg("m"), py::arg("mode"), py::arg("u"),
        py::arg("r"), py::arg("seeds"), py::arg("suite"), py::arg("trials"),
        py::arg("tolerance"), py::arg("perturb_lambda"));
}
