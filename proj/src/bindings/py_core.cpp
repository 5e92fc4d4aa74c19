#include <algorithm>

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fraclog/constants.hpp"
#include "fraclog/csv.hpp"
#include "fraclog/extremals.hpp"
#include "fraclog/functionals.hpp"
#include "fraclog/inequalities.hpp"
#include "fraclog/specialfn.hpp"

namespace py = pybind11;
using namespace fraclog;

namespace {

GridField grid_from_array(const py::array_t<std::complex<double>>& arr,
                          double half_width) {
  const py::buffer_info info = arr.request();
  if (info.ndim < 1 || info.ndim > 3)
    throw std::domain_error("grid array must be 1-, 2- or 3-dimensional");
  const auto n = static_cast<std::size_t>(info.shape[0]);
  for (py::ssize_t d = 1; d < info.ndim; ++d)
    if (static_cast<std::size_t>(info.shape[d]) != n)
      throw std::domain_error("grid array must be square");
  auto contiguous = py::array_t<std::complex<double>, py::array::c_style |
                                                          py::array::forcecast>(arr);
  const auto* data = contiguous.data();
  std::vector<std::complex<double>> samples(data, data + contiguous.size());
  return GridField(static_cast<int>(info.ndim), half_width, n, std::move(samples));
}

py::array samples_array(const GridField& f) {
  std::vector<py::ssize_t> shape(static_cast<std::size_t>(f.dim()),
                                 static_cast<py::ssize_t>(f.points_per_axis()));
  py::array_t<std::complex<double>> out(shape);
  std::copy(f.samples().begin(), f.samples().end(), out.mutable_data());
  return out;
}

RadialProfile py_build_radial(const std::function<double(double)>& f,
                              const std::optional<std::function<double(double)>>& fp,
                              int ambient_dim, std::size_t node_count) {
  if (fp) {
    const std::function<double(double)> deriv = *fp;
    return build_radial(f, &deriv, ambient_dim, node_count);
  }
  return build_radial(f, nullptr, ambient_dim, node_count);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Explicit constants and margin evaluators for logarithmic "
            "Sobolev inequalities of fractional and W^{1,p} type";

  // special functions
  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def("gamma_ratio_log", &gamma_ratio_log, py::arg("num"), py::arg("den"));
  m.def("stirling_log_gamma", &stirling_log_gamma, py::arg("x"));
  m.def("sphere_surface_log", &sphere_surface_log, py::arg("n"));

  // constants
  py::class_<GnsParams>(m, "GnsParams")
      .def_readonly("n", &GnsParams::n)
      .def_readonly("p", &GnsParams::p)
      .def_readonly("q", &GnsParams::q)
      .def_readonly("r", &GnsParams::r)
      .def_readonly("theta", &GnsParams::theta)
      .def_readonly("delta", &GnsParams::delta)
      .def("__repr__", [](const GnsParams& g) {
        return "GnsParams(n=" + std::to_string(g.n) + ", p=" + format_double(g.p) +
               ", q=" + format_double(g.q) + ", r=" + format_double(g.r) +
               ", theta=" + format_double(g.theta) +
               ", delta=" + format_double(g.delta) + ")";
      });

  m.def("sobolev_constant", &sobolev_constant, py::arg("n"), py::arg("s"));
  m.def(
      "lsi_rhs_constant",
      [](int n, double s, double a) { return lsi_rhs_constant({n, s, a}); },
      py::arg("n"), py::arg("s"), py::arg("a"));
  m.def("lieb_loss_rhs_constant", &lieb_loss_rhs_constant, py::arg("a"));
  m.def("asymptotic_constant", &asymptotic_constant, py::arg("n"), py::arg("s"));
  m.def("asymptotic_ratio", &asymptotic_ratio, py::arg("n"), py::arg("s"));
  m.def("gns_exponents", &gns_exponents, py::arg("n"), py::arg("p"), py::arg("q"));
  m.def("gns_constant", &gns_constant, py::arg("n"), py::arg("p"), py::arg("q"));
  m.def("optimal_a_theorem1", &optimal_a_theorem1, py::arg("l2sq"),
        py::arg("fracsq"), py::arg("n"), py::arg("s"));
  m.def("optimal_a_lieb_loss", &optimal_a_lieb_loss, py::arg("l2sq"),
        py::arg("gradsq"), py::arg("n"));

  // fields
  py::class_<GridField>(m, "GridField")
      .def(py::init(&grid_from_array), py::arg("samples"), py::arg("half_width"),
           "Wrap a square complex array sampled on [-L, L)^d")
      .def_property_readonly("dim", &GridField::dim)
      .def_property_readonly("half_width", &GridField::half_width)
      .def_property_readonly("points_per_axis", &GridField::points_per_axis)
      .def_property_readonly("spacing", &GridField::spacing)
      .def_property_readonly("truncation_flagged", &GridField::truncation_flagged)
      .def_property_readonly("boundary_mass_fraction",
                             &GridField::boundary_mass_fraction)
      .def("samples", &samples_array)
      .def("save", &GridField::save, py::arg("path"))
      .def_static("load", &GridField::load, py::arg("path"));

  py::class_<RadialProfile>(m, "RadialProfile")
      .def_property_readonly("ambient_dim", &RadialProfile::ambient_dim)
      .def_property_readonly("node_count", &RadialProfile::node_count)
      .def_property_readonly("has_derivative", &RadialProfile::has_derivative)
      .def("nodes",
           [](const RadialProfile& p) {
             return py::array_t<double>(static_cast<py::ssize_t>(p.node_count()),
                                        p.nodes().data());
           })
      .def("values", [](const RadialProfile& p) {
        return py::array_t<double>(static_cast<py::ssize_t>(p.node_count()),
                                   p.values().data());
      });

  m.def("build_grid",
        [](int dim, double half_width, std::size_t n,
           const std::function<std::complex<double>(std::vector<double>)>& f) {
          return GridField::build(dim, half_width, n,
                                  [&](std::span<const double> x) {
                                    return f(std::vector<double>(x.begin(), x.end()));
                                  });
        },
        py::arg("dim"), py::arg("half_width"), py::arg("points_per_axis"),
        py::arg("f"));
  m.def("build_radial", &py_build_radial, py::arg("f"), py::arg("f_prime"),
        py::arg("ambient_dim"), py::arg("node_count") = 512);

  m.def("lp_norm", py::overload_cast<const GridField&, double>(&lp_norm),
        py::arg("field"), py::arg("p"));
  m.def("lp_norm", py::overload_cast<const RadialProfile&, double>(&lp_norm),
        py::arg("profile"), py::arg("p"));
  m.def("entropy", py::overload_cast<const GridField&>(&entropy), py::arg("field"));
  m.def("entropy", py::overload_cast<const RadialProfile&>(&entropy),
        py::arg("profile"));
  m.def("entropy_q", py::overload_cast<const GridField&, double>(&entropy_q),
        py::arg("field"), py::arg("q"));
  m.def("entropy_q", py::overload_cast<const RadialProfile&, double>(&entropy_q),
        py::arg("profile"), py::arg("q"));
  m.def("frac_half_norm_sq", &frac_half_norm_sq, py::arg("field"), py::arg("s"));
  m.def("gradient_norm_pow", &gradient_norm_pow, py::arg("profile"), py::arg("p"));

  // extremizer families
  py::class_<GaussianOracle>(m, "GaussianOracle")
      .def_readonly("n", &GaussianOracle::n)
      .def_readonly("a", &GaussianOracle::a)
      .def_property_readonly("l2sq", &GaussianOracle::l2sq)
      .def_property_readonly("gradsq", &GaussianOracle::gradsq)
      .def_property_readonly("ent", &GaussianOracle::ent);

  m.def("gaussian_grid",
        [](int n, double a, double half_width, std::size_t grid_n) {
          auto g = gaussian_grid(n, a, half_width, grid_n);
          return py::make_tuple(std::move(g.field), g.oracle);
        },
        py::arg("n"), py::arg("a"), py::arg("half_width") = 8.0,
        py::arg("points_per_axis") = 256);
  m.def("gaussian_radial",
        [](int n, double a, std::size_t nodes) {
          auto g = gaussian_radial(n, a, nodes);
          return py::make_tuple(std::move(g.profile), g.oracle);
        },
        py::arg("n"), py::arg("a"), py::arg("node_count") = 512);
  m.def("aubin_talenti_grid",
        [](int n, double s, double c, double half_width, std::size_t grid_n) {
          return aubin_talenti_grid(n, s, c, half_width, grid_n);
        },
        py::arg("n"), py::arg("s"), py::arg("c") = 1.0,
        py::arg("half_width") = 8.0, py::arg("points_per_axis") = 256);
  m.def("aubin_talenti_radial", &aubin_talenti_radial, py::arg("n"), py::arg("s"),
        py::arg("c") = 1.0, py::arg("node_count") = 512);
  m.def("gns_extremal", &gns_extremal, py::arg("n"), py::arg("p"), py::arg("q"),
        py::arg("c") = 1.0, py::arg("node_count") = 512);
  m.def("random_mixture", &random_mixture, py::arg("seed"), py::arg("dim"),
        py::arg("count"), py::arg("half_width") = 8.0,
        py::arg("points_per_axis") = 256);
  m.def("random_radial_mixture", &random_radial_mixture, py::arg("seed"),
        py::arg("ambient_dim"), py::arg("count"), py::arg("node_count") = 512);

  // margins
  py::class_<Discretization>(m, "Discretization")
      .def_readonly("kind", &Discretization::kind)
      .def_readonly("resolution", &Discretization::resolution)
      .def_readonly("truncation", &Discretization::truncation);

  py::class_<MarginReport>(m, "MarginReport")
      .def_readonly("lhs", &MarginReport::lhs)
      .def_readonly("rhs", &MarginReport::rhs)
      .def_readonly("disc", &MarginReport::disc)
      .def_property_readonly("margin", &MarginReport::margin)
      .def_property_readonly("relative_margin", &MarginReport::relative_margin)
      .def("__repr__", [](const MarginReport& r) {
        return "MarginReport(lhs=" + format_double(r.lhs) +
               ", rhs=" + format_double(r.rhs) +
               ", margin=" + format_double(r.margin()) + ")";
      });

  m.def("lieb_loss_margin",
        py::overload_cast<const GridField&, double>(&lieb_loss_margin),
        py::arg("field"), py::arg("a"));
  m.def("lieb_loss_margin",
        py::overload_cast<const RadialProfile&, double>(&lieb_loss_margin),
        py::arg("profile"), py::arg("a"));
  m.def("theorem1_margin", &theorem1_margin, py::arg("field"), py::arg("s"),
        py::arg("a"));
  m.def("sobolev_margin", &sobolev_margin, py::arg("field"), py::arg("s"));
  m.def("sobolev_margin_radial_s1", &sobolev_margin_radial_s1, py::arg("profile"));
  m.def("gns_margin", &gns_margin, py::arg("profile"), py::arg("p"), py::arg("q"));
  m.def("theorem2_margin", &theorem2_margin, py::arg("profile"), py::arg("p"),
        py::arg("q"), py::arg("a"));
  m.def("entropy_interpolation_check",
        py::overload_cast<const GridField&, double, double>(
            &entropy_interpolation_check),
        py::arg("field"), py::arg("q"), py::arg("eps"));
  m.def("entropy_interpolation_check",
        py::overload_cast<const RadialProfile&, double, double>(
            &entropy_interpolation_check),
        py::arg("profile"), py::arg("q"), py::arg("eps"));
  m.def("log_linear_bound_check", &log_linear_bound_check, py::arg("x"),
        py::arg("b"));

  m.def("margin_csv_row", &margin_csv_row, py::arg("inequality_id"),
        py::arg("params"), py::arg("report"));
  m.attr("MARGIN_CSV_HEADER") = kMarginCsvHeader;
}
