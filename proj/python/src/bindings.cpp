#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qpb/analyticity_kk.hpp"
#include "qpb/conjugate_transform.hpp"
#include "qpb/errors.hpp"
#include "qpb/report.hpp"
#include "qpb/suites.hpp"
#include "qpb/time_ladder.hpp"
#include "qpb/weyl.hpp"

namespace py = pybind11;

namespace {

py::dict to_dict(const qpb::CheckReport& r) {
  py::dict context;
  for (const auto& [key, value] : r.context) {
    context[py::str(key)] = std::visit([](const auto& v) { return py::cast(v); }, value);
  }
  py::dict d;
  d["check_id"] = r.check_id;
  d["paper_ref"] = r.paper_ref;
  d["residual"] = r.residual;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["context"] = context;
  return d;
}

qpb::SuiteConfig make_config(const std::string& suite, std::size_t n_points, double half_extent,
                             double hbar, std::size_t n_trunc, double omega, std::uint64_t seed,
                             const std::map<std::string, double>& tolerances) {
  qpb::SuiteConfig cfg;
  cfg.suite = qpb::parse_suite(suite);
  cfg.n_points = n_points;
  cfg.half_extent = half_extent;
  cfg.hbar = hbar;
  cfg.n_trunc = n_trunc;
  cfg.omega = omega;
  cfg.seed = seed;
  cfg.tolerance_overrides = tolerances;
  return cfg;
}

qpb::UniformGrid line_for(std::size_t n, double half_extent, double hbar = 1.0) {
  return qpb::make_uniform_grid(1, n, half_extent, hbar);
}

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

std::span<const double> view(const RealArray& a) {
  if (a.ndim() != 1) throw qpb::ConfigurationError("expected a one-dimensional array");
  return {a.data(), static_cast<std::size_t>(a.size())};
}

py::array_t<double> to_numpy(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<std::complex<double>> to_numpy(std::span<const qpb::cplx> v) {
  return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(v.size()), v.data());
}

}  // namespace

PYBIND11_MODULE(_qpb, m) {
  m.doc() = "Bindings for the qpb verification library";

  static py::exception<qpb::Error> base(m, "QpbError", PyExc_RuntimeError);
  static py::exception<qpb::ConfigurationError> config(m, "ConfigurationError", PyExc_ValueError);
  static py::handle parse_type =
      py::exception<qpb::ParseError>(m, "ParseError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qpb::ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_type)(e.what());
      err.attr("position") = e.position();
      err.attr("expected") = e.expected();
      PyErr_SetObject(parse_type.ptr(), err.ptr());
    } catch (const qpb::ConfigurationError& e) {
      PyErr_SetString(config.ptr(), e.what());
    } catch (const qpb::Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("suites", [] {
    std::vector<std::string> names;
    for (auto s : {qpb::Suite::fourier, qpb::Suite::poisson, qpb::Suite::kk, qpb::Suite::weyl,
                   qpb::Suite::uncertainty, qpb::Suite::ladder, qpb::Suite::all}) {
      names.emplace_back(qpb::to_string(s));
    }
    return names;
  });

  m.def("check_ids", [](const std::string& suite) { return qpb::suite_check_ids(qpb::parse_suite(suite)); },
        py::arg("suite") = "all");

  m.def(
      "run_suite",
      [](const std::string& suite, std::size_t n_points, double half_extent, double hbar,
         std::size_t n_trunc, double omega, std::uint64_t seed,
         const std::map<std::string, double>& tolerances) {
        const auto cfg = make_config(suite, n_points, half_extent, hbar, n_trunc, omega, seed, tolerances);
        std::vector<qpb::CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = qpb::run_suite(cfg);
        }
        py::list out;
        for (const auto& r : reports) out.append(to_dict(r));
        return out;
      },
      py::arg("suite") = "all", py::arg("n_points") = 256, py::arg("half_extent") = 8.0,
      py::arg("hbar") = 1.0, py::arg("n_trunc") = 64, py::arg("omega") = 1.0, py::arg("seed") = 1,
      py::arg("tolerances") = std::map<std::string, double>{},
      "Run a suite and return one dict per check.");

  m.def(
      "verify",
      [](const std::string& suite, std::size_t n_points, double half_extent, double hbar,
         std::size_t n_trunc, double omega, std::uint64_t seed,
         const std::map<std::string, double>& tolerances, const std::string& format) {
        if (format != "json" && format != "table") {
          throw qpb::ConfigurationError("format must be json or table");
        }
        const auto cfg = make_config(suite, n_points, half_extent, hbar, n_trunc, omega, seed, tolerances);
        py::gil_scoped_release release;
        return qpb::emit_report(qpb::run_suite(cfg),
                                format == "json" ? qpb::ReportFormat::json : qpb::ReportFormat::table);
      },
      py::arg("suite") = "all", py::arg("n_points") = 256, py::arg("half_extent") = 8.0,
      py::arg("hbar") = 1.0, py::arg("n_trunc") = 64, py::arg("omega") = 1.0, py::arg("seed") = 1,
      py::arg("tolerances") = std::map<std::string, double>{}, py::arg("format") = "json",
      "Run a suite and return the report text, byte-identical to the CLI output.");

  m.def("normal_order", [](const std::string& text) {
    return qpb::weyl::to_string(qpb::weyl::normal_order(qpb::weyl::evaluate(*qpb::weyl::parse(text))));
  });
  m.def("canonical", [](const std::string& text) { return qpb::weyl::print(*qpb::weyl::parse(text)); },
        "Parse an operator expression and print it in canonical form.");

  m.def(
      "hilbert_line",
      [](const RealArray& samples, double half_extent) {
        const auto s = view(samples);
        return to_numpy(qpb::hilbert_line(s, line_for(s.size(), half_extent)));
      },
      py::arg("samples"), py::arg("half_extent"));
  m.def(
      "hilbert_spectral",
      [](const RealArray& samples, double half_extent) {
        const auto s = view(samples);
        return to_numpy(qpb::hilbert_spectral(s, line_for(s.size(), half_extent)));
      },
      py::arg("samples"), py::arg("half_extent"));
  m.def(
      "pv_quadrature",
      [](const RealArray& samples, double half_extent, std::size_t index) {
        const auto s = view(samples);
        if (index >= s.size()) throw qpb::ConfigurationError("index outside the grid");
        return qpb::pv_quadrature(s, line_for(s.size(), half_extent), index);
      },
      py::arg("samples"), py::arg("half_extent"), py::arg("index"));

  m.def(
      "to_momentum",
      [](const ComplexArray& values, double half_extent, double hbar) {
        if (values.ndim() != 1) throw qpb::ConfigurationError("expected a one-dimensional array");
        const auto n = static_cast<std::size_t>(values.size());
        const qpb::UniformGrid g = line_for(n, half_extent, hbar);
        const qpb::WaveFunction psi(g, qpb::Representation::position,
                                    std::vector<qpb::cplx>(values.data(), values.data() + n));
        const qpb::WaveFunction out = qpb::to_momentum(psi);
        return py::make_tuple(to_numpy(out.grid().points()), to_numpy(out.values()));
      },
      py::arg("values"), py::arg("half_extent"), py::arg("hbar") = 1.0,
      "Momentum grid and samples of a centred position-space array.");

  m.def(
      "ladder",
      [](std::size_t n_trunc, double omega, double hbar) {
        const qpb::LadderSystem s = qpb::build_ladder(n_trunc, omega, hbar);
        py::dict d;
        d["b"] = s.b;
        d["b_dagger"] = s.b_dagger;
        d["K"] = s.K;
        d["H"] = s.H;
        d["T"] = s.T;
        return d;
      },
      py::arg("n_trunc"), py::arg("omega") = 1.0, py::arg("hbar") = 1.0);
}
