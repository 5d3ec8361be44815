#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwi/classical.hpp"
#include "qwi/errors.hpp"
#include "qwi/greens.hpp"
#include "qwi/impedance.hpp"
#include "qwi/oracle.hpp"
#include "qwi/profile_io.hpp"
#include "qwi/report.hpp"
#include "qwi/transfer.hpp"

namespace py = pybind11;
using namespace qwi;

namespace {

PotentialProfile make_profile(std::vector<double> boundaries, std::vector<double> values) {
  PotentialProfile p{std::move(boundaries), std::move(values)};
  validate_profile(p);
  return p;
}

cli::OutFormat to_format(const std::string& s) {
  if (s == "json") return cli::OutFormat::json;
  if (s == "csv") return cli::OutFormat::csv;
  throw ValidationError("format must be 'json' or 'csv'");
}

}  // namespace

PYBIND11_MODULE(_qwi, m) {
  m.doc() = "Bound states of piecewise-constant 1D potentials";

  auto base = py::register_exception<Error>(m, "QwiError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DegenerateWavenumberError>(m, "DegenerateWavenumberError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnsupportedProfileError>(m, "UnsupportedProfileError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<InconsistentStateError>(m, "InconsistentStateError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<UnitSystem>(m, "UnitSystem")
      .def(py::init([](double hbar, double mass) {
             UnitSystem u{hbar, mass};
             validate_units(u);
             return u;
           }),
           py::arg("hbar") = 1.0, py::arg("mass") = 1.0)
      .def_readonly("hbar", &UnitSystem::hbar)
      .def_readonly("mass", &UnitSystem::mass);

  py::class_<PotentialProfile>(m, "PotentialProfile")
      .def(py::init(&make_profile), py::arg("boundaries"), py::arg("potentials"))
      .def_static("three_region", &PotentialProfile::three_region, py::arg("u1"), py::arg("u2"),
                  py::arg("u3"), py::arg("width"))
      .def_readonly("boundaries", &PotentialProfile::boundaries)
      .def_readonly("potentials", &PotentialProfile::values)
      .def_property_readonly("region_count", &PotentialProfile::region_count)
      .def("potential_at", &PotentialProfile::potential_at, py::arg("x"))
      .def("__eq__", [](const PotentialProfile& a, const PotentialProfile& b) { return a == b; })
      .def("__repr__", [](const PotentialProfile& p) {
        return "PotentialProfile(" + std::to_string(p.region_count()) + " regions)";
      });

  py::enum_<Method>(m, "Method")
      .value("classical", Method::classical)
      .value("transfer", Method::transfer)
      .value("impedance", Method::impedance);

  py::class_<BoundState>(m, "BoundState")
      .def_readonly("energy", &BoundState::energy)
      .def_readonly("method", &BoundState::method)
      .def_readonly("index", &BoundState::index)
      .def_readonly("residual", &BoundState::residual)
      .def_readonly("norm_constant", &BoundState::norm_constant)
      .def_readonly("phase", &BoundState::phase)
      .def("__repr__", [](const BoundState& s) {
        return "BoundState(index=" + std::to_string(s.index) +
               ", energy=" + cli::format_double(s.energy) + ")";
      });

  m.def(
      "load_profile",
      [](const std::string& path) {
        auto spec = load_profile(path);
        return py::make_tuple(spec.profile, spec.units);
      },
      py::arg("path"), "Read a profile JSON file; returns (profile, units).");

  m.def(
      "find_bound_states",
      [](const PotentialProfile& p, const UnitSystem& u, const std::string& method,
         int resolution) {
        py::gil_scoped_release release;
        if (method == "classical") return classical::find_bound_states(p, u, resolution);
        if (method == "transfer") return transfer::find_bound_states(p, u, resolution);
        if (method == "impedance") return impedance::find_bound_states(p, u, resolution);
        throw ValidationError("method must be classical, transfer or impedance");
      },
      py::arg("profile"), py::arg("units") = UnitSystem{}, py::arg("method") = "transfer",
      py::arg("resolution") = kDefaultResolution);

  m.def("dispersion_residual", &classical::dispersion_residual, py::arg("profile"),
        py::arg("units"), py::arg("energy"));
  m.def("normalization", &classical::normalization, py::arg("profile"), py::arg("units"),
        py::arg("energy"), "|C11|^2 of the normalized state at a root.");
  m.def("wavefunction", &classical::wavefunction, py::arg("profile"), py::arg("units"),
        py::arg("state"), py::arg("x"));

  m.def(
      "total_transfer",
      [](const PotentialProfile& p, const UnitSystem& u, double energy) {
        const auto t = transfer::total_transfer(p, u, energy);
        return std::vector<std::vector<cplx>>{{t.at(0, 0), t.at(0, 1)}, {t.at(1, 0), t.at(1, 1)}};
      },
      py::arg("profile"), py::arg("units"), py::arg("energy"),
      "Total transfer matrix as nested lists (may overflow for very thick barriers).");
  m.def(
      "interface_matrix",
      [](cplx ql, cplx qr) {
        const auto t = transfer::interface_matrix(ql, qr);
        return std::vector<std::vector<cplx>>{{t.at(0, 0), t.at(0, 1)}, {t.at(1, 0), t.at(1, 1)}};
      },
      py::arg("q_left"), py::arg("q_right"));

  m.def(
      "input_impedance",
      [](cplx z0, cplx z_load, cplx exponent, double length) {
        const auto kind =
            exponent.imag() != 0.0 ? WaveKind::propagating : WaveKind::evanescent;
        return impedance::input_impedance({z0, kind}, z_load, exponent, length);
      },
      py::arg("z0"), py::arg("z_load"), py::arg("exponent"), py::arg("length"));

  m.def("green_diagonal", &greens::green_diagonal, py::arg("profile"), py::arg("units"),
        py::arg("x"), py::arg("energy"));
  m.def(
      "eigenfunction_density",
      [](const PotentialProfile& p, const UnitSystem& u, double x, double energy,
         std::vector<double> eps) {
        if (eps.empty()) return greens::eigenfunction_density(p, u, x, energy);
        return greens::eigenfunction_density(p, u, x, energy, eps);
      },
      py::arg("profile"), py::arg("units"), py::arg("x"), py::arg("energy"),
      py::arg("eps_schedule") = std::vector<double>{});

  m.def(
      "oracle_energies",
      [](const PotentialProfile& p, const UnitSystem& u, std::size_t n_points) {
        py::gil_scoped_release release;
        oracle::OracleOptions o;
        o.n_points = n_points;
        std::vector<double> out;
        for (const auto& s : oracle::solve(p, u, o)) out.push_back(s.energy);
        return out;
      },
      py::arg("profile"), py::arg("units") = UnitSystem{},
      py::arg("n_points") = oracle::kDefaultPoints);

  m.def(
      "solve",
      [](const PotentialProfile& p, const UnitSystem& u, const std::string& method,
         const std::string& format, bool meta) {
        cli::SolveOptions o;
        o.method = method;
        o.format = to_format(format);
        o.meta = meta;
        return cli::solve({p, u}, o);
      },
      py::arg("profile"), py::arg("units") = UnitSystem{}, py::arg("method") = "all",
      py::arg("format") = "json", py::arg("meta") = true,
      "Same as `qwi solve`, returned as a CommandResult.");
  m.def(
      "compare",
      [](const PotentialProfile& p, const UnitSystem& u, const std::string& format,
         std::size_t oracle_points, bool meta) {
        cli::CompareOptions o;
        o.format = to_format(format);
        o.oracle_points = oracle_points;
        o.meta = meta;
        py::gil_scoped_release release;
        return cli::compare({p, u}, o);
      },
      py::arg("profile"), py::arg("units") = UnitSystem{}, py::arg("format") = "json",
      py::arg("oracle_points") = oracle::kDefaultPoints, py::arg("meta") = true);

  py::class_<cli::CommandResult>(m, "CommandResult")
      .def_readonly("exit_code", &cli::CommandResult::exit_code)
      .def_readonly("output", &cli::CommandResult::output)
      .def_readonly("diagnostics", &cli::CommandResult::diagnostics);
}
