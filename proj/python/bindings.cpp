#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "floorlat/asymptotics.hpp"
#include "floorlat/cli.hpp"
#include "floorlat/divisor_lattice.hpp"
#include "floorlat/floor_sequences.hpp"
#include "floorlat/rational.hpp"

namespace py = pybind11;
using namespace floorlat;

namespace {

SequenceSpec make_spec(std::int64_t n, const std::string& alpha, const std::string& nu) {
  return SequenceSpec(n, Rational::parse(alpha), Rational::parse(nu));
}

SlopeMethod parse_slope_method(const std::string& name) {
  if (name == "series") return SlopeMethod::series;
  if (name == "quadrature") return SlopeMethod::quadrature;
  throw PreconditionError("method must be 'series' or 'quadrature'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Congruence counts in shifted floor sequences, lattice counts and densities";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("canonical", [](const std::string& text) { return Rational::parse(text).to_string(); }, py::arg("text"),
        "Exact rational parse of 'p', 'p/q' or a decimal, returned as 'p/q'.");

  m.def(
      "sequence_terms",
      [](std::int64_t n, const std::string& alpha, const std::string& nu) {
        std::vector<std::int64_t> out;
        for (const auto& t : sequence_terms(make_spec(n, alpha, nu))) out.push_back(t.get_si());
        return out;
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("nu") = "0");

  m.def(
      "count",
      [](std::int64_t n, std::int64_t r, std::int64_t mod, const std::string& alpha, const std::string& nu,
         const std::string& method) {
        const auto spec = make_spec(n, alpha, nu);
        CongruenceClass cls(r, mod);
        if (method == "direct") return count_direct(spec, cls);
        if (method == "floor_sums") return count_via_floor_sums(spec, cls);
        throw PreconditionError("method must be 'direct' or 'floor_sums'");
      },
      py::arg("n"), py::arg("r"), py::arg("m"), py::arg("alpha") = "0", py::arg("nu") = "0",
      py::arg("method") = "direct");

  m.def(
      "count_rational_alpha",
      [](std::int64_t n, std::int64_t p, std::int64_t q, const std::string& nu, std::int64_t mod) {
        return count_rational_alpha(n, p, q, Rational::parse(nu), mod);
      },
      py::arg("n"), py::arg("p"), py::arg("q"), py::arg("nu") = "0", py::arg("m") = 2);

  m.def(
      "threshold_count",
      [](std::int64_t n, std::int64_t k, const std::string& alpha, const std::string& nu) {
        return threshold_count(make_spec(n, alpha, nu), k);
      },
      py::arg("n"), py::arg("k"), py::arg("alpha") = "0", py::arg("nu") = "0");

  m.def("f_seq", &f_seq, py::arg("n"));
  m.def("c_seq", &c_seq, py::arg("n"));
  m.def("r_seq", &r_seq, py::arg("n"));
  m.def("r_seq_round_down", &r_seq_round_down, py::arg("n"));

  m.def("divisor_count", &divisor_count, py::arg("n"));
  m.def("divisor_count_mod", &divisor_count_mod, py::arg("n"), py::arg("r"), py::arg("m"));
  m.def("divisor_summatory", &divisor_summatory, py::arg("n"));
  m.def("r2", &r2, py::arg("n"));
  m.def("rep_count_x2_xy_y2", &rep_count_x2_xy_y2, py::arg("n"));
  m.def("rep_count_x2_2y2", &rep_count_x2_2y2, py::arg("n"));
  m.def("circle_count", &circle_count, py::arg("n"));
  m.def("eisenstein_count", &eisenstein_count, py::arg("n"));
  m.def("z_sqrt_minus2_count", &z_sqrt_minus2_count, py::arg("n"));
  m.def(
      "enumerate_form_count",
      [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
        return enumerate_form_count(QuadraticForm(a, b, c), n);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));

  m.def(
      "slope",
      [](const std::string& alpha, std::int64_t r, std::int64_t mod, const std::string& method) {
        return slope(SlopeQuery(Rational::parse(alpha), r, mod), parse_slope_method(method)).value;
      },
      py::arg("alpha"), py::arg("r"), py::arg("m"), py::arg("method") = "quadrature");

  m.def(
      "slope_table",
      [](const std::string& alpha, std::int64_t m_max) {
        std::vector<std::tuple<std::int64_t, std::int64_t, double>> rows;
        for (const auto& row : slope_table(Rational::parse(alpha), m_max)) rows.emplace_back(row.r, row.m, row.slope);
        return rows;
      },
      py::arg("alpha"), py::arg("m_max"));

  m.def("digamma", &digamma, py::arg("x"));
  m.def("parity_f", &parity_f, py::arg("alpha"));
  m.def(
      "find_alpha0", [](double tol) { return find_alpha0(tol); }, py::arg("tol") = 1e-11);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
