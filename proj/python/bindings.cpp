#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "sparsetrace/cli.hpp"
#include "sparsetrace/oracle.hpp"
#include "sparsetrace/polytope.hpp"
#include "sparsetrace/resultant.hpp"
#include "sparsetrace/traceform.hpp"

namespace py = pybind11;
using namespace sparsetrace;

namespace {

using Names = std::vector<std::string>;

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Names& vars) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars));
  return out;
}

py::dict trace_dict(const TraceResult& r) {
  py::dict d;
  d["value"] = to_fraction_string(r.value);
  d["numerator"] = to_fraction_string(r.numerator);
  d["denominator"] = to_fraction_string(r.denominator);
  d["method"] = r.method;
  if (r.e) d["e"] = r.e->get_str();
  if (r.d) d["d"] = r.d->get_str();
  if (r.index) d["index"] = r.index->get_str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact traces, residues and sparse resultants of polynomial systems";

  static py::exception<Error> base_error(m, "Error");
  static py::exception<DegenerateError> degenerate_error(m, "DegenerateError", base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DegenerateError& e) {
      py::set_error(degenerate_error, e.what());
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  m.def(
      "normalize_polynomial",
      [](const std::string& text, const Names& vars) { return parse_polynomial(text, vars).to_string(vars); },
      py::arg("text"), py::arg("vars"));

  m.def(
      "trace",
      [](const std::string& p, const std::string& q, const std::vector<std::string>& f, const Names& vars,
         std::uint64_t seed) {
        return trace_dict(trace_sparse(parse_polynomial(p, vars), parse_polynomial(q, vars), parse_all(f, vars),
                                       {seed, false}));
      },
      py::arg("p"), py::arg("q"), py::arg("f"), py::arg("vars"), py::arg("seed") = 1);

  m.def(
      "trace_oracle",
      [](const std::string& p, const std::string& q, const std::vector<std::string>& f, const Names& vars) {
        OracleTrace o = trace_oracle_for_system(parse_polynomial(p, vars), parse_polynomial(q, vars), parse_all(f, vars));
        py::dict d;
        d["value"] = to_fraction_string(o.value);
        d["algebra"] = o.algebra;
        d["dimension"] = o.dimension;
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("f"), py::arg("vars"));

  m.def(
      "chow_trace",
      [](const std::vector<std::pair<std::vector<std::string>, long>>& roots, long degree, const std::string& p,
         const std::string& q, const Names& vars) {
        std::vector<RootSpec> specs;
        for (const auto& [coords, mult] : roots) {
          RootSpec r;
          for (const auto& c : coords) r.point.push_back(parse_rational(c));
          r.multiplicity = mult;
          specs.push_back(r);
        }
        ChowForm ch = chowform_from_roots(specs, degree);
        return trace_dict(trace_from_chowform(ch, parse_polynomial(p, vars), parse_polynomial(q, vars)));
      },
      py::arg("roots"), py::arg("degree"), py::arg("p"), py::arg("q"), py::arg("vars"));

  m.def(
      "global_residue",
      [](const std::string& h, const std::vector<std::string>& f, const Names& vars) {
        return to_fraction_string(global_residue_oracle(parse_polynomial(h, vars), parse_all(f, vars)));
      },
      py::arg("h"), py::arg("f"), py::arg("vars"));

  m.def(
      "torus_residue",
      [](const std::string& p, const std::vector<std::string>& f, const Names& vars) {
        return to_fraction_string(torus_residue_oracle(parse_polynomial(p, vars), parse_all(f, vars)));
      },
      py::arg("p"), py::arg("f"), py::arg("vars"));

  m.def(
      "mixed_volume",
      [](const std::vector<std::vector<std::vector<long>>>& supports) {
        std::vector<Support> s;
        for (const auto& pts : supports) s.push_back(make_support(pts));
        return mixed_volume(s).get_str();
      },
      py::arg("supports"));

  m.def(
      "sparse_resultant",
      [](const std::vector<std::string>& polys, const Names& vars, std::uint64_t seed) {
        return to_fraction_string(ce_resultant(problem_from_polynomials(parse_all(polys, vars)), seed));
      },
      py::arg("polys"), py::arg("vars"), py::arg("seed") = 1);

  m.def(
      "discriminant",
      [](const std::vector<std::string>& f, const Names& vars) {
        return to_fraction_string(discriminant_dense(parse_all(f, vars)));
      },
      py::arg("f"), py::arg("vars"));

  m.def(
      "run",
      [](const std::string& command, const std::string& input, std::uint64_t seed, const std::string& backend,
         std::optional<std::string> p, std::optional<std::string> q, std::optional<std::string> monomial) {
        JobSpec spec{command, input, seed, backend, p, q, monomial};
        JobResult r = run_job(spec);
        return py::make_tuple(r.document.dump(), r.exit_code);
      },
      py::arg("command"), py::arg("input"), py::arg("seed") = 1, py::arg("backend") = "auto",
      py::arg("p") = py::none(), py::arg("q") = py::none(), py::arg("monomial") = py::none());
}
