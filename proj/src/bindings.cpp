#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diagschur/cli.hpp"
#include "diagschur/diagschur.hpp"
#include "diagschur/json_io.hpp"

namespace py = pybind11;
using namespace diagschur;
using json_io::json;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

// Values cross the boundary as "p/q" strings (or ints); results come back as
// JSON text and the Python side turns them into Fractions.
MomentSequence to_sequence(const std::vector<std::string>& v) {
  MomentSequence s;
  for (const auto& x : v) s.push_back(Rational::parse(x));
  return s;
}

std::string dumps(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact diagonal Schur algorithm for Stieltjes-type moment problems";

  py::register_exception<Error>(m, "DiagschurError", PyExc_ValueError);

  m.def("hankel_det", [](const std::vector<std::string>& s, int n) {
    return hankel_det(to_sequence(s), n).str();
  });
  m.def("shifted_hankel_det", [](const std::vector<std::string>& s, int n) {
    return shifted_hankel_det(to_sequence(s), n).str();
  });
  m.def("normal_indices", [](const std::vector<std::string>& s) {
    MomentSequence seq = to_sequence(s);
    return dumps(json_io::to_json(normal_indices(seq), is_regular(seq)));
  });
  m.def("series_from_moments", [](const std::vector<std::string>& s) {
    return dumps(json_io::to_json(series_from_moments(to_sequence(s))));
  });
  m.def("toeplitz_solve", [](const std::vector<std::string>& s) {
    std::vector<std::string> out;
    for (const auto& x : toeplitz_solve(to_sequence(s))) out.push_back(x.str());
    return out;
  });
  m.def("multinomial", [](unsigned total, const std::vector<unsigned>& parts) {
    return multinomial(total, parts).get_str();
  });
  m.def(
      "schur_decompose_ml",
      [](const std::vector<std::string>& s, const std::string& parity, bool strict) {
        auto d = schur_decompose_ml(to_sequence(s), parse_parity(parity), strict ? Mode::Strict : Mode::Lenient);
        return dumps(json_io::to_json(d));
      },
      py::arg("moments"), py::arg("parity") = "even", py::arg("strict") = false);
  m.def("cf_expand", [](const std::string& cf_json, int order) {
    ContinuedFraction cf = json_io::parse_continued_fraction(json::parse(cf_json));
    return dumps(json_io::to_json(cf_expand(cf, canonical_tail(cf.parity), order)));
  });
  m.def("resolvent_matrix", [](const std::string& cf_json) {
    ContinuedFraction cf = json_io::parse_continued_fraction(json::parse(cf_json));
    ResolventMatrix w = resolvent_matrix(cf);
    json j = json_io::to_json(w);
    j["factorization"] = resolvent_factorization_check(w, cf).ok;
    return dumps(j);
  });
  m.def("assemble_full", [](const std::string& tensor_json, const std::string& parity) {
    MomentTensor t = json_io::parse_tensor(json::parse(tensor_json));
    return dumps(json_io::to_json(assemble_full(t, parse_parity(parity))));
  });
  m.def("roundtrip_verify", [](const std::string& measure_json, const std::string& parity) {
    DiscreteMeasure ms = json_io::parse_measure(json::parse(measure_json));
    return dumps(json_io::to_json(roundtrip_verify(ms, parse_parity(parity))));
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
