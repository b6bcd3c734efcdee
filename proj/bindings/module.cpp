#include <pybind11/pybind11.h>

#include "kbracket/bracket.hpp"
#include "kbracket/error.hpp"
#include "kbracket/json_io.hpp"
#include "kbracket/reduce.hpp"

namespace py = pybind11;
using namespace kbracket;

namespace {

EvalOptions opts_for(int threads) {
  EvalOptions o;
  o.threads = threads;
  return o;
}

} // namespace

PYBIND11_MODULE(_kbracket, m) {
  m.doc() = "Kuperberg sl(3) bracket of virtual and free links";

  py::register_exception<Error>(m, "KBracketError");

  m.def("bracket_str", [](const std::string& code, int threads) {
    return bracket(parse_gauss(code), opts_for(threads)).str();
  }, py::arg("code"), py::arg("threads") = 0);

  m.def("normalized_str", [](const std::string& code, int threads) {
    return normalized_bracket(parse_gauss(code), opts_for(threads)).str();
  }, py::arg("code"), py::arg("threads") = 0);

  m.def("free_str", [](const std::string& code, int a, int threads) {
    return free_bracket(parse_gauss(code), a, opts_for(threads)).str();
  }, py::arg("code"), py::arg("a"), py::arg("threads") = 0);

  m.def("report_json", [](const std::string& code, int threads) {
    return report_to_json(report(parse_gauss(code), opts_for(threads)));
  }, py::arg("code"), py::arg("threads") = 0);

  m.def("writhe", [](const std::string& code) { return writhe(parse_gauss(code)); });

  m.def("diagram_girth", [](const std::string& code) {
    return diagram_girth(parse_gauss(code));
  });

  m.def("kus_web_json", [](const std::string& code) {
    return web_to_json(unoriented_state_web(parse_gauss(code)));
  });

  m.def("kus_key", [](const std::string& code) -> std::string {
    auto [parts, circles] = components(unoriented_state_web(parse_gauss(code)));
    if (parts.size() == 1 && circles == 0) return canonical_form(parts[0]).str();
    return "";
  });

  m.def("minimal_json", [](const std::string& code) {
    return certificate_to_json(minimality_certificate(parse_gauss(code)));
  });

  m.def("reduce_json", [](const std::string& web_json) {
    return module_element_to_json(normal_form(web_from_json(web_json)));
  });

  m.def("canon_key", [](const std::string& web_json) {
    return canonical_form(web_from_json(web_json)).str();
  });

  m.def("ngon", [](int n) { return to_string(ngon_code(n)); });
}
