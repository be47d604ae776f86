#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/error.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/sequences.hpp"
#include "twobridge/slope.hpp"
#include "twobridge/verify.hpp"
#include "twobridge/words.hpp"

namespace py = pybind11;
using namespace twobridge;

namespace {

Slope slope(const std::string& text) { return Slope::parse(text); }

py::dict trace_dict(const ReductionTrace& t) {
  py::list steps;
  for (const auto& s : t.steps) {
    py::dict d;
    d["matrix"] = s.matrix.entries();
    d["image"] = s.image.to_string();
    steps.append(d);
  }
  py::dict d;
  d["start"] = t.start.to_string();
  d["steps"] = steps;
  d["result"] = t.result.to_string();
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["s"] = v.s.to_string();
  d["r"] = v.r.to_string();
  d["answer"] = v.answer;
  d["representative"] = v.representative.to_string();
  d["route"] = std::string(to_string(v.route));
  d["trace"] = trace_dict(v.trace);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Null-homotopy and epimorphism decisions for 2-bridge links";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  m.def("cf_expand", [](const std::string& r) { return cf_expand(slope(r)).terms(); }, py::arg("r"));
  m.def("cf_value", [](const std::vector<std::int64_t>& t) { return cf_value(ContinuedFraction(t)).to_string(); },
        py::arg("terms"));
  m.def("fundamental_endpoints", [](const std::string& r) {
    const auto e = fundamental_endpoints(slope(r));
    return std::make_pair(e.r1.to_string(), e.r2.to_string());
  }, py::arg("r"));
  m.def("schubert_equivalent", [](const std::string& r, const std::string& r2) {
    return schubert_equivalent(slope(r), slope(r2));
  }, py::arg("r"), py::arg("r2"));

  m.def("u_word", [](const std::string& r) { return to_string(u_word(slope(r))); }, py::arg("r"));
  m.def("u_hat", [](const std::string& r) { return to_string(u_hat(slope(r))); }, py::arg("r"));

  m.def("s_seq", [](const std::string& r) { return s_seq_of_slope(slope(r)); }, py::arg("r"));
  m.def("cs_seq", [](const std::string& r) { return cs_seq_of_slope(slope(r)).representative(); }, py::arg("r"));
  m.def("t_seq", [](const std::string& r) { return t_seq(slope(r)); }, py::arg("r"));
  m.def("decompose", [](const std::string& r) {
    const auto d = decompose(slope(r));
    return std::make_pair(d.s1, d.s2);
  }, py::arg("r"));

  m.def("reduce", [](const std::string& s, const std::string& r) {
    return trace_dict(reduce_to_fundamental(slope(s), slope(r)));
  }, py::arg("s"), py::arg("r"));
  m.def("is_null_homotopic", [](const std::string& s, const std::string& r) {
    return verdict_dict(is_null_homotopic(slope(s), slope(r)));
  }, py::arg("s"), py::arg("r"));
  m.def("has_umpp_epimorphism", [](const std::string& s, const std::string& r) {
    return has_umpp_epimorphism(slope(s), slope(r));
  }, py::arg("s"), py::arg("r"));
  m.def("homotopy_representative", [](const std::string& s, const std::string& r) {
    return homotopy_representative(slope(s), slope(r)).to_string();
  }, py::arg("s"), py::arg("r"));
  m.def("connection_criterion", [](const std::string& s, const std::string& r) {
    return connection_criterion(slope(s), slope(r));
  }, py::arg("s"), py::arg("r"));
  m.def("satisfies_necessary_condition", [](const std::string& s, const std::string& r) {
    return satisfies_necessary_condition(slope(s), slope(r));
  }, py::arg("s"), py::arg("r"));
  m.def("scan", [](const std::string& r, std::int64_t max_den, const std::string& mode) {
    if (mode != "null" && mode != "epi") throw DomainError("mode must be 'null' or 'epi'");
    std::vector<std::string> out;
    for (const auto& s : scan(slope(r), max_den, mode == "epi" ? ScanMode::Epimorphism : ScanMode::NullHomotopy)) {
      out.push_back(s.to_string());
    }
    return out;
  }, py::arg("r"), py::arg("max_den"), py::arg("mode") = "null");

  m.def("check_c4_t4", [](const std::string& r) {
    const PieceReport rep = check_c4_t4(slope(r));
    py::dict d;
    d["c4"] = rep.c4;
    d["t4"] = rep.t4;
    d["t4_brute"] = rep.t4_brute ? py::cast(*rep.t4_brute) : py::none();
    d["min_cyclic_pieces"] = rep.min_cyclic_pieces;
    d["catalog_matches_closed_form"] = rep.catalog_matches_closed_form;
    return d;
  }, py::arg("r"));

  m.def("verify", [](std::int64_t max_den) {
    if (max_den < 2) throw DomainError("verify needs max_den >= 2");
    py::list out;
    for (const auto& c : run_verification(VerifyBounds::uniform(max_den))) {
      py::dict d;
      d["name"] = c.name;
      d["passed"] = c.passed;
      d["cases"] = c.cases;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  }, py::arg("max_den"));
}
