#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ludics/decompose.hpp"
#include "ludics/fixtures.hpp"
#include "ludics/frontend.hpp"

namespace py = pybind11;
using namespace ludics;

namespace {

Design design_of(const std::string& text) { return parse("design T = " + text).design("T"); }
Sequence sequence_of(const std::string& text) { return parse("seq S = " + text).sequence("S"); }

std::vector<std::string> texts(const PathSet& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_text(p));
  return out;
}

py::object tri(Tri t) {
  if (t == Tri::FuelExhausted) return py::none();
  return py::bool_(t == Tri::True);
}

py::dict report_dict(const DecompositionReport& r) {
  py::dict d;
  d["verdict"] = to_string(r.verdict);
  d["scope"] = r.scope;
  d["instances"] = r.instances.size();
  if (auto f = r.first_failure()) {
    d["witness"] = py::make_tuple(f->clause, f->input, f->witness);
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_ludics, m) {
  m.doc() = "Designs, interaction and connectives of computational ludics";

  py::register_exception<Error>(m, "LudicsError");

  py::class_<Design>(m, "Design")
      .def(py::init(&design_of), py::arg("text"))
      .def_static("daimon", &Design::daimon)
      .def_static("omega", &Design::omega)
      .def_property_readonly("positive", &Design::positive)
      .def_property_readonly("free_vars", [](const Design& d) { return free_vars(d); })
      .def("canonical", [](const Design& d) { return canonicalize(d); })
      .def("alpha_eq", [](const Design& a, const Design& b) { return alpha_eq(a, b); })
      .def("substitute", [](const Design& t, const std::map<Var, Design>& b) { return substitute(t, b); })
      .def("standard", [](const Design& d) { return is_standard(d); })
      .def("__str__", [](const Design& d) { return to_text(d); })
      .def("__repr__", [](const Design& d) { return "Design('" + to_text(d) + "')"; })
      .def("__eq__", [](const Design& a, const Design& b) { return alpha_eq(a, b); })
      .def("__hash__", [](const Design& d) { return py::hash(py::str(fingerprint(d))); });

  py::class_<MultiDesign>(m, "MultiDesign")
      .def_static("of", &MultiDesign::of)
      .def_static("binding", &MultiDesign::binding)
      .def_property_readonly("positive", [](const MultiDesign& d) { return d.positive; })
      .def_property_readonly("bindings", [](const MultiDesign& d) { return d.bindings; })
      .def("__str__", [](const MultiDesign& d) { return to_text(d); });

  m.def("step", [](const Design& p) { return step(p); }, "one cut reduction, None if p is not a cut");
  m.def(
      "normalize",
      [](const Design& t, std::size_t fuel) {
        EvalOutcome r = normalize(t, fuel);
        return py::make_tuple(to_string(r.status), r.exhausted() ? py::object(py::none()) : py::cast(r.value()),
                              r.steps);
      },
      py::arg("design"), py::arg("fuel") = kDefaultFuel);
  m.def(
      "orthogonal", [](const Design& t, const MultiDesign& g, std::size_t fuel) { return tri(orthogonal(t, g, fuel)); },
      py::arg("design"), py::arg("anti"), py::arg("fuel") = kDefaultFuel);
  m.def(
      "interact",
      [](const MultiDesign& d, const MultiDesign& e, std::size_t fuel) {
        Interaction r = iseq(d, e, fuel);
        return py::make_tuple(to_text(r.actions), to_string(r.status));
      },
      py::arg("left"), py::arg("right"), py::arg("fuel") = kDefaultFuel);
  m.def(
      "trace_json",
      [](const MultiDesign& d, const MultiDesign& e, std::size_t fuel) { return emit_trace_json(iseq(d, e, fuel)); },
      py::arg("left"), py::arg("right"), py::arg("fuel") = kDefaultFuel);

  m.def("dual", [](const std::string& s) { return to_text(dual_seq(sequence_of(s))); });
  m.def("view", [](const std::string& s) { return to_text(view(sequence_of(s))); });
  m.def("is_path", [](const std::string& s) { return is_path(sequence_of(s)); });
  m.def("canonical_path", [](const std::string& s) { return to_text(canonical(sequence_of(s))); });
  m.def("shuffle", [](const std::string& p, const std::string& q) -> std::optional<std::vector<std::string>> {
    auto r = shuffle(sequence_of(p), sequence_of(q));
    if (!r) return std::nullopt;
    return texts(canonical_set(*r));
  });
  m.def("paths", [](const Design& t, std::size_t max_len) { return texts(paths_of(t, max_len)); });

  py::class_<Connective>(m, "Connective")
      .def_readonly("label", &Connective::label)
      .def_property_readonly("arity", &Connective::arity)
      .def("dual", [](const Connective& c) { return dual_connective(c); })
      .def("__str__", [](const Connective& c) { return to_text(c); });
  m.def("connective", [](const std::string& name) { return Session{}.connective(name); });
  m.def("harmony", [](const Connective& c) {
    HarmonyReport h = check_harmony(c);
    py::dict d;
    d["inversion"] = h.inversion;
    d["recovery"] = h.recovery;
    d["harmony"] = h.harmony;
    d["beta"] = beta_pool_check(c).holds;
    d["eta"] = eta_condition_check(c).holds;
    return d;
  });
  m.def("eta_expand", [](const Design& n, const Connective& c) { return eta_expand(n, c); });

  py::class_<BehaviourWorkbench>(m, "Workbench")
      .def(py::init(&BehaviourWorkbench::of_designs), py::arg("label"), py::arg("generators"), py::arg("testers"))
      .def_readonly("label", &BehaviourWorkbench::label)
      .def("dual", &BehaviourWorkbench::dual)
      .def("visitable", [](const BehaviourWorkbench& w) { return texts(workbench_visitable_paths(w).paths); })
      .def("__str__", [](const BehaviourWorkbench& w) { return render(w); });

  m.def("regularity", [](const BehaviourWorkbench& w, const BehaviourWorkbench& d, std::size_t max_len) {
    return to_string(check_regularity(w, d, kDefaultFuel, max_len).verdict);
  }, py::arg("workbench"), py::arg("dual"), py::arg("max_len") = 8);
  m.def("decompose", [](const Connective& c, const BehaviourWorkbench& neg, const std::string& mode) {
    std::vector<BehaviourWorkbench> ns(c.arity(), neg), ps(c.arity(), neg.dual());
    if (mode == "paths") return report_dict(check_dual_decomposability_paths(c, ns, ps));
    if (mode == "connective") return report_dict(check_dual_decomposability_connective(c, ns, ps));
    throw py::value_error("mode is 'connective' or 'paths'");
  }, py::arg("connective"), py::arg("negative"), py::arg("mode") = "connective");

  py::class_<Session>(m, "Session")
      .def_static("parse", &parse)
      .def_static("load", &parse_file)
      .def("design", &Session::design)
      .def("multi", &Session::as_multi)
      .def("connective", &Session::connective)
      .def("workbench", &Session::workbench)
      .def("sequence", [](const Session& s, const std::string& n) { return to_text(s.sequence(n)); })
      .def("names", [](const Session& s) {
        std::vector<std::string> out;
        for (const auto& [k, n] : s.order) out.push_back(n);
        return out;
      })
      .def("render", [](const Session& s) { return render(s); });

  py::module_ fx = m.def_submodule("fixtures", "curated designs");
  fx.def("fig1_p", &fixtures::fig1_p);
  fx.def("fig1_n", &fixtures::fig1_n);
  fx.def("path_fig1", [] { return to_text(fixtures::path_fig1()); });
  fx.def("regular_negative", &fixtures::regular_negative, py::arg("label") = "N", py::arg("step") = "a",
         py::arg("stop") = "b");
}
