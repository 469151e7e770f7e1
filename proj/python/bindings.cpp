#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "totalcolor/builders.hpp"
#include "totalcolor/certificate.hpp"
#include "totalcolor/claims.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/graph_io.hpp"
#include "totalcolor/strategies.hpp"

namespace py = pybind11;
using namespace totalcolor;

namespace {

std::string dump(const Json& j)
{
  return j.dump();
}

Recipe parse_recipe(const std::string& text)
{
  return recipe_from_json(Json::parse(text));
}

std::string build(const std::string& recipe)
{
  return dump(graph_to_json(build_graph(parse_recipe(recipe))));
}

std::string color(const std::string& recipe, const std::string& strategy, std::int64_t budget,
                  const std::string& variant, int d, int base_index)
{
  ColorRequest q;
  q.recipe = parse_recipe(recipe);
  q.strategy = strategy_from_name(strategy);
  q.budget = budget;
  q.dihedral_variant = variant;
  q.d = d;
  q.base_index = base_index;
  const Construction c = color_graph(q);
  return dump(certificate_to_json(c));
}

std::string verify(const std::string& certificate)
{
  Json doc;
  try {
    doc = Json::parse(certificate);
  }
  catch (const Json::parse_error& e) {
    return dump(Json{{"valid", false}, {"problems", {std::string("not JSON: ") + e.what()}}, {"violations", Json::array()}});
  }
  const CertificateCheck check = verify_certificate(doc);
  Json violations = Json::array();
  if (check.graph)
    for (const Violation& v : check.report.violations)
      violations.push_back(describe(*check.graph, v));
  Json out{{"valid", check.valid}, {"problems", check.problems}, {"violations", violations}};
  if (check.valid)
    out["palette"] = check.report.palette;
  return dump(out);
}

std::string exact(const std::string& recipe, std::int64_t budget)
{
  const Graph g = build_graph(parse_recipe(recipe));
  const TypeResult t = classify_type(g, budget);
  return dump(Json{{"max_degree", t.max_degree},
                   {"exact", t.chi.exact},
                   {"chi", t.chi.exact ? Json(t.chi.upper) : Json(nullptr)},
                   {"lower", t.chi.lower},
                   {"upper", t.chi.upper},
                   {"type", total_type_name(t.type)},
                   {"nodes", t.chi.nodes}});
}

std::string audit(const std::string& theorem, int n, int k, std::vector<int> t1, std::vector<int> t2,
                  std::int64_t budget)
{
  ClaimInstance in{theorem, n, k, std::move(t1), std::move(t2)};
  return dump(report_to_json(audit_claim(in, budget)));
}

std::string matrix()
{
  Json rows = Json::array();
  for (const ClaimInstance& in : default_claim_matrix())
    rows.push_back({{"theorem", in.theorem}, {"n", in.n}, {"k", in.k}, {"t1", in.t1}, {"t2", in.t2}});
  return dump(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Total colorings of Cayley, circulant and Kneser-complement graphs";
  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("build_graph", &build, py::arg("recipe"));
  m.def("color", &color, py::arg("recipe"), py::arg("strategy"), py::arg("budget"), py::arg("variant"), py::arg("d"),
        py::arg("base_index"));
  m.def("verify", &verify, py::arg("certificate"));
  m.def("exact", &exact, py::arg("recipe"), py::arg("budget"));
  m.def("audit_claim", &audit, py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("t1"), py::arg("t2"),
        py::arg("budget"));
  m.def("claim_matrix", &matrix);
  m.def("theorem_ids", &theorem_ids);
  m.def("default_budget", &default_budget);
}
