#include "totalcolor/graph_io.hpp"

#include <sstream>
#include <stdexcept>

#include "totalcolor/builders.hpp"

namespace totalcolor {

Json recipe_to_json(const Recipe& r)
{
  Json j;
  j["family"] = std::string(graph_family_name(r.family));
  j["n"] = r.n;
  switch (r.family) {
  case GraphFamily::DihedralInterval:
  case GraphFamily::KneserComplement:
    j["k"] = r.k;
    break;
  case GraphFamily::Dihedral:
    j["rotations"] = r.rotations;
    j["reflections"] = r.reflections;
    break;
  case GraphFamily::Circulant:
    j["diffs"] = r.rotations;
    break;
  case GraphFamily::Explicit: {
    j["name"] = r.name;
    Json edges = Json::array();
    for (auto [u, v] : r.edges)
      edges.push_back({u, v});
    j["edges"] = edges;
    break;
  }
  default:
    break;
  }
  return j;
}

Recipe recipe_from_json(const Json& j)
{
  try {
    Recipe r;
    r.family = graph_family_from_name(j.at("family").get<std::string>());
    r.n = j.at("n").get<int>();
    if (j.contains("k"))
      r.k = j.at("k").get<int>();
    if (j.contains("rotations"))
      r.rotations = j.at("rotations").get<std::vector<int>>();
    if (j.contains("diffs"))
      r.rotations = j.at("diffs").get<std::vector<int>>();
    if (j.contains("reflections"))
      r.reflections = j.at("reflections").get<std::vector<int>>();
    if (j.contains("name"))
      r.name = j.at("name").get<std::string>();
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        r.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed recipe: ") + e.what());
  }
}

Json graph_to_json(const Graph& g)
{
  Json j;
  j["recipe"] = recipe_to_json(g.recipe());
  j["vertices"] = g.vertex_count();
  j["max_degree"] = g.max_degree();
  j["labels"] = g.labels();
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({e.u, e.v});
  j["edges"] = edges;
  if (g.cayley()) {
    Json c;
    c["generators"] = g.cayley()->generators;
    c["edge_generator"] = g.cayley()->edge_generator;
    j["cayley"] = c;
  }
  return j;
}

Graph graph_from_json(const Json& j)
{
  Graph g = build_graph(recipe_from_json(j.at("recipe")));
  if (j.contains("edges")) {
    const auto& edges = j.at("edges");
    bool same = static_cast<int>(edges.size()) == g.edge_count();
    for (int e = 0; same && e < g.edge_count(); ++e)
      same = edges[e].at(0).get<int>() == g.edge(e).u && edges[e].at(1).get<int>() == g.edge(e).v;
    if (!same)
      throw std::invalid_argument("graph document edges disagree with its recipe");
  }
  return g;
}

std::string graph_to_dot(const Graph& g)
{
  std::ostringstream out;
  out << "graph \"" << graph_family_name(g.recipe().family) << "\" {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << g.labels()[v] << "\"];\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (g.cayley())
      out << " [label=\"" << g.cayley()->generators[g.cayley()->edge_generator[e]] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace totalcolor
