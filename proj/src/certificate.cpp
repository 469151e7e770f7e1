#include "totalcolor/certificate.hpp"

#include <charconv>
#include <sstream>

#include "totalcolor/builders.hpp"

namespace totalcolor {

namespace {

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string hex(std::uint64_t x)
{
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << x;
  return out.str();
}

std::optional<int> parse_int(std::string_view s)
{
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    return std::nullopt;
  return v;
}

}  // namespace

std::uint64_t coloring_digest(const TotalColoring& c)
{
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](int x) {
    for (int i = 0; i < 4; ++i) {
      h ^= static_cast<std::uint64_t>((static_cast<unsigned>(x) >> (8 * i)) & 0xffu);
      h *= 1099511628211ull;
    }
  };
  for (const auto& v : c.vertex_colors)
    mix(v.value_or(-1));
  for (const auto& e : c.edge_colors)
    mix(e.value_or(-1));
  return h;
}

Json certificate_to_json(const Graph& g, const TotalColoring& c, const std::vector<std::string>& log)
{
  Json doc;
  doc["recipe"] = recipe_to_json(g.recipe());
  Json vertices = Json::array();
  for (const auto& v : c.vertex_colors)
    vertices.push_back(v ? Json(*v) : Json(nullptr));
  doc["vertex_colors"] = std::move(vertices);
  Json edges = Json::object();
  for (int e = 0; e < g.edge_count(); ++e)
    edges[edge_key(g.edge(e))] = c.edge_colors[e] ? Json(*c.edge_colors[e]) : Json(nullptr);
  doc["edge_colors"] = std::move(edges);
  doc["palette"] = c.palette_size();
  Json violations = Json::array();
  bool verified = false;
  if (c.complete() && c.sized_for(g)) {
    const VerifyReport report = verify_total(g, c);
    for (const auto& v : report.violations)
      violations.push_back(describe(g, v));
    verified = report.valid();
  }
  else {
    violations.push_back(std::to_string(c.unset_count()) + " entries uncolored");
  }
  doc["verified"] = verified;
  doc["violations"] = std::move(violations);
  doc["digest"] = hex(coloring_digest(c));
  doc["construction_log"] = log;
  return doc;
}

Json certificate_to_json(const Construction& c)
{
  Json doc = certificate_to_json(c.graph, c.coloring, c.log);
  if (!c.ok)
    doc["construction_failure"] = c.failure;
  return doc;
}

std::string coloring_to_dot(const Graph& g, const TotalColoring& c)
{
  auto shown = [](const std::optional<Color>& x) { return x ? std::to_string(*x) : std::string("?"); };
  std::ostringstream out;
  out << "graph \"" << graph_family_name(g.recipe().family) << "\" {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << g.labels()[v] << ":" << shown(c.vertex_colors[v]) << "\"];\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"" << shown(c.edge_colors[e]) << "\"];\n";
  out << "}\n";
  return out.str();
}

CertificateCheck verify_certificate(const Json& doc)
{
  CertificateCheck out;
  auto problem = [&](std::string p) {
    out.problems.push_back(std::move(p));
    return out;
  };
  if (!doc.is_object())
    return problem("certificate is not a JSON object");
  for (const char* key : {"recipe", "vertex_colors", "edge_colors", "palette", "verified", "digest"})
    if (!doc.contains(key))
      return problem(std::string("missing field \"") + key + "\"");
  try {
    out.graph = build_graph(recipe_from_json(doc.at("recipe")));
  }
  catch (const std::exception& e) {
    return problem(std::string("recipe: ") + e.what());
  }
  const Graph& g = *out.graph;
  TotalColoring c(g);

  const Json& vc = doc.at("vertex_colors");
  if (!vc.is_array() || static_cast<int>(vc.size()) != g.vertex_count())
    return problem("vertex_colors must list " + std::to_string(g.vertex_count()) + " colors");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!vc[v].is_number_integer() || vc[v].get<long long>() < 0 || vc[v].get<long long>() > 1'000'000)
      return problem("vertex " + std::to_string(v) + " has no valid color");
    c.vertex_colors[v] = vc[v].get<int>();
  }

  const Json& ec = doc.at("edge_colors");
  if (!ec.is_object())
    return problem("edge_colors must be an object keyed \"u-v\"");
  for (const auto& [key, value] : ec.items()) {
    const auto dash = key.find('-');
    const auto u = dash == std::string::npos ? std::nullopt : parse_int(std::string_view(key).substr(0, dash));
    const auto v = dash == std::string::npos ? std::nullopt : parse_int(std::string_view(key).substr(dash + 1));
    const int e = u && v && *u >= 0 && *v >= 0 && *u < g.vertex_count() && *v < g.vertex_count()
                    ? g.edge_index(*u, *v)
                    : -1;
    if (e < 0)
      return problem("edge_colors key \"" + key + "\" is not an edge");
    if (c.edge_colors[e])
      return problem("edge " + key + " colored twice");
    if (!value.is_number_integer() || value.get<long long>() < 0 || value.get<long long>() > 1'000'000)
      return problem("edge " + key + " has no valid color");
    c.edge_colors[e] = value.get<int>();
  }
  if (!c.complete())
    return problem(std::to_string(c.unset_count()) + " edges uncolored");

  out.report = verify_total(g, c);
  out.coloring = c;
  if (!doc.at("palette").is_number_integer() || doc.at("palette").get<long long>() != out.report.palette)
    out.problems.push_back("recorded palette differs from the coloring's palette " +
                           std::to_string(out.report.palette));
  if (!doc.at("verified").is_boolean() || doc.at("verified").get<bool>() != out.report.valid())
    out.problems.push_back("recorded verdict differs from verification");
  if (!doc.at("digest").is_string() || doc.at("digest").get<std::string>() != hex(coloring_digest(c)))
    out.problems.push_back("digest does not match the colors");
  for (const auto& v : out.report.violations)
    out.problems.push_back(describe(g, v));
  out.valid = out.problems.empty() && out.report.valid();
  return out;
}

}  // namespace totalcolor
