#include "totalcolor/coloring.hpp"

#include <algorithm>

namespace totalcolor {

bool TotalColoring::complete() const { return unset_count() == 0; }

int TotalColoring::unset_count() const
{
  auto unset = [](const std::optional<Color>& c) { return !c.has_value(); };
  return static_cast<int>(std::count_if(vertex_colors.begin(), vertex_colors.end(), unset) +
                          std::count_if(edge_colors.begin(), edge_colors.end(), unset));
}

int TotalColoring::palette_size() const
{
  int top = -1;
  for (const auto& c : vertex_colors)
    if (c)
      top = std::max(top, *c);
  for (const auto& c : edge_colors)
    if (c)
      top = std::max(top, *c);
  return top + 1;
}

std::string describe(const Graph& g, const Violation& v)
{
  auto vertex = [&](int x) { return "vertex " + std::to_string(x) + " [" + g.labels()[x] + "]"; };
  auto edge = [&](int e) {
    return "edge " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  };
  const std::string color = " share color " + std::to_string(v.color);
  switch (v.kind) {
  case ViolationKind::VertexVertex: return "adjacent " + vertex(v.first) + " and " + vertex(v.second) + color;
  case ViolationKind::VertexEdge: return vertex(v.first) + " and incident " + edge(v.second) + color;
  case ViolationKind::EdgeEdge: return "adjacent " + edge(v.first) + " and " + edge(v.second) + color;
  }
  return "unknown violation";
}

VerifyReport verify_total(const Graph& g, const TotalColoring& c)
{
  if (!c.sized_for(g))
    throw std::invalid_argument("coloring is sized for a different graph");
  if (!c.complete())
    throw std::invalid_argument("coloring is incomplete: " + std::to_string(c.unset_count()) + " unset entries");

  VerifyReport report;
  report.palette = c.palette_size();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const Color ce = *c.edge_colors[e];
    if (*c.vertex_colors[u] == *c.vertex_colors[v])
      report.violations.push_back({ViolationKind::VertexVertex, u, v, *c.vertex_colors[u]});
    if (ce == *c.vertex_colors[u])
      report.violations.push_back({ViolationKind::VertexEdge, u, e, ce});
    if (ce == *c.vertex_colors[v])
      report.violations.push_back({ViolationKind::VertexEdge, v, e, ce});
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (*c.edge_colors[inc[i]] == *c.edge_colors[inc[j]])
          report.violations.push_back({ViolationKind::EdgeEdge, std::min(inc[i], inc[j]),
                                       std::max(inc[i], inc[j]), *c.edge_colors[inc[i]]});
  }
  return report;
}

std::vector<int> VertexPartition::class_of(int vertex_count) const
{
  std::vector<int> out(vertex_count, -1);
  for (int k = 0; k < static_cast<int>(classes.size()); ++k)
    for (int v : classes[k]) {
      if (v < 0 || v >= vertex_count)
        throw std::invalid_argument("partition vertex out of range");
      if (out[v] >= 0)
        throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two classes");
      out[v] = k;
    }
  return out;
}

bool VertexPartition::covers(int vertex_count) const
{
  const auto cls = class_of(vertex_count);
  return std::none_of(cls.begin(), cls.end(), [](int k) { return k < 0; });
}

std::vector<std::pair<int, int>> dependent_pairs(const Graph& g, const VertexPartition& p)
{
  const auto cls = p.class_of(g.vertex_count());
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges())
    if (cls[e.u] >= 0 && cls[e.u] == cls[e.v])
      out.emplace_back(e.u, e.v);
  return out;
}

TotalColoring merge_partial_total(const Graph& g, const VertexPartition& base,
                                  std::span<const ClassMatching> matchings,
                                  std::span<const std::pair<int, Color>> remainder)
{
  TotalColoring out(g);
  const auto cls = base.class_of(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (cls[v] >= 0)
      out.vertex_colors[v] = cls[v];

  auto place = [&](int e, Color color) {
    if (e < 0 || e >= g.edge_count())
      throw MergeError("edge index out of range", e);
    const auto [u, v] = g.edge(e);
    const std::string where = "edge " + std::to_string(u) + "-" + std::to_string(v);
    if (out.edge_colors[e])
      throw MergeError(where + " is colored twice", e);
    for (int x : {u, v}) {
      if (out.vertex_colors[x] == color)
        throw MergeError(where + " takes the color of its endpoint " + std::to_string(x), e);
      for (int f : g.incident_edges(x))
        if (out.edge_colors[f] == color)
          throw MergeError(where + " clashes with edge " + std::to_string(g.edge(f).u) + "-" +
                               std::to_string(g.edge(f).v) + " on color " + std::to_string(color),
                           e);
    }
    out.edge_colors[e] = color;
  };

  for (const auto& cm : matchings) {
    if (cm.color_class < 0 || cm.color_class >= static_cast<int>(base.size()))
      throw MergeError("matching assigned to a missing class", cm.matching.edges.empty() ? -1 : cm.matching.edges[0]);
    for (int e : cm.matching.edges)
      place(e, cm.color_class);
  }
  const Color offset = static_cast<Color>(base.size());
  for (auto [e, c] : remainder)
    place(e, offset + c);
  return out;
}

}  // namespace totalcolor
