#include "totalcolor/construction.hpp"

#include <array>
#include <utility>

#include "totalcolor/edge_coloring.hpp"

namespace totalcolor {

void finish_construction(Construction& c)
{
  if (!c.coloring.complete()) {
    c.ok = false;
    c.failure = std::to_string(c.coloring.unset_count()) + " entries left uncolored";
    return;
  }
  const VerifyReport report = verify_total(c.graph, c.coloring);
  c.ok = report.valid();
  if (!c.ok)
    c.failure = "verifier rejected the coloring: " + describe(c.graph, report.violations.front());
  else
    c.log.push_back("verified, palette " + std::to_string(report.palette));
}

ClassPairMatchings class_pair_matchings(const Graph& g, const VertexPartition& partition)
{
  if (partition.size() != 3)
    throw std::invalid_argument("expected three vertex classes");
  constexpr std::array<std::array<int, 3>, 3> pairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  ClassPairMatchings out;
  std::vector<char> used(g.edge_count(), 0);
  for (const auto& [a, b, c] : pairs) {
    Matching m = matching_between_classes(g, partition.classes[a], partition.classes[b]);
    for (int e : m.edges)
      used[e] = 1;
    out.matchings.push_back(ClassMatching{std::move(m), c});
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!used[e])
      out.rest.push_back(e);
  return out;
}

void append_log(Construction& c, const std::vector<std::string>& lines)
{
  c.log.insert(c.log.end(), lines.begin(), lines.end());
}

Construction failed_construction(Graph g, std::string reason, std::vector<std::string> log)
{
  Construction out(std::move(g), std::move(log));
  out.failure = std::move(reason);
  return out;
}

Construction total_from_three_classes(Graph g, const VertexPartition& partition, RemainderMethod method,
                                      std::vector<std::string> log)
{
  Construction out(std::move(g), std::move(log));
  const Graph& graph = out.graph;
  auto [matchings, rest] = class_pair_matchings(graph, partition);
  for (const ClassMatching& m : matchings)
    out.log.push_back("matching of " + std::to_string(m.matching.edges.size()) + " edges" +
                      (m.matching.perfect ? " (perfect)" : "") + " colored " + std::to_string(m.color_class));
  const Graph remainder = edge_subgraph(graph, rest);
  const bool bipartite = remainder.bipartition().has_value();
  const bool konig = method == RemainderMethod::Konig || (method == RemainderMethod::KonigIfBipartite && bipartite);
  if (method == RemainderMethod::Konig && !bipartite) {
    out.failure = "remainder is not bipartite";
    return out;
  }
  const EdgeColoring colors = konig ? konig_bipartite_edge_color(remainder) : misra_gries_edge_color(remainder);
  out.log.push_back("remainder: " + std::to_string(rest.size()) + " edges, max degree " +
                    std::to_string(remainder.max_degree()) + ", " + (konig ? "König" : "Misra-Gries") + " used " +
                    std::to_string(edge_palette(colors)) + " colors");

  std::vector<std::pair<int, Color>> placed;
  placed.reserve(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i)
    placed.emplace_back(rest[i], colors[i]);
  try {
    out.coloring = merge_partial_total(graph, partition, matchings, placed);
  }
  catch (const MergeError& e) {
    out.failure = e.what();
    return out;
  }
  finish_construction(out);
  return out;
}

}  // namespace totalcolor
