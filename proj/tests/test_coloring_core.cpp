#include <doctest.h>

#include <algorithm>

#include "totalcolor/builders.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/construction.hpp"
#include "totalcolor/orbit.hpp"
#include "totalcolor/permutation_colorers.hpp"
#include "support/oracle.hpp"

using namespace totalcolor;

namespace {

TotalColoring triangle_canonical(const Graph& k3)
{
  TotalColoring c(k3);
  for (int v = 0; v < 3; ++v)
    c.vertex_colors[v] = v;
  for (int e = 0; e < 3; ++e)
    c.edge_colors[e] = 3 - k3.edge(e).u - k3.edge(e).v;
  return c;
}

VertexPartition seed_partition(const CayleyGraph<Permutation>& cg)
{
  VertexPartition p;
  for (const auto& cls : s3_seed_classes()) {
    std::vector<int> ids;
    for (const auto& x : cls)
      ids.push_back(cg.vertex_of(x));
    p.classes.push_back(ids);
  }
  return p;
}

}  // namespace

TEST_CASE("verifier accepts the canonical triangle")
{
  const Graph k3 = cycle_graph(3);
  const VerifyReport r = verify_total(k3, triangle_canonical(k3));
  CHECK(r.valid());
  CHECK(r.palette == 3);
}

TEST_CASE("verifier counts every conflicting pair")
{
  const Graph c4 = cycle_graph(4);
  TotalColoring c(c4);
  for (int v = 0; v < 4; ++v)
    c.vertex_colors[v] = 1;
  const EdgeColoring edges = konig_bipartite_edge_color(c4);
  for (int e = 0; e < 4; ++e)
    c.edge_colors[e] = 2 + edges[e];
  const VerifyReport r = verify_total(c4, c);
  CHECK(r.violations.size() == 4);
  CHECK(std::all_of(r.violations.begin(), r.violations.end(),
                    [](const Violation& v) { return v.kind == ViolationKind::VertexVertex; }));
}

TEST_CASE("verifier finds each constraint kind")
{
  const Graph k3 = cycle_graph(3);
  TotalColoring c = triangle_canonical(k3);
  c.edge_colors[0] = *c.vertex_colors[k3.edge(0).u];
  const VerifyReport r = verify_total(k3, c);
  CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                    [](const Violation& v) { return v.kind == ViolationKind::VertexEdge; }));
  TotalColoring d = triangle_canonical(k3);
  d.edge_colors[0] = d.edge_colors[1];
  const VerifyReport s = verify_total(k3, d);
  CHECK(std::any_of(s.violations.begin(), s.violations.end(),
                    [](const Violation& v) { return v.kind == ViolationKind::EdgeEdge; }));
}

TEST_CASE("verifier rejects incomplete or mis-sized colorings")
{
  const Graph k3 = cycle_graph(3);
  TotalColoring c = triangle_canonical(k3);
  c.edge_colors[1].reset();
  CHECK_FALSE(c.complete());
  CHECK(c.unset_count() == 1);
  CHECK_THROWS_AS(verify_total(k3, c), std::invalid_argument);
  CHECK_THROWS_AS(verify_total(cycle_graph(4), triangle_canonical(k3)), std::invalid_argument);
}

TEST_CASE("verifier accepts the S_4 construction")
{
  const Construction c = total_color_sn_tm(4);
  REQUIRE(c.ok);
  const VerifyReport r = verify_total(c.graph, c.coloring);
  CHECK(r.valid());
  CHECK(r.palette == 4);
}

TEST_CASE("Misra-Gries stays within Delta+1")
{
  std::vector<Graph> graphs{complete_graph(4), cycle_graph(5), petersen_graph(), complete_graph(7),
                            permutation_cayley(GraphFamily::AnStar3, 5).graph, kneser_complement_graph(6, 2)};
  for (auto& g : oracle::random_corpus(40, 60, 3))
    graphs.push_back(g);
  for (const Graph& g : graphs) {
    const EdgeColoring c = misra_gries_edge_color(g);
    CHECK(is_proper_edge_coloring(g, c));
    CHECK(edge_palette(c) <= g.max_degree() + 1);
  }
  CHECK(edge_palette(misra_gries_edge_color(cycle_graph(5))) == 3);
  CHECK(edge_palette(misra_gries_edge_color(petersen_graph())) == 4);
}

TEST_CASE("Konig uses exactly Delta colors on bipartite graphs")
{
  CHECK(edge_palette(konig_bipartite_edge_color(complete_bipartite_graph(3, 3))) == 3);
  CHECK(edge_palette(konig_bipartite_edge_color(cycle_graph(6))) == 2);
  CHECK(edge_palette(konig_bipartite_edge_color(path_graph(4))) == 2);
  const Graph s4 = permutation_cayley(GraphFamily::SnTm, 4).graph;
  const EdgeColoring c = konig_bipartite_edge_color(s4);
  CHECK(is_proper_edge_coloring(s4, c));
  CHECK(edge_palette(c) == 3);
  CHECK_THROWS_AS(konig_bipartite_edge_color(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("matching between classes")
{
  const Graph c6 = cycle_graph(6);
  const auto side = *c6.bipartition();
  std::vector<int> a, b;
  for (int v = 0; v < 6; ++v)
    (side[v] == 0 ? a : b).push_back(v);
  const Matching m = matching_between_classes(c6, a, b);
  CHECK(m.edges.size() == 3);
  CHECK(m.perfect);
  const Matching uneven = matching_between_classes(c6, {0, 2}, {1, 3, 5});
  CHECK_FALSE(uneven.perfect);

  const auto cg = permutation_cayley(GraphFamily::SnTm, 4);
  const OrbitResult orbit = orbit_extend_levels(cg, s3_seed_classes(), star_transposition_program(4));
  REQUIRE(orbit.ok);
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y) {
      const Matching pm = matching_between_classes(cg.graph, orbit.partition.classes[x], orbit.partition.classes[y]);
      CHECK(pm.edges.size() == 8);
      CHECK(pm.perfect);
    }
}

TEST_CASE("merge_partial_total")
{
  const auto cg = permutation_cayley(GraphFamily::SnTm, 3);
  const VertexPartition p = seed_partition(cg);
  const ClassPairMatchings pm = class_pair_matchings(cg.graph, p);
  CHECK(pm.rest.empty());
  const TotalColoring full = merge_partial_total(cg.graph, p, pm.matchings, {});
  CHECK(full.complete());
  CHECK(verify_total(cg.graph, full).valid());
  CHECK(full.palette_size() == 3);

  const TotalColoring bare = merge_partial_total(cg.graph, p, {}, {});
  CHECK_FALSE(bare.complete());
  CHECK(bare.unset_count() == cg.graph.edge_count());

  std::vector<ClassMatching> wrong = pm.matchings;
  wrong[0].color_class = 0;
  CHECK_THROWS_AS(merge_partial_total(cg.graph, p, wrong, {}), MergeError);
  try {
    merge_partial_total(cg.graph, p, wrong, {});
  }
  catch (const MergeError& e) {
    CHECK(e.edge() >= 0);
  }
}
