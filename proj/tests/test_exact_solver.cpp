#include <doctest.h>

#include "totalcolor/builders.hpp"
#include "totalcolor/exact.hpp"
#include "support/oracle.hpp"

using namespace totalcolor;

TEST_CASE("total graph construction")
{
  const TotalGraph c3 = total_graph(cycle_graph(3));
  CHECK(c3.graph.vertex_count() == 6);
  CHECK(c3.graph.edge_count() == 12);
  const ChromaticResult chi = exact_chromatic_number(c3.graph, 1, 6, 1000);
  CHECK(chi.exact);
  CHECK(chi.upper == 3);

  const Graph edgeless = explicit_graph(4, {});
  const TotalGraph t = total_graph(edgeless);
  CHECK(t.graph.vertex_count() == 4);
  CHECK(t.graph.edge_count() == 0);

  const TotalGraph p2 = total_graph(path_graph(2));
  CHECK(p2.graph.vertex_count() == 3);
  CHECK(p2.graph.edge_count() == 3);
  CHECK(p2.is_original_vertex(1));
  CHECK(p2.original_edge(2) == 0);
}

TEST_CASE("chromatic numbers")
{
  CHECK(exact_chromatic_number(complete_graph(5), 1, 5, 10000).upper == 5);
  CHECK(exact_chromatic_number(cycle_graph(5), 1, 5, 10000).upper == 3);
  const ChromaticResult petersen = exact_chromatic_number(petersen_graph(), 1, 10, 10000);
  CHECK(petersen.exact);
  CHECK(petersen.upper == 3);
  CHECK_THROWS_AS(exact_chromatic_number(cycle_graph(4), 3, 2, 10), std::invalid_argument);
}

TEST_CASE("total chromatic numbers")
{
  CHECK(total_chromatic_number(cycle_graph(6), 10000).upper == 3);
  CHECK(total_chromatic_number(cycle_graph(5), 10000).upper == 4);
  CHECK(total_chromatic_number(complete_graph(4), 10000).upper == 5);
  CHECK(total_chromatic_number(kneser_complement_graph(4, 2), 100000).upper == 5);
}

TEST_CASE("type classification")
{
  const TypeResult s3 = classify_type(permutation_cayley(GraphFamily::SnTm, 3).graph, 10000);
  CHECK(s3.type == TotalType::TypeI);
  CHECK(s3.chi.upper == 3);
  CHECK(classify_type(complete_graph(4), 10000).type == TotalType::TypeII);
  const TypeResult s4 = classify_type(permutation_cayley(GraphFamily::SnTm, 4).graph, 5'000'000);
  CHECK(s4.type == TotalType::TypeI);
  CHECK(s4.chi.upper == 4);
}

TEST_CASE("an exhausted budget reports bounds")
{
  const ChromaticResult r = total_chromatic_number(permutation_cayley(GraphFamily::AnStar3, 5).graph, 1);
  CHECK_FALSE(r.exact);
  CHECK(r.lower <= r.upper);
  CHECK(r.lower >= 7);
}

TEST_CASE("solver colorings are proper and deterministic")
{
  for (const Graph& g : {petersen_graph(), complete_graph(5), permutation_cayley(GraphFamily::SnAdjacentCycle, 3).graph}) {
    const ChromaticResult a = total_chromatic_number(g, 100000);
    const ChromaticResult b = total_chromatic_number(g, 100000);
    CHECK(a.coloring == b.coloring);
    CHECK(a.nodes == b.nodes);
    const TotalColoring c = total_coloring_from(g, a.coloring);
    CHECK(verify_total(g, c).valid());
    CHECK(c.palette_size() == a.upper);
  }
}

TEST_CASE("greedy total coloring is proper")
{
  for (const Graph& g : oracle::random_corpus(30, 40, 11)) {
    const TotalColoring c = greedy_total_coloring(g);
    CHECK(verify_total(g, c).valid());
  }
}

TEST_CASE("solver agrees with naive enumeration")
{
  CHECK(oracle::naive_total_chromatic_number(cycle_graph(5)) == 4);
  CHECK(oracle::naive_total_chromatic_number(cycle_graph(6)) == 3);
  CHECK(oracle::naive_total_chromatic_number(complete_graph(4)) == 5);
  for (const Graph& g : oracle::oracle_corpus()) {
    if (g.vertex_count() + g.edge_count() > 24)
      continue;
    const ChromaticResult r = total_chromatic_number(g, 5'000'000);
    REQUIRE(r.exact);
    CHECK(r.upper == oracle::naive_total_chromatic_number(g));
    CHECK(r.upper >= g.max_degree() + 1);
    CHECK(r.upper <= g.max_degree() + 2);
  }
}
