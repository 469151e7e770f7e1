#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "totalcolor/builders.hpp"
#include "totalcolor/circulant_colorers.hpp"
#include "totalcolor/dihedral_colorer.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/kneser.hpp"
#include "totalcolor/orbit.hpp"
#include "totalcolor/permutation_colorers.hpp"

using namespace totalcolor;

namespace {

void check_valid(const Construction& c)
{
  INFO(c.failure);
  REQUIRE(c.ok);
  CHECK(verify_total(c.graph, c.coloring).valid());
}

}  // namespace

TEST_CASE("S_n with T_m is colored with exactly n colors")
{
  for (int n = 3; n <= 6; ++n) {
    const Construction c = total_color_sn_tm(n);
    check_valid(c);
    CHECK(c.palette() == n);
  }
}

TEST_CASE("the orbit engine places the S_3 seed first")
{
  const auto cg = permutation_cayley(GraphFamily::SnTm, 4);
  const OrbitResult r = orbit_extend_levels(cg, s3_seed_classes(), star_transposition_program(4));
  REQUIRE(r.ok);
  CHECK(r.partition.covers(24));
  CHECK(dependent_pairs(cg.graph, r.partition).empty());
  const auto cls = r.partition.class_of(24);
  CHECK(cls[cg.vertex_of(Permutation::identity(4))] == 0);
  CHECK(cls[cg.vertex_of(Permutation::parse("(23)", 4))] == 0);
  CHECK(cls[cg.vertex_of(Permutation::parse("(12)", 4))] == 1);
  CHECK(cls[cg.vertex_of(Permutation::parse("(123)", 4))] == 2);
}

TEST_CASE("replaying the published S_4 steps without repair exposes two conflicts")
{
  const auto cg = permutation_cayley(GraphFamily::SnTm, 4);
  OrbitOptions options;
  options.repair = false;
  const OrbitResult r = orbit_extend_partition(cg, s3_seed_classes(), published_s4_steps(), options);
  CHECK(r.partition.covers(24));
  std::set<std::pair<std::string, std::string>> conflicts;
  for (auto [u, v] : r.conflicts) {
    auto a = cg.elements[u].to_string(), b = cg.elements[v].to_string();
    conflicts.insert(std::minmax(a, b));
  }
  CHECK(conflicts == std::set<std::pair<std::string, std::string>>{{"(143)", "(34)"}, {"(1423)", "(234)"}});
}

TEST_CASE("equitable three partitions for odd n")
{
  for (int n : {3, 5}) {
    const Graph g = permutation_cayley(GraphFamily::SnTm, n).graph;
    const VertexPartition p = equitable_three_partition(g, n);
    CHECK(p.covers(g.vertex_count()));
    CHECK(dependent_pairs(g, p).empty());
    for (const auto& cls : p.classes)
      CHECK(static_cast<int>(cls.size()) == g.vertex_count() / 3);
  }
  const Graph s4 = permutation_cayley(GraphFamily::SnTm, 4).graph;
  CHECK_THROWS_AS(equitable_three_partition(s4, 4), std::invalid_argument);
}

TEST_CASE("A_n with star 3-cycles")
{
  const Construction a4 = total_color_an_star3(4);
  check_valid(a4);
  CHECK(a4.palette() <= 6);
  const Construction a5 = total_color_an_star3(5);
  check_valid(a5);
  CHECK(a5.palette() <= 8);
  CHECK(a5.graph.max_degree() == 6);
  CHECK(a5.graph.vertex_count() == 60);
}

TEST_CASE("adjacent cycle generators")
{
  for (int n : {3, 4}) {
    const Construction c = total_color_adjacent_cycle(GroupKind::Symmetric, n);
    check_valid(c);
    CHECK(c.palette() == 4);
  }
  const Construction a5 = total_color_adjacent_cycle(GroupKind::Alternating, 5);
  check_valid(a5);
  CHECK(a5.palette() == 5);
  CHECK(a5.graph.max_degree() == 4);
  CHECK_THROWS_AS(total_color_adjacent_cycle(GroupKind::Alternating, 4), std::invalid_argument);
  CHECK_THROWS_AS(total_color_adjacent_cycle(GroupKind::Alternating, 6), std::invalid_argument);
}

TEST_CASE("S_5 adjacent cycle construction fails honestly")
{
  OrbitOptions options;
  options.budget = 200'000;
  const Construction c = total_color_adjacent_cycle(GroupKind::Symmetric, 5, options, 200'000);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.failure.empty());
  CHECK_FALSE(c.log.empty());
}

TEST_CASE("canonical power of cycle uses exactly 2k+1 colors")
{
  int count = 0;
  for (int k = 1; 2 * k + 1 <= 200; ++k)
    for (int n = 2 * k + 1; n <= 200; n += 2 * k + 1) {
      const Construction c = canonical_power_cycle_total(n, k);
      REQUIRE(c.ok);
      CHECK(c.palette() == 2 * k + 1);
      ++count;
    }
  CHECK(count > 60);
  CHECK(canonical_power_cycle_total(12, 1).palette() == 3);
  CHECK(canonical_power_cycle_total(36, 4).palette() == 9);
  CHECK(canonical_power_cycle_total(20, 2).palette() == 5);
  CHECK_THROWS_AS(canonical_power_cycle_total(10, 1), std::invalid_argument);
}

TEST_CASE("canonical clique colorings")
{
  const std::vector<int> expected{1, 3, 3, 5, 5, 7, 7};
  for (int m = 1; m <= 7; ++m) {
    const Construction c = clique_canonical_total(m);
    check_valid(c);
    CHECK(c.palette() == expected[m - 1]);
  }
  CHECK(total_chromatic_number(complete_graph(4), 10000).upper == clique_canonical_total(4).palette());
}

TEST_CASE("circulant fallback uses the exact solver")
{
  const Construction c = circulant_total(7, {1, 6});
  check_valid(c);
  CHECK(c.palette() == 4);
  const Construction d = circulant_total(15, {2, 1, 14, 13});
  check_valid(d);
  CHECK(d.palette() == 5);
}

TEST_CASE("dihedral interval colorings")
{
  const Construction d72 = dihedral_total_color(DihedralColoringSpec::interval(36, 4));
  check_valid(d72);
  CHECK(d72.palette() <= 11);
  CHECK(d72.stats.at("rotation_vertex_palette") == 9);
  for (int k = 1; k <= 4; ++k)
    for (int n = 2 * (2 * k + 1); n <= 64; n += 2 * (2 * k + 1)) {
      const Construction c = dihedral_total_color(DihedralColoringSpec::interval(n, k));
      check_valid(c);
      CHECK(c.palette() <= 2 * k + 3);
    }
}

TEST_CASE("dihedral same-difference and complement colorings")
{
  const auto d36 = DihedralColoringSpec::same_difference(18, {1, 2, 3, 4, 14, 15, 16, 17}, {0, 2});
  CHECK(d36.validate().empty());
  const Construction c = dihedral_total_color(d36);
  check_valid(c);
  CHECK(c.palette() <= 12);
  for (int k = 1; k <= 2; ++k) {
    const auto spec = DihedralColoringSpec::complement_family(k);
    CHECK(spec.n == 8 * k + 4);
    const Construction comp = dihedral_total_color(spec);
    check_valid(comp);
    CHECK(comp.palette() <= static_cast<int>(spec.t1.size() + spec.t2.size()) + 2);
  }
  CHECK_FALSE(DihedralColoringSpec::same_difference(18, {1, 2}, {0}).validate().empty());
}

TEST_CASE("Baranyai parallel classes")
{
  for (auto [n, k] : {std::pair{4, 2}, {6, 2}, {6, 3}, {9, 3}, {12, 3}, {12, 4}, {5, 1}, {8, 4}}) {
    const auto classes = baranyai_parallel_classes(n, k);
    std::set<std::vector<int>> seen;
    for (const ParallelClass& pc : classes) {
      CHECK(static_cast<int>(pc.size()) == n / k);
      std::vector<int> covered;
      for (const auto& s : pc) {
        CHECK(static_cast<int>(s.size()) == k);
        CHECK(seen.insert(s).second);
        covered.insert(covered.end(), s.begin(), s.end());
      }
      std::sort(covered.begin(), covered.end());
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 1);
      CHECK(covered == all);
    }
    CHECK(seen.size() == k_subsets_colex(n, k).size());
  }
  CHECK(baranyai_parallel_classes(4, 2).size() == 3);
  CHECK(baranyai_parallel_classes(6, 2).size() == 5);
  CHECK(baranyai_parallel_classes(6, 3).size() == 10);
  CHECK_THROWS_AS(baranyai_parallel_classes(6, 4), std::invalid_argument);
}

TEST_CASE("Kneser clique partitions")
{
  const auto p42 = kneser_clique_partition(4, 2);
  REQUIRE(p42.exists);
  CHECK(p42.cliques.size() == 2);
  for (auto [n, k] : {std::pair{6, 3}, {8, 4}, {10, 5}, {6, 1}})
    CHECK(kneser_clique_partition(n, k).exists);
  for (auto [n, k] : {std::pair{6, 2}, {8, 2}}) {
    const auto r = kneser_clique_partition(n, k);
    CHECK_FALSE(r.exists);
    CHECK(r.exhausted);
  }
  CHECK_THROWS_AS(kneser_clique_partition(6, 4), std::invalid_argument);
}

TEST_CASE("Kneser complement total colorings")
{
  for (auto [n, k] : {std::pair{4, 2}, {6, 3}, {8, 4}}) {
    const Construction c = kneser_complement_total(n, k);
    check_valid(c);
    CHECK(c.palette() <= c.graph.max_degree() + 3);
  }
  const Construction none = kneser_complement_total(6, 2);
  CHECK_FALSE(none.ok);
  CHECK(none.inapplicable);
}
