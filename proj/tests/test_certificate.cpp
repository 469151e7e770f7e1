#include <doctest.h>

#include "totalcolor/builders.hpp"
#include "totalcolor/certificate.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/permutation_colorers.hpp"

using namespace totalcolor;

TEST_CASE("certificates round trip")
{
  const Construction c = total_color_sn_tm(4);
  REQUIRE(c.ok);
  const Json doc = certificate_to_json(c);
  CHECK(doc["palette"] == 4);
  CHECK(doc["verified"] == true);
  CHECK(doc["violations"].empty());
  CHECK(doc["digest"].get<std::string>().size() == 16);
  const CertificateCheck check = verify_certificate(Json::parse(doc.dump()));
  CHECK(check.valid);
  CHECK(check.problems.empty());
  REQUIRE(check.coloring);
  CHECK(check.coloring->vertex_colors == c.coloring.vertex_colors);
  CHECK(check.coloring->edge_colors == c.coloring.edge_colors);
}

TEST_CASE("certificates are byte deterministic")
{
  const Json a = certificate_to_json(total_color_sn_tm(4));
  const Json b = certificate_to_json(total_color_sn_tm(4));
  CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("edited certificates are rejected")
{
  const Json doc = certificate_to_json(total_color_sn_tm(3));

  Json recolored = doc;
  recolored["vertex_colors"][0] = recolored["vertex_colors"][1];
  CHECK_FALSE(verify_certificate(recolored).valid);

  Json fresh = doc;
  fresh["vertex_colors"][0] = 7;
  const CertificateCheck fresh_check = verify_certificate(fresh);
  CHECK_FALSE(fresh_check.valid);
  CHECK_FALSE(fresh_check.problems.empty());

  Json missing = doc;
  missing["edge_colors"].erase(missing["edge_colors"].begin());
  CHECK_FALSE(verify_certificate(missing).valid);

  Json lying = doc;
  lying["verified"] = false;
  CHECK_FALSE(verify_certificate(lying).valid);

  Json no_recipe = doc;
  no_recipe.erase("recipe");
  CHECK_FALSE(verify_certificate(no_recipe).valid);

  Json wrong_type = doc;
  wrong_type["vertex_colors"][2] = "blue";
  CHECK_FALSE(verify_certificate(wrong_type).valid);
}

TEST_CASE("an improper coloring yields a certificate that says so")
{
  const Graph c4 = cycle_graph(4);
  TotalColoring c(c4);
  for (int v = 0; v < 4; ++v)
    c.vertex_colors[v] = 0;
  const EdgeColoring edges = konig_bipartite_edge_color(c4);
  for (int e = 0; e < 4; ++e)
    c.edge_colors[e] = 1 + edges[e];
  const Json doc = certificate_to_json(c4, c);
  CHECK(doc["verified"] == false);
  CHECK(doc["violations"].size() == 4);
  const CertificateCheck check = verify_certificate(doc);
  CHECK_FALSE(check.valid);
  CHECK(check.report.violations.size() == 4);
}

TEST_CASE("digest tracks every entry")
{
  const Construction c = total_color_sn_tm(3);
  TotalColoring changed = c.coloring;
  changed.edge_colors.back() = *changed.edge_colors.back() + 1;
  CHECK(coloring_digest(changed) != coloring_digest(c.coloring));
}

TEST_CASE("colored DOT output")
{
  const Graph k3 = complete_graph(3);
  const TotalColoring c = greedy_total_coloring(k3);
  const std::string dot = coloring_to_dot(k3, c);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
}
