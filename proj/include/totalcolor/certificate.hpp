#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/construction.hpp"
#include "totalcolor/graph_io.hpp"

namespace totalcolor {

/// FNV-1a over the vertex colors followed by the edge colors.
std::uint64_t coloring_digest(const TotalColoring& c);

/// {"recipe", "vertex_colors", "edge_colors" keyed "u-v", "palette",
///  "verified", "violations", "digest", "construction_log"}. The verdict
/// fields come from verify_total, never from the caller.
Json certificate_to_json(const Graph& g, const TotalColoring& c, const std::vector<std::string>& log = {});
Json certificate_to_json(const Construction& c);

/// DOT drawing with "label:color" vertex labels and edge color labels.
std::string coloring_to_dot(const Graph& g, const TotalColoring& c);

struct CertificateCheck
{
  bool valid = false;
  std::optional<Graph> graph;
  std::optional<TotalColoring> coloring;
  VerifyReport report;
  std::vector<std::string> problems;  // malformed fields and inconsistencies
};

/// Rebuilds the graph from the recipe, reads the colors, and verifies them.
/// A certificate is valid only when it parses, every vertex and edge is
/// colored, the coloring is proper, and the recorded palette, verdict and
/// digest agree with what verification finds.
CertificateCheck verify_certificate(const Json& doc);

}  // namespace totalcolor
