#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Outcome of a constructive colorer. A failed construction keeps its log
/// and the reason; the coloring is only meaningful when ok is set, and ok
/// is only set after verify_total accepted it.
struct Construction
{
  explicit Construction(Graph g, std::vector<std::string> log = {}) : graph(std::move(g)), log(std::move(log)) {}

  Graph graph;
  bool ok = false;
  std::string failure;
  TotalColoring coloring;
  std::vector<std::string> log;
  std::map<std::string, int> stats;  // named by-products such as a layer's palette
  bool inapplicable = false;         // the instance lacks a structure the construction needs

  int palette() const { return ok ? coloring.palette_size() : 0; }
};

void append_log(Construction& c, const std::vector<std::string>& lines);

Construction failed_construction(Graph g, std::string reason, std::vector<std::string> log = {});

/// A precondition the construction needs was not met by the instance.
class ConstructionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class RemainderMethod
{
  Konig,
  MisraGries,
  KonigIfBipartite,
};

struct ClassPairMatchings
{
  std::vector<ClassMatching> matchings;  // pairs (0,1), (0,2), (1,2), colored 2, 1, 0
  std::vector<int> rest;                 // edges in no matching, increasing
};

/// Maximum matching between each pair of three classes.
ClassPairMatchings class_pair_matchings(const Graph& g, const VertexPartition& partition);

/// Vertex class c takes color c, a maximum matching between each pair of
/// classes takes the color of the third class, and the edges left over are
/// edge colored on fresh colors. Verifies the result.
Construction total_from_three_classes(Graph g, const VertexPartition& partition, RemainderMethod method,
                                      std::vector<std::string> log = {});

/// Checks the coloring and records the outcome on c.
void finish_construction(Construction& c);

}  // namespace totalcolor
