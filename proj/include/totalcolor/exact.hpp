#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Vertices of g followed by its edges; a proper vertex coloring of this
/// graph is exactly a total coloring of g.
struct TotalGraph
{
  Graph graph;
  int original_vertices = 0;
  int original_edges = 0;

  bool is_original_vertex(int x) const { return x < original_vertices; }
  int original_edge(int x) const { return x - original_vertices; }
};

TotalGraph total_graph(const Graph& g);

struct ChromaticResult
{
  bool exact = false;
  int lower = 0;
  int upper = 0;  // colors used by `coloring`
  std::int64_t nodes = 0;
  std::vector<Color> coloring;

  int value() const { return exact ? upper : -1; }
};

/// DSATUR branch and bound. Colors `seed_clique` canonically (0, 1, ...)
/// and tries k = lower, lower + 1, ... up to `upper`, widening past it when
/// every k in the window is refuted. Returns the exact chromatic number
/// when the search finishes within `budget` search nodes, else the bound
/// pair with exact == false. Throws std::invalid_argument if lower > upper.
ChromaticResult exact_chromatic_number(const Graph& g, int lower, int upper, std::int64_t budget,
                                       std::span<const int> seed_clique = {});

/// Exact total chromatic number, starting from the window [D+1, D+2].
ChromaticResult total_chromatic_number(const Graph& g, std::int64_t budget);

/// DSATUR greedy coloring of total_graph(g), lifted back to g.
TotalColoring greedy_total_coloring(const Graph& g);

/// Lifts a vertex coloring of total_graph(g) back to a total coloring of g.
TotalColoring total_coloring_from(const Graph& g, const std::vector<Color>& total_graph_coloring);

enum class TotalType
{
  TypeI,
  TypeII,
  Unknown,
};

std::string_view total_type_name(TotalType t);

struct TypeResult
{
  TotalType type;
  ChromaticResult chi;
  int max_degree;
};

TypeResult classify_type(const Graph& g, std::int64_t budget);

}  // namespace totalcolor
