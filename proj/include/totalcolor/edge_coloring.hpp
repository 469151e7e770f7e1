#pragma once

#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Color per edge index.
using EdgeColoring = std::vector<Color>;

/// Misra-Gries: a proper edge coloring with at most max_degree + 1 colors.
EdgeColoring misra_gries_edge_color(const Graph& g);

/// Proper edge coloring of a bipartite graph with exactly max_degree colors
/// (each color class a matching), by alternating-path recoloring. Throws
/// std::invalid_argument on a non-bipartite graph.
EdgeColoring konig_bipartite_edge_color(const Graph& g);

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c);
int edge_palette(const EdgeColoring& c);

/// Maximum matching between disjoint vertex sets a and b, using only edges
/// of g with one end in each. Augmenting paths, scanning in vertex order.
Matching matching_between_classes(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

}  // namespace totalcolor
