#pragma once

#include <string>
#include <vector>

#include "totalcolor/graph.hpp"

namespace totalcolor {

enum class FactorKind
{
  Matching,   // induced by an involution
  TwoFactor,  // induced by a generator pair {s, s^-1} with s != s^-1
};

struct GeneratorFactor
{
  std::vector<int> generators;  // generator indices: s, and s^-1 when distinct
  std::vector<std::string> labels;
  FactorKind kind;
  std::vector<int> edges;          // increasing edge indices
  bool spanning = false;           // every vertex touched (perfect matching / 2-factor)
  std::vector<int> cycle_lengths;  // TwoFactor only, sorted
};

/// Partitions the edges of a Cayley graph by the generator pair inducing
/// them. Throws std::invalid_argument when the graph has no Cayley recipe.
std::vector<GeneratorFactor> generator_factor_decomposition(const Graph& g);

}  // namespace totalcolor
