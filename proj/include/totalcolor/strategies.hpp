#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "totalcolor/construction.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

enum class Strategy
{
  Theorem,  // the family's constructive colorer
  Greedy,   // DSATUR on the total graph
  Exact,    // the exact solver, or its best coloring when the budget runs out
};

std::string_view strategy_name(Strategy s);
/// Throws std::invalid_argument for an unknown name.
Strategy strategy_from_name(std::string_view name);

struct ColorRequest
{
  Recipe recipe;
  Strategy strategy = Strategy::Theorem;
  std::int64_t budget = 5'000'000;
  /// Dihedral family only: "same-difference" uses the recipe's sets,
  /// "complement" builds T2 from k, d and base_index.
  std::string dihedral_variant = "same-difference";
  int d = 0;
  int base_index = 0;
};

/// Throws std::invalid_argument when the parameters do not define a graph
/// or the family has no theorem construction.
Construction color_graph(const ColorRequest& request);

}  // namespace totalcolor
