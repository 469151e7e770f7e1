#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "totalcolor/builders.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/construction.hpp"
#include "totalcolor/orbit.hpp"

namespace totalcolor {

struct SplitOptions
{
  /// Largest allowed difference between a vertex's neighbor counts in the
  /// two classes it is not in.
  int max_imbalance = 0;
  std::int64_t budget = 1'000'000;
  std::function<bool(const VertexPartition&)> accept;
};

struct PartitionSearch
{
  bool found = false;
  bool exhausted = false;  // the whole search space was refuted
  std::int64_t nodes = 0;
  VertexPartition partition;
};

/// Proper 3-partition with class sizes at most ceil(n/3) and neighbor
/// splits within max_imbalance. Vertices are assigned in BFS order from
/// vertex 0, lowest class first, with backtracking.
PartitionSearch balanced_three_partition(const Graph& g, const SplitOptions& options);

/// Every vertex's neighbors split evenly between the two other classes.
/// Throws std::invalid_argument unless n is odd and n > 2, and
/// ConstructionError when the search fails within budget.
VertexPartition equitable_three_partition(const Graph& g, int n, std::int64_t budget = 1'000'000);

/// Equal class sizes and perfect matchings between every pair of classes.
bool pairwise_perfect(const Graph& g, const VertexPartition& p);

/// pairwise_perfect, and the edges outside the three class-pair matchings
/// form a bipartite graph.
bool bipartite_remainder(const Graph& g, const VertexPartition& p);

/// Orbit partition from the S_3 seed, class-pair matchings, König remainder.
/// program defaults to star_transposition_program(n).
Construction total_color_sn_tm(int n, const OrbitOptions& options = {},
                               std::optional<std::vector<LevelProgram>> program = std::nullopt);

/// Same pipeline on the equitable partition instead of orbits; needs odd n.
Construction total_color_sn_tm_equitable(int n, std::int64_t budget = 1'000'000);

/// Equitable partition of C(A_n, star 3-cycles), matchings absorbed,
/// Misra-Gries remainder.
Construction total_color_an_star3(int n, std::int64_t budget = 1'000'000);

enum class GroupKind
{
  Symmetric,
  Alternating,
};

/// Orbit partition with cycle multipliers, then a bounded vertex-level
/// search when the orbit program cannot be repaired. SN: n >= 3; AN: odd
/// n >= 5 (throws std::invalid_argument otherwise).
Construction total_color_adjacent_cycle(GroupKind kind, int n, const OrbitOptions& options = {},
                                        std::int64_t vertex_budget = 1'000'000);

}  // namespace totalcolor
