#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "totalcolor/builders.hpp"
#include "totalcolor/coloring.hpp"
#include "totalcolor/permutation.hpp"

namespace totalcolor {

/// Places the left translate multiplier * B of the current base B. Members
/// of base class c land in class class_map[c]; without an explicit map the
/// shift c -> c + (target_class - source_class) mod 3 is used, which sends
/// the seeds multiplier * base[source_class] to target_class.
struct OrbitStep
{
  Permutation multiplier;
  int source_class = 0;
  int target_class = 0;
  std::optional<std::array<int, 3>> class_map = std::nullopt;
  std::vector<Permutation> seeds = {};  // filled in by the extension

  std::array<int, 3> effective_map() const;
};

/// Steps for extending the partition of the subgroup fixing {m..n} to the
/// subgroup fixing {m+1..n}, where m = degree.
struct LevelProgram
{
  int degree;
  std::vector<OrbitStep> steps;
};

struct OrbitOptions
{
  /// Search other class maps (and earlier levels' maps) when a placement
  /// conflicts. Off: place as written and report the conflicts.
  bool repair = true;
  std::int64_t budget = 2'000'000;  // map-search nodes
  std::int64_t residue_budget = 0;  // vertex backtracking nodes; 0 = |residue|^2 + 1000
  /// Extra requirement on the finished partition; a rejected leaf makes
  /// the map search continue.
  std::function<bool(const VertexPartition&)> accept;
};

struct OrbitResult
{
  bool ok = false;
  std::string failure;
  VertexPartition partition;
  std::vector<std::pair<int, int>> conflicts;  // dependent pairs of `partition`
  std::vector<LevelProgram> steps;             // as executed, seeds filled in
  std::vector<std::string> log;
  std::int64_t nodes = 0;
};

/// Extends a 3-class partition of the base elements to all vertices of g by
/// left translates. Vertices no step reaches are covered by whole left
/// cosets of the base where possible, then one at a time with the lowest
/// feasible class and bounded backtracking.
OrbitResult orbit_extend_partition(const CayleyGraph<Permutation>& g,
                                   const std::vector<std::vector<Permutation>>& base,
                                   const std::vector<OrbitStep>& steps, const OrbitOptions& options = {});

/// Same, climbing a chain of point stabilizers: level m extends the
/// partition of the elements fixing {m..n} to those fixing {m+1..n}. With
/// repair on, the map search backtracks across levels.
OrbitResult orbit_extend_levels(const CayleyGraph<Permutation>& g, const std::vector<std::vector<Permutation>>& seed,
                                const std::vector<LevelProgram>& levels, const OrbitOptions& options = {});

/// [e,(23)], [(12),(132)], [(13),(123)]
std::vector<std::vector<Permutation>> s3_seed_classes();
/// [e], [(132)], [(123)]
std::vector<std::vector<Permutation>> a3_seed_classes();

/// Level m multipliers (1 i) * (1 m) for i = 2..m-1, seeds to the first class.
std::vector<LevelProgram> star_transposition_program(int n);
/// Level m multipliers (12) * (12..m) and (13) * (12..m), seeds to the first class.
std::vector<LevelProgram> adjacent_cycle_program(int n);
/// Replays the published S_4 partition from the S_3 seed: (12)(14) and
/// (13)(14) with seeds in the first class, then the coset of (14) with
/// classes 0 and 1 swapped.
std::vector<OrbitStep> published_s4_steps();

}  // namespace totalcolor
