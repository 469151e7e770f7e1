#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "totalcolor/coloring.hpp"
#include "totalcolor/construction.hpp"

namespace totalcolor {

/// n/k pairwise disjoint k-subsets covering {1..n}.
using ParallelClass = std::vector<std::vector<int>>;

/// Partition of all k-subsets of {1..n} into C(n-1, k-1) parallel classes:
/// round robin for k = 2, complementary pairs for n = 2k, a single class
/// for k = 1, and Baranyai's max-flow induction otherwise. Throws
/// std::invalid_argument unless k divides n and n <= 31.
std::vector<ParallelClass> baranyai_parallel_classes(int n, int k);

struct CliquePartitionResult
{
  bool exists = false;
  bool exhausted = false;  // exists == false and the search space was covered
  std::int64_t nodes = 0;
  /// Vertex indices of kneser_complement_graph(n, k), one class per clique.
  VertexPartition cliques;
  std::string certificate;
};

/// Searches for a partition of the k-subsets into n/k pairwise intersecting
/// families of C(n-1, k-1) members each. Throws std::invalid_argument unless
/// k divides n.
CliquePartitionResult kneser_clique_partition(int n, int k, std::int64_t budget = 5'000'000);

/// Cliques colored canonically on a shared palette, with members lined up
/// so that vertices sharing a color form a parallel class. Connecting edges
/// are colored by Misra-Gries on fresh colors. Marks the result inapplicable when no
/// clique partition exists.
Construction kneser_complement_total(int n, int k, std::int64_t budget = 5'000'000);

}  // namespace totalcolor
