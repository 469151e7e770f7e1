#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace totalcolor {

enum class GraphFamily
{
  SnTm,                // C(S_n, T_m)
  SnTranspositions,    // C(S_n, all transpositions)
  AnStar3,             // C(A_n, star 3-cycles)
  SnAdjacentCycle,     // C(S_n, {(12), (12..n), (n..21)})
  AnThreeCycleNCycle,  // C(A_n, {(123), (132), (12..n), (n..21)})
  DihedralInterval,    // C(D_2n, {s^+-1..s^+-k, r})
  Dihedral,            // C(D_2n, rotations T1 + reflections r s^i, i in T2)
  Circulant,
  KneserComplement,
  Explicit,
};

std::string_view graph_family_name(GraphFamily f);
GraphFamily graph_family_from_name(std::string_view name);

/// How a graph was built. Rebuilding from a recipe reproduces the same
/// vertex and edge indexing.
struct Recipe
{
  GraphFamily family = GraphFamily::Explicit;
  int n = 0;
  int k = 0;
  std::vector<int> rotations;    // circulant differences, dihedral T1
  std::vector<int> reflections;  // dihedral T2 indices i of r s^i
  std::vector<std::pair<int, int>> edges;  // explicit graphs only
  std::string name;                         // explicit graphs only

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

struct Edge
{
  int u;
  int v;  // u < v

  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Generator bookkeeping for Cayley graphs. edge_generator[e] is the index
/// of the generator s with label(v) = label(u) * s for edge e = (u, v).
struct CayleyInfo
{
  std::vector<std::string> generators;
  std::vector<int> inverse_of;
  std::vector<int> generator_order;
  std::vector<int> edge_generator;

  friend bool operator==(const CayleyInfo&, const CayleyInfo&) = default;
};

/// Immutable simple undirected graph. Edges are stored as (low, high) pairs
/// sorted lexicographically; an edge's index is its position in that order.
class Graph
{
public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, duplicates or out-of-range
  /// endpoints. Pairs may be given in either orientation.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges, Recipe recipe,
        std::vector<std::string> labels = {}, std::optional<CayleyInfo> cayley = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  /// Neighbors of v in increasing order; incident_edges(v)[i] joins v to neighbors(v)[i].
  std::span<const int> neighbors(int v) const;
  std::span<const int> incident_edges(int v) const;
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const { return max_degree_; }
  bool is_regular() const;

  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  /// -1 when u and v are not adjacent.
  int edge_index(int u, int v) const;

  const Recipe& recipe() const { return recipe_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<CayleyInfo>& cayley() const { return cayley_; }

  /// Two-coloring of the vertices if the graph is bipartite.
  std::optional<std::vector<int>> bipartition() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b)
  {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_ && a.recipe_ == b.recipe_ &&
           a.cayley_ == b.cayley_;
  }

private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
  std::vector<int> incidence_;
  std::vector<std::string> labels_;
  Recipe recipe_;
  std::optional<CayleyInfo> cayley_;
};

/// Spanning subgraph keeping the given edges. Edge i of the result is the
/// i-th smallest index in edge_ids.
Graph edge_subgraph(const Graph& g, std::vector<int> edge_ids);

}  // namespace totalcolor
