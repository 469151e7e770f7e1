#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "totalcolor/generating_set.hpp"
#include "totalcolor/graph.hpp"

namespace totalcolor {

/// A Cayley graph together with the group elements behind its vertices.
template <class E>
struct CayleyGraph
{
  Graph graph;
  std::vector<E> elements;  // elements[v] is the label of vertex v
  GeneratingSet<E> gens;
  std::map<E, int> index;

  int vertex_of(const E& x) const
  {
    auto it = index.find(x);
    if (it == index.end())
      throw std::out_of_range("element " + x.to_string() + " is not a vertex");
    return it->second;
  }
};

/// x ~ y iff y = x * s for some s in gens. Vertices follow the order of
/// group. Throws std::invalid_argument when the generating set fails
/// validate_generating_set against group.
template <GroupElement E>
CayleyGraph<E> cayley_graph(std::vector<E> group, GeneratingSet<E> gens, Recipe recipe)
{
  if (auto violations = validate_generating_set(gens, group); !violations.empty()) {
    std::string msg = "invalid generating set for " + std::string(family_name(gens.family)) + ":";
    for (auto& v : violations)
      msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  CayleyGraph<E> out;
  for (int i = 0; i < static_cast<int>(group.size()); ++i)
    out.index.emplace(group[i], i);

  CayleyInfo info;
  for (const E& s : gens.elements) {
    info.generators.push_back(s.to_string());
    info.generator_order.push_back(s.order());
  }
  for (const E& s : gens.elements) {
    const E t = inverse(s);
    int idx = -1;
    for (int j = 0; j < static_cast<int>(gens.elements.size()); ++j)
      if (gens.elements[j] == t)
        idx = j;
    info.inverse_of.push_back(idx);
  }

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(group.size()); ++i)
    for (int g = 0; g < static_cast<int>(gens.elements.size()); ++g) {
      const int j = out.index.at(group[i] * gens.elements[g]);
      if (i < j) {
        edges.emplace_back(i, j);
        info.edge_generator.push_back(g);
      }
    }
  std::vector<std::string> labels;
  labels.reserve(group.size());
  for (const E& x : group)
    labels.push_back(x.to_string());
  out.graph = Graph(static_cast<int>(group.size()), std::move(edges), std::move(recipe), std::move(labels),
                    std::move(info));
  out.elements = std::move(group);
  out.gens = std::move(gens);
  return out;
}

/// Cayley graphs on S_n and A_n. Vertex order is generate_group order.
CayleyGraph<Permutation> permutation_cayley(GraphFamily family, int n);

/// Rotations s^0..s^(n-1) first, then reflections r s^0..r s^(n-1).
CayleyGraph<DihedralElement> dihedral_cayley(int n, const std::vector<int>& rotations,
                                            const std::vector<int>& reflections);
CayleyGraph<DihedralElement> dihedral_interval_cayley(int n, int k);

/// i ~ j iff (i - j) mod n is in diffs. Throws unless diffs is
/// inverse-closed mod n and excludes 0.
Graph circulant_graph(int n, const std::vector<int>& diffs);

/// All k-subsets of {1..n} in colexicographic order.
std::vector<std::vector<int>> k_subsets_colex(int n, int k);
std::string subset_label(const std::vector<int>& s);

/// Vertices are k-subsets (colex order); adjacent iff distinct and intersecting.
Graph kneser_complement_graph(int n, int k);

Graph explicit_graph(int n, std::vector<std::pair<int, int>> edges, std::string name = "explicit");
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();

/// Rebuilds a graph from its recipe.
Graph build_graph(const Recipe& recipe);

/// Permutation family behind a Cayley recipe, or nothing for other families.
std::optional<Family> permutation_family(GraphFamily family);

}  // namespace totalcolor
