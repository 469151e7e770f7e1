#include "totalcolor/builders.hpp"

#include <algorithm>
#include <set>

namespace totalcolor {

std::optional<Family> permutation_family(GraphFamily family)
{
  switch (family) {
  case GraphFamily::SnTm: return Family::MinTranspositions;
  case GraphFamily::SnTranspositions: return Family::AllTranspositions;
  case GraphFamily::AnStar3: return Family::Star3Cycles;
  case GraphFamily::SnAdjacentCycle: return Family::SnAdjacentCycle;
  case GraphFamily::AnThreeCycleNCycle: return Family::AnThreeCycleNCycle;
  default: return std::nullopt;
  }
}

CayleyGraph<Permutation> permutation_cayley(GraphFamily family, int n)
{
  const auto fam = permutation_family(family);
  if (!fam)
    throw std::invalid_argument("not a permutation Cayley family: " + std::string(graph_family_name(family)));
  auto gens = standard_generating_set(*fam, n);
  const bool alternating = family == GraphFamily::AnStar3 || family == GraphFamily::AnThreeCycleNCycle;
  const auto expected = alternating ? alternating_group(n) : symmetric_group(n);
  if (auto violations = validate_generating_set(gens, expected); !violations.empty()) {
    std::string msg = "invalid generating set " + std::string(family_name(*fam)) + " for n=" + std::to_string(n) + ":";
    for (auto& v : violations)
      msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  Recipe r;
  r.family = family;
  r.n = n;
  auto group = generate_group(gens);
  return cayley_graph(std::move(group), std::move(gens), std::move(r));
}

CayleyGraph<DihedralElement> dihedral_cayley(int n, const std::vector<int>& rotations,
                                            const std::vector<int>& reflections)
{
  auto gens = dihedral_custom_set(n, rotations, reflections);
  Recipe r;
  r.family = GraphFamily::Dihedral;
  r.n = n;
  for (const auto& s : gens.elements)
    (s.refl() ? r.reflections : r.rotations).push_back(s.rot());
  return cayley_graph(dihedral_group(n), std::move(gens), std::move(r));
}

CayleyGraph<DihedralElement> dihedral_interval_cayley(int n, int k)
{
  auto gens = dihedral_interval_set(n, k);
  Recipe r;
  r.family = GraphFamily::DihedralInterval;
  r.n = n;
  r.k = k;
  return cayley_graph(dihedral_group(n), std::move(gens), std::move(r));
}

Graph circulant_graph(int n, const std::vector<int>& diffs)
{
  if (n < 1)
    throw std::invalid_argument("circulant needs n >= 1");
  std::set<int> d;
  for (int x : diffs) {
    if (x <= 0 || x >= n)
      throw std::invalid_argument("circulant difference " + std::to_string(x) + " outside (0, n)");
    d.insert(x);
  }
  for (int x : d)
    if (!d.contains(n - x))
      throw std::invalid_argument("circulant differences not symmetric: " + std::to_string(x) + " without " +
                                  std::to_string(n - x));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int x : d) {
      const int j = (i + x) % n;
      if (i < j)
        edges.emplace_back(i, j);
    }
  Recipe r;
  r.family = GraphFamily::Circulant;
  r.n = n;
  r.rotations.assign(d.begin(), d.end());
  return Graph(n, std::move(edges), std::move(r));
}

std::vector<std::vector<int>> k_subsets_colex(int n, int k)
{
  if (k < 0 || k > n)
    throw std::invalid_argument("need 0 <= k <= n for k-subsets");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::string subset_label(const std::vector<int>& s)
{
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Graph kneser_complement_graph(int n, int k)
{
  if (k < 1 || k > n)
    throw std::invalid_argument("kneser complement needs 1 <= k <= n");
  const auto subsets = k_subsets_colex(n, k);
  std::vector<unsigned long long> masks;
  for (const auto& s : subsets) {
    unsigned long long m = 0;
    for (int x : s)
      m |= 1ULL << (x - 1);
    masks.push_back(m);
  }
  std::vector<std::pair<int, int>> edges;
  const int count = static_cast<int>(subsets.size());
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (masks[i] & masks[j])
        edges.emplace_back(i, j);
  std::vector<std::string> labels;
  for (const auto& s : subsets)
    labels.push_back(subset_label(s));
  Recipe r;
  r.family = GraphFamily::KneserComplement;
  r.n = n;
  r.k = k;
  return Graph(count, std::move(edges), std::move(r), std::move(labels));
}

Graph explicit_graph(int n, std::vector<std::pair<int, int>> edges, std::string name)
{
  Recipe r;
  r.family = GraphFamily::Explicit;
  r.n = n;
  r.name = std::move(name);
  for (auto [a, b] : edges)
    r.edges.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(r.edges.begin(), r.edges.end());
  return Graph(n, std::move(edges), std::move(r));
}

Graph cycle_graph(int n)
{
  if (n < 3)
    throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return explicit_graph(n, std::move(edges), "C" + std::to_string(n));
}

Graph path_graph(int n)
{
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return explicit_graph(n, std::move(edges), "P" + std::to_string(n));
}

Graph complete_graph(int n)
{
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.emplace_back(i, j);
  return explicit_graph(n, std::move(edges), "K" + std::to_string(n));
}

Graph complete_bipartite_graph(int a, int b)
{
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.emplace_back(i, a + j);
  return explicit_graph(a + b, std::move(edges), "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph petersen_graph()
{
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return explicit_graph(10, std::move(edges), "petersen");
}

Graph build_graph(const Recipe& recipe)
{
  switch (recipe.family) {
  case GraphFamily::SnTm:
  case GraphFamily::SnTranspositions:
  case GraphFamily::AnStar3:
  case GraphFamily::SnAdjacentCycle:
  case GraphFamily::AnThreeCycleNCycle:
    return permutation_cayley(recipe.family, recipe.n).graph;
  case GraphFamily::DihedralInterval:
    return dihedral_interval_cayley(recipe.n, recipe.k).graph;
  case GraphFamily::Dihedral:
    return dihedral_cayley(recipe.n, recipe.rotations, recipe.reflections).graph;
  case GraphFamily::Circulant:
    return circulant_graph(recipe.n, recipe.rotations);
  case GraphFamily::KneserComplement:
    return kneser_complement_graph(recipe.n, recipe.k);
  case GraphFamily::Explicit:
    return explicit_graph(recipe.n, recipe.edges, recipe.name);
  }
  throw std::invalid_argument("unhandled graph family");
}

}  // namespace totalcolor
