#include "totalcolor/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

namespace totalcolor {

namespace {

constexpr std::array<std::pair<GraphFamily, std::string_view>, 10> kNames{{
    {GraphFamily::SnTm, "sn-tm"},
    {GraphFamily::SnTranspositions, "sn-transpositions"},
    {GraphFamily::AnStar3, "an-star3"},
    {GraphFamily::SnAdjacentCycle, "sn-adjacent-cycle"},
    {GraphFamily::AnThreeCycleNCycle, "an-3cycle-ncycle"},
    {GraphFamily::DihedralInterval, "dihedral-interval"},
    {GraphFamily::Dihedral, "dihedral"},
    {GraphFamily::Circulant, "circulant"},
    {GraphFamily::KneserComplement, "kneser-complement"},
    {GraphFamily::Explicit, "explicit"},
}};

}  // namespace

std::string_view graph_family_name(GraphFamily f)
{
  for (auto [fam, name] : kNames)
    if (fam == f)
      return name;
  return "unknown";
}

GraphFamily graph_family_from_name(std::string_view name)
{
  for (auto [fam, n] : kNames)
    if (n == name)
      return fam;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges, Recipe recipe,
             std::vector<std::string> labels, std::optional<CayleyInfo> cayley)
  : n_(vertex_count), labels_(std::move(labels)), recipe_(std::move(recipe)), cayley_(std::move(cayley))
{
  if (n_ < 0)
    throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match vertex count");
  if (labels_.empty())
    for (int v = 0; v < n_; ++v)
      labels_.push_back(std::to_string(v));

  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b)
      throw std::invalid_argument("loop at vertex " + std::to_string(a));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  // Cayley generator tags travel with their edges through the sort.
  std::vector<int> perm(edges_.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return edges_[x] < edges_[y]; });
  std::vector<Edge> sorted(edges_.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    sorted[i] = edges_[perm[i]];
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(sorted);
  if (cayley_ && !cayley_->edge_generator.empty()) {
    if (cayley_->edge_generator.size() != perm.size())
      throw std::invalid_argument("edge generator tags do not match edges");
    std::vector<int> tags(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      tags[i] = cayley_->edge_generator[perm[i]];
    cayley_->edge_generator = std::move(tags);
  }

  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v)
    offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.assign(offsets_[n_], 0);
  incidence_.assign(offsets_[n_], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    adjacency_[fill[ed.u]] = ed.v;
    incidence_[fill[ed.u]++] = e;
    adjacency_[fill[ed.v]] = ed.u;
    incidence_[fill[ed.v]++] = e;
  }
  for (int v = 0; v < n_; ++v) {
    const int lo = offsets_[v], hi = offsets_[v + 1];
    std::vector<std::pair<int, int>> tmp;
    for (int i = lo; i < hi; ++i)
      tmp.emplace_back(adjacency_[i], incidence_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (int i = lo; i < hi; ++i) {
      adjacency_[i] = tmp[i - lo].first;
      incidence_[i] = tmp[i - lo].second;
    }
    max_degree_ = std::max(max_degree_, hi - lo);
  }
}

std::span<const int> Graph::neighbors(int v) const
{
  return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
}

std::span<const int> Graph::incident_edges(int v) const
{
  return {incidence_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
}

bool Graph::is_regular() const
{
  for (int v = 0; v < n_; ++v)
    if (degree(v) != max_degree_)
      return false;
  return true;
}

int Graph::edge_index(int u, int v) const
{
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v)
    return -1;
  return incident_edges(u)[it - nb.begin()];
}

std::optional<std::vector<int>> Graph::bipartition() const
{
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] >= 0)
      continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool Graph::is_connected() const
{
  if (n_ == 0)
    return true;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n_;
}

Graph edge_subgraph(const Graph& g, std::vector<int> edge_ids)
{
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_ids.size());
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("edge index out of range");
    edges.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  Recipe r;
  r.family = GraphFamily::Explicit;
  r.name = "subgraph";
  r.edges = edges;
  return Graph(g.vertex_count(), std::move(edges), std::move(r), g.labels());
}

}  // namespace totalcolor
