#include "totalcolor/kneser.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "totalcolor/builders.hpp"
#include "totalcolor/circulant_colorers.hpp"
#include "totalcolor/edge_coloring.hpp"

namespace totalcolor {

namespace {

void require_divides(int n, int k)
{
  if (k < 1 || k > n || n % k != 0)
    throw std::invalid_argument("k must divide n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

std::int64_t binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

unsigned mask_of(const std::vector<int>& s)
{
  unsigned m = 0;
  for (int x : s)
    m |= 1u << (x - 1);
  return m;
}

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
  boost::vecS, boost::vecS, boost::directedS, boost::no_property,
  boost::property<boost::edge_capacity_t, long,
                  boost::property<boost::edge_residual_capacity_t, long,
                                  boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

FlowTraits::edge_descriptor add_arc(FlowGraph& g, int from, int to, long capacity)
{
  auto cap = get(boost::edge_capacity, g);
  auto rev = get(boost::edge_reverse, g);
  const auto e = add_edge(from, to, g).first;
  const auto back = add_edge(to, from, g).first;
  cap[e] = capacity;
  cap[back] = 0;
  rev[e] = back;
  rev[back] = e;
  return e;
}

// Baranyai's induction: every class holds n/k growing parts; symbol m joins
// exactly one part per class, chosen by an integral max flow so that each
// part S of {1..m} ends up extended in exactly C(n-m-1, k-|S|-1) classes.
std::vector<ParallelClass> baranyai_by_flow(int n, int k)
{
  const int classes = static_cast<int>(binomial(n - 1, k - 1));
  std::vector<std::vector<unsigned>> parts(classes, std::vector<unsigned>(n / k, 0u));
  for (int m = 0; m < n; ++m) {
    std::map<unsigned, int> type_index;
    for (const auto& c : parts)
      for (unsigned s : c)
        if (std::popcount(s) < k)
          type_index.emplace(s, 0);
    int next = classes + 2;
    for (auto& [s, idx] : type_index)
      idx = next++;

    FlowGraph g(next);
    const int source = classes;
    const int sink = classes + 1;
    std::vector<std::vector<std::pair<unsigned, FlowTraits::edge_descriptor>>> choices(classes);
    for (int c = 0; c < classes; ++c) {
      add_arc(g, source, c, 1);
      std::map<unsigned, long> mult;
      for (unsigned s : parts[c])
        if (std::popcount(s) < k)
          ++mult[s];
      for (auto [s, count] : mult)
        choices[c].emplace_back(s, add_arc(g, c, type_index.at(s), count));
    }
    for (auto [s, idx] : type_index)
      add_arc(g, idx, sink, static_cast<long>(binomial(n - m - 1, k - std::popcount(s) - 1)));

    const long flow = boost::push_relabel_max_flow(g, source, sink);
    if (flow != classes)
      throw std::logic_error("Baranyai flow step carried " + std::to_string(flow) + " of " + std::to_string(classes));
    auto cap = get(boost::edge_capacity, g);
    auto res = get(boost::edge_residual_capacity, g);
    for (int c = 0; c < classes; ++c)
      for (auto [s, e] : choices[c])
        if (cap[e] - res[e] > 0) {
          *std::find(parts[c].begin(), parts[c].end(), s) |= 1u << m;
          break;
        }
  }

  std::vector<ParallelClass> out;
  for (const auto& c : parts) {
    ParallelClass pc;
    for (unsigned s : c) {
      std::vector<int> members;
      for (int x = 0; x < n; ++x)
        if (s >> x & 1u)
          members.push_back(x + 1);
      pc.push_back(std::move(members));
    }
    std::sort(pc.begin(), pc.end());
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class CliqueSearch
{
public:
  CliqueSearch(int n, int k, std::int64_t budget)
    : subsets_(k_subsets_colex(n, k)), budget_(budget), parts_(n / k),
      size_(static_cast<int>(binomial(n - 1, k - 1)))
  {
    for (const auto& s : subsets_)
      masks_.push_back(mask_of(s));
    owner_.assign(subsets_.size(), -1);
    members_.resize(parts_);
  }

  bool run() { return place(0); }
  std::int64_t nodes() const { return nodes_; }
  bool out_of_budget() const { return nodes_ > budget_; }
  const std::vector<std::vector<int>>& members() const { return members_; }

private:
  std::vector<std::vector<int>> subsets_;
  std::vector<unsigned> masks_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  int parts_;
  int size_;
  std::vector<int> owner_;
  std::vector<std::vector<int>> members_;

  bool compatible(int s, int p) const
  {
    for (int t : members_[p])
      if (!(masks_[s] & masks_[t]))
        return false;
    return true;
  }

  // Every open clique can still reach its target size from the unplaced subsets.
  bool fillable(std::size_t from) const
  {
    for (int p = 0; p < parts_; ++p) {
      if (members_[p].empty())
        continue;
      int room = 0;
      for (std::size_t s = from; s < subsets_.size() && room + static_cast<int>(members_[p].size()) < size_; ++s)
        if (compatible(static_cast<int>(s), p))
          ++room;
      if (room + static_cast<int>(members_[p].size()) < size_)
        return false;
    }
    return true;
  }

  bool place(std::size_t s)
  {
    if (++nodes_ > budget_)
      return false;
    if (s == subsets_.size())
      return true;
    for (int p = 0; p < parts_; ++p) {
      const bool fresh = members_[p].empty();
      if (static_cast<int>(members_[p].size()) < size_ && compatible(static_cast<int>(s), p)) {
        members_[p].push_back(static_cast<int>(s));
        if (fillable(s + 1) && place(s + 1))
          return true;
        members_[p].pop_back();
        if (nodes_ > budget_)
          return false;
      }
      // Cliques are unlabeled: only the first empty one is tried.
      if (fresh)
        break;
    }
    return false;
  }
};

// Orders the members of every clique so that the i-th members of all
// cliques are pairwise disjoint. Returns false when no such order exists
// within budget.
class RowAlignment
{
public:
  RowAlignment(const Graph& g, const VertexPartition& cliques, std::int64_t budget)
    : g_(g), cliques_(cliques.classes), budget_(budget)
  {
    taken_.resize(cliques_.size());
    for (std::size_t p = 0; p < cliques_.size(); ++p)
      taken_[p].assign(cliques_[p].size(), 0);
    rows_.assign(cliques_.front().size(), std::vector<int>(cliques_.size(), -1));
  }

  bool run() { return extend(0, 1); }

  VertexPartition ordered() const
  {
    VertexPartition out;
    out.classes.resize(cliques_.size());
    for (const auto& row : rows_)
      for (std::size_t p = 0; p < row.size(); ++p)
        out.classes[p].push_back(row[p]);
    return out;
  }

private:
  const Graph& g_;
  const std::vector<std::vector<int>>& cliques_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<char>> taken_;
  std::vector<std::vector<int>> rows_;

  bool extend(std::size_t row, std::size_t part)
  {
    if (++nodes_ > budget_)
      return false;
    if (row == rows_.size())
      return true;
    if (part == cliques_.size())
      return extend(row + 1, 1);
    rows_[row][0] = cliques_[0][row];
    for (std::size_t i = 0; i < cliques_[part].size(); ++i) {
      if (taken_[part][i])
        continue;
      const int v = cliques_[part][i];
      bool disjoint = true;
      for (std::size_t q = 0; q < part && disjoint; ++q)
        disjoint = !g_.adjacent(v, rows_[row][q]);
      if (!disjoint)
        continue;
      taken_[part][i] = 1;
      rows_[row][part] = v;
      if (extend(row, part + 1))
        return true;
      taken_[part][i] = 0;
      if (nodes_ > budget_)
        return false;
    }
    return false;
  }
};

}  // namespace

std::vector<ParallelClass> baranyai_parallel_classes(int n, int k)
{
  require_divides(n, k);
  if (n > 31)
    throw std::invalid_argument("baranyai_parallel_classes supports n <= 31");
  std::vector<ParallelClass> out;
  if (k == 1 || k == n) {
    ParallelClass c;
    for (const auto& s : k_subsets_colex(n, k))
      c.push_back(s);
    out.push_back(std::move(c));
    return out;
  }
  if (k == 2) {
    const int m = n - 1;
    for (int r = 0; r < m; ++r) {
      ParallelClass c{{r + 1, n}};
      for (int i = 1; i <= (m - 1) / 2; ++i) {
        int a = (r + i) % m + 1;
        int b = (r - i + m) % m + 1;
        c.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  }
  if (n == 2 * k) {
    for (const auto& s : k_subsets_colex(n, k)) {
      if (s.front() != 1)
        continue;
      std::vector<int> rest;
      for (int x = 1; x <= n; ++x)
        if (!std::binary_search(s.begin(), s.end(), x))
          rest.push_back(x);
      out.push_back({s, rest});
    }
    return out;
  }
  return baranyai_by_flow(n, k);
}

CliquePartitionResult kneser_clique_partition(int n, int k, std::int64_t budget)
{
  require_divides(n, k);
  if (n > 31)
    throw std::invalid_argument("kneser_clique_partition supports n <= 31");
  CliqueSearch search(n, k, budget);
  CliquePartitionResult out;
  out.exists = search.run();
  out.nodes = search.nodes();
  out.exhausted = !out.exists && !search.out_of_budget();
  const std::string shape = std::to_string(n / k) + " pairwise intersecting families of " +
                            std::to_string(binomial(n - 1, k - 1)) + " " + std::to_string(k) + "-subsets";
  if (out.exists) {
    out.cliques.classes = search.members();
    out.certificate = "partition into " + shape + " found after " + std::to_string(out.nodes) + " nodes";
  }
  else if (out.exhausted)
    out.certificate = "exhaustive search of " + std::to_string(out.nodes) + " nodes: no partition into " + shape;
  else
    out.certificate = "search for " + shape + " stopped after " + std::to_string(budget) + " nodes";
  return out;
}

Construction kneser_complement_total(int n, int k, std::int64_t budget)
{
  require_divides(n, k);
  Construction out(kneser_complement_graph(n, k));
  const CliquePartitionResult part = kneser_clique_partition(n, k, budget);
  out.log.push_back(part.certificate);
  if (!part.exists) {
    out.inapplicable = part.exhausted;
    out.failure = part.exhausted ? "no clique partition exists" : "clique partition search exceeded its budget";
    return out;
  }

  const Graph& g = out.graph;
  RowAlignment align(g, part.cliques, budget);
  if (!align.run()) {
    out.failure = "the cliques cannot be lined up along parallel classes";
    return out;
  }
  const VertexPartition cliques = align.ordered();
  out.log.push_back("clique members lined up so that equal positions form parallel classes");
  const int size = static_cast<int>(cliques.classes.front().size());
  const Construction clique = clique_canonical_total(size);
  const int shared = clique.coloring.palette_size();
  out.log.push_back(std::to_string(cliques.size()) + " cliques of order " + std::to_string(size) +
                    " colored canonically on " + std::to_string(shared) + " shared colors");

  out.coloring = TotalColoring(g);
  std::vector<int> owner(g.vertex_count(), -1);
  for (int p = 0; p < static_cast<int>(cliques.size()); ++p) {
    const auto& members = cliques.classes[p];
    for (int i = 0; i < size; ++i) {
      owner[members[i]] = p;
      out.coloring.vertex_colors[members[i]] = clique.coloring.vertex_colors[i];
      for (int j = i + 1; j < size; ++j)
        out.coloring.edge_colors[g.edge_index(members[i], members[j])] =
          clique.coloring.edge_colors[clique.graph.edge_index(i, j)];
    }
  }

  std::vector<int> connecting;
  for (int e = 0; e < g.edge_count(); ++e)
    if (owner[g.edge(e).u] != owner[g.edge(e).v])
      connecting.push_back(e);
  const Graph link = edge_subgraph(g, connecting);
  const EdgeColoring colors = misra_gries_edge_color(link);
  for (std::size_t i = 0; i < connecting.size(); ++i)
    out.coloring.edge_colors[connecting[i]] = shared + colors[i];
  out.stats["connecting_degree"] = link.max_degree();
  out.stats["connecting_colors"] = edge_palette(colors);
  out.log.push_back("connecting edges: " + std::to_string(connecting.size()) + ", max degree " +
                    std::to_string(link.max_degree()) + ", Misra-Gries used " + std::to_string(edge_palette(colors)) +
                    " fresh colors");
  finish_construction(out);
  return out;
}

}  // namespace totalcolor
