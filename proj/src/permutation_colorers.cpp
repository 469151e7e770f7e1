#include "totalcolor/permutation_colorers.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

#include "totalcolor/edge_coloring.hpp"

namespace totalcolor {

namespace {

class SplitSearch
{
public:
  SplitSearch(const Graph& g, const SplitOptions& options) : g_(g), options_(options) {}

  PartitionSearch run()
  {
    const int n = g_.vertex_count();
    cap_ = (n + 2) / 3;
    cls_.assign(n, -1);
    counts_.assign(n, {0, 0, 0});
    if (n > 0)
      bfs_order();
    PartitionSearch out;
    out.found = n == 0 || assign(0);
    out.exhausted = !out.found && nodes_ <= options_.budget;
    out.nodes = nodes_;
    if (out.found)
      out.partition = partition();
    return out;
  }

private:
  const Graph& g_;
  const SplitOptions& options_;
  std::vector<int> cls_;
  std::vector<std::array<int, 3>> counts_;
  std::array<int, 3> sizes_{0, 0, 0};
  std::vector<int> order_;
  int cap_ = 0;
  std::int64_t nodes_ = 0;

  void bfs_order()
  {
    std::vector<char> seen(g_.vertex_count(), 0);
    for (int root = 0; root < g_.vertex_count(); ++root) {
      if (seen[root])
        continue;
      std::queue<int> q;
      q.push(root);
      seen[root] = 1;
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        order_.push_back(v);
        for (int z : g_.neighbors(v))
          if (!seen[z]) {
            seen[z] = 1;
            q.push(z);
          }
      }
    }
  }

  VertexPartition partition() const
  {
    VertexPartition p;
    p.classes.resize(3);
    for (int v = 0; v < static_cast<int>(cls_.size()); ++v)
      p.classes[cls_[v]].push_back(v);
    return p;
  }

  bool consistent(int v) const
  {
    if (cls_[v] < 0) {
      for (int c = 0; c < 3; ++c)
        if (counts_[v][c] == 0 && sizes_[c] < cap_)
          return true;
      return false;
    }
    const int limit = (g_.degree(v) + options_.max_imbalance) / 2;
    for (int c = 0; c < 3; ++c)
      if (c != cls_[v] && counts_[v][c] > limit)
        return false;
    return true;
  }

  void set(int v, int c, int delta)
  {
    cls_[v] = delta > 0 ? c : -1;
    sizes_[c] += delta;
    for (int z : g_.neighbors(v))
      counts_[z][c] += delta;
  }

  bool assign(std::size_t i)
  {
    if (++nodes_ > options_.budget)
      return false;
    if (i == order_.size())
      return !options_.accept || options_.accept(partition());
    const int v = order_[i];
    for (int c = 0; c < 3; ++c) {
      if (counts_[v][c] > 0 || sizes_[c] >= cap_)
        continue;
      set(v, c, 1);
      bool ok = consistent(v);
      for (int z : g_.neighbors(v))
        ok = ok && consistent(z);
      if (ok && assign(i + 1))
        return true;
      set(v, c, -1);
      if (nodes_ > options_.budget)
        return false;
    }
    return false;
  }
};

std::string class_sizes(const VertexPartition& p)
{
  std::string s;
  for (const auto& c : p.classes)
    s += (s.empty() ? "" : "/") + std::to_string(c.size());
  return s;
}

}  // namespace

PartitionSearch balanced_three_partition(const Graph& g, const SplitOptions& options)
{
  return SplitSearch(g, options).run();
}

bool pairwise_perfect(const Graph& g, const VertexPartition& p)
{
  if (p.size() != 3 || p.classes[0].size() != p.classes[1].size() || p.classes[1].size() != p.classes[2].size())
    return false;
  constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [a, b] : pairs)
    if (!matching_between_classes(g, p.classes[a], p.classes[b]).perfect)
      return false;
  return true;
}

bool bipartite_remainder(const Graph& g, const VertexPartition& p)
{
  if (!pairwise_perfect(g, p))
    return false;
  return edge_subgraph(g, class_pair_matchings(g, p).rest).bipartition().has_value();
}

VertexPartition equitable_three_partition(const Graph& g, int n, std::int64_t budget)
{
  if (n <= 2 || n % 2 == 0)
    throw std::invalid_argument("equitable three partition needs odd n > 2, got " + std::to_string(n));
  const PartitionSearch s = balanced_three_partition(g, SplitOptions{0, budget, nullptr});
  if (!s.found)
    throw ConstructionError(s.exhausted ? "no equitable three partition exists"
                                        : "equitable split search exceeded " + std::to_string(budget) + " nodes");
  return s.partition;
}

Construction total_color_sn_tm(int n, const OrbitOptions& options, std::optional<std::vector<LevelProgram>> program)
{
  if (n < 3)
    throw std::invalid_argument("C(S_n, T_m) needs n > 2, got " + std::to_string(n));
  auto g = permutation_cayley(GraphFamily::SnTm, n);
  OrbitOptions opts = options;
  if (!opts.accept)
    opts.accept = [&](const VertexPartition& p) { return pairwise_perfect(g.graph, p); };
  const OrbitResult orbit =
    orbit_extend_levels(g, s3_seed_classes(), program ? *program : star_transposition_program(n), opts);
  std::vector<std::string> log = orbit.log;
  if (!orbit.ok) {
    Construction out(g.graph);
    out.log = std::move(log);
    out.failure = "orbit extension failed: " + orbit.failure;
    return out;
  }
  log.push_back("classes " + class_sizes(orbit.partition));
  return total_from_three_classes(g.graph, orbit.partition, RemainderMethod::Konig, std::move(log));
}

Construction total_color_sn_tm_equitable(int n, std::int64_t budget)
{
  auto g = permutation_cayley(GraphFamily::SnTm, n);
  std::vector<std::string> log;
  VertexPartition p;
  try {
    p = equitable_three_partition(g.graph, n, budget);
  }
  catch (const ConstructionError& e) {
    Construction out(g.graph);
    out.failure = e.what();
    return out;
  }
  log.push_back("equitable classes " + class_sizes(p));
  return total_from_three_classes(g.graph, p, RemainderMethod::Konig, std::move(log));
}

Construction total_color_an_star3(int n, std::int64_t budget)
{
  if (n < 4)
    throw std::invalid_argument("C(A_n, star 3-cycles) needs n >= 4, got " + std::to_string(n));
  auto g = permutation_cayley(GraphFamily::AnStar3, n);
  const PartitionSearch s = balanced_three_partition(g.graph, SplitOptions{0, budget, nullptr});
  if (!s.found) {
    Construction out(g.graph);
    out.failure = s.exhausted ? "no equitable split exists" : "equitable split search exceeded its budget";
    return out;
  }
  std::vector<std::string> log{"equitable classes " + class_sizes(s.partition) + ", " + std::to_string(s.nodes) +
                               " search nodes"};

  const std::vector<int> cls = s.partition.class_of(g.graph.vertex_count());
  int triangles = 0;
  for (int x = 0; x < g.graph.vertex_count(); ++x)
    for (int m = 3; m <= n; ++m) {
      const Permutation t = Permutation::cycle(n, std::array<int, 3>{1, 2, m});
      const int a = g.vertex_of(g.elements[x] * t);
      const int b = g.vertex_of(g.elements[x] * inverse(t));
      if (cls[x] == cls[a] || cls[x] == cls[b] || cls[a] == cls[b]) {
        Construction out(g.graph);
        out.failure = "triangle rule broken at " + g.elements[x].to_string() + " with (12" + std::to_string(m) + ")";
        return out;
      }
      ++triangles;
    }
  log.push_back("triangle rule holds on " + std::to_string(triangles / 3) + " generator triangles");
  return total_from_three_classes(g.graph, s.partition, RemainderMethod::MisraGries, std::move(log));
}

Construction total_color_adjacent_cycle(GroupKind kind, int n, const OrbitOptions& options,
                                        std::int64_t vertex_budget)
{
  const bool alt = kind == GroupKind::Alternating;
  if (!alt && n < 3)
    throw std::invalid_argument("C(S_n, {(12), c, c^-1}) needs n >= 3, got " + std::to_string(n));
  if (alt && (n < 5 || n % 2 == 0))
    throw std::invalid_argument("C(A_n, {(123), (132), c, c^-1}) needs odd n >= 5, got " + std::to_string(n));
  auto g = permutation_cayley(alt ? GraphFamily::AnThreeCycleNCycle : GraphFamily::SnAdjacentCycle, n);

  OrbitOptions opts = options;
  if (!opts.accept)
    opts.accept = [&](const VertexPartition& p) { return bipartite_remainder(g.graph, p); };
  const auto seed = alt ? a3_seed_classes() : s3_seed_classes();
  const OrbitResult orbit = orbit_extend_levels(g, seed, adjacent_cycle_program(n), opts);
  std::vector<std::string> log = orbit.log;
  VertexPartition p = orbit.partition;
  if (!orbit.ok) {
    log.push_back("orbit program failed: " + orbit.failure);
    const int d = g.graph.max_degree();
    const PartitionSearch s = balanced_three_partition(
      g.graph, SplitOptions{std::max(0, d - 2), vertex_budget, [&](const VertexPartition& q) {
                              return bipartite_remainder(g.graph, q);
                            }});
    if (!s.found) {
      Construction out(g.graph);
      out.log = std::move(log);
      out.failure = "orbit program failed (" + orbit.failure + ") and vertex-level search " +
                    (s.exhausted ? "found no partition" : "exceeded " + std::to_string(vertex_budget) + " nodes");
      return out;
    }
    log.push_back("vertex-level search found a partition in " + std::to_string(s.nodes) + " nodes");
    p = s.partition;
  }
  log.push_back("classes " + class_sizes(p));
  return total_from_three_classes(g.graph, p, RemainderMethod::KonigIfBipartite, std::move(log));
}

}  // namespace totalcolor
