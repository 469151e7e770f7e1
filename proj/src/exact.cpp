#include "totalcolor/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "totalcolor/builders.hpp"

namespace totalcolor {

TotalGraph total_graph(const Graph& g)
{
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(e.u, e.v);
  for (int e = 0; e < m; ++e) {
    edges.emplace_back(g.edge(e).u, n + e);
    edges.emplace_back(g.edge(e).v, n + e);
  }
  for (int v = 0; v < n; ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        edges.emplace_back(n + inc[i], n + inc[j]);
  }
  std::vector<std::string> labels = g.labels();
  for (const Edge& e : g.edges())
    labels.push_back(g.labels()[e.u] + "-" + g.labels()[e.v]);
  Recipe r;
  r.family = GraphFamily::Explicit;
  r.name = "total";
  r.n = n + m;
  TotalGraph out;
  out.graph = Graph(n + m, std::move(edges), std::move(r), std::move(labels));
  out.original_vertices = n;
  out.original_edges = m;
  return out;
}

namespace {

/// k-colorability search with DSATUR branching.
class DsaturSearch
{
public:
  DsaturSearch(const Graph& g, std::span<const int> seed, std::int64_t& nodes, std::int64_t budget)
    : g_(g), seed_(seed.begin(), seed.end()), nodes_(nodes), budget_(budget)
  {}

  enum class Outcome
  {
    Colored,
    Impossible,
    OutOfBudget,
  };

  Outcome run(int k)
  {
    const int n = g_.vertex_count();
    k_ = k;
    color_.assign(n, -1);
    counts_.assign(static_cast<std::size_t>(n) * k, 0);
    sat_.assign(n, 0);
    uncolored_deg_.assign(n, 0);
    for (int v = 0; v < n; ++v)
      uncolored_deg_[v] = g_.degree(v);
    colored_ = 0;
    max_used_ = -1;
    if (static_cast<int>(seed_.size()) > k)
      return Outcome::Impossible;
    for (std::size_t i = 0; i < seed_.size(); ++i)
      assign(seed_[i], static_cast<int>(i));
    return search();
  }

  const std::vector<int>& coloring() const { return color_; }

private:
  void assign(int v, int c)
  {
    color_[v] = c;
    ++colored_;
    max_used_ = std::max(max_used_, c);
    for (int u : g_.neighbors(v)) {
      if (counts_[idx(u, c)]++ == 0)
        ++sat_[u];
      --uncolored_deg_[u];
    }
  }

  void unassign(int v)
  {
    const int c = color_[v];
    color_[v] = -1;
    --colored_;
    for (int u : g_.neighbors(v)) {
      if (--counts_[idx(u, c)] == 0)
        --sat_[u];
      ++uncolored_deg_[u];
    }
  }

  std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * k_ + c; }

  int pick() const
  {
    int best = -1;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] >= 0)
        continue;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && uncolored_deg_[v] > uncolored_deg_[best]))
        best = v;
    }
    return best;
  }

  Outcome search()
  {
    if (colored_ == g_.vertex_count())
      return Outcome::Colored;
    if (++nodes_ > budget_)
      return Outcome::OutOfBudget;
    const int v = pick();
    if (sat_[v] >= k_)
      return Outcome::Impossible;
    // colors above max_used_ + 1 are interchangeable with max_used_ + 1
    const int limit = std::min(k_ - 1, max_used_ + 1);
    const int saved_max = max_used_;
    for (int c = 0; c <= limit; ++c) {
      if (counts_[idx(v, c)] > 0)
        continue;
      assign(v, c);
      const Outcome r = search();
      if (r == Outcome::Colored)
        return r;
      unassign(v);
      max_used_ = saved_max;
      if (r == Outcome::OutOfBudget)
        return r;
    }
    return Outcome::Impossible;
  }

  const Graph& g_;
  std::vector<int> seed_;
  std::int64_t& nodes_;
  std::int64_t budget_;
  int k_ = 0;
  std::vector<int> color_;
  std::vector<int> counts_;
  std::vector<int> sat_;
  std::vector<int> uncolored_deg_;
  int colored_ = 0;
  int max_used_ = -1;
};

std::vector<int> greedy_clique(const Graph& g)
{
  std::vector<int> best;
  for (int start = 0; start < g.vertex_count(); ++start) {
    std::vector<int> clique{start};
    for (int u : g.neighbors(start)) {
      bool ok = true;
      for (int w : clique)
        if (!g.adjacent(u, w)) {
          ok = false;
          break;
        }
      if (ok)
        clique.push_back(u);
    }
    if (clique.size() > best.size())
      best = clique;
  }
  return best;
}

/// Plain DSATUR greedy coloring.
std::vector<int> dsatur_greedy(const Graph& g)
{
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<int> sat(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (color[v] < 0 && (best < 0 || sat[v] > sat[best] || (sat[v] == sat[best] && g.degree(v) > g.degree(best))))
        best = v;
    int c = 0;
    while (c < static_cast<int>(seen[best].size()) && seen[best][c])
      ++c;
    color[best] = c;
    for (int u : g.neighbors(best)) {
      if (static_cast<int>(seen[u].size()) <= c)
        seen[u].resize(c + 1, false);
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++sat[u];
      }
    }
  }
  return color;
}

}  // namespace

ChromaticResult exact_chromatic_number(const Graph& g, int lower, int upper, std::int64_t budget,
                                       std::span<const int> seed_clique)
{
  if (lower > upper)
    throw std::invalid_argument("exact_chromatic_number needs lower <= upper");
  ChromaticResult out;
  const int n = g.vertex_count();
  if (n == 0) {
    out.exact = true;
    return out;
  }
  std::vector<int> seed(seed_clique.begin(), seed_clique.end());
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (!g.adjacent(seed[i], seed[j]))
        throw std::invalid_argument("seed vertices do not form a clique");
  if (seed.empty())
    seed = greedy_clique(g);

  out.coloring = dsatur_greedy(g);
  out.upper = *std::max_element(out.coloring.begin(), out.coloring.end()) + 1;
  out.lower = std::max({lower, static_cast<int>(seed.size()), 1});
  if (out.lower >= out.upper) {
    out.lower = out.upper;
    out.exact = true;
    return out;
  }

  DsaturSearch search(g, seed, out.nodes, budget);
  // [lower, upper] is the first window; keep widening up to the greedy bound
  for (int k = out.lower; k < out.upper; ++k) {
    const auto r = search.run(k);
    if (r == DsaturSearch::Outcome::Colored) {
      out.coloring = search.coloring();
      out.upper = k;
      out.lower = k;
      out.exact = true;
      return out;
    }
    if (r == DsaturSearch::Outcome::OutOfBudget) {
      out.lower = k;
      return out;
    }
    out.lower = k + 1;
  }
  out.exact = true;
  return out;
}

ChromaticResult total_chromatic_number(const Graph& g, std::int64_t budget)
{
  const TotalGraph t = total_graph(g);
  const int delta = g.max_degree();
  std::vector<int> seed;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == delta) {
      seed.push_back(v);
      for (int e : g.incident_edges(v))
        seed.push_back(t.original_vertices + e);
      break;
    }
  return exact_chromatic_number(t.graph, delta + 1, delta + 2, budget, seed);
}

TotalColoring total_coloring_from(const Graph& g, const std::vector<Color>& c)
{
  if (static_cast<int>(c.size()) != g.vertex_count() + g.edge_count())
    throw std::invalid_argument("total graph coloring has the wrong size");
  TotalColoring out(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    out.vertex_colors[v] = c[v];
  for (int e = 0; e < g.edge_count(); ++e)
    out.edge_colors[e] = c[g.vertex_count() + e];
  return out;
}

TotalColoring greedy_total_coloring(const Graph& g)
{
  const TotalGraph t = total_graph(g);
  if (t.graph.vertex_count() == 0)
    return TotalColoring(g);
  return total_coloring_from(g, dsatur_greedy(t.graph));
}

std::string_view total_type_name(TotalType t)
{
  switch (t) {
  case TotalType::TypeI: return "TYPE_I";
  case TotalType::TypeII: return "TYPE_II";
  case TotalType::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

TypeResult classify_type(const Graph& g, std::int64_t budget)
{
  TypeResult out{TotalType::Unknown, total_chromatic_number(g, budget), g.max_degree()};
  if (out.chi.exact) {
    if (out.chi.upper == out.max_degree + 1)
      out.type = TotalType::TypeI;
    else if (out.chi.upper == out.max_degree + 2)
      out.type = TotalType::TypeII;
  }
  return out;
}

}  // namespace totalcolor
