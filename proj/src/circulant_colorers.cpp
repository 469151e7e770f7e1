#include "totalcolor/circulant_colorers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "totalcolor/builders.hpp"
#include "totalcolor/exact.hpp"

namespace totalcolor {

namespace {

std::vector<int> interval_diffs(int n, int k)
{
  std::set<int> d;
  for (int i = 1; i <= k; ++i) {
    d.insert(i);
    d.insert(n - i);
  }
  return {d.begin(), d.end()};
}

// Vertex v -> 2v mod m and edge {u,v} -> u+v mod m on vertices 0..n-1.
void rotational_scheme(const Graph& g, int m, TotalColoring& c)
{
  for (int v = 0; v < g.vertex_count(); ++v)
    c.vertex_colors[v] = (2 * v) % m;
  for (int e = 0; e < g.edge_count(); ++e)
    c.edge_colors[e] = (g.edge(e).u + g.edge(e).v) % m;
}

}  // namespace

Construction canonical_power_cycle_total(int n, int k)
{
  const int m = 2 * k + 1;
  if (k < 1 || m > n || n % m != 0)
    throw std::invalid_argument("canonical power-of-cycle coloring needs k >= 1 and 2k+1 dividing n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  Construction out(circulant_graph(n, interval_diffs(n, k)));
  out.coloring = TotalColoring(out.graph);
  rotational_scheme(out.graph, m, out.coloring);
  out.log.push_back("C_" + std::to_string(n) + "^" + std::to_string(k) + ": vertex v -> 2v mod " + std::to_string(m) +
                    ", edge uv -> u+v mod " + std::to_string(m));
  finish_construction(out);
  return out;
}

Construction clique_canonical_total(int m)
{
  if (m < 1)
    throw std::invalid_argument("clique order must be positive");
  const int odd = m % 2 == 1 ? m : m + 1;
  Construction out(complete_graph(m));
  out.coloring = TotalColoring(out.graph);
  rotational_scheme(out.graph, odd, out.coloring);
  out.log.push_back(m % 2 == 1 ? "K_" + std::to_string(m) + " rotational scheme on " + std::to_string(m) + " colors"
                               : "K_" + std::to_string(m) + " inside K_" + std::to_string(odd));
  finish_construction(out);
  return out;
}

Construction circulant_total(int n, const std::vector<int>& diffs, std::int64_t budget)
{
  std::vector<int> d = diffs;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (int k = 1; 2 * k + 1 <= n; ++k)
    if (n % (2 * k + 1) == 0 && d == interval_diffs(n, k))
      return canonical_power_cycle_total(n, k);

  Construction out(circulant_graph(n, diffs));
  const ChromaticResult r = total_chromatic_number(out.graph, budget);
  out.coloring = total_coloring_from(out.graph, r.coloring);
  out.log.push_back("circulant colored by the exact solver: " +
                    (r.exact ? "optimal " + std::to_string(r.upper)
                             : "bounds [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]") +
                    " after " + std::to_string(r.nodes) + " nodes");
  finish_construction(out);
  return out;
}

}  // namespace totalcolor
