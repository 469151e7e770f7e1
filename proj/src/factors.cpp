#include "totalcolor/factors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace totalcolor {

std::vector<GeneratorFactor> generator_factor_decomposition(const Graph& g)
{
  if (!g.cayley())
    throw std::invalid_argument("generator factor decomposition needs a Cayley graph");
  const CayleyInfo& info = *g.cayley();

  std::map<int, GeneratorFactor> by_key;
  for (int s = 0; s < static_cast<int>(info.generators.size()); ++s) {
    const int t = info.inverse_of[s];
    const int key = std::min(s, t);
    auto [it, fresh] = by_key.try_emplace(key);
    if (!fresh)
      continue;
    GeneratorFactor& f = it->second;
    f.generators = {key};
    if (t != s)
      f.generators.push_back(std::max(s, t));
    for (int x : f.generators)
      f.labels.push_back(info.generators[x]);
    f.kind = info.generator_order[s] == 2 ? FactorKind::Matching : FactorKind::TwoFactor;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const int s = info.edge_generator[e];
    by_key.at(std::min(s, info.inverse_of[s])).edges.push_back(e);
  }

  std::vector<GeneratorFactor> out;
  for (auto& [key, f] : by_key) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e : f.edges) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    const int want = f.kind == FactorKind::Matching ? 1 : 2;
    f.spanning = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == want; });
    if (f.kind == FactorKind::TwoFactor && f.spanning) {
      // walk each cycle
      std::vector<std::vector<int>> adj(g.vertex_count());
      for (int e : f.edges) {
        adj[g.edge(e).u].push_back(g.edge(e).v);
        adj[g.edge(e).v].push_back(g.edge(e).u);
      }
      std::vector<bool> seen(g.vertex_count(), false);
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v])
          continue;
        int len = 0, prev = -1, cur = v;
        while (!seen[cur]) {
          seen[cur] = true;
          ++len;
          const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = next;
        }
        f.cycle_lengths.push_back(len);
      }
      std::sort(f.cycle_lengths.begin(), f.cycle_lengths.end());
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace totalcolor
