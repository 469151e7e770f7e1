#include "totalcolor/edge_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace totalcolor {

namespace {

/// Edge colors plus, per vertex, which edge holds each color.
class EdgeColorState
{
public:
  EdgeColorState(const Graph& g, int colors)
    : g_(g), colors_(colors), color_(g.edge_count(), -1), at_(static_cast<std::size_t>(g.vertex_count()) * colors, -1)
  {}

  int color(int e) const { return color_[e]; }
  int holder(int v, int c) const { return at_[static_cast<std::size_t>(v) * colors_ + c]; }
  bool is_free(int v, int c) const { return holder(v, c) < 0; }

  int first_free(int v) const
  {
    for (int c = 0; c < colors_; ++c)
      if (is_free(v, c))
        return c;
    throw std::logic_error("no free color at vertex");
  }

  void set(int e, int c)
  {
    clear(e);
    color_[e] = c;
    slot(g_.edge(e).u, c) = e;
    slot(g_.edge(e).v, c) = e;
  }

  void clear(int e)
  {
    const int c = color_[e];
    if (c < 0)
      return;
    slot(g_.edge(e).u, c) = -1;
    slot(g_.edge(e).v, c) = -1;
    color_[e] = -1;
  }

  /// Swaps colors a and b along the maximal a/b path leaving v on color a.
  void flip_path(int v, int a, int b)
  {
    std::vector<int> path;
    int x = v;
    int want = a;
    while (true) {
      const int e = holder(x, want);
      if (e < 0)
        break;
      if (!path.empty() && e == path.back())
        break;
      path.push_back(e);
      x = g_.edge(e).other(x);
      want = want == a ? b : a;
      if (x == v)
        break;
    }
    std::vector<int> old;
    for (int e : path) {
      old.push_back(color_[e]);
      clear(e);
    }
    for (std::size_t i = 0; i < path.size(); ++i)
      set(path[i], old[i] == a ? b : a);
  }

  EdgeColoring result() const { return color_; }

private:
  int& slot(int v, int c) { return at_[static_cast<std::size_t>(v) * colors_ + c]; }

  const Graph& g_;
  int colors_;
  std::vector<int> color_;
  std::vector<int> at_;
};

}  // namespace

EdgeColoring misra_gries_edge_color(const Graph& g)
{
  const int palette = g.max_degree() + 1;
  EdgeColorState st(g, palette);
  for (int e0 = 0; e0 < g.edge_count(); ++e0) {
    const int u = g.edge(e0).u;
    // maximal fan of u starting at the uncolored edge
    std::vector<int> fan{g.edge(e0).v};
    std::vector<bool> in_fan(g.vertex_count(), false);
    in_fan[fan[0]] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      const int last = fan.back();
      auto nb = g.neighbors(u);
      auto inc = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const int x = nb[i];
        const int c = st.color(inc[i]);
        if (!in_fan[x] && c >= 0 && st.is_free(last, c)) {
          fan.push_back(x);
          in_fan[x] = true;
          grew = true;
          break;
        }
      }
    }
    const int c = st.first_free(u);
    const int d = st.first_free(fan.back());
    if (c != d) {
      st.flip_path(u, d, c);
    }
    // first w in the fan whose prefix is still a fan and which has d free
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      bool prefix_ok = true;
      for (std::size_t j = 1; j <= i && prefix_ok; ++j) {
        const int cj = st.color(g.edge_index(u, fan[j]));
        prefix_ok = cj >= 0 && st.is_free(fan[j - 1], cj);
      }
      if (!prefix_ok)
        break;
      if (st.is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size())
      throw std::logic_error("misra-gries: no fan vertex with the inverted color free");
    // rotate the fan prefix [0, w]
    for (std::size_t j = 0; j < w; ++j) {
      const int next_edge = g.edge_index(u, fan[j + 1]);
      const int cj = st.color(next_edge);
      st.clear(next_edge);
      st.set(g.edge_index(u, fan[j]), cj);
    }
    st.set(g.edge_index(u, fan[w]), d);
  }
  return st.result();
}

EdgeColoring konig_bipartite_edge_color(const Graph& g)
{
  if (!g.bipartition())
    throw std::invalid_argument("konig edge coloring needs a bipartite graph");
  const int palette = std::max(1, g.max_degree());
  EdgeColorState st(g, palette);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const int a = st.first_free(u);
    const int b = st.first_free(v);
    if (!st.is_free(v, a)) {
      // the a/b path from v cannot reach u in a bipartite graph
      st.flip_path(v, a, b);
    }
    st.set(e, a);
  }
  return st.result();
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c)
{
  if (static_cast<int>(c.size()) != g.edge_count())
    return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> seen;
    for (int e : g.incident_edges(v)) {
      if (c[e] < 0)
        return false;
      seen.push_back(c[e]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return false;
  }
  return true;
}

int edge_palette(const EdgeColoring& c)
{
  int top = -1;
  for (int x : c)
    top = std::max(top, x);
  return top + 1;
}

Matching matching_between_classes(const Graph& g, const std::vector<int>& a, const std::vector<int>& b)
{
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int v : a)
    side[v] = 0;
  for (int v : b) {
    if (side[v] == 0)
      throw std::invalid_argument("matching_between_classes needs disjoint classes");
    side[v] = 1;
  }
  std::vector<int> mate(n, -1);  // mate[right vertex] = left vertex
  std::vector<int> partner(n, -1);
  std::vector<int> stamp(n, -1);

  // iterative augmenting-path search
  auto augment = [&](int root, int round) {
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    std::vector<int> via;  // right vertices on the current path
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      auto nb = g.neighbors(x);
      bool pushed = false;
      while (i < nb.size()) {
        const int y = nb[i++];
        if (side[y] != 1 || stamp[y] == round)
          continue;
        stamp[y] = round;
        if (mate[y] < 0) {
          via.push_back(y);
          // flip along the path: stack[k].first pairs with via[k]
          for (std::size_t k = 0; k < via.size(); ++k) {
            mate[via[k]] = stack[k].first;
            partner[stack[k].first] = via[k];
          }
          return true;
        }
        via.push_back(y);
        stack.emplace_back(mate[y], 0);
        pushed = true;
        break;
      }
      if (!pushed) {
        // dead end: drop the left vertex and the right vertex that led to it
        stack.pop_back();
        if (!via.empty())
          via.pop_back();
      }
    }
    return false;
  };

  std::vector<int> left = a;
  std::sort(left.begin(), left.end());
  int round = 0;
  int size = 0;
  for (int v : left)
    if (augment(v, round++))
      ++size;

  Matching m;
  for (int v : left)
    if (partner[v] >= 0)
      m.edges.push_back(g.edge_index(v, partner[v]));
  std::sort(m.edges.begin(), m.edges.end());
  m.perfect = size == static_cast<int>(a.size()) && size == static_cast<int>(b.size());
  return m;
}

}  // namespace totalcolor
