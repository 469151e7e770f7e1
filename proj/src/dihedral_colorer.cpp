#include "totalcolor/dihedral_colorer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "totalcolor/builders.hpp"
#include "totalcolor/circulant_colorers.hpp"

namespace totalcolor {

std::string_view variant_name(DihedralVariant v)
{
  switch (v) {
  case DihedralVariant::Interval:
    return "INTERVAL";
  case DihedralVariant::SameDifference:
    return "SAME_DIFFERENCE";
  case DihedralVariant::Complement:
    return "COMPLEMENT";
  }
  return "?";
}

namespace {

std::vector<int> plus_minus(int n, int k)
{
  std::set<int> s;
  for (int i = 1; i <= k; ++i) {
    s.insert(i % n);
    s.insert((n - i) % n);
  }
  return {s.begin(), s.end()};
}

int mod(int a, int n) { return ((a % n) + n) % n; }

// Reflection b takes sigma[color of rotation j - b].
struct Transfer
{
  int j = 0;
  std::vector<int> sigma;
};

std::string describe(const Transfer& t)
{
  bool identity = true;
  for (int c = 0; c < static_cast<int>(t.sigma.size()); ++c)
    identity = identity && t.sigma[c] == c;
  std::string s = "j=" + std::to_string(t.j);
  if (!identity) {
    s += ", classes";
    for (int c = 0; c < static_cast<int>(t.sigma.size()); ++c)
      s += " " + std::to_string(c) + "->" + std::to_string(t.sigma[c]);
  }
  return s;
}

}  // namespace

DihedralColoringSpec DihedralColoringSpec::interval(int n, int k)
{
  DihedralColoringSpec s;
  s.n = n;
  s.k = k;
  s.t1 = plus_minus(n, k);
  s.t2 = {0};
  s.variant = DihedralVariant::Interval;
  return s;
}

DihedralColoringSpec DihedralColoringSpec::same_difference(int n, std::vector<int> t1, std::vector<int> t2)
{
  DihedralColoringSpec s;
  s.n = n;
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  s.t1 = std::move(t1);
  s.t2 = std::move(t2);
  s.variant = DihedralVariant::SameDifference;
  return s;
}

DihedralColoringSpec DihedralColoringSpec::complement(int n, int k, int d, int base_index)
{
  DihedralColoringSpec s;
  s.n = n;
  s.k = k;
  s.d = d;
  s.base_index = base_index;
  s.t1 = plus_minus(n, k);
  if (d > 0)
    for (int i = 0; i < n; ++i)
      if (mod(i - base_index, d) != 0)
        s.t2.push_back(i);
  s.variant = DihedralVariant::Complement;
  return s;
}

DihedralColoringSpec DihedralColoringSpec::complement_family(int k)
{
  return complement(8 * k + 4, k, 2 * k + 1, 0);
}

std::vector<std::string> DihedralColoringSpec::validate() const
{
  std::vector<std::string> out;
  if (n < 3)
    out.push_back("n must be at least 3");
  for (int x : t1)
    if (x <= 0 || x >= n)
      out.push_back("rotation " + std::to_string(x) + " outside 1..n-1");
  for (int x : t1)
    if (std::find(t1.begin(), t1.end(), n - x) == t1.end())
      out.push_back("rotations not inverse-closed at " + std::to_string(x));
  for (int i : t2)
    if (i < 0 || i >= n)
      out.push_back("reflection index " + std::to_string(i) + " outside 0..n-1");
  if (t2.empty())
    out.push_back("at least one reflection is needed");
  switch (variant) {
  case DihedralVariant::Interval:
    if (n % 2 != 0)
      out.push_back("interval variant needs even n");
    if (k < 1 || 2 * k >= n)
      out.push_back("interval variant needs 1 <= k < n/2");
    else if (t1 != plus_minus(n, k) || t2 != std::vector<int>{0})
      out.push_back("interval variant uses T1 = {+-1..+-k} and T2 = {r}");
    break;
  case DihedralVariant::Complement: {
    if (d < 1 || n % d != 0)
      out.push_back("complement variant needs d dividing n");
    else if (*this != complement(n, k, d, base_index))
      out.push_back("complement variant needs T1 = {+-1..+-k} and T2 = reflections not congruent to the base index");
    break;
  }
  case DihedralVariant::SameDifference:
    break;
  }
  return out;
}

Construction dihedral_total_color(const DihedralColoringSpec& spec, std::int64_t budget)
{
  if (auto problems = spec.validate(); !problems.empty()) {
    std::string msg = "invalid dihedral spec:";
    for (auto& p : problems)
      msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }
  const int n = spec.n;
  auto cayley = spec.variant == DihedralVariant::Interval ? dihedral_interval_cayley(n, spec.k)
                                                          : dihedral_cayley(n, spec.t1, spec.t2);
  Construction out(cayley.graph);
  out.log.push_back(std::string("variant ") + std::string(variant_name(spec.variant)));

  const Construction layer = circulant_total(n, spec.t1, budget);
  append_log(out, layer.log);
  if (!layer.ok) {
    out.failure = "rotation layer: " + layer.failure;
    return out;
  }
  const Graph& circ = layer.graph;
  const int palette = layer.coloring.palette_size();
  std::vector<int> cv(n);
  for (int v = 0; v < n; ++v)
    cv[v] = *layer.coloring.vertex_colors[v];
  const int vertex_palette = static_cast<int>(std::set<int>(cv.begin(), cv.end()).size());
  out.stats["rotation_vertex_palette"] = vertex_palette;
  out.stats["rotation_total_palette"] = palette;
  out.log.push_back("rotation layer: " + std::to_string(vertex_palette) + " vertex colors, " +
                    std::to_string(palette) + " total colors");

  auto rot = [&](int a) { return cayley.vertex_of(DihedralElement::rotation(n, a)); };
  auto refl = [&](int b) { return cayley.vertex_of(DihedralElement::reflection(n, b)); };

  // Cross edges s^a ~ r s^(i-a) for i in T2.
  auto conflicts = [&](const Transfer& t) -> std::optional<std::pair<int, int>> {
    for (int i : spec.t2)
      for (int a = 0; a < n; ++a) {
        const int b = mod(i - a, n);
        if (cv[a] == t.sigma[cv[mod(t.j - b, n)]])
          return std::pair{a, b};
      }
    return std::nullopt;
  };

  std::vector<int> identity(palette);
  std::iota(identity.begin(), identity.end(), 0);
  std::optional<Transfer> chosen;

  if (spec.variant == DihedralVariant::Complement) {
    // Class c moves by r s^(base - c): s^a -> r s^(base - c - a).
    std::vector<int> image(n, -1);
    bool uniform_cover = true;
    for (int a = 0; a < n; ++a) {
      const int b = mod(spec.base_index - cv[a] - a, n);
      if (image[b] != -1)
        uniform_cover = false;
      image[b] = cv[a];
    }
    std::optional<Transfer> as_uniform;
    if (uniform_cover)
      for (int j = 0; j < n && !as_uniform; ++j) {
        std::vector<int> sigma(palette, -1);
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
          int& s = sigma[cv[mod(j - b, n)]];
          if (s == -1)
            s = image[b];
          ok = s == image[b];
        }
        std::vector<int> seen(palette, 0);
        for (int c = 0; c < palette && ok; ++c)
          if (sigma[c] != -1)
            ok = !seen[sigma[c]]++;
        if (!ok)
          continue;
        int next = 0;
        for (int c = 0; c < palette; ++c)
          if (sigma[c] == -1) {
            while (seen[next])
              ++next;
            sigma[c] = next;
            seen[next] = 1;
          }
        as_uniform = Transfer{j, sigma};
      }
    if (!as_uniform)
      out.log.push_back("per-class multipliers r s^(" + std::to_string(spec.base_index) +
                        "-c) do not carry the rotation layer onto the reflections; repaired to a uniform multiplier");
    else if (auto c = conflicts(*as_uniform))
      out.log.push_back("per-class multipliers conflict on s^" + std::to_string(c->first) + " ~ rs^" +
                        std::to_string(c->second) + "; repaired to a uniform multiplier");
    else {
      chosen = as_uniform;
      out.log.push_back("per-class multipliers r s^(" + std::to_string(spec.base_index) + "-c) act as " +
                        describe(*chosen));
    }
  }

  if (!chosen) {
    std::vector<int> sigma = identity;
    int first = 0;
    if (spec.variant == DihedralVariant::Interval) {
      for (int c = 0; c < palette; ++c)
        sigma[c] = (c + 1) % palette;
      first = 1;
    }
    for (int step = 0; step < n && !chosen; ++step) {
      const Transfer t{(first + step) % n, sigma};
      if (!conflicts(t))
        chosen = t;
    }
    if (!chosen) {
      out.failure = "every multiplier r s^j puts a cross edge inside one class";
      return out;
    }
    out.log.push_back("reflection layer from " + describe(*chosen));
  }
  out.stats["transfer_j"] = chosen->j;

  out.coloring = TotalColoring(out.graph);
  for (int a = 0; a < n; ++a) {
    out.coloring.vertex_colors[rot(a)] = cv[a];
    out.coloring.vertex_colors[refl(a)] = chosen->sigma[cv[mod(chosen->j - a, n)]];
  }
  for (int e = 0; e < circ.edge_count(); ++e) {
    const auto [u, v] = std::pair{circ.edge(e).u, circ.edge(e).v};
    const int c = *layer.coloring.edge_colors[e];
    out.coloring.edge_colors[out.graph.edge_index(rot(u), rot(v))] = c;
    const int bu = mod(chosen->j - u, n);
    const int bv = mod(chosen->j - v, n);
    out.coloring.edge_colors[out.graph.edge_index(refl(bu), refl(bv))] = chosen->sigma[c];
  }
  for (std::size_t idx = 0; idx < spec.t2.size(); ++idx)
    for (int a = 0; a < n; ++a)
      out.coloring.edge_colors[out.graph.edge_index(rot(a), refl(mod(spec.t2[idx] - a, n)))] =
        palette + static_cast<int>(idx);
  out.log.push_back(std::to_string(spec.t2.size()) + " reflection matchings on fresh colors " +
                    std::to_string(palette) + ".." + std::to_string(palette + spec.t2.size() - 1));
  finish_construction(out);
  return out;
}

}  // namespace totalcolor
