#include "totalcolor/orbit.hpp"

#include <algorithm>
#include <stdexcept>

#include "totalcolor/edge_coloring.hpp"

namespace totalcolor {

std::array<int, 3> OrbitStep::effective_map() const
{
  if (class_map)
    return *class_map;
  const int shift = ((target_class - source_class) % 3 + 3) % 3;
  return {shift, (1 + shift) % 3, (2 + shift) % 3};
}

namespace {

constexpr std::array<std::array<int, 3>, 6> all_maps{{
  {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
}};

std::string map_text(const std::array<int, 3>& m)
{
  return "[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + "]";
}

struct Placement
{
  int level = 0;
  int step = -1;  // index into the level's steps, -1 for a residue coset
  Permutation multiplier;
  std::vector<int> base;    // vertices whose classes are copied
  std::vector<int> images;  // images[i] = multiplier * base[i]
  std::array<int, 3> default_map{0, 1, 2};
  bool fixed_map = false;
};

class Extender
{
public:
  Extender(const CayleyGraph<Permutation>& g, const OrbitOptions& options)
    : g_(g), options_(options), cls_(g.graph.vertex_count(), -1)
  {}

  const CayleyGraph<Permutation>& g_;
  const OrbitOptions& options_;
  std::vector<int> cls_;
  std::vector<Placement> placements_;
  std::vector<int> residue_;
  std::vector<std::array<int, 3>> chosen_;
  std::vector<std::string> log_;
  std::int64_t nodes_ = 0;
  bool out_of_budget_ = false;

  bool fixes_above(const Permutation& p, int m) const
  {
    for (int s = m + 1; s <= p.degree(); ++s)
      if (p(s) != s)
        return false;
    return true;
  }

  void seed(const std::vector<std::vector<Permutation>>& classes)
  {
    if (classes.size() != 3)
      throw std::invalid_argument("orbit extension needs exactly three base classes");
    const int n = g_.elements.front().degree();
    for (int c = 0; c < 3; ++c)
      for (const Permutation& p : classes[c]) {
        if (p.degree() > n)
          throw std::invalid_argument("base element " + p.to_string() + " has degree above " + std::to_string(n));
        const int v = g_.vertex_of(p.extended(n));
        if (cls_[v] != -1)
          throw std::invalid_argument("base element " + p.to_string() + " appears twice");
        cls_[v] = c;
      }
  }

  std::vector<int> placed() const
  {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(cls_.size()); ++v)
      if (cls_[v] != -1)
        out.push_back(v);
    return out;
  }

  // Plans the placements of one level. `covered` holds the vertices that
  // will be assigned once every earlier placement has run.
  void plan_level(int level, const std::vector<OrbitStep>& steps, const std::vector<int>& base,
                  std::vector<char>& covered)
  {
    const int n = g_.elements.front().degree();
    auto translate = [&](const Permutation& m) {
      std::vector<int> images;
      images.reserve(base.size());
      for (int h : base) {
        auto it = g_.index.find(m * g_.elements[h]);
        if (it == g_.index.end())
          return std::vector<int>{};
        images.push_back(it->second);
      }
      return images;
    };
    auto add = [&](Placement p) {
      for (int y : p.images)
        covered[y] = 1;
      placements_.push_back(std::move(p));
    };

    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
      const OrbitStep& step = steps[i];
      const Permutation m = step.multiplier.extended(n);
      const std::string name = "level " + std::to_string(level) + " step " + std::to_string(i + 1) + " (" +
                               m.to_string() + ")";
      auto images = translate(m);
      if (images.empty()) {
        log_.push_back(name + ": multiplier is not a vertex, skipped");
        continue;
      }
      if (std::all_of(images.begin(), images.end(), [&](int y) { return covered[y]; })) {
        log_.push_back(name + ": translate already covered, skipped");
        continue;
      }
      add(Placement{level, i, m, base, std::move(images), step.effective_map(), step.class_map.has_value()});
    }

    for (int x = 0; x < g_.graph.vertex_count(); ++x) {
      if (covered[x] || !fixes_above(g_.elements[x], level))
        continue;
      auto images = translate(g_.elements[x]);
      if (std::any_of(images.begin(), images.end(), [&](int y) { return covered[y]; }))
        continue;
      add(Placement{level, -1, g_.elements[x], base, std::move(images), {0, 1, 2}, false});
    }

    for (int x = 0; x < g_.graph.vertex_count(); ++x)
      if (!covered[x] && fixes_above(g_.elements[x], level)) {
        covered[x] = 1;
        residue_.push_back(x);
      }
  }

  // Assigns placement i under map. Returns the newly assigned vertices, or
  // nothing with `conflict` set to the first dependent pair.
  bool apply(const Placement& p, const std::array<int, 3>& map, std::vector<int>& assigned,
             std::pair<int, int>& conflict, bool force)
  {
    bool ok = true;
    assigned.clear();
    for (std::size_t i = 0; i < p.base.size(); ++i) {
      const int y = p.images[i];
      const int c = map[cls_[p.base[i]]];
      if (cls_[y] != -1) {
        if (cls_[y] != c && ok) {
          ok = false;
          conflict = {y, y};
        }
        continue;
      }
      cls_[y] = c;
      assigned.push_back(y);
    }
    for (int y : assigned) {
      for (int z : g_.graph.neighbors(y))
        if (cls_[z] == cls_[y]) {
          if (ok)
            conflict = {std::min(y, z), std::max(y, z)};
          ok = false;
          break;
        }
      if (!ok && !force)
        break;
    }
    if (!ok && !force) {
      for (int y : assigned)
        cls_[y] = -1;
      assigned.clear();
    }
    return ok;
  }

  bool feasible(int v, int c) const
  {
    for (int z : g_.graph.neighbors(v))
      if (cls_[z] == c)
        return false;
    return true;
  }

  // Lowest feasible class per residue vertex with bounded backtracking.
  bool color_residue()
  {
    if (residue_.empty())
      return true;
    const std::int64_t limit = options_.residue_budget > 0
                                 ? options_.residue_budget
                                 : static_cast<std::int64_t>(residue_.size()) * residue_.size() + 1000;
    std::int64_t used = 0;
    std::vector<int> next(residue_.size(), 0);
    std::size_t i = 0;
    while (i < residue_.size()) {
      const int v = residue_[i];
      int c = next[i];
      while (c < 3 && !feasible(v, c))
        ++c;
      if (c < 3) {
        cls_[v] = c;
        next[i] = c + 1;
        ++i;
        continue;
      }
      if (++used > limit || i == 0) {
        for (int u : residue_)
          cls_[u] = -1;
        return false;
      }
      next[i] = 0;
      --i;
      cls_[residue_[i]] = -1;
    }
    return true;
  }

  VertexPartition partition() const
  {
    VertexPartition p;
    p.classes.resize(3);
    for (int v = 0; v < static_cast<int>(cls_.size()); ++v)
      if (cls_[v] != -1)
        p.classes[cls_[v]].push_back(v);
    return p;
  }

  bool leaf()
  {
    if (!color_residue())
      return false;
    if (options_.accept && !options_.accept(partition())) {
      for (int u : residue_)
        cls_[u] = -1;
      return false;
    }
    return true;
  }

  std::vector<std::array<int, 3>> candidates(const Placement& p) const
  {
    std::vector<std::array<int, 3>> out{p.default_map};
    for (const auto& m : all_maps)
      if (m != p.default_map)
        out.push_back(m);
    return out;
  }

  bool search(std::size_t i)
  {
    if (++nodes_ > options_.budget) {
      out_of_budget_ = true;
      return false;
    }
    if (i == placements_.size())
      return leaf();
    std::vector<int> assigned;
    std::pair<int, int> conflict;
    for (const auto& map : candidates(placements_[i])) {
      if (!apply(placements_[i], map, assigned, conflict, false))
        continue;
      chosen_[i] = map;
      if (search(i + 1))
        return true;
      for (int y : assigned)
        cls_[y] = -1;
      if (out_of_budget_)
        return false;
    }
    return false;
  }

  std::vector<std::pair<int, int>> replay()
  {
    std::vector<std::pair<int, int>> conflicts;
    std::vector<int> assigned;
    std::pair<int, int> conflict;
    for (std::size_t i = 0; i < placements_.size(); ++i) {
      chosen_[i] = placements_[i].default_map;
      if (!apply(placements_[i], chosen_[i], assigned, conflict, true) && conflict.first == conflict.second)
        conflicts.push_back(conflict);
    }
    return conflicts;
  }

  std::string describe_pair(std::pair<int, int> e) const
  {
    if (e.first == e.second)
      return g_.elements[e.first].to_string() + " placed in two classes";
    return g_.elements[e.first].to_string() + " ~ " + g_.elements[e.second].to_string();
  }

  OrbitResult run(const std::vector<std::vector<Permutation>>& seed, const std::vector<LevelProgram>& levels)
  {
    this->seed(seed);
    std::vector<char> covered(cls_.size(), 0);
    for (int v : placed())
      covered[v] = 1;
    for (const LevelProgram& level : levels) {
      std::vector<int> base;
      for (int v = 0; v < static_cast<int>(covered.size()); ++v)
        if (covered[v])
          base.push_back(v);
      plan_level(level.degree, level.steps, base, covered);
    }
    chosen_.assign(placements_.size(), {0, 1, 2});

    OrbitResult result;
    bool found = false;
    std::vector<std::pair<int, int>> overlaps;
    if (options_.repair) {
      found = search(0);
      result.nodes = nodes_;
    }
    if (!found) {
      std::fill(cls_.begin(), cls_.end(), -1);
      this->seed(seed);
      overlaps = replay();
      const bool residue_ok = color_residue();
      result.partition = partition();
      result.conflicts = dependent_pairs(g_.graph, result.partition);
      const bool accepted = !options_.accept || options_.accept(result.partition);
      if (result.conflicts.empty() && overlaps.empty() && residue_ok && accepted && !options_.repair)
        found = true;
      else if (options_.repair) {
        result.failure = out_of_budget_ ? "map search exceeded its budget" : "no class maps avoid a conflict";
      }
      else if (!overlaps.empty() || !result.conflicts.empty()) {
        result.failure = "placement conflict";
      }
      else if (!residue_ok) {
        result.failure = "residue vertices could not be placed";
      }
      else {
        result.failure = "partition rejected";
      }
      const auto first = !overlaps.empty() ? overlaps.front()
                         : !result.conflicts.empty() ? result.conflicts.front()
                                                     : std::pair<int, int>{-1, -1};
      if (!found && first.first >= 0)
        result.failure += ": " + describe_pair(first);
    }
    else {
      result.partition = partition();
    }
    result.ok = found;

    result.steps = levels;
    for (std::size_t i = 0; i < placements_.size(); ++i) {
      const Placement& p = placements_[i];
      std::string line = "level " + std::to_string(p.level) + " ";
      line += p.step >= 0 ? "step " + std::to_string(p.step + 1) : std::string("residue coset");
      line += ": multiplier " + p.multiplier.to_string() + ", map " + map_text(chosen_[i]);
      if (chosen_[i] != p.default_map)
        line += " (default " + map_text(p.default_map) + " conflicted)";
      log_.push_back(line);
      if (p.step < 0)
        continue;
      for (auto& level : result.steps) {
        if (level.degree != p.level)
          continue;
        OrbitStep& step = level.steps[p.step];
        const int src = step.source_class;
        step.seeds.clear();
        for (std::size_t j = 0; j < p.base.size(); ++j)
          if (cls_[p.base[j]] == src)
            step.seeds.push_back(g_.elements[p.images[j]]);
      }
    }
    if (!residue_.empty())
      log_.push_back(std::to_string(residue_.size()) + " residue vertices placed one at a time");
    if (options_.repair)
      log_.push_back("map search nodes: " + std::to_string(nodes_));
    result.log = std::move(log_);
    return result;
  }
};

}  // namespace

OrbitResult orbit_extend_levels(const CayleyGraph<Permutation>& g, const std::vector<std::vector<Permutation>>& seed,
                                const std::vector<LevelProgram>& levels, const OrbitOptions& options)
{
  Extender ext(g, options);
  return ext.run(seed, levels);
}

OrbitResult orbit_extend_partition(const CayleyGraph<Permutation>& g,
                                   const std::vector<std::vector<Permutation>>& base,
                                   const std::vector<OrbitStep>& steps, const OrbitOptions& options)
{
  const int n = g.elements.front().degree();
  return orbit_extend_levels(g, base, {LevelProgram{n, steps}}, options);
}

std::vector<std::vector<Permutation>> s3_seed_classes()
{
  auto p = [](const char* s) { return Permutation::parse(s, 3); };
  return {{p("e"), p("(23)")}, {p("(12)"), p("(132)")}, {p("(13)"), p("(123)")}};
}

std::vector<std::vector<Permutation>> a3_seed_classes()
{
  auto p = [](const char* s) { return Permutation::parse(s, 3); };
  return {{p("e")}, {p("(132)")}, {p("(123)")}};
}

std::vector<LevelProgram> star_transposition_program(int n)
{
  std::vector<LevelProgram> out;
  for (int m = 4; m <= n; ++m) {
    LevelProgram level{m, {}};
    for (int i = 2; i < m; ++i)
      level.steps.push_back(OrbitStep{Permutation::transposition(m, 1, i) * Permutation::transposition(m, 1, m)});
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<LevelProgram> adjacent_cycle_program(int n)
{
  std::vector<LevelProgram> out;
  for (int m = 4; m <= n; ++m) {
    const Permutation c = Permutation::long_cycle(m);
    out.push_back(LevelProgram{m,
                               {OrbitStep{Permutation::transposition(m, 1, 2) * c},
                                OrbitStep{Permutation::transposition(m, 1, 3) * c}}});
  }
  return out;
}

std::vector<OrbitStep> published_s4_steps()
{
  OrbitStep a{Permutation::parse("(12)(14)", 4)};
  OrbitStep b{Permutation::parse("(13)(14)", 4)};
  OrbitStep c{Permutation::parse("(14)", 4)};
  c.class_map = std::array<int, 3>{1, 0, 2};
  return {a, b, c};
}

}  // namespace totalcolor
