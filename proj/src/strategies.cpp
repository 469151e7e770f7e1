#include "totalcolor/strategies.hpp"

#include <stdexcept>

#include "totalcolor/builders.hpp"
#include "totalcolor/circulant_colorers.hpp"
#include "totalcolor/dihedral_colorer.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/kneser.hpp"
#include "totalcolor/permutation_colorers.hpp"

namespace totalcolor {

std::string_view strategy_name(Strategy s)
{
  switch (s) {
  case Strategy::Theorem: return "theorem";
  case Strategy::Greedy: return "greedy";
  case Strategy::Exact: return "exact";
  }
  return "theorem";
}

Strategy strategy_from_name(std::string_view name)
{
  for (Strategy s : {Strategy::Theorem, Strategy::Greedy, Strategy::Exact})
    if (strategy_name(s) == name)
      return s;
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

namespace {

Construction theorem_construction(const ColorRequest& q)
{
  const Recipe& r = q.recipe;
  OrbitOptions options;
  options.budget = q.budget;
  switch (r.family) {
  case GraphFamily::SnTm: return total_color_sn_tm(r.n, options);
  case GraphFamily::AnStar3: return total_color_an_star3(r.n, q.budget);
  case GraphFamily::SnAdjacentCycle: return total_color_adjacent_cycle(GroupKind::Symmetric, r.n, options, q.budget);
  case GraphFamily::AnThreeCycleNCycle:
    return total_color_adjacent_cycle(GroupKind::Alternating, r.n, options, q.budget);
  case GraphFamily::DihedralInterval: return dihedral_total_color(DihedralColoringSpec::interval(r.n, r.k), q.budget);
  case GraphFamily::Dihedral:
    if (q.dihedral_variant == "complement")
      return dihedral_total_color(DihedralColoringSpec::complement(r.n, r.k, q.d, q.base_index), q.budget);
    if (q.dihedral_variant != "same-difference")
      throw std::invalid_argument("unknown dihedral variant: " + q.dihedral_variant);
    return dihedral_total_color(DihedralColoringSpec::same_difference(r.n, r.rotations, r.reflections), q.budget);
  case GraphFamily::Circulant: return circulant_total(r.n, r.rotations, q.budget);
  case GraphFamily::KneserComplement: return kneser_complement_total(r.n, r.k, q.budget);
  default: break;
  }
  throw std::invalid_argument("no theorem construction for family " + std::string(graph_family_name(r.family)));
}

}  // namespace

Construction color_graph(const ColorRequest& request)
{
  if (request.strategy == Strategy::Theorem)
    return theorem_construction(request);
  Construction out(build_graph(request.recipe));
  if (request.strategy == Strategy::Greedy) {
    out.coloring = greedy_total_coloring(out.graph);
    out.log.push_back("DSATUR greedy on the total graph");
  }
  else {
    const ChromaticResult chi = total_chromatic_number(out.graph, request.budget);
    out.coloring = total_coloring_from(out.graph, chi.coloring);
    out.log.push_back(chi.exact ? "exact: chi'' = " + std::to_string(chi.upper)
                                : "budget exhausted: chi'' in [" + std::to_string(chi.lower) + ", " +
                                    std::to_string(chi.upper) + "]");
  }
  finish_construction(out);
  return out;
}

}  // namespace totalcolor
