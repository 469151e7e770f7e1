#include "totalcolor/generating_set.hpp"

#include <array>

namespace totalcolor {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::MinTranspositions, "MIN_TRANSPOSITIONS"},
    {Family::AllTranspositions, "ALL_TRANSPOSITIONS"},
    {Family::Star3Cycles, "STAR_3CYCLES"},
    {Family::SnAdjacentCycle, "SN_ADJACENT_CYCLE"},
    {Family::AnThreeCycleNCycle, "AN_3CYCLE_NCYCLE"},
    {Family::DihedralInterval, "DIHEDRAL_INTERVAL"},
    {Family::DihedralCustom, "DIHEDRAL_CUSTOM"},
}};

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::invalid_argument(what);
}

}  // namespace

std::string_view family_name(Family f)
{
  for (auto [fam, name] : kFamilyNames)
    if (fam == f)
      return name;
  return "UNKNOWN";
}

Family family_from_name(std::string_view name)
{
  for (auto [fam, n] : kFamilyNames)
    if (n == name)
      return fam;
  throw std::invalid_argument("unknown generating set family: " + std::string(name));
}

GeneratingSet<Permutation> standard_generating_set(Family family, int n)
{
  GeneratingSet<Permutation> gens{{}, family};
  auto& out = gens.elements;
  switch (family) {
  case Family::MinTranspositions:
    require(n > 2, "MIN_TRANSPOSITIONS needs n > 2");
    for (int j = 2; j <= n; ++j)
      out.push_back(Permutation::transposition(n, 1, j));
    break;
  case Family::AllTranspositions:
    require(n >= 2, "ALL_TRANSPOSITIONS needs n >= 2");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out.push_back(Permutation::transposition(n, i, j));
    break;
  case Family::Star3Cycles: {
    require(n >= 3, "STAR_3CYCLES needs n >= 3");
    for (int m = 3; m <= n; ++m) {
      const int c[] = {1, 2, m};
      out.push_back(Permutation::cycle(n, c));
    }
    for (int m = n; m >= 3; --m) {
      const int c[] = {1, m, 2};
      out.push_back(Permutation::cycle(n, c));
    }
    break;
  }
  case Family::SnAdjacentCycle: {
    require(n >= 3, "SN_ADJACENT_CYCLE needs n >= 3");
    const Permutation c = Permutation::long_cycle(n);
    out = {Permutation::transposition(n, 1, 2), c, inverse(c)};
    break;
  }
  case Family::AnThreeCycleNCycle: {
    require(n >= 4, "AN_3CYCLE_NCYCLE needs n >= 4");
    const int t[] = {1, 2, 3};
    const Permutation three = Permutation::cycle(n, t);
    const Permutation c = Permutation::long_cycle(n);
    out = {three, inverse(three), c, inverse(c)};
    break;
  }
  case Family::DihedralInterval:
  case Family::DihedralCustom:
    throw std::invalid_argument("dihedral families are built by dihedral_interval_set / dihedral_custom_set");
  }
  return gens;
}

GeneratingSet<DihedralElement> dihedral_interval_set(int n, int k)
{
  require(n >= 3, "dihedral interval set needs n >= 3");
  require(k >= 1 && 2 * k < n, "dihedral interval set needs 1 <= k < n/2");
  GeneratingSet<DihedralElement> gens{{}, Family::DihedralInterval};
  for (int d = 1; d <= k; ++d)
    gens.elements.push_back(DihedralElement::rotation(n, d));
  for (int d = n - k; d < n; ++d)
    gens.elements.push_back(DihedralElement::rotation(n, d));
  gens.elements.push_back(DihedralElement::reflection(n, 0));
  return gens;
}

GeneratingSet<DihedralElement> dihedral_custom_set(int n, const std::vector<int>& rotations,
                                                   const std::vector<int>& reflections)
{
  require(n >= 2, "dihedral custom set needs n >= 2");
  std::set<int> rot;
  for (int d : rotations) {
    require(d > 0 && d < n, "rotation difference " + std::to_string(d) + " outside (0, n)");
    rot.insert(d);
  }
  for (int d : rot)
    require(rot.contains(n - d), "rotation set not inverse-closed: " + std::to_string(d) + " without " +
                                     std::to_string(n - d));
  std::set<int> refl;
  for (int i : reflections) {
    require(i >= 0 && i < n, "reflection index " + std::to_string(i) + " outside [0, n)");
    refl.insert(i);
  }
  GeneratingSet<DihedralElement> gens{{}, Family::DihedralCustom};
  for (int d : rot)
    gens.elements.push_back(DihedralElement::rotation(n, d));
  for (int i : refl)
    gens.elements.push_back(DihedralElement::reflection(n, i));
  return gens;
}

std::vector<Permutation> symmetric_group(int n)
{
  return generate_group(standard_generating_set(Family::AllTranspositions, n));
}

std::vector<Permutation> alternating_group(int n)
{
  std::vector<Permutation> out;
  for (auto& p : symmetric_group(n))
    if (p.is_even())
      out.push_back(p);
  return out;
}

std::vector<DihedralElement> dihedral_group(int n)
{
  std::vector<DihedralElement> out;
  for (int i = 0; i < n; ++i)
    out.push_back(DihedralElement::rotation(n, i));
  for (int i = 0; i < n; ++i)
    out.push_back(DihedralElement::reflection(n, i));
  return out;
}

}  // namespace totalcolor
