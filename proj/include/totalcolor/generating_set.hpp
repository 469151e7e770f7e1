#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "totalcolor/dihedral.hpp"
#include "totalcolor/permutation.hpp"

namespace totalcolor {

enum class Family
{
  MinTranspositions,   // {(12),(13),...,(1n)}
  AllTranspositions,   // every (ij)
  Star3Cycles,         // {(123),...,(12n),(1n2),...,(132)}
  SnAdjacentCycle,     // {(12),(12...n),(n...21)}
  AnThreeCycleNCycle,  // {(123),(132),(12...n),(n...21)}
  DihedralInterval,    // {s^1..s^k, s^(n-k)..s^(n-1), r}
  DihedralCustom,      // explicit rotations T1 and reflections r s^i, i in T2
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

template <class E>
struct GeneratingSet
{
  std::vector<E> elements;
  Family family;
};

template <class E>
concept GroupElement = requires(const E& a, const E& b) {
  { a * b } -> std::convertible_to<E>;
  { inverse(a) } -> std::convertible_to<E>;
  { identity_like(a) } -> std::convertible_to<E>;
  { a.is_identity() } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
};

/// All products of the generators, breadth first from the identity. Each
/// distance layer is emitted in increasing element order, so the result
/// does not depend on the order of the generators.
template <GroupElement E>
std::vector<E> generate_group(const GeneratingSet<E>& gens)
{
  if (gens.elements.empty())
    throw std::invalid_argument("generate_group needs at least one generator");
  const E e = identity_like(gens.elements.front());
  std::set<E> seen{e};
  std::vector<E> order{e};
  std::vector<E> layer{e};
  while (!layer.empty()) {
    std::set<E> next;
    for (const E& x : layer)
      for (const E& s : gens.elements) {
        E y = x * s;
        if (!seen.contains(y))
          next.insert(y);
      }
    layer.assign(next.begin(), next.end());
    for (const E& y : layer) {
      seen.insert(y);
      order.push_back(y);
    }
  }
  return order;
}

/// Violations of the Cayley generating set requirements, as human-readable
/// lines. Empty means valid: identity-free, inverse-closed, contained in
/// the group and generating all of it.
template <GroupElement E>
std::vector<std::string> validate_generating_set(const GeneratingSet<E>& gens, const std::vector<E>& group)
{
  std::vector<std::string> out;
  if (gens.elements.empty()) {
    out.emplace_back("generating set is empty");
    return out;
  }
  const std::set<E> members(gens.elements.begin(), gens.elements.end());
  const std::set<E> group_set(group.begin(), group.end());
  for (const E& s : gens.elements) {
    if (s.is_identity())
      out.push_back("contains the identity");
    if (!members.contains(inverse(s)))
      out.push_back("not inverse-closed: " + s.to_string() + " present but its inverse " +
                    inverse(s).to_string() + " is not");
    if (!group_set.contains(s))
      out.push_back("element " + s.to_string() + " is not in the group");
  }
  if (members.size() != gens.elements.size())
    out.push_back("contains duplicate elements");
  const std::vector<E> closure = generate_group(gens);
  const std::set<E> closure_set(closure.begin(), closure.end());
  if (closure_set != group_set)
    out.push_back("does not generate the group: closure has " + std::to_string(closure.size()) +
                  " elements, group has " + std::to_string(group_set.size()));
  return out;
}

/// Permutation families. Throws std::invalid_argument for a dihedral tag
/// or an n that is too small for the family.
GeneratingSet<Permutation> standard_generating_set(Family family, int n);

/// {s^1..s^k, s^(n-k)..s^(n-1), r}; requires 1 <= k < n/2.
GeneratingSet<DihedralElement> dihedral_interval_set(int n, int k);

/// Rotations s^d for d in rotations plus reflections r s^i for i in
/// reflections. Throws unless the rotation set is inverse-closed mod n and
/// free of 0.
GeneratingSet<DihedralElement> dihedral_custom_set(int n, const std::vector<int>& rotations,
                                                   const std::vector<int>& reflections);

std::vector<Permutation> symmetric_group(int n);
std::vector<Permutation> alternating_group(int n);
std::vector<DihedralElement> dihedral_group(int n);

}  // namespace totalcolor
