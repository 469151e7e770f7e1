#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "totalcolor/construction.hpp"

namespace totalcolor {

enum class DihedralVariant
{
  Interval,        // T1 = {+-1..+-k}, T2 = {r}
  SameDifference,  // any T1 and T2
  Complement,      // T2 = every reflection index except base_index + j*d
};

std::string_view variant_name(DihedralVariant v);

struct DihedralColoringSpec
{
  int n = 0;
  std::vector<int> t1;  // rotation exponents
  std::vector<int> t2;  // reflection indices i of r s^i
  DihedralVariant variant = DihedralVariant::SameDifference;
  int k = 0;
  int d = 0;
  int base_index = 0;

  static DihedralColoringSpec interval(int n, int k);
  static DihedralColoringSpec same_difference(int n, std::vector<int> t1, std::vector<int> t2);
  /// T1 = {+-1..+-k}, reflections whose index is not base_index mod d.
  static DihedralColoringSpec complement(int n, int k, int d, int base_index = 0);
  /// The n = 8k+4 family: complement(8k+4, k, 2k+1, 0).
  static DihedralColoringSpec complement_family(int k);

  /// Empty when the spec is consistent with its variant.
  std::vector<std::string> validate() const;

  friend bool operator==(const DihedralColoringSpec&, const DihedralColoringSpec&) = default;
};

/// Rotation layer: a total coloring of the circulant on T1. Reflection
/// layer: the rotation layer carried over by x -> x * r s^j, so r s^b takes
/// the colors of s^(j-b) through a palette permutation. Edges r s^i each add
/// one fresh color. Interval shifts class c to c+1; the other variants keep
/// classes; Complement first tries per-class multipliers r s^(base-c).
/// Throws std::invalid_argument when validate() reports problems.
Construction dihedral_total_color(const DihedralColoringSpec& spec, std::int64_t budget = 1'000'000);

}  // namespace totalcolor
