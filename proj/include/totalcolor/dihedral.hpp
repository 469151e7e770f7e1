#pragma once

#include <compare>
#include <string>

namespace totalcolor {

/// Element s^rot (refl == false) or r s^rot (refl == true) of the dihedral
/// group of order 2n, with r^2 = e, s^n = e and (rs)^2 = e.
class DihedralElement
{
public:
  DihedralElement() = default;
  DihedralElement(int n, int rot, bool refl);

  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement rotation(int n, int power) { return {n, power, false}; }
  static DihedralElement reflection(int n, int power) { return {n, power, true}; }

  int n() const { return n_; }
  int rot() const { return rot_; }
  bool refl() const { return refl_; }
  bool is_identity() const { return rot_ == 0 && !refl_; }
  int order() const;

  /// "e", "s^3", "r", "rs^2".
  std::string to_string() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend std::strong_ordering operator<=>(const DihedralElement& a, const DihedralElement& b)
  {
    if (auto c = a.rot_ <=> b.rot_; c != 0)
      return c;
    return a.refl_ <=> b.refl_;
  }

private:
  int n_ = 1;
  int rot_ = 0;
  bool refl_ = false;
};

DihedralElement operator*(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& x);
inline DihedralElement identity_like(const DihedralElement& x) { return DihedralElement::identity(x.n()); }

}  // namespace totalcolor
