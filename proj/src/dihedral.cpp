#include "totalcolor/dihedral.hpp"

#include <stdexcept>

namespace totalcolor {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

DihedralElement::DihedralElement(int n, int rot, bool refl) : n_(n), rot_(0), refl_(refl)
{
  if (n < 1)
    throw std::invalid_argument("dihedral order parameter must be positive");
  rot_ = mod(rot, n);
}

int DihedralElement::order() const
{
  if (refl_)
    return 2;
  int k = 1;
  while (mod(rot_ * k, n_) != 0)
    ++k;
  return k;
}

std::string DihedralElement::to_string() const
{
  if (!refl_)
    return rot_ == 0 ? "e" : (rot_ == 1 ? "s" : "s^" + std::to_string(rot_));
  if (rot_ == 0)
    return "r";
  return rot_ == 1 ? "rs" : "rs^" + std::to_string(rot_);
}

// s^a s^b = s^(a+b);  s^a r s^b = r s^(b-a);  r s^a s^b = r s^(a+b);  r s^a r s^b = s^(b-a)
DihedralElement operator*(const DihedralElement& a, const DihedralElement& b)
{
  if (a.n() != b.n())
    throw std::invalid_argument("dihedral elements of different groups");
  const int n = a.n();
  if (!b.refl())
    return {n, a.rot() + b.rot(), a.refl()};
  return {n, b.rot() - a.rot(), !a.refl()};
}

DihedralElement inverse(const DihedralElement& x)
{
  if (x.refl())
    return x;
  return {x.n(), -x.rot(), false};
}

}  // namespace totalcolor
