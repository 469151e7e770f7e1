#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace totalcolor {

/// A bijection on {1..n}, stored as its image sequence.
///
/// Two products are in play and they read in opposite directions:
///  - compose(p, q) is function composition p∘q: q is applied first.
///  - a * b is the group product used for Cayley graphs, written left to
///    right: a is applied first, then b. So a * b == compose(b, a).
///
/// Cayley adjacency is x ~ x * s and "left multiplication" by g is
/// x -> g * x, which is always a graph automorphism. Products of cycles in
/// text ("(12)(14)") are read with the group product, so "(12)(14)" is
/// (1 2) * (1 4) == (1 2 4).
class Permutation
{
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless images is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);
  /// The cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0.
  static Permutation cycle(int degree, std::span<const int> symbols);
  /// (1 2 ... n)
  static Permutation long_cycle(int degree);

  /// Parses cycle notation such as "(1 2)(3 4)", "(132)" or "e". Symbols
  /// may be separated by spaces or commas; without separators every digit
  /// is a symbol (only valid when degree <= 9).
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int symbol) const { return images_[symbol - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  int order() const;

  /// Same permutation acting on {1..degree}, fixing the added symbols.
  Permutation extended(int degree) const;

  /// Canonical disjoint-cycle form, smallest moved symbol first in each
  /// cycle, cycles ordered by that symbol. Identity prints as "e". Symbols
  /// are written without separators when degree <= 9.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
  {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation operator*(const Permutation& a, const Permutation& b);

inline Permutation identity_like(const Permutation& p) { return Permutation::identity(p.degree()); }

}  // namespace totalcolor
