#include <doctest.h>

#include <algorithm>
#include <random>

#include "totalcolor/generating_set.hpp"

using namespace totalcolor;

namespace {

Permutation p(const char* text, int degree)
{
  return Permutation::parse(text, degree);
}

bool has_violation(const std::vector<std::string>& report, const std::string& needle)
{
  return std::any_of(report.begin(), report.end(),
                     [&](const std::string& line) { return line.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("compose applies the right factor first")
{
  CHECK(compose(Permutation::identity(3), p("(12)", 3)) == p("(12)", 3));
  const Permutation r = compose(p("(12)", 3), p("(13)", 3));
  CHECK(r == p("(132)", 3));
  CHECK(r.images() == std::vector<int>{3, 1, 2});
  CHECK(p("(12)", 3) * p("(13)", 3) == compose(p("(13)", 3), p("(12)", 3)));
}

TEST_CASE("inverse")
{
  CHECK(inverse(Permutation::identity(5)).is_identity());
  CHECK(inverse(p("(123)", 3)) == p("(132)", 3));
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> reversed(n);
    for (int i = 0; i < n; ++i)
      reversed[i] = n - i;
    CHECK(inverse(Permutation::long_cycle(n)) == Permutation::cycle(n, reversed));
  }
}

TEST_CASE("compose with inverse gives the identity for random permutations")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i)
      images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation x(images);
    CHECK(compose(x, inverse(x)).is_identity());
    CHECK(compose(inverse(x), x).is_identity());
  }
}

TEST_CASE("parse and print round trip")
{
  CHECK(p("e", 4).to_string() == "e");
  CHECK(p("(1 2)(3 4)", 4).to_string() == "(12)(34)");
  CHECK(p("(1,3,2)", 3).to_string() == "(132)");
  CHECK(p("(12)(14)", 4) == p("(12)", 4) * p("(14)", 4));
  CHECK_THROWS_AS(p("(15)", 4), std::invalid_argument);
  CHECK_THROWS_AS(p("(1a)", 4), std::invalid_argument);
}

TEST_CASE("parity and order")
{
  CHECK(p("(123)", 4).is_even());
  CHECK_FALSE(p("(1234)", 4).is_even());
  CHECK(p("(12)(345)", 5).order() == 6);
}

TEST_CASE("generate_group sizes")
{
  CHECK(generate_group(standard_generating_set(Family::MinTranspositions, 3)).size() == 6);
  const auto a4 = generate_group(standard_generating_set(Family::Star3Cycles, 4));
  CHECK(a4.size() == 12);
  CHECK(std::all_of(a4.begin(), a4.end(), [](const Permutation& x) { return x.is_even(); }));
  GeneratingSet<DihedralElement> rs{{DihedralElement::reflection(5, 0), DihedralElement::rotation(5, 1)},
                                    Family::DihedralCustom};
  CHECK(generate_group(rs).size() == 10);
  CHECK(symmetric_group(5).size() == 120);
  CHECK(alternating_group(5).size() == 60);
  CHECK(dihedral_group(6).size() == 12);
}

TEST_CASE("standard generating sets")
{
  const auto tm = standard_generating_set(Family::MinTranspositions, 4);
  CHECK(tm.elements == std::vector<Permutation>{p("(12)", 4), p("(13)", 4), p("(14)", 4)});
  const auto star = standard_generating_set(Family::Star3Cycles, 4);
  std::vector<Permutation> expected{p("(123)", 4), p("(124)", 4), p("(142)", 4), p("(132)", 4)};
  std::vector<Permutation> got = star.elements;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  const auto interval = dihedral_interval_set(36, 4);
  CHECK(interval.elements.size() == 9);
  std::vector<int> powers;
  for (const auto& x : interval.elements)
    if (!x.refl())
      powers.push_back(x.rot());
  std::sort(powers.begin(), powers.end());
  CHECK(powers == std::vector<int>{1, 2, 3, 4, 32, 33, 34, 35});
}

TEST_CASE("validate_generating_set reports violations")
{
  const auto s3 = symmetric_group(3);
  const GeneratingSet<Permutation> single{{p("(12)", 3)}, Family::MinTranspositions};
  CHECK(has_violation(validate_generating_set(single, s3), "does not generate"));
  const GeneratingSet<Permutation> cyc{{p("(123)", 3)}, Family::Star3Cycles};
  CHECK(has_violation(validate_generating_set(cyc, s3), "not inverse-closed"));
  for (int n : {4, 6}) {
    const auto report = validate_generating_set(standard_generating_set(Family::AnThreeCycleNCycle, n),
                                                alternating_group(n));
    CHECK(has_violation(report, "is not in the group"));
  }
  CHECK(validate_generating_set(standard_generating_set(Family::AnThreeCycleNCycle, 5), alternating_group(5)).empty());
  CHECK(validate_generating_set(standard_generating_set(Family::SnAdjacentCycle, 5), symmetric_group(5)).empty());
}

TEST_CASE("dihedral multiplication")
{
  const auto s = DihedralElement::rotation(6, 1);
  const auto r = DihedralElement::reflection(6, 0);
  CHECK((r * r).is_identity());
  CHECK((r * s) * (r * s) == DihedralElement::identity(6));
  CHECK(s * r == r * inverse(s));
}
