// Dominant weights for the symplectic series C2/C3, closed-form dimension
// polynomials, and exact characters (alternant quotient and Freudenthal).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gsp6/ring.hpp"

namespace gsp6::weights {

enum class Series { C2, C3 };

// Weakly decreasing tuple of non-negative integers: (l1>=l2>=l3) or (m1>=m2).
struct DominantWeight {
  Series series;
  std::array<int, 3> e{0, 0, 0};  // e[2] unused for C2

  static DominantWeight c2(int m1, int m2);
  static DominantWeight c3(int l1, int l2, int l3);
  int rank() const { return series == Series::C2 ? 2 : 3; }
  int total() const;  // |lambda|
  bool operator==(const DominantWeight& o) const { return series == o.series && e == o.e; }
  bool operator<(const DominantWeight& o) const;
};

using Exp = std::array<int, 3>;  // torus exponent vector (3rd coord 0 for C2)

// Sparse torus character: exponent vector -> multiplicity, plus a global
// multiplier twist (exponent of the similitude character nu).
struct FormalCharacter {
  int rank = 3;
  int multiplier_twist = 0;
  std::map<Exp, long long> terms;

  long long total() const;
  long long mult(const Exp& w) const;
  void add(const Exp& w, long long c);
  bool weyl_invariant() const;  // signed coordinate permutations
};

// Paper's product polynomial divided by 6 (C2) or 720 (C3); exact division.
long long closed_form_dimension(const DominantWeight& w);

// Independent oracle: Weyl dimension formula over the positive roots.
long long weyl_dimension(const DominantWeight& w);

// Weyl character formula as exact alternant quotient.
FormalCharacter character(const DominantWeight& w);

// Freudenthal recursion, independent of character().
long long weight_multiplicity(const DominantWeight& w, const Exp& target);

// All dominant weights of the series with total() <= bound.
std::vector<DominantWeight> weights_up_to(Series s, int bound);
// All C3 weights with l1 <= cap.
std::vector<DominantWeight> c3_with_first_entry_up_to(int cap);

}  // namespace gsp6::weights
