#pragma once

#include <vector>

#include "torelli/curve.hpp"

namespace torelli {

struct TwistLetter {
  OrientedCurve curve;
  int exponent = 1;  // nonzero
};

// Letters compose as maps in word order: the last letter acts first.
struct TwistWord {
  std::vector<TwistLetter> letters;
};

// Integer 2g x 2g matrix acting on column vectors in the basis (alpha_1, beta_1, ...).
struct SymplecticMatrix {
  int dim = 0;
  std::vector<long long> entries;  // row-major

  static SymplecticMatrix identity(int dim);
  long long at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
  long long& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
  bool is_identity() const;
  bool operator==(const SymplecticMatrix& o) const = default;
};

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y);

// x + <x,[a]> [a].
HomologyVector transvection(const HomologyVector& x, const OrientedCurve& a);
// Action of the letter's twist on homology: x + n <x,[a]> [a].
SymplecticMatrix letter_matrix(const TwistLetter& l);
SymplecticMatrix word_matrix(const TwistWord& w, int genus);
bool is_symplectic(const SymplecticMatrix& m);
bool is_torelli_on_homology(const TwistWord& w, int genus);

// D_a D_b^{-1} with b oriented homologous to a (orientation does not affect the action).
TwistWord bounding_pair_map(const CurveClass& a, const CurveClass& b);

}  // namespace torelli
