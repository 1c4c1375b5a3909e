#include "torelli/homology.hpp"

#include "torelli/error.hpp"

namespace torelli {

SymplecticMatrix SymplecticMatrix::identity(int dim) {
  SymplecticMatrix m;
  m.dim = dim;
  m.entries.assign(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool SymplecticMatrix::is_identity() const { return *this == identity(dim); }

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
  require(x.dim == y.dim, "matrix dimensions differ");
  SymplecticMatrix m = SymplecticMatrix::identity(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) {
      long long s = 0;
      for (int k = 0; k < x.dim; ++k) s += x.at(i, k) * y.at(k, j);
      m.at(i, j) = s;
    }
  return m;
}

HomologyVector transvection(const HomologyVector& x, const OrientedCurve& a) {
  HomologyVector h = homology_class(a);
  require(x.size() == h.size(), "homology vector has the wrong length");
  int p = symplectic_pairing(x, h);
  HomologyVector out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] += p * h[i];
  return out;
}

SymplecticMatrix letter_matrix(const TwistLetter& l) {
  require(l.curve.curve.valid(), "twist letter needs an essential curve");
  require(l.exponent != 0, "twist exponent must be nonzero");
  HomologyVector h = homology_class(l.curve);
  const int n = static_cast<int>(h.size());
  SymplecticMatrix m = SymplecticMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    HomologyVector e(n, 0);
    e[j] = 1;
    int p = symplectic_pairing(e, h);
    for (int i = 0; i < n; ++i) m.at(i, j) += static_cast<long long>(l.exponent) * p * h[i];
  }
  return m;
}

SymplecticMatrix word_matrix(const TwistWord& w, int genus) {
  SymplecticMatrix m = SymplecticMatrix::identity(2 * genus);
  for (const auto& l : w.letters) {
    require(l.curve.curve.surface().genus() == genus, "twist letter lives on another surface");
    m = m * letter_matrix(l);
  }
  return m;
}

bool is_symplectic(const SymplecticMatrix& m) {
  const int n = m.dim;
  auto J = [&](int i, int j) {
    HomologyVector x(n, 0), y(n, 0);
    x[i] = 1;
    y[j] = 1;
    return symplectic_pairing(x, y);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += m.at(k, i) * J(k, l) * m.at(l, j);
      if (s != J(i, j)) return false;
    }
  return true;
}

bool is_torelli_on_homology(const TwistWord& w, int genus) { return word_matrix(w, genus).is_identity(); }

TwistWord bounding_pair_map(const CurveClass& a, const CurveClass& b) {
  return {{{{a, 1}, 1}, {{b, 1}, -1}}};
}

}  // namespace torelli
