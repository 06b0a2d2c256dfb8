#pragma once

// Brute-force reference implementations used only by tests.  They are kept
// independent of the library's arithmetic paths on purpose: monomial products
// are sorted generator by generator with explicit adjacent transpositions, and
// determinants expand along the first row.

#include <optional>
#include <utility>
#include <vector>

#include "fdc/element.hpp"
#include "fdc/exact_matrix.hpp"

namespace fdc::testing {

// (kind, index) with kind 0 = theta, 1 = xi; index 1-based.
using NaiveWord = std::vector<std::pair<int, int>>;

inline NaiveWord naiveWordOf(const Monomial& m) {
  NaiveWord w;
  for (int i : m.thetaIndices()) w.push_back({0, i});
  for (int i : m.xiIndices()) w.push_back({1, i});
  return w;
}

// Bubble-sorts the concatenation with a sign flip per adjacent swap; nullopt
// when a generator repeats (the product vanishes).
inline std::optional<std::pair<Monomial, int>> naiveProduct(const Monomial& a,
                                                            const Monomial& b) {
  NaiveWord w = naiveWordOf(a);
  for (auto g : naiveWordOf(b)) w.push_back(g);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == w[k + 1]) return std::nullopt;
      if (w[k + 1] < w[k]) {
        std::swap(w[k], w[k + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  Mask theta = 0, xi = 0;
  for (auto [kind, idx] : w) {
    Mask& m = kind == 0 ? theta : xi;
    m |= bitAt(idx - 1);
  }
  return std::make_pair(Monomial(a.rank(), theta, xi), sign);
}

inline Element naiveMultiply(const Element& a, const Element& b) {
  Element out(a.rank());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto p = naiveProduct(ma, mb))
        out += Element::term(p->first, ca * cb * p->second);
  return out;
}

// First-row cofactor expansion; exponential, for small matrices only.
inline Rational cofactorDeterminant(const ExactMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational det = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Rational term = m.at(0, j) * cofactorDeterminant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace fdc::testing
