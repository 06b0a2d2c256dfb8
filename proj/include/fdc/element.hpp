#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "fdc/monomial.hpp"
#include "fdc/path.hpp"
#include "fdc/rational.hpp"

namespace fdc {

/// Sparse exact-rational linear combination of canonical monomials of a fixed
/// rank.  Zero coefficients are never stored; all values are immutable after
/// construction apart from the compound-assignment operators.
class Element {
 public:
  explicit Element(int n);

  static Element zero(int n) { return Element(n); }
  static Element one(int n) { return term(Monomial::one(n), 1); }
  static Element term(const Monomial& m, const Rational& coeff);
  static Element generatorTheta(int i, int n);
  static Element generatorXi(int i, int n);

  int rank() const { return n_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

  /// Exterior product.  Signs follow from counting the adjacent
  /// transpositions that re-sort the concatenated generator word.
  friend Element multiply(const Element& a, const Element& b);

  bool operator==(const Element&) const = default;

  /// All terms share one bidegree (the zero element counts as bihomogeneous).
  bool isBihomogeneous() const;
  std::optional<Bidegree> homogeneousBidegree() const;

  std::string toText() const;

 private:
  void addTerm(const Monomial& m, const Rational& coeff);

  int n_;
  std::map<Monomial, Rational> terms_;
};

/// delta_n = theta_1 xi_1 + ... + theta_n xi_n, the Casimir element.
Element casimir(int n);

/// delta_n^k; nonzero exactly when k <= n.
Element casimirPower(int n, int k);

/// v(A,B) = theta_{c_1} xi_{c_1} ... theta_{c_t} xi_{c_t} . theta_{a_1} ...
/// . xi_{b_1} ..., with c's = A cap B, a's = A - B, b's = B - A ascending.
/// Pairing the shared indices at the front makes multiplication by the
/// Casimir element sign-free: delta_n . v(A,B) = sum over c outside A u B of
/// v(A+c, B+c) with coefficient exactly +1.  Returns +-1 times the canonical
/// monomial with supports (A, B).
Element vBasisMonomial(const std::vector<int>& a, const std::vector<int>& b, int n);
Element vBasisMonomialMask(Mask a, Mask b, int n);

/// Bijection between monomials and decorated paths: step i is Up when i is in
/// neither support, a decorated horizontal step when it is in exactly one, and
/// Down when it is in both.
Path toPath(const Monomial& m);
Monomial fromPath(const Path& p);

/// One generator occurrence inside a word; index is 1-based.
struct GeneratorRef {
  bool isXi = false;
  int index = 0;
};

/// Sorts an arbitrary generator word into canonical form, returning the
/// monomial and the sign of the sorting permutation; nullopt when a generator
/// repeats (the product is zero).
std::optional<std::pair<Monomial, int>> canonicalizeWord(std::span<const GeneratorRef> word,
                                                         int n);

/// Text form "c1*t1 x2 + c2*t3 ...".  The parser accepts generators in any
/// order and re-canonicalizes with signs.
std::string elementToText(const Element& e);
Element elementFromText(const std::string& text, int n);

/// JSON form {"n": .., "terms": [{"theta": [...], "xi": [...], "coeff": "p/q"}]}
/// serialized as a string; the parser accepts unsorted index lists.
std::string elementToJsonText(const Element& e);
Element elementFromJsonText(const std::string& jsonText);

}  // namespace fdc
