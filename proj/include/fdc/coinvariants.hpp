#pragma once

#include <vector>

#include "fdc/element.hpp"
#include "fdc/exact_matrix.hpp"
#include "fdc/monomial.hpp"
#include "fdc/path.hpp"
#include "fdc/qt_polynomial.hpp"

namespace fdc {

enum class ModelKind { ReflectionRank, Permutation };

/// The two quotient models.  ReflectionRank(n) is the rank-n fermionic
/// diagonal coinvariant ring, cut out by the principal ideal of the Casimir
/// element; Permutation(n) is the quotient of the rank-n diagonal action by
/// the three invariant generators sum(theta), sum(xi), and the Casimir.
struct QuotientModel {
  ModelKind kind = ModelKind::ReflectionRank;
  int n = 1;

  static QuotientModel reflectionRank(int n) { return {ModelKind::ReflectionRank, n}; }
  static QuotientModel permutation(int n) { return {ModelKind::Permutation, n}; }

  std::vector<Element> idealGenerators() const;
};

/// Monomials of one bidegree in the shared colex-pair order.
std::vector<Monomial> bidegreeMonomials(int n, Bidegree d);

/// Rows spanning the bidegree-d slice of the defining ideal, expressed in the
/// monomial basis of that bidegree.  The generators are central up to sign, so
/// right multiples of monomials span the slice.
ExactMatrix idealPieceBasis(const QuotientModel& model, Bidegree d);

/// dim of the ambient bidegree piece minus the rank of the ideal slice.
long long quotientDimension(const QuotientModel& model, Bidegree d);

/// Closed-form dimension: with m the effective rank (n for ReflectionRank,
/// n-1 for Permutation), C(m,i)C(m,j) - C(m,i-1)C(m,j-1), zero when i+j > m.
long long closedFormDimension(const QuotientModel& model, Bidegree d);

/// Bigraded Hilbert series from the linear-algebra oracle.
QTPolynomial hilbertSeries(const QuotientModel& model, int cap = kEnumerationCap);

/// Bigraded Hilbert series from the closed form.
QTPolynomial hilbertSeriesClosedForm(const QuotientModel& model);

/// Anti-diagonal dimensions [dim(DR_W)_{k,n-k}] for k = 0..n; these are the
/// Narayana numbers Nar(n+1,k+1) and sum to Cat(n+1).
std::vector<long long> narayanaBoundary(int n);

/// Dimension of the S_n-invariant subspace of the bidegree piece under the
/// diagonal permutation action, by Reynolds averaging over cycle types.
long long invariantDimension(int n, Bidegree d);

/// xi'_i = xi_i + xi_2 + ... + xi_n.
Element primedGenerator(int i, int n);

struct PrimedBidegreeRow {
  int i = 0;
  int j = 0;
  long long pathCount = 0;
  long long quotientDim = 0;
  bool independent = false;
};

struct PrimedBasisReport {
  int n = 0;
  long long expectedTotal = 0;
  long long pathTotal = 0;
  std::vector<PrimedBidegreeRow> rows;
  Rational transitionDet;
  bool transitionDetOk = false;
  bool pass = false;
};

/// Builds the primed weights of the strictly positive paths, projects each to
/// quotient coordinates (the complement of the ideal row space per bidegree),
/// and certifies that the images are independent with total count C(2n-1,n).
/// Also checks that the primed-to-standard transition matrix has determinant n.
PrimedBasisReport primedBasisCheck(int n, int cap = kEnumerationCap);

}  // namespace fdc
