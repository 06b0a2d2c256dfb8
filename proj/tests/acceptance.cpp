// Acceptance suite: exercises every headline verification end to end and
// prints one pass/fail line per criterion.  Exit code is the failure count.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "fdc/characters.hpp"
#include "fdc/coinvariants.hpp"
#include "fdc/combinatorics.hpp"
#include "fdc/element.hpp"
#include "fdc/lefschetz.hpp"
#include "fdc/standard_basis.hpp"
#include "oracles.hpp"

using namespace fdc;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// 1. Boolean hard Lefschetz for n <= 10, including the explicit 4x4 matrix.
bool booleanHlp(std::string& detail) {
  for (int n = 0; n <= 10; ++n) {
    auto report = checkBooleanHLP(n);
    if (!report.pass) {
      detail = "incidence rank defect at n=" + std::to_string(n);
      return false;
    }
  }
  auto m413 = incidenceMatrix(4, 1, 3).matrix;
  if (rank(m413) != 4) {
    detail = "explicit M_4(1,3) is not invertible";
    return false;
  }
  if (m413 != matrixFromCsv("1,1,1,0\n1,1,0,1\n1,0,1,1\n0,1,1,1\n")) {
    detail = "explicit M_4(1,3) has unexpected entries";
    return false;
  }
  detail = "n <= 10, M_4(1,3) rank 4";
  return true;
}

// 2. Bigraded hard Lefschetz certification with block structure, n <= 6.
bool lefschetzCertification(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    auto report = certifyLefschetz(n);
    if (!report.pass) {
      for (const auto& c : report.cells)
        if (!c.pass)
          detail = "n=" + std::to_string(n) + " cell (" + std::to_string(c.i) + "," +
                   std::to_string(c.j) + ")";
      return false;
    }
  }
  detail = "all delta-power maps square, full rank, block-diagonal; n <= 6";
  return true;
}

// 3. Elimination oracle equals the closed form on every bidegree, with the
//    binomial totals; closed-form totals up to n = 12.
bool dimensionOracle(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    for (ModelKind kind : {ModelKind::ReflectionRank, ModelKind::Permutation}) {
      QuotientModel model{kind, n};
      long long total = 0;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          long long oracle = quotientDimension(model, {i, j});
          if (oracle != closedFormDimension(model, {i, j})) {
            detail = "mismatch at n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
            return false;
          }
          total += oracle;
        }
      long long expected = kind == ModelKind::ReflectionRank ? binomial(2 * n + 1, n)
                                                             : binomial(2 * n - 1, n);
      if (total != expected) {
        detail = "total mismatch at n=" + std::to_string(n);
        return false;
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    if (hilbertSeriesClosedForm(QuotientModel::reflectionRank(n)).evaluateAtOnes() !=
            binomial(2 * n + 1, n) ||
        hilbertSeriesClosedForm(QuotientModel::permutation(n)).evaluateAtOnes() !=
            binomial(2 * n - 1, n)) {
      detail = "closed-form total mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "oracle == closed form, n <= 6; totals to n = 12";
  return true;
}

// 4. Narayana anti-diagonals summing to Catalan numbers for both models.
bool narayanaBoundaries(std::string& detail) {
  for (int n = 1; n <= 10; ++n) {
    auto boundary = narayanaBoundary(n);
    long long sum = 0;
    for (int k = 0; k <= n; ++k) {
      if (boundary[static_cast<std::size_t>(k)] != narayanaNumber(n + 1, k + 1)) {
        detail = "reflection boundary mismatch at n=" + std::to_string(n);
        return false;
      }
      sum += boundary[static_cast<std::size_t>(k)];
    }
    if (sum != catalanNumber(n + 1)) {
      detail = "reflection boundary sum mismatch at n=" + std::to_string(n);
      return false;
    }
    QuotientModel perm = QuotientModel::permutation(n);
    long long permSum = 0;
    for (int k = 1; k <= n; ++k) {
      long long dim = closedFormDimension(perm, {k - 1, n - k});
      if (dim != narayanaNumber(n, k)) {
        detail = "permutation boundary mismatch at n=" + std::to_string(n);
        return false;
      }
      permSum += dim;
    }
    if (permSum != catalanNumber(n)) {
      detail = "permutation boundary sum mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 1; n <= 6; ++n) {
    QuotientModel refl = QuotientModel::reflectionRank(n);
    QuotientModel perm = QuotientModel::permutation(n);
    for (int k = 0; k <= n; ++k)
      if (quotientDimension(refl, {k, n - k}) != narayanaNumber(n + 1, k + 1)) {
        detail = "oracle boundary mismatch at n=" + std::to_string(n);
        return false;
      }
    for (int k = 1; k <= n; ++k)
      if (quotientDimension(perm, {k - 1, n - k}) != narayanaNumber(n, k)) {
        detail = "oracle permutation boundary mismatch at n=" + std::to_string(n);
        return false;
      }
  }
  detail = "closed forms to n = 10, oracle to n = 6";
  return true;
}

// 5. Standard monomials equal nonnegative path weights per bidegree, n <= 6.
bool standardBasis(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    auto report = basisTheoremCheck(n);
    if (!report.pass) {
      for (const auto& row : report.rows)
        if (!row.equal)
          detail = "n=" + std::to_string(n) + " bidegree (" + std::to_string(row.i) + "," +
                   std::to_string(row.j) + ")";
      return false;
    }
    if (report.totalStandard != binomial(2 * n + 1, n)) {
      detail = "standard monomial count off at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "per-bidegree equality, n <= 6";
  return true;
}

// 6. Path generating functions match the Hilbert series; recursion to n = 8.
bool pathGeneratingFunctions(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    if (pathGenerating(n, PathFamily::NonNegative) !=
        hilbertSeries(QuotientModel::reflectionRank(n))) {
      detail = "nonnegative family vs reflection Hilbert series at n=" + std::to_string(n);
      return false;
    }
    if (pathGenerating(n, PathFamily::StrictlyPositive) !=
        hilbertSeries(QuotientModel::permutation(n))) {
      detail = "strict family vs permutation Hilbert series at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 1; n <= 8; ++n)
    if (!recursionCheck(n).pass) {
      detail = "path recursion fails at n=" + std::to_string(n);
      return false;
    }
  detail = "series equality n <= 6, recursion n <= 8";
  return true;
}

// 7. Primed weights descend to a basis; transition determinant equals n.
bool primedBasis(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    auto report = primedBasisCheck(n);
    if (!report.pass) {
      detail = "primed basis fails at n=" + std::to_string(n);
      return false;
    }
    if (report.transitionDet != n) {
      detail = "transition determinant is not n at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "independent images with Catalan-boundary counts, det = n; n <= 6";
  return true;
}

// 8. Hook multiplicities and the Rosas indicator formula, n <= 7.
bool hookMultiplicities(std::string& detail) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      QTPolynomial expected;
      if (k == 0) expected = QTPolynomial::one();
      else if (k == n - 1) expected = QTPolynomial::qtAnalog(n);
      else
        expected = QTPolynomial::qtAnalog(k + 1) +
                   QTPolynomial::monomial(1, 1, 1) * QTPolynomial::qtAnalog(k);
      if (gradedHookMultiplicity(n, k) != expected) {
        detail = "closed form fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
        return false;
      }
    }
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        for (int c = 1; c < n - 1; ++c)
          if (rosasHookKronecker(n, a, b, c) !=
              kroneckerMultiplicity(HookLabel{n, a}.shape(), HookLabel{n, b}.shape(),
                                    HookLabel{n, c}.shape())) {
            detail = "Rosas mismatch at n=" + std::to_string(n) + " (" + std::to_string(a) +
                     "," + std::to_string(b) + "," + std::to_string(c) + ")";
            return false;
          }
  }
  detail = "closed forms and Rosas box, n <= 7";
  return true;
}

// 9. Property suites: sign oracle, delta-power composition, Poincare pairing,
//    Hilbert symmetry, two-hook support of the graded Frobenius image.
bool propertySuites(std::string& detail) {
  std::mt19937_64 rng(20260810);
  for (int n = 1; n <= 8; ++n) {
    std::uniform_int_distribution<Mask> dist(0, fullMask(n));
    for (int trial = 0; trial < 1000; ++trial) {
      Monomial a(n, dist(rng), dist(rng));
      Monomial b(n, dist(rng), dist(rng));
      Element got = multiply(Element::term(a, 1), Element::term(b, 1));
      Element expected(n);
      if (auto p = testing::naiveProduct(a, b)) expected = Element::term(p->first, p->second);
      if (got != expected) {
        detail = "sign oracle disagreement at n=" + std::to_string(n);
        return false;
      }
    }
  }
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int r1 = 0; r1 <= 2; ++r1)
        for (int r2 = 0; r2 <= 2; ++r2) {
          if (i + j + r1 + r2 > 5) continue;
          if (deltaPowerMatrix(5, i, j, r1 + r2) !=
              deltaPowerMatrix(5, i + r1, j + r1, r2) * deltaPowerMatrix(5, i, j, r1)) {
            detail = "delta-power composition fails";
            return false;
          }
        }
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        ExactMatrix pairing = poincarePairingMatrix(n, {i, j});
        if (pairing.rows() != pairing.cols() || rank(pairing) != pairing.rows()) {
          detail = "Poincare pairing rank defect at n=" + std::to_string(n);
          return false;
        }
      }
  for (int n = 1; n <= 8; ++n)
    for (ModelKind kind : {ModelKind::ReflectionRank, ModelKind::Permutation}) {
      QTPolynomial h = hilbertSeriesClosedForm(QuotientModel{kind, n});
      if (h != h.swapped()) {
        detail = "Hilbert series not q,t-symmetric at n=" + std::to_string(n);
        return false;
      }
    }
  for (int n = 2; n <= 6; ++n) {
    for (const auto& [lambda, poly] : fullGradedFrobenius(n)) {
      if (lambda.size() >= 3 && lambda[2] >= 3 && !poly.isZero()) {
        detail = "non-two-hook constituent at n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "sign oracle, composition, pairing, symmetry, two-hook support";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"boolean-hlp", booleanHlp},
      {"lefschetz-certification", lefschetzCertification},
      {"dimension-oracle", dimensionOracle},
      {"narayana-boundary", narayanaBoundaries},
      {"standard-monomial-basis", standardBasis},
      {"path-generating-functions", pathGeneratingFunctions},
      {"primed-basis", primedBasis},
      {"hook-multiplicities", hookMultiplicities},
      {"property-suites", propertySuites},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[k].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].name
              << " (" << detail << ")" << std::endl;
  }
  if (failures == 0) std::cout << "acceptance: all " << criteria.size() << " criteria passed"
                               << std::endl;
  else std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return failures;
}
