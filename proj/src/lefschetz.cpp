#include "fdc/lefschetz.hpp"

#include <map>
#include <stdexcept>

#include "fdc/element.hpp"

namespace fdc {

IncidenceMatrix incidenceMatrix(int n, int r, int s) {
  if (!(0 <= r && r <= s && s <= n))
    throw std::invalid_argument("incidenceMatrix: need 0 <= r <= s <= n");
  IncidenceMatrix result{n, r, s, {}};
  const auto rowSets = subsetsOfSize(n, s);
  const auto colSets = subsetsOfSize(n, r);
  result.matrix = ExactMatrix(static_cast<int>(rowSets.size()), static_cast<int>(colSets.size()));
  for (std::size_t t = 0; t < rowSets.size(); ++t)
    for (std::size_t c = 0; c < colSets.size(); ++c)
      if ((colSets[c] & ~rowSets[t]) == 0)
        result.matrix.at(static_cast<int>(t), static_cast<int>(c)) = 1;
  return result;
}

BooleanHlpReport checkBooleanHLP(int n) {
  if (n < 0) throw std::invalid_argument("checkBooleanHLP: negative n");
  BooleanHlpReport report;
  report.n = n;
  report.pass = true;
  for (int i = 0; 2 * i <= n; ++i) {
    BooleanHlpRow row;
    row.i = i;
    row.dimension = binomial(n, i);
    row.rank = rank(incidenceMatrix(n, i, n - i).matrix);
    row.pass = row.rank == row.dimension;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

using PairKey = std::pair<Mask, Mask>;

// delta^r . v(A,B) as a nonnegative-integer combination of v(C,D), by
// iterating delta . v(A,B) = sum over c outside A union B of v(A+c, B+c).
std::map<PairKey, long long> deltaPowerColumn(int n, Mask a, Mask b, int r) {
  std::map<PairKey, long long> front{{{a, b}, 1}};
  const Mask full = fullMask(n);
  for (int step = 0; step < r; ++step) {
    std::map<PairKey, long long> next;
    for (const auto& [key, coeff] : front) {
      Mask free = full & ~(key.first | key.second);
      while (free != 0) {
        Mask c = free & (~free + 1);
        next[{key.first | c, key.second | c}] += coeff;
        free &= free - 1;
      }
    }
    front = std::move(next);
  }
  return front;
}

long long pairIndex(int n, int j, Mask a, Mask b) {
  return colexRank(a) * binomial(n, j) + colexRank(b);
}

}  // namespace

ExactMatrix deltaPowerMatrix(int n, int i, int j, int r) {
  if (n < 1 || i < 0 || j < 0 || i + j > 2 * n || r < 0)
    throw std::invalid_argument("deltaPowerMatrix: bidegree out of range");
  const auto domain = bidegreePairs(n, i, j);
  const long long rows = binomial(n, i + r) * binomial(n, j + r);
  ExactMatrix m(static_cast<int>(rows), static_cast<int>(domain.size()));
  for (std::size_t col = 0; col < domain.size(); ++col) {
    for (const auto& [key, coeff] : deltaPowerColumn(n, domain[col].first, domain[col].second, r)) {
      long long row = pairIndex(n, j + r, key.first, key.second);
      m.at(static_cast<int>(row), static_cast<int>(col)) = static_cast<long>(coeff);
    }
  }
  return m;
}

namespace {

long long factorial(int r) {
  long long f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

// Every entry must be r! exactly when the domain and codomain pairs share the
// same (I,J) = (A-B, B-A) and the intersections are nested, and 0 otherwise.
bool verifyBlockStructure(int n, int i, int j, int r, const ExactMatrix& m,
                          long long* blockCount) {
  const auto domain = bidegreePairs(n, i, j);
  const auto codomain = bidegreePairs(n, i + r, j + r);
  const long long rFactorial = factorial(r);
  std::map<PairKey, long long> blocks;
  for (const auto& [a, b] : domain) blocks[{a & ~b, b & ~a}]++;
  *blockCount = static_cast<long long>(blocks.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const auto [a, b] = domain[col];
    for (std::size_t row = 0; row < codomain.size(); ++row) {
      const auto [c, d] = codomain[row];
      bool sameBlock = (a & ~b) == (c & ~d) && (b & ~a) == (d & ~c);
      bool nested = (a & b & ~(c & d)) == 0;
      Rational expected = (sameBlock && nested) ? Rational(static_cast<long>(rFactorial)) : Rational(0);
      if (m.at(static_cast<int>(row), static_cast<int>(col)) != expected) return false;
    }
  }
  return true;
}

}  // namespace

LefschetzReport certifyLefschetz(int n) {
  if (n < 1) throw std::invalid_argument("certifyLefschetz: n must be >= 1");
  LefschetzReport report;
  report.n = n;
  report.pass = true;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      LefschetzCell cell;
      cell.i = i;
      cell.j = j;
      cell.r = n - i - j;
      cell.size = binomial(n, i) * binomial(n, j);
      ExactMatrix m = deltaPowerMatrix(n, i, j, cell.r);
      cell.squareOk = m.rows() == m.cols() && m.rows() == cell.size;
      cell.rank = rank(m);
      cell.fullRank = cell.rank == cell.size;
      cell.blockStructureOk = verifyBlockStructure(n, i, j, cell.r, m, &cell.blockCount);
      cell.pass = cell.squareOk && cell.fullRank && cell.blockStructureOk;
      report.pass = report.pass && cell.pass;
      report.cells.push_back(cell);
    }
  }
  return report;
}

MapClassification injectivitySurjectivity(int n, int i, int j) {
  if (n < 1 || i < 0 || j < 0 || i > n || j > n)
    throw std::invalid_argument("injectivitySurjectivity: bidegree out of range");
  MapClassification out;
  out.kind = (i + j <= n) ? MapClass::Injective : MapClass::Surjective;
  out.codomainDim = binomial(n, i) * binomial(n, j);
  if (i >= 1 && j >= 1) {
    out.domainDim = binomial(n, i - 1) * binomial(n, j - 1);
    out.rank = rank(deltaPowerMatrix(n, i - 1, j - 1, 1));
  }
  out.kernelDim = out.domainDim - out.rank;
  out.cokernelDim = out.codomainDim - out.rank;
  out.verified = (out.kind == MapClass::Injective) ? out.kernelDim == 0 : out.cokernelDim == 0;
  return out;
}

ExactMatrix poincarePairingMatrix(int n, Bidegree d) {
  if (d.theta < 0 || d.xi < 0 || d.theta > n || d.xi > n)
    throw std::invalid_argument("poincarePairingMatrix: bidegree out of range");
  const auto left = bidegreePairs(n, d.theta, d.xi);
  const auto right = bidegreePairs(n, n - d.theta, n - d.xi);
  const Monomial top(n, fullMask(n), fullMask(n));
  ExactMatrix m(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t row = 0; row < left.size(); ++row) {
    Element a = Element::term(Monomial(n, left[row].first, left[row].second), 1);
    for (std::size_t col = 0; col < right.size(); ++col) {
      Element b = Element::term(Monomial(n, right[col].first, right[col].second), 1);
      m.at(static_cast<int>(row), static_cast<int>(col)) = multiply(a, b).coefficient(top);
    }
  }
  return m;
}

}  // namespace fdc
