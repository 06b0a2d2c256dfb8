#include "fdc/exact_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fdc {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  Rational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::fromRows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ExactMatrix::fromRows: ragged rows");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

namespace {

// Integer copy with each row scaled by the lcm of its denominators; row
// scaling preserves both rank and row space.
std::vector<std::vector<Integer>> scaledIntegerRows(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (int j = 0; j < m.cols(); ++j) {
      const Integer den = m.at(i, j).get_den();
      scale = lcm(scale, den);
    }
    auto& row = rows[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& e = m.at(i, j);
      row[static_cast<std::size_t>(j)] = e.get_num() * (scale / e.get_den());
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // echelon rows first
  std::vector<int> pivotColumns;           // one per echelon row, scan order
};

// Fraction-free forward elimination scanning columns in the given order.
// After step k the entries are (k+1)x(k+1) minors of the scaled input, so the
// Bareiss division is exact.
Echelon bareissEchelon(std::vector<std::vector<Integer>> rows,
                       const std::vector<int>& columnOrder) {
  Echelon result;
  const std::size_t nRows = rows.size();
  std::size_t pivotRow = 0;
  Integer previousPivot = 1;
  for (int col : columnOrder) {
    if (pivotRow >= nRows) break;
    std::size_t found = pivotRow;
    while (found < nRows && rows[found][static_cast<std::size_t>(col)] == 0) ++found;
    if (found == nRows) continue;
    std::swap(rows[pivotRow], rows[found]);
    const Integer pivot = rows[pivotRow][static_cast<std::size_t>(col)];
    for (std::size_t i = pivotRow + 1; i < nRows; ++i) {
      const Integer factor = rows[i][static_cast<std::size_t>(col)];
      // the row would only be rescaled by pivot/previousPivot == 1
      if (factor == 0 && pivot == previousPivot) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        Integer value = rows[i][j] * pivot - factor * rows[pivotRow][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previousPivot.get_mpz_t());
        rows[i][j] = value;
      }
    }
    result.pivotColumns.push_back(col);
    previousPivot = pivot;
    ++pivotRow;
  }
  rows.resize(pivotRow);
  result.rows = std::move(rows);
  return result;
}

std::vector<int> naturalOrder(int cols) {
  std::vector<int> order(static_cast<std::size_t>(cols));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void validateColumnOrder(const std::vector<int>& order, int cols) {
  if (static_cast<int>(order.size()) != cols)
    throw std::invalid_argument("rref: column order has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(cols), false);
  for (int c : order) {
    if (c < 0 || c >= cols || seen[static_cast<std::size_t>(c)])
      throw std::invalid_argument("rref: column order is not a permutation");
    seen[static_cast<std::size_t>(c)] = true;
  }
}

}  // namespace

int rank(const ExactMatrix& m) {
  auto echelon = bareissEchelon(scaledIntegerRows(m), naturalOrder(m.cols()));
  return static_cast<int>(echelon.pivotColumns.size());
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;

  Integer denominator = 1;
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Integer scale = 1;
    for (int j = 0; j < n; ++j) scale = lcm(scale, m.at(i, j).get_den());
    denominator *= scale;
    auto& row = rows[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      row[static_cast<std::size_t>(j)] = m.at(i, j).get_num() * (scale / m.at(i, j).get_den());
  }

  int sign = 1;
  Integer previousPivot = 1;
  for (int k = 0; k < n; ++k) {
    int found = k;
    while (found < n && rows[static_cast<std::size_t>(found)][static_cast<std::size_t>(k)] == 0)
      ++found;
    if (found == n) return 0;
    if (found != k) {
      std::swap(rows[static_cast<std::size_t>(k)], rows[static_cast<std::size_t>(found)]);
      sign = -sign;
    }
    const Integer pivot = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer value = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                            rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previousPivot.get_mpz_t());
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
      }
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
    }
    previousPivot = pivot;
  }
  Rational det(sign * rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)],
               denominator);
  det.canonicalize();
  return det;
}

RrefResult rref(const ExactMatrix& m, const std::vector<int>& columnOrder) {
  validateColumnOrder(columnOrder, m.cols());
  auto echelon = bareissEchelon(scaledIntegerRows(m), columnOrder);
  const int pivots = static_cast<int>(echelon.pivotColumns.size());

  // normalize pivots, then clear entries above them (backward pass in exact
  // rationals; the expensive forward work stayed integral)
  std::vector<std::vector<Rational>> reduced(static_cast<std::size_t>(pivots));
  for (int k = 0; k < pivots; ++k) {
    const auto& row = echelon.rows[static_cast<std::size_t>(k)];
    const Integer& pivot = row[static_cast<std::size_t>(echelon.pivotColumns[static_cast<std::size_t>(k)])];
    auto& target = reduced[static_cast<std::size_t>(k)];
    target.resize(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
      Rational value(row[static_cast<std::size_t>(j)], pivot);
      value.canonicalize();
      target[static_cast<std::size_t>(j)] = value;
    }
  }
  for (int k = pivots - 1; k >= 0; --k) {
    const int col = echelon.pivotColumns[static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i) {
      Rational factor = reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int j = 0; j < m.cols(); ++j)
        reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * reduced[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  }

  RrefResult result;
  result.matrix = ExactMatrix(m.rows(), m.cols());
  for (int i = 0; i < pivots; ++i)
    for (int j = 0; j < m.cols(); ++j)
      result.matrix.at(i, j) = reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  result.pivotColumns = std::move(echelon.pivotColumns);
  return result;
}

RrefResult rref(const ExactMatrix& m) { return rref(m, naturalOrder(m.cols())); }

std::string matrixToCsv(const ExactMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += toString(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

ExactMatrix matrixFromCsv(const std::string& csv) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ','))
      row.push_back(rationalFromString(cell));
    rows.push_back(std::move(row));
  }
  return ExactMatrix::fromRows(rows);
}

}  // namespace fdc
