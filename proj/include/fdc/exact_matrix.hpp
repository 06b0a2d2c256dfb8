#pragma once

#include <string>
#include <vector>

#include "fdc/rational.hpp"

namespace fdc {

/// Dense matrix of exact rationals.  Construction-time shape is fixed;
/// elimination routines work on private copies.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);
  static ExactMatrix fromRows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }

  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

/// Rank over Q via fraction-free (Bareiss) elimination on a row-scaled
/// integer copy.
int rank(const ExactMatrix& m);

/// Exact determinant; throws on non-square input.
Rational determinant(const ExactMatrix& m);

struct RrefResult {
  ExactMatrix matrix;
  /// Pivot columns in original column indexing, in elimination order.
  std::vector<int> pivotColumns;
};

/// Reduced row echelon form with columns scanned in the given order.  The
/// forward pass is fraction-free; pivots are normalized rationally at the end.
RrefResult rref(const ExactMatrix& m, const std::vector<int>& columnOrder);
RrefResult rref(const ExactMatrix& m);

/// CSV with "p/q" entries, one row per line.
std::string matrixToCsv(const ExactMatrix& m);
ExactMatrix matrixFromCsv(const std::string& csv);

}  // namespace fdc
