#pragma once

#include <vector>

#include "fdc/coinvariants.hpp"
#include "fdc/path.hpp"

namespace fdc {

/// Standard monomials of the bidegree-d slice: the non-pivot columns of the
/// ideal slice after elimination with columns in term-order-descending
/// position, returned as paths sorted by step sequence.  Computed without
/// assuming the path description of the quotient basis.
std::vector<Path> standardMonomials(const QuotientModel& model, Bidegree d);

struct BasisBidegreeRow {
  int i = 0;
  int j = 0;
  long long standardCount = 0;
  long long pathCount = 0;
  bool equal = false;
};

struct BasisTheoremReport {
  int n = 0;
  std::vector<BasisBidegreeRow> rows;
  long long totalStandard = 0;
  bool pass = false;
};

/// Certifies, bidegree by bidegree, that the standard monomials coincide with
/// the weights of the paths that never sink below the axis.
BasisTheoremReport basisTheoremCheck(int n, int cap = kEnumerationCap);

}  // namespace fdc
