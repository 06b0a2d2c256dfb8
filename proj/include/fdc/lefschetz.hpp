#pragma once

#include <string>
#include <vector>

#include "fdc/combinatorics.hpp"
#include "fdc/exact_matrix.hpp"
#include "fdc/monomial.hpp"

namespace fdc {

/// Incidence matrix between ranks r and s of the Boolean poset: rows indexed
/// by s-subsets, columns by r-subsets, both in colex order; entry 1 iff the
/// column subset is contained in the row subset.
struct IncidenceMatrix {
  int n = 0;
  int r = 0;
  int s = 0;
  ExactMatrix matrix;
};

IncidenceMatrix incidenceMatrix(int n, int r, int s);

struct BooleanHlpRow {
  int i = 0;
  long long dimension = 0;
  int rank = 0;
  bool pass = false;
};

struct BooleanHlpReport {
  int n = 0;
  std::vector<BooleanHlpRow> rows;
  bool pass = false;
};

/// Certifies that every complementary-rank incidence matrix of the Boolean
/// poset is invertible.
BooleanHlpReport checkBooleanHLP(int n);

/// Matrix of left multiplication by delta_n^r from bidegree (i,j) to
/// (i+r,j+r) in the v(A,B) bases, both sides indexed by bidegreePairs.  Built
/// by iterating the sign-free single-step transition, so all entries are
/// nonnegative integers.
ExactMatrix deltaPowerMatrix(int n, int i, int j, int r);

struct LefschetzCell {
  int i = 0;
  int j = 0;
  int r = 0;
  long long size = 0;
  long long rank = 0;
  bool squareOk = false;
  bool fullRank = false;
  bool blockStructureOk = false;
  long long blockCount = 0;
  bool pass = false;
};

struct LefschetzReport {
  int n = 0;
  std::vector<LefschetzCell> cells;
  bool pass = false;
};

/// For every bidegree (i,j) with i+j <= n and r = n-i-j, certifies that the
/// delta-power map is square of size C(n,i)C(n,j) and has full rank, and that
/// its entries respect the (I,J) = (A-B, B-A) block decomposition, each block
/// being r! times a Boolean incidence pattern on the free index set.
LefschetzReport certifyLefschetz(int n);

enum class MapClass { Injective, Surjective };

struct MapClassification {
  MapClass kind = MapClass::Injective;
  long long domainDim = 0;
  long long codomainDim = 0;
  long long rank = 0;
  long long kernelDim = 0;
  long long cokernelDim = 0;
  bool verified = false;
};

/// Classifies single-delta multiplication into bidegree (i,j): injective when
/// i+j <= n, surjective when i+j > n, verified by exact rank.
MapClassification injectivitySurjectivity(int n, int i, int j);

/// Matrix of the multiplication pairing between the monomial bases of
/// bidegrees (i,j) and (n-i,n-j) into the top bidegree.
ExactMatrix poincarePairingMatrix(int n, Bidegree d);

}  // namespace fdc
