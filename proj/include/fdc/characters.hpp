#pragma once

#include <map>
#include <vector>

#include "fdc/monomial.hpp"
#include "fdc/qt_polynomial.hpp"
#include "fdc/rational.hpp"

namespace fdc {

/// Partition stored with weakly decreasing parts.
using Partition = std::vector<int>;

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitionsOf(int n);

/// Comparator giving the same reverse-lexicographic order for map keys.
struct PartitionRevLexLess {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// z_lambda = prod_i i^{m_i} m_i!.
Integer centralizerOrder(const Partition& cycleType);

/// n!/z_lambda.
Integer conjugacyClassSize(const Partition& cycleType);

struct CycleType {
  Partition parts;
  Integer classSize;
};

std::vector<CycleType> cycleTypes(int n);

/// Irreducible symmetric-group character chi^lambda evaluated on a cycle
/// type, by the Murnaghan-Nakayama border-strip recursion.
long long irreducibleCharacter(const Partition& lambda, const Partition& cycleType);

/// Hook (n-k, 1^k).
struct HookLabel {
  int n = 0;
  int k = 0;
  Partition shape() const;
};

long long hookCharacter(const HookLabel& hook, const Partition& cycleType);

/// Trace of a permutation of the given cycle type on Lambda^i U (x) Lambda^j
/// U* for the n-dimensional permutation representation U: the product of the
/// q^i and t^j coefficients of prod over cycle lengths m of (1 - (-q)^m).
long long exteriorBidegreeCharacter(int n, Bidegree d, const Partition& cycleType);

/// Trace on Lambda^i V for the (n-1)-dimensional reflection representation,
/// obtained by exact polynomial division of the permutation-representation
/// generating product by (1 + q).
long long reflectionExteriorCharacter(int n, int i, const Partition& cycleType);

/// Class-function value of the bidegree piece of the fermionic diagonal
/// coinvariants of the permutation model: the reflection-representation
/// exterior character at (i,j) minus the one at (i-1,j-1); zero when
/// i + j >= n.
long long quotientCharacter(int n, Bidegree d, const Partition& cycleType);

/// <chi^lambda chi^mu, chi^nu> over S_n by class sums.
long long kroneckerMultiplicity(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

/// Multiplicity of the hook s_{(n-c,1^c)} in s_{(n-a,1^a)} * s_{(n-b,1^b)}:
/// the indicator product chi(|b-a| <= c) * chi(c <= a+b <= 2n-c-2).  Only
/// valid for 0 < a,b < n and 0 < c < n-1; throws outside that box.
int rosasHookKronecker(int n, int a, int b, int c);

/// Graded multiplicity of the hook (n-k,1^k) in the quotient: sum over
/// bidegrees of the inner product with the quotient character.
QTPolynomial gradedHookMultiplicity(int n, int k);

/// Complete Schur expansion of the bigraded Frobenius image of the quotient,
/// zero polynomials omitted.  Verifies that partitions with a third part of
/// size >= 3 never appear.
std::map<Partition, QTPolynomial, PartitionRevLexLess> fullGradedFrobenius(int n);

}  // namespace fdc
