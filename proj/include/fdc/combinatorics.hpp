#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fdc {

/// Subsets of {1..n} are stored as bitmasks; bit k encodes the index k+1.
using Mask = std::uint32_t;

/// Largest rank the bitmask encoding supports.
constexpr int kMaxRank = 30;

inline Mask bitAt(int i) { return Mask{1} << i; }

inline Mask fullMask(int n) { return n == 0 ? Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

/// Binomial coefficient; 0 outside the triangle. Arguments up to 66 stay
/// within long long.
long long binomial(int n, int k);

/// Cat(n) = C(2n,n)/(n+1).
long long catalanNumber(int n);

/// Nar(n,k) = C(n,k)*C(n,k-1)/n.
long long narayanaNumber(int n, int k);

/// All k-element subsets of {0..n-1} in increasing mask value, which is
/// exactly the colexicographic order on subsets.
std::vector<Mask> subsetsOfSize(int n, int k);

/// Position of a subset within the colex enumeration of its size class.
long long colexRank(Mask s);

/// All pairs (A,B) with |A| = i, |B| = j, A-major colex order.  This is the
/// index convention shared by monomial bases and v-basis matrices.
std::vector<std::pair<Mask, Mask>> bidegreePairs(int n, int i, int j);

/// 1-based ascending index list for a mask.
std::vector<int> maskToIndices(Mask m);

/// Mask from 1-based indices; throws on duplicates or out-of-range entries.
Mask maskFromIndices(const std::vector<int>& indices, int n);

}  // namespace fdc
