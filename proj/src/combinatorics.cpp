#include "fdc/combinatorics.hpp"

namespace fdc {

namespace {

constexpr int kBinomialTableSize = 67;

const long long* binomialRow(int n) {
  static const auto table = [] {
    static long long rows[kBinomialTableSize][kBinomialTableSize] = {};
    for (int i = 0; i < kBinomialTableSize; ++i) {
      rows[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        rows[i][j] = rows[i - 1][j - 1] + (j <= i - 1 ? rows[i - 1][j] : 0);
    }
    return &rows[0];
  }();
  return table[n];
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n >= kBinomialTableSize)
    throw std::invalid_argument("binomial: argument too large for exact long long table");
  return binomialRow(n)[k];
}

long long catalanNumber(int n) {
  if (n < 0) throw std::invalid_argument("catalanNumber: negative n");
  return binomial(2 * n, n) / (n + 1);
}

long long narayanaNumber(int n, int k) {
  if (n < 1) throw std::invalid_argument("narayanaNumber: n must be positive");
  return binomial(n, k) * binomial(n, k - 1) / n;
}

std::vector<Mask> subsetsOfSize(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks same-popcount masks in increasing numeric order.
  Mask s = fullMask(k);
  const Mask limit = fullMask(n);
  while (s <= limit) {
    out.push_back(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    if (r > limit || r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

long long colexRank(Mask s) {
  long long rank = 0;
  int position = 1;
  while (s != 0) {
    int e = std::countr_zero(s);
    rank += binomial(e, position);
    ++position;
    s &= s - 1;
  }
  return rank;
}

std::vector<std::pair<Mask, Mask>> bidegreePairs(int n, int i, int j) {
  std::vector<std::pair<Mask, Mask>> out;
  const auto as = subsetsOfSize(n, i);
  const auto bs = subsetsOfSize(n, j);
  out.reserve(as.size() * bs.size());
  for (Mask a : as)
    for (Mask b : bs) out.emplace_back(a, b);
  return out;
}

std::vector<int> maskToIndices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask maskFromIndices(const std::vector<int>& indices, int n) {
  Mask m = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > n)
      throw std::invalid_argument("maskFromIndices: index out of range");
    Mask b = bitAt(idx - 1);
    if (m & b) throw std::invalid_argument("maskFromIndices: duplicate index");
    m |= b;
  }
  return m;
}

}  // namespace fdc
