#include "fdc/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdc {

std::vector<Partition> partitionsOf(int n) {
  if (n < 0) throw std::invalid_argument("partitionsOf: negative n");
  std::vector<Partition> out;
  Partition current;
  auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Integer centralizerOrder(const Partition& cycleType) {
  Integer z = 1;
  int runLength = 0;
  for (std::size_t i = 0; i < cycleType.size(); ++i) {
    z *= cycleType[i];
    ++runLength;
    if (i + 1 == cycleType.size() || cycleType[i + 1] != cycleType[i]) {
      for (int m = 2; m <= runLength; ++m) z *= m;
      runLength = 0;
    }
  }
  return z;
}

Integer conjugacyClassSize(const Partition& cycleType) {
  int n = 0;
  for (int p : cycleType) n += p;
  Integer fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return fact / centralizerOrder(cycleType);
}

std::vector<CycleType> cycleTypes(int n) {
  std::vector<CycleType> out;
  for (const Partition& p : partitionsOf(n))
    out.push_back({p, conjugacyClassSize(p)});
  return out;
}

namespace {

// Murnaghan-Nakayama via beta-numbers: removing a border strip of length k
// replaces some beta by beta - k; the sign is the parity of the number of
// betas jumped over.
long long charMN(const Partition& lambda, const Partition& mu,
                 std::map<std::pair<Partition, Partition>, long long>& memo) {
  if (lambda.empty()) return 1;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int k = mu[0];
  const Partition rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> betas(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) betas[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  long long total = 0;
  for (int i = 0; i < len; ++i) {
    int beta = betas[static_cast<std::size_t>(i)];
    int target = beta - k;
    if (target < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (int b : betas) {
      if (b == target) occupied = true;
      if (b > target && b < beta) ++jumped;
    }
    if (occupied) continue;
    std::vector<int> newBetas = betas;
    newBetas[static_cast<std::size_t>(i)] = target;
    std::sort(newBetas.begin(), newBetas.end(), std::greater<>());
    Partition next;
    for (int pos = 0; pos < len; ++pos) {
      int part = newBetas[static_cast<std::size_t>(pos)] - (len - 1 - pos);
      if (part > 0) next.push_back(part);
    }
    long long sub = charMN(next, rest, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

int partitionWeight(const Partition& p) {
  int n = 0;
  for (int x : p) n += x;
  return n;
}

void validatePartition(const Partition& p, const char* what) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || (i > 0 && p[i] > p[i - 1]))
      throw std::invalid_argument(std::string(what) + ": parts must be weakly decreasing and positive");
  }
}

}  // namespace

long long irreducibleCharacter(const Partition& lambda, const Partition& cycleType) {
  validatePartition(lambda, "irreducibleCharacter");
  validatePartition(cycleType, "irreducibleCharacter");
  if (partitionWeight(lambda) != partitionWeight(cycleType))
    throw std::invalid_argument("irreducibleCharacter: size mismatch");
  static thread_local std::map<std::pair<Partition, Partition>, long long> memo;
  return charMN(lambda, cycleType, memo);
}

Partition HookLabel::shape() const {
  if (n < 1 || k < 0 || k > n - 1)
    throw std::invalid_argument("HookLabel: k out of range");
  Partition p{n - k};
  for (int i = 0; i < k; ++i) p.push_back(1);
  return p;
}

long long hookCharacter(const HookLabel& hook, const Partition& cycleType) {
  return irreducibleCharacter(hook.shape(), cycleType);
}

namespace {

// Coefficients of prod over cycle lengths m of (1 - (-q)^m).
std::vector<long long> permutationExteriorPoly(const Partition& cycleType) {
  std::vector<long long> poly{1};
  for (int m : cycleType) {
    std::vector<long long> next(poly.size() + static_cast<std::size_t>(m), 0);
    long long topSign = (m % 2 == 0) ? -1 : 1;  // -(-1)^m
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + static_cast<std::size_t>(m)] += topSign * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

// Exact division by (1 + q).
std::vector<long long> divideByOnePlusQ(const std::vector<long long>& poly) {
  std::vector<long long> q(poly.size() - 1, 0);
  long long carry = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = poly[i] - carry;
    carry = q[i];
  }
  if (poly.back() != carry)
    throw std::logic_error("divideByOnePlusQ: division is not exact");
  return q;
}

}  // namespace

long long exteriorBidegreeCharacter(int n, Bidegree d, const Partition& cycleType) {
  if (partitionWeight(cycleType) != n)
    throw std::invalid_argument("exteriorBidegreeCharacter: cycle type has wrong size");
  auto poly = permutationExteriorPoly(cycleType);
  auto coeff = [&poly](int k) -> long long {
    return (k >= 0 && k < static_cast<int>(poly.size())) ? poly[static_cast<std::size_t>(k)] : 0;
  };
  return coeff(d.theta) * coeff(d.xi);
}

long long reflectionExteriorCharacter(int n, int i, const Partition& cycleType) {
  if (partitionWeight(cycleType) != n)
    throw std::invalid_argument("reflectionExteriorCharacter: cycle type has wrong size");
  if (i < 0 || i > n - 1) return 0;
  auto poly = divideByOnePlusQ(permutationExteriorPoly(cycleType));
  return (i < static_cast<int>(poly.size())) ? poly[static_cast<std::size_t>(i)] : 0;
}

long long quotientCharacter(int n, Bidegree d, const Partition& cycleType) {
  if (d.theta < 0 || d.xi < 0 || d.theta + d.xi >= n) return 0;
  auto poly = divideByOnePlusQ(permutationExteriorPoly(cycleType));
  auto coeff = [&poly](int k) -> long long {
    return (k >= 0 && k < static_cast<int>(poly.size())) ? poly[static_cast<std::size_t>(k)] : 0;
  };
  return coeff(d.theta) * coeff(d.xi) - coeff(d.theta - 1) * coeff(d.xi - 1);
}

long long kroneckerMultiplicity(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
  const int n = partitionWeight(lambda);
  if (partitionWeight(mu) != n || partitionWeight(nu) != n)
    throw std::invalid_argument("kroneckerMultiplicity: partitions of different sizes");
  Integer sum = 0;
  Integer order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  for (const CycleType& ct : cycleTypes(n)) {
    Integer value = ct.classSize;
    value *= static_cast<long>(irreducibleCharacter(lambda, ct.parts));
    value *= static_cast<long>(irreducibleCharacter(mu, ct.parts));
    value *= static_cast<long>(irreducibleCharacter(nu, ct.parts));
    sum += value;
  }
  if (sum % order != 0)
    throw std::logic_error("kroneckerMultiplicity: class sum not divisible by n!");
  Integer result = sum / order;
  return static_cast<long long>(result.get_si());
}

int rosasHookKronecker(int n, int a, int b, int c) {
  if (!(0 < a && a < n && 0 < b && b < n && 0 < c && c < n - 1))
    throw std::invalid_argument("rosasHookKronecker: parameters outside the valid box");
  int first = std::abs(b - a) <= c ? 1 : 0;
  int second = (c <= a + b && a + b <= 2 * n - c - 2) ? 1 : 0;
  return first * second;
}

QTPolynomial gradedHookMultiplicity(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1)
    throw std::invalid_argument("gradedHookMultiplicity: k out of range");
  const Partition hook = HookLabel{n, k}.shape();
  const auto classes = cycleTypes(n);
  Integer order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  QTPolynomial result;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      Integer sum = 0;
      for (const CycleType& ct : classes) {
        Integer value = ct.classSize;
        value *= static_cast<long>(quotientCharacter(n, {i, j}, ct.parts));
        value *= static_cast<long>(irreducibleCharacter(hook, ct.parts));
        sum += value;
      }
      if (sum % order != 0)
        throw std::logic_error("gradedHookMultiplicity: class sum not divisible by n!");
      result.add(i, j, static_cast<long long>(Integer(sum / order).get_si()));
    }
  }
  return result;
}

std::map<Partition, QTPolynomial, PartitionRevLexLess> fullGradedFrobenius(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("fullGradedFrobenius: supported range is 1 <= n <= 7");
  const auto classes = cycleTypes(n);
  Integer order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::map<Partition, QTPolynomial, PartitionRevLexLess> out;
  for (const Partition& lambda : partitionsOf(n)) {
    QTPolynomial poly;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        Integer sum = 0;
        for (const CycleType& ct : classes) {
          Integer value = ct.classSize;
          value *= static_cast<long>(quotientCharacter(n, {i, j}, ct.parts));
          value *= static_cast<long>(irreducibleCharacter(lambda, ct.parts));
          sum += value;
        }
        if (sum % order != 0)
          throw std::logic_error("fullGradedFrobenius: class sum not divisible by n!");
        poly.add(i, j, static_cast<long long>(Integer(sum / order).get_si()));
      }
    }
    if (lambda.size() >= 3 && lambda[2] >= 3 && !poly.isZero())
      throw std::logic_error("fullGradedFrobenius: unexpected non-two-hook constituent");
    if (!poly.isZero()) out.emplace(lambda, std::move(poly));
  }
  return out;
}

}  // namespace fdc
