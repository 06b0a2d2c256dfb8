#include "fdc/standard_basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fdc/exact_matrix.hpp"

namespace fdc {

std::vector<Path> standardMonomials(const QuotientModel& model, Bidegree d) {
  if (model.kind != ModelKind::ReflectionRank)
    throw std::invalid_argument("standardMonomials: only the reflection-rank model has "
                                "a certified term-order basis");
  const int n = model.n;
  if (d.theta < 0 || d.xi < 0 || d.theta > n || d.xi > n) return {};

  const auto monomials = bidegreeMonomials(n, d);
  std::vector<Path> paths;
  paths.reserve(monomials.size());
  for (const Monomial& m : monomials) paths.push_back(toPath(m));

  // scan columns largest-first so pivots land on leading monomials
  std::vector<int> order(monomials.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return comparePaths(paths[static_cast<std::size_t>(a)],
                        paths[static_cast<std::size_t>(b)]) == std::strong_ordering::greater;
  });

  RrefResult reduced = rref(idealPieceBasis(model, d), order);
  std::vector<bool> isPivot(monomials.size(), false);
  for (int c : reduced.pivotColumns) isPivot[static_cast<std::size_t>(c)] = true;

  std::vector<Path> standard;
  for (std::size_t c = 0; c < monomials.size(); ++c)
    if (!isPivot[c]) standard.push_back(paths[c]);
  std::sort(standard.begin(), standard.end());
  return standard;
}

BasisTheoremReport basisTheoremCheck(int n, int cap) {
  if (n < 1) throw std::invalid_argument("basisTheoremCheck: n must be >= 1");
  requireEnumerable(n, cap);
  BasisTheoremReport report;
  report.n = n;
  report.pass = true;

  std::map<Bidegree, std::vector<Path>> expected;
  forEachPath(n, PathFamily::NonNegative, [&](const Path& p) {
    PathStatistics st = statistics(p);
    expected[{st.thetaDegree, st.xiDegree}].push_back(p);
  }, cap);
  for (auto& [d, paths] : expected) std::sort(paths.begin(), paths.end());

  const QuotientModel model = QuotientModel::reflectionRank(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      BasisBidegreeRow row;
      row.i = i;
      row.j = j;
      auto standard = standardMonomials(model, {i, j});
      row.standardCount = static_cast<long long>(standard.size());
      auto it = expected.find({i, j});
      const std::vector<Path> empty;
      const std::vector<Path>& fromPaths = it == expected.end() ? empty : it->second;
      row.pathCount = static_cast<long long>(fromPaths.size());
      row.equal = standard == fromPaths;
      report.totalStandard += row.standardCount;
      report.pass = report.pass && row.equal;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace fdc
