#include "fdc/coinvariants.hpp"

#include <map>
#include <stdexcept>

#include "fdc/characters.hpp"

namespace fdc {

std::vector<Element> QuotientModel::idealGenerators() const {
  if (kind == ModelKind::ReflectionRank) return {casimir(n)};
  Element thetaSum(n);
  Element xiSum(n);
  for (int i = 1; i <= n; ++i) {
    thetaSum += Element::generatorTheta(i, n);
    xiSum += Element::generatorXi(i, n);
  }
  return {thetaSum, xiSum, casimir(n)};
}

std::vector<Monomial> bidegreeMonomials(int n, Bidegree d) {
  std::vector<Monomial> out;
  for (const auto& [a, b] : bidegreePairs(n, d.theta, d.xi))
    out.emplace_back(n, a, b);
  return out;
}

namespace {

long long monomialIndex(int n, Bidegree d, const Monomial& m) {
  return colexRank(m.thetaMask()) * binomial(n, d.xi) + colexRank(m.xiMask());
}

void appendRows(std::vector<std::vector<Rational>>& rows, const QuotientModel& model,
                const Element& generator, Bidegree target) {
  const int n = model.n;
  const Bidegree g = *generator.homogeneousBidegree();
  const Bidegree source{target.theta - g.theta, target.xi - g.xi};
  if (source.theta < 0 || source.xi < 0 || source.theta > n || source.xi > n) return;
  const long long width = binomial(n, target.theta) * binomial(n, target.xi);
  for (const Monomial& m : bidegreeMonomials(n, source)) {
    Element row = multiply(Element::term(m, 1), generator);
    std::vector<Rational> coords(static_cast<std::size_t>(width), Rational(0));
    for (const auto& [mono, coeff] : row.terms())
      coords[static_cast<std::size_t>(monomialIndex(n, target, mono))] = coeff;
    rows.push_back(std::move(coords));
  }
}

}  // namespace

ExactMatrix idealPieceBasis(const QuotientModel& model, Bidegree d) {
  const int n = model.n;
  if (d.theta < 0 || d.xi < 0 || d.theta > n || d.xi > n)
    return ExactMatrix(0, 0);
  std::vector<std::vector<Rational>> rows;
  for (const Element& g : model.idealGenerators()) appendRows(rows, model, g, d);
  if (rows.empty()) {
    long long width = binomial(n, d.theta) * binomial(n, d.xi);
    return ExactMatrix(0, static_cast<int>(width));
  }
  return ExactMatrix::fromRows(rows);
}

long long quotientDimension(const QuotientModel& model, Bidegree d) {
  const int n = model.n;
  if (d.theta < 0 || d.xi < 0 || d.theta > n || d.xi > n) return 0;
  long long ambient = binomial(n, d.theta) * binomial(n, d.xi);
  return ambient - rank(idealPieceBasis(model, d));
}

long long closedFormDimension(const QuotientModel& model, Bidegree d) {
  const int m = model.kind == ModelKind::ReflectionRank ? model.n : model.n - 1;
  if (d.theta < 0 || d.xi < 0) return 0;
  if (d.theta + d.xi > m) return 0;
  return binomial(m, d.theta) * binomial(m, d.xi) -
         binomial(m, d.theta - 1) * binomial(m, d.xi - 1);
}

QTPolynomial hilbertSeries(const QuotientModel& model, int cap) {
  requireEnumerable(model.n, cap);
  QTPolynomial p;
  for (int i = 0; i <= model.n; ++i)
    for (int j = 0; j <= model.n; ++j)
      p.add(i, j, quotientDimension(model, {i, j}));
  return p;
}

QTPolynomial hilbertSeriesClosedForm(const QuotientModel& model) {
  QTPolynomial p;
  for (int i = 0; i <= model.n; ++i)
    for (int j = 0; j <= model.n; ++j)
      p.add(i, j, closedFormDimension(model, {i, j}));
  return p;
}

std::vector<long long> narayanaBoundary(int n) {
  if (n < 1) throw std::invalid_argument("narayanaBoundary: n must be >= 1");
  std::vector<long long> out;
  const QuotientModel model = QuotientModel::reflectionRank(n);
  for (int k = 0; k <= n; ++k) out.push_back(closedFormDimension(model, {k, n - k}));
  return out;
}

long long invariantDimension(int n, Bidegree d) {
  if (n < 1) throw std::invalid_argument("invariantDimension: n must be >= 1");
  Integer order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  Integer sum = 0;
  for (const CycleType& ct : cycleTypes(n))
    sum += ct.classSize * static_cast<long>(exteriorBidegreeCharacter(n, d, ct.parts));
  if (sum % order != 0)
    throw std::logic_error("invariantDimension: Reynolds average not integral");
  return static_cast<long long>(Integer(sum / order).get_si());
}

Element primedGenerator(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("primedGenerator: index out of range");
  Element e = Element::generatorXi(i, n);
  for (int j = 2; j <= n; ++j) e += Element::generatorXi(j, n);
  return e;
}

namespace {

Element primedWeight(const Path& path, int n) {
  Element w = Element::one(n);
  for (int pos = 0; pos < path.length(); ++pos) {
    const int i = pos + 1;
    switch (path.step(pos)) {
      case Step::Up: break;
      case Step::HorizTheta: w = multiply(w, Element::generatorTheta(i, n)); break;
      case Step::HorizXi: w = multiply(w, primedGenerator(i, n)); break;
      case Step::Down:
        w = multiply(w, multiply(Element::generatorTheta(i, n), primedGenerator(i, n)));
        break;
    }
  }
  return w;
}

}  // namespace

PrimedBasisReport primedBasisCheck(int n, int cap) {
  if (n < 1) throw std::invalid_argument("primedBasisCheck: n must be >= 1");
  PrimedBasisReport report;
  report.n = n;
  report.expectedTotal = binomial(2 * n - 1, n);

  const QuotientModel model = QuotientModel::permutation(n);

  // bucket the strictly positive paths by bidegree
  std::map<Bidegree, std::vector<Path>> buckets;
  forEachPath(n, PathFamily::StrictlyPositive, [&](const Path& p) {
    PathStatistics st = statistics(p);
    buckets[{st.thetaDegree, st.xiDegree}].push_back(p);
    ++report.pathTotal;
  }, cap);

  bool allIndependent = true;
  for (const auto& [d, paths] : buckets) {
    PrimedBidegreeRow row;
    row.i = d.theta;
    row.j = d.xi;
    row.pathCount = static_cast<long long>(paths.size());
    row.quotientDim = quotientDimension(model, d);

    const long long width = binomial(n, d.theta) * binomial(n, d.xi);
    RrefResult ideal = rref(idealPieceBasis(model, d));

    // reduce each primed weight modulo the ideal slice, then keep only the
    // standard (non-pivot) coordinates
    std::vector<bool> isPivot(static_cast<std::size_t>(width), false);
    for (int c : ideal.pivotColumns) isPivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> freeColumns;
    for (int c = 0; c < static_cast<int>(width); ++c)
      if (!isPivot[static_cast<std::size_t>(c)]) freeColumns.push_back(c);

    std::vector<std::vector<Rational>> reducedRows;
    for (const Path& p : paths) {
      Element w = primedWeight(p, n);
      auto hom = w.homogeneousBidegree();
      if (!hom || (!w.isZero() && *hom != d))
        throw std::logic_error("primedBasisCheck: weight not bihomogeneous of path bidegree");
      std::vector<Rational> coords(static_cast<std::size_t>(width), Rational(0));
      for (const auto& [mono, coeff] : w.terms())
        coords[static_cast<std::size_t>(monomialIndex(n, d, mono))] = coeff;
      for (std::size_t k = 0; k < ideal.pivotColumns.size(); ++k) {
        const int col = ideal.pivotColumns[k];
        Rational factor = coords[static_cast<std::size_t>(col)];
        if (factor == 0) continue;
        for (int j = 0; j < static_cast<int>(width); ++j)
          coords[static_cast<std::size_t>(j)] -=
              factor * ideal.matrix.at(static_cast<int>(k), j);
      }
      std::vector<Rational> quotientCoords;
      quotientCoords.reserve(freeColumns.size());
      for (int c : freeColumns) quotientCoords.push_back(coords[static_cast<std::size_t>(c)]);
      reducedRows.push_back(std::move(quotientCoords));
    }
    row.independent =
        rank(ExactMatrix::fromRows(reducedRows)) == static_cast<int>(paths.size());
    allIndependent = allIndependent && row.independent;
    report.rows.push_back(row);
  }

  // transition matrix from {xi'_2..xi'_n} to {xi_2..xi_n}: 2 on the diagonal,
  // 1 elsewhere; its determinant is n
  ExactMatrix transition(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) transition.at(i, j) = (i == j) ? 2 : 1;
  report.transitionDet = determinant(transition);
  report.transitionDetOk = report.transitionDet == n;

  report.pass = allIndependent && report.transitionDetOk &&
                report.pathTotal == report.expectedTotal;
  return report;
}

}  // namespace fdc
