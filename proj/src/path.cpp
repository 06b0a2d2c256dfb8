#include "fdc/path.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace fdc {

const char* stepName(Step s) {
  switch (s) {
    case Step::Up: return "U";
    case Step::HorizTheta: return "Ht";
    case Step::HorizXi: return "Hx";
    case Step::Down: return "D";
  }
  return "?";
}

std::optional<Step> stepFromName(const std::string& name) {
  if (name == "U") return Step::Up;
  if (name == "Ht") return Step::HorizTheta;
  if (name == "Hx") return Step::HorizXi;
  if (name == "D") return Step::Down;
  return std::nullopt;
}

Path Path::fromString(const std::string& text) {
  std::istringstream in(text);
  std::vector<Step> steps;
  std::string token;
  while (in >> token) {
    auto s = stepFromName(token);
    if (!s) throw std::invalid_argument("Path::fromString: unknown step '" + token + "'");
    steps.push_back(*s);
  }
  return Path(std::move(steps));
}

std::string Path::toString() const {
  std::string out;
  for (Step s : steps_) {
    if (!out.empty()) out += ' ';
    out += stepName(s);
  }
  return out;
}

namespace {

int stepRise(Step s) {
  switch (s) {
    case Step::Up: return 1;
    case Step::Down: return -1;
    default: return 0;
  }
}

}  // namespace

PathStatistics statistics(const Path& p) {
  PathStatistics st;
  int height = 0;
  for (int i = 0; i < p.length(); ++i) {
    Step s = p.step(i);
    height += stepRise(s);
    if (height < st.depth) st.depth = height;
    if (s == Step::Down || s == Step::HorizTheta) ++st.thetaDegree;
    if (s == Step::Down || s == Step::HorizXi) ++st.xiDegree;
  }
  st.totalDegree = p.length() - height;
  return st;
}

void requireEnumerable(int n, int cap) {
  if (n < 0) throw std::invalid_argument("path enumeration: negative n");
  if (n > cap)
    throw std::invalid_argument("path enumeration: n = " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(cap) +
                                " (raise the cap to override)");
}

void forEachPath(int n, PathFamily family, const std::function<void(const Path&)>& visit,
                 int cap) {
  requireEnumerable(n, cap);
  std::vector<Step> steps(static_cast<std::size_t>(n));
  Path scratch;
  // depth-first over step choices, pruning families by the running height
  auto rec = [&](auto&& self, int pos, int height) -> void {
    if (pos == n) {
      scratch = Path(steps);
      visit(scratch);
      return;
    }
    for (Step s : {Step::Up, Step::HorizTheta, Step::HorizXi, Step::Down}) {
      int h = height + stepRise(s);
      if (family == PathFamily::NonNegative && h < 0) continue;
      if (family == PathFamily::StrictlyPositive && h < 1) continue;
      steps[static_cast<std::size_t>(pos)] = s;
      self(self, pos + 1, h);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Path> enumeratePaths(int n, PathFamily family, int cap) {
  std::vector<Path> out;
  forEachPath(n, family, [&](const Path& p) { out.push_back(p); }, cap);
  return out;
}

std::strong_ordering comparePaths(const Path& a, const Path& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("comparePaths: length mismatch");
  PathStatistics sa = statistics(a);
  PathStatistics sb = statistics(b);
  if (sa.totalDegree != sb.totalDegree)
    return sa.totalDegree <=> sb.totalDegree;
  // deeper paths come later: d(a) > d(b) means a precedes b
  if (sa.depth != sb.depth) return sb.depth <=> sa.depth;
  for (int i = 0; i < a.length(); ++i) {
    if (a.step(i) != b.step(i))
      return static_cast<int>(a.step(i)) <=> static_cast<int>(b.step(i));
  }
  return std::strong_ordering::equal;
}

namespace {

// Union of two index-disjoint monomials at the path level; nullopt when both
// use an index.  Index-level disjointness is the multiplication the axiom
// quantifies over: the union must again be a plain superposition of steps,
// mirroring how ideal elements get multiplied by fresh-index monomials.
std::optional<Path> disjointUnion(const Path& a, const Path& b) {
  std::vector<Step> steps(static_cast<std::size_t>(a.length()));
  for (int i = 0; i < a.length(); ++i) {
    Step x = a.step(i);
    Step y = b.step(i);
    if (x == Step::Up) steps[static_cast<std::size_t>(i)] = y;
    else if (y == Step::Up) steps[static_cast<std::size_t>(i)] = x;
    else
      return std::nullopt;
  }
  return Path(std::move(steps));
}

}  // namespace

TermOrderReport termOrderCheck(int n, std::uint64_t seed, long long randomTriples) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("termOrderCheck: supported range is 0 <= n <= 6");
  TermOrderReport report;
  report.n = n;

  const auto all = enumeratePaths(n, PathFamily::All);
  const Path unit(std::vector<Step>(static_cast<std::size_t>(n), Step::Up));

  report.minimalityPass = true;
  for (const Path& p : all) {
    if (p == unit) continue;
    if (comparePaths(unit, p) != std::strong_ordering::less) {
      report.minimalityPass = false;
      report.counterexample = "1 not below " + p.toString();
      break;
    }
  }

  report.multiplicativityPass = true;
  auto checkTriple = [&](const Path& s, const Path& t, const Path& u) -> bool {
    auto su = disjointUnion(s, u);
    auto tu = disjointUnion(t, u);
    if (!su || !tu) return true;  // u shares support; axiom does not apply
    ++report.triplesChecked;
    if (comparePaths(s, t) == std::strong_ordering::less &&
        comparePaths(*su, *tu) != std::strong_ordering::less) {
      report.counterexample = "s=" + s.toString() + " t=" + t.toString() +
                              " u=" + u.toString();
      return false;
    }
    return true;
  };

  if (n <= 3) {
    report.exhaustive = true;
    for (const Path& s : all)
      for (const Path& t : all)
        for (const Path& u : all)
          if (!checkTriple(s, t, u)) {
            report.multiplicativityPass = false;
            goto done;
          }
  } else {
    // sample u first, then fill s and t only on the indices u leaves free, so
    // every sampled triple exercises the axiom
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> anyStep(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (long long it = 0; it < randomTriples; ++it) {
      std::vector<Step> u(static_cast<std::size_t>(n)), s(u), t(u);
      for (int k = 0; k < n; ++k) {
        bool uUses = coin(rng) == 1;
        u[static_cast<std::size_t>(k)] =
            uUses ? static_cast<Step>(1 + anyStep(rng) % 3) : Step::Up;
        s[static_cast<std::size_t>(k)] =
            uUses ? Step::Up : static_cast<Step>(anyStep(rng));
        t[static_cast<std::size_t>(k)] =
            uUses ? Step::Up : static_cast<Step>(anyStep(rng));
      }
      if (!checkTriple(Path(s), Path(t), Path(u))) {
        report.multiplicativityPass = false;
        break;
      }
    }
  }
done:
  report.pass = report.minimalityPass && report.multiplicativityPass;
  return report;
}

QTPolynomial pathGenerating(int n, PathFamily family, int cap) {
  QTPolynomial p;
  forEachPath(n, family, [&](const Path& path) {
    PathStatistics st = statistics(path);
    p.add(st.thetaDegree, st.xiDegree, 1);
  }, cap);
  return p;
}

QTPolynomial pathGeneratingOnAxis(int n, int cap) {
  QTPolynomial p;
  forEachPath(n, PathFamily::NonNegative, [&](const Path& path) {
    PathStatistics st = statistics(path);
    if (st.totalDegree == n)  // terminal height 0
      p.add(st.thetaDegree, st.xiDegree, 1);
  }, cap);
  return p;
}

RecursionReport recursionCheck(int n, int cap) {
  if (n < 1) throw std::invalid_argument("recursionCheck: n must be >= 1");
  RecursionReport report;
  report.n = n;
  QTPolynomial step = QTPolynomial::one() + QTPolynomial::monomial(1, 0, 1) +
                      QTPolynomial::monomial(0, 1, 1) + QTPolynomial::monomial(1, 1, 1);
  report.lhs = pathGenerating(n, PathFamily::NonNegative, cap);
  report.rhs = step * pathGenerating(n - 1, PathFamily::NonNegative, cap) -
               QTPolynomial::monomial(1, 1, 1) * pathGeneratingOnAxis(n - 1, cap);
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace fdc
