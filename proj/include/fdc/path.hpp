#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdc/qt_polynomial.hpp"

namespace fdc {

/// One step of a decorated lattice path.  The enum order U < Ht < Hx < D is
/// the step order used by the lexicographic branch of the term order.
enum class Step : std::uint8_t { Up = 0, HorizTheta = 1, HorizXi = 2, Down = 3 };

const char* stepName(Step s);
std::optional<Step> stepFromName(const std::string& name);

/// n-step lattice path with up/down steps and theta/xi decorated horizontal
/// steps.  Paths of length n are in bijection with the monomials of the rank-n
/// exterior algebra.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a space-separated step string such as "U Ht Hx D".
  static Path fromString(const std::string& text);

  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int i) const { return steps_[static_cast<std::size_t>(i)]; }
  const std::vector<Step>& steps() const { return steps_; }

  std::string toString() const;

  bool operator==(const Path&) const = default;
  /// Plain ordering on step sequences, used only as a container key; the term
  /// order is comparePaths.
  auto operator<=>(const Path&) const = default;

 private:
  std::vector<Step> steps_;
};

struct PathStatistics {
  int depth = 0;        // minimum height over all prefixes (<= 0)
  int totalDegree = 0;  // n - terminal height
  int thetaDegree = 0;  // #down + #theta-horizontal
  int xiDegree = 0;     // #down + #xi-horizontal
};

PathStatistics statistics(const Path& p);

enum class PathFamily { All, NonNegative, StrictlyPositive };

/// Operations enumerating all 4^n monomials refuse larger n unless the caller
/// raises the cap explicitly.
constexpr int kEnumerationCap = 12;

void requireEnumerable(int n, int cap);

/// Visits every path of the family exactly once.
void forEachPath(int n, PathFamily family, const std::function<void(const Path&)>& visit,
                 int cap = kEnumerationCap);

std::vector<Path> enumeratePaths(int n, PathFamily family, int cap = kEnumerationCap);

/// The term order on paths/monomials: total degree ascending, then depth with
/// deeper paths later, then step-lex.  Less means the left path is earlier.
std::strong_ordering comparePaths(const Path& a, const Path& b);

struct TermOrderReport {
  int n = 0;
  bool minimalityPass = false;
  bool multiplicativityPass = false;
  long long triplesChecked = 0;
  bool exhaustive = false;
  std::string counterexample;
  bool pass = false;
};

/// Verifies the two term-order axioms: 1 is minimal, and the order respects
/// multiplication by disjoint-support monomials.  Exhaustive for n <= 3,
/// randomized triples above that.
TermOrderReport termOrderCheck(int n, std::uint64_t seed = 0, long long randomTriples = 10000);

/// Sum of q^{deg_theta} t^{deg_xi} over the family.
QTPolynomial pathGenerating(int n, PathFamily family, int cap = kEnumerationCap);

/// Same sum over paths of Pi(n)_{>=0} that end on the x-axis.
QTPolynomial pathGeneratingOnAxis(int n, int cap = kEnumerationCap);

struct RecursionReport {
  int n = 0;
  bool pass = false;
  QTPolynomial lhs;
  QTPolynomial rhs;
};

/// Checks P_n = (1+q+t+qt) P_{n-1} - qt P'_{n-1}.
RecursionReport recursionCheck(int n, int cap = kEnumerationCap);

}  // namespace fdc
