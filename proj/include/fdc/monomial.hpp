#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fdc/combinatorics.hpp"

namespace fdc {

struct Bidegree {
  int theta = 0;
  int xi = 0;

  int total() const { return theta + xi; }
  bool operator==(const Bidegree&) const = default;
  auto operator<=>(const Bidegree&) const = default;
};

/// Exterior monomial in canonical form: theta factors in increasing index
/// order followed by xi factors in increasing index order, coefficient +1.
class Monomial {
 public:
  Monomial(int n, Mask theta, Mask xi);

  static Monomial one(int n) { return Monomial(n, 0, 0); }

  int rank() const { return n_; }
  Mask thetaMask() const { return theta_; }
  Mask xiMask() const { return xi_; }

  std::vector<int> thetaIndices() const { return maskToIndices(theta_); }
  std::vector<int> xiIndices() const { return maskToIndices(xi_); }

  Bidegree bidegree() const { return {popcount(theta_), popcount(xi_)}; }
  int totalDegree() const { return popcount(theta_) + popcount(xi_); }

  /// "t1 t3 x2" in canonical order; "1" for the empty monomial.
  std::string toText() const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  int n_;
  Mask theta_;
  Mask xi_;
};

}  // namespace fdc
