#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdc {

/// Bivariate polynomial in q and t with exact integer coefficients.  Used for
/// bigraded Hilbert series and graded multiplicities; zero coefficients are
/// never stored.
class QTPolynomial {
 public:
  using Exponent = std::pair<int, int>;

  QTPolynomial() = default;

  static QTPolynomial zero() { return {}; }

  static QTPolynomial one() { return monomial(0, 0, 1); }

  static QTPolynomial monomial(int a, int b, long long c) {
    QTPolynomial p;
    if (c != 0) p.coeffs_[{a, b}] = c;
    return p;
  }

  /// [n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}; [0] = 0.
  static QTPolynomial qtAnalog(int n) {
    QTPolynomial p;
    for (int a = 0; a < n; ++a) p.coeffs_[{n - 1 - a, a}] = 1;
    return p;
  }

  bool isZero() const { return coeffs_.empty(); }

  long long coefficient(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<Exponent, long long>& coefficients() const { return coeffs_; }

  QTPolynomial& operator+=(const QTPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_) add(e.first, e.second, c);
    return *this;
  }

  QTPolynomial& operator-=(const QTPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_) add(e.first, e.second, -c);
    return *this;
  }

  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }

  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
    QTPolynomial p;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_)
        p.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return p;
  }

  bool operator==(const QTPolynomial& other) const = default;

  void add(int a, int b, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  long long evaluateAtOnes() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  /// The image under q <-> t.
  QTPolynomial swapped() const {
    QTPolynomial p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[{e.second, e.first}] = c;
    return p;
  }

  /// Sorted [q-exponent, t-exponent, coefficient] triples.
  std::vector<std::array<long long, 3>> triples() const {
    std::vector<std::array<long long, 3>> out;
    out.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) out.push_back({e.first, e.second, c});
    return out;
  }

  std::string toString() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coeffs_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long abs = c < 0 ? -c : c;
      std::string mono;
      if (e.first > 0) mono += "q" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
      if (e.second > 0) {
        if (!mono.empty()) mono += " ";
        mono += "t" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
      }
      if (mono.empty()) s += std::to_string(abs);
      else if (abs == 1) s += mono;
      else s += std::to_string(abs) + " " + mono;
    }
    return s;
  }

 private:
  std::map<Exponent, long long> coeffs_;
};

}  // namespace fdc
