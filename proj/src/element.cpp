#include "fdc/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fdc {

Monomial::Monomial(int n, Mask theta, Mask xi) : n_(n), theta_(theta), xi_(xi) {
  if (n < 1 || n > kMaxRank)
    throw std::invalid_argument("Monomial: rank out of range");
  if ((theta | xi) & ~fullMask(n))
    throw std::invalid_argument("Monomial: support outside {1..n}");
}

std::string Monomial::toText() const {
  if (theta_ == 0 && xi_ == 0) return "1";
  std::string out;
  for (int i : thetaIndices()) {
    if (!out.empty()) out += ' ';
    out += "t" + std::to_string(i);
  }
  for (int i : xiIndices()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i);
  }
  return out;
}

Element::Element(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("Element: rank out of range");
}

Element Element::term(const Monomial& m, const Rational& coeff) {
  Element e(m.rank());
  Rational c = coeff;
  c.canonicalize();  // mpq arithmetic requires canonical operands
  if (c != 0) e.terms_.emplace(m, std::move(c));
  return e;
}

Element Element::generatorTheta(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("generatorTheta: index out of range");
  return term(Monomial(n, bitAt(i - 1), 0), 1);
}

Element Element::generatorXi(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("generatorXi: index out of range");
  return term(Monomial(n, 0, bitAt(i - 1)), 1);
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::addTerm(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  if (n_ != other.n_) throw std::invalid_argument("Element addition: rank mismatch");
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (n_ != other.n_) throw std::invalid_argument("Element subtraction: rank mismatch");
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Element Element::operator-() const {
  Element e(n_);
  for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
  return e;
}

namespace {

// Inversions between two disjoint ascending runs: pairs (x, y) with x in
// left, y in right, x > y.
int mergeInversions(Mask left, Mask right) {
  int inv = 0;
  while (right != 0) {
    int y = std::countr_zero(right);
    inv += popcount(left >> (y + 1));
    right &= right - 1;
  }
  return inv;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("multiply: rank mismatch");
  const int n = a.rank();
  Element out(n);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma.thetaMask() & mb.thetaMask()) || (ma.xiMask() & mb.xiMask()))
        continue;  // repeated generator squares to zero
      // word: theta_A1 xi_B1 theta_A2 xi_B2; move the second theta block left
      // past the first xi block, then merge the two sorted blocks of each kind
      int swaps = popcount(mb.thetaMask()) * popcount(ma.xiMask()) +
                  mergeInversions(ma.thetaMask(), mb.thetaMask()) +
                  mergeInversions(ma.xiMask(), mb.xiMask());
      Rational c = ca * cb;
      if (swaps & 1) c = -c;
      Monomial m(n, ma.thetaMask() | mb.thetaMask(), ma.xiMask() | mb.xiMask());
      out += Element::term(m, c);
    }
  }
  return out;
}

bool Element::isBihomogeneous() const { return homogeneousBidegree().has_value(); }

std::optional<Bidegree> Element::homogeneousBidegree() const {
  if (terms_.empty()) return Bidegree{0, 0};
  Bidegree d = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_)
    if (m.bidegree() != d) return std::nullopt;
  return d;
}

std::string Element::toText() const { return elementToText(*this); }

Element casimir(int n) {
  Element e(n);
  for (int i = 1; i <= n; ++i)
    e += Element::term(Monomial(n, bitAt(i - 1), bitAt(i - 1)), 1);
  return e;
}

Element casimirPower(int n, int k) {
  if (k < 0) throw std::invalid_argument("casimirPower: negative exponent");
  Element result = Element::one(n);
  const Element delta = casimir(n);
  // the power vanishes once k exceeds n, so the product stabilizes at zero
  for (int i = 0; i < k && !result.isZero(); ++i) result = multiply(result, delta);
  return result;
}

std::optional<std::pair<Monomial, int>> canonicalizeWord(std::span<const GeneratorRef> word,
                                                         int n) {
  std::vector<GeneratorRef> w(word.begin(), word.end());
  // bubble sort into (thetas ascending, then xis ascending), counting swaps
  int swaps = 0;
  auto before = [](const GeneratorRef& a, const GeneratorRef& b) {
    if (a.isXi != b.isXi) return !a.isXi;
    return a.index < b.index;
  };
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && before(w[j], w[j - 1]); --j) {
      std::swap(w[j], w[j - 1]);
      ++swaps;
    }
  }
  Mask theta = 0;
  Mask xi = 0;
  for (const GeneratorRef& g : w) {
    if (g.index < 1 || g.index > n) throw std::invalid_argument("canonicalizeWord: index out of range");
    Mask& target = g.isXi ? xi : theta;
    Mask b = bitAt(g.index - 1);
    if (target & b) return std::nullopt;
    target |= b;
  }
  return std::make_pair(Monomial(n, theta, xi), (swaps & 1) ? -1 : 1);
}

Element vBasisMonomialMask(Mask a, Mask b, int n) {
  if ((a | b) & ~fullMask(n))
    throw std::invalid_argument("vBasisMonomial: set outside {1..n}");
  std::vector<GeneratorRef> word;
  for (int i : maskToIndices(a & b)) {
    word.push_back({false, i});
    word.push_back({true, i});
  }
  for (int i : maskToIndices(a & ~b)) word.push_back({false, i});
  for (int i : maskToIndices(b & ~a)) word.push_back({true, i});
  auto canon = canonicalizeWord(word, n);
  // supports are disjoint by construction, so the word never repeats
  return Element::term(canon->first, canon->second);
}

Element vBasisMonomial(const std::vector<int>& a, const std::vector<int>& b, int n) {
  return vBasisMonomialMask(maskFromIndices(a, n), maskFromIndices(b, n), n);
}

Path toPath(const Monomial& m) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) {
    bool inTheta = (m.thetaMask() >> i) & 1;
    bool inXi = (m.xiMask() >> i) & 1;
    if (inTheta && inXi) steps.push_back(Step::Down);
    else if (inTheta) steps.push_back(Step::HorizTheta);
    else if (inXi) steps.push_back(Step::HorizXi);
    else steps.push_back(Step::Up);
  }
  return Path(std::move(steps));
}

Monomial fromPath(const Path& p) {
  Mask theta = 0;
  Mask xi = 0;
  for (int i = 0; i < p.length(); ++i) {
    switch (p.step(i)) {
      case Step::Down: theta |= bitAt(i); xi |= bitAt(i); break;
      case Step::HorizTheta: theta |= bitAt(i); break;
      case Step::HorizXi: xi |= bitAt(i); break;
      case Step::Up: break;
    }
  }
  return Monomial(p.length(), theta, xi);
}

std::string elementToText(const Element& e) {
  if (e.isZero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (m.thetaMask() == 0 && m.xiMask() == 0) out += toString(c);
    else out += toString(c) + "*" + m.toText();
  }
  return out;
}

namespace {

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

GeneratorRef parseGenerator(const std::string& token) {
  if (token.size() < 2 || (token[0] != 't' && token[0] != 'x'))
    throw std::invalid_argument("element parse: bad generator '" + token + "'");
  std::size_t pos = 0;
  int idx = std::stoi(token.substr(1), &pos);
  if (pos + 1 != token.size())
    throw std::invalid_argument("element parse: bad generator '" + token + "'");
  return {token[0] == 'x', idx};
}

bool looksLikeNumber(const std::string& token) {
  char c = token[0];
  return c == '-' || c == '+' || (c >= '0' && c <= '9');
}

Element parseTerm(const std::string& text, int sign, int n) {
  Rational coeff(sign);
  std::string rest = text;
  auto star = text.find('*');
  if (star != std::string::npos) {
    coeff *= rationalFromString(text.substr(0, star));
    rest = text.substr(star + 1);
  }
  auto tokens = splitWhitespace(rest);
  if (tokens.empty())
    throw std::invalid_argument("element parse: empty term");
  std::vector<GeneratorRef> word;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (star == std::string::npos && i == 0 && looksLikeNumber(tokens[0])) {
      coeff *= rationalFromString(tokens[0]);
      continue;
    }
    word.push_back(parseGenerator(tokens[i]));
  }
  if (word.empty()) return Element::term(Monomial::one(n), coeff);
  auto canon = canonicalizeWord(word, n);
  if (!canon) return Element::zero(n);
  return Element::term(canon->first, coeff * canon->second);
}

}  // namespace

Element elementFromText(const std::string& text, int n) {
  Element out(n);
  // split on top-level + and -, keeping each sign with the following term
  std::vector<std::pair<int, std::string>> parts;
  int sign = 1;
  std::string current;
  auto hasContent = [](const std::string& s) {
    return s.find_first_not_of(" \t") != std::string::npos;
  };
  for (char c : text) {
    if (c == '+' || c == '-') {
      if (hasContent(current)) {
        parts.emplace_back(sign, current);
        sign = (c == '-') ? -1 : 1;
        current.clear();
      } else if (c == '-') {
        sign = -sign;
      }
    } else {
      current += c;
    }
  }
  if (hasContent(current)) parts.emplace_back(sign, current);
  if (parts.empty()) throw std::invalid_argument("element parse: empty input");
  for (const auto& [s, termText] : parts) out += parseTerm(termText, s, n);
  return out;
}

std::string elementToJsonText(const Element& e) {
  nlohmann::json j;
  j["n"] = e.rank();
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) {
    nlohmann::json t;
    t["theta"] = m.thetaIndices();
    t["xi"] = m.xiIndices();
    t["coeff"] = toString(c);
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

Element elementFromJsonText(const std::string& jsonText) {
  nlohmann::json j = nlohmann::json::parse(jsonText);
  int n = j.at("n").get<int>();
  Element out(n);
  for (const auto& t : j.at("terms")) {
    Rational coeff = rationalFromString(t.at("coeff").get<std::string>());
    std::vector<GeneratorRef> word;
    for (int i : t.at("theta").get<std::vector<int>>()) word.push_back({false, i});
    for (int i : t.at("xi").get<std::vector<int>>()) word.push_back({true, i});
    auto canon = canonicalizeWord(word, n);
    if (!canon) continue;  // repeated generator: the term is zero
    out += Element::term(canon->first, coeff * canon->second);
  }
  return out;
}

}  // namespace fdc
