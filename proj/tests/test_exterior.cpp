#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdc/element.hpp"
#include "oracles.hpp"

using namespace fdc;

namespace {

Monomial randomMonomial(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Mask> dist(0, fullMask(n));
  return Monomial(n, dist(rng), dist(rng));
}

}  // namespace

TEST_CASE("generators square to zero and anticommute") {
  const int n = 3;
  Element t1 = Element::generatorTheta(1, n);
  Element t2 = Element::generatorTheta(2, n);
  Element x1 = Element::generatorXi(1, n);

  CHECK(multiply(t1, t1).isZero());
  CHECK(multiply(x1, x1).isZero());
  CHECK(multiply(t2, t1) == -multiply(t1, t2));
  CHECK(multiply(t1, x1) == -multiply(x1, t1));

  // theta_2 theta_1 = -theta_1 theta_2 in canonical form
  Element p = multiply(t2, t1);
  CHECK(p.termCount() == 1);
  CHECK(p.coefficient(Monomial(n, bitAt(0) | bitAt(1), 0)) == -1);
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(multiply(Element::one(2), Element::one(3)), std::invalid_argument);
  Element a = Element::one(2);
  CHECK_THROWS_AS(a += Element::one(4), std::invalid_argument);
}

TEST_CASE("casimir element") {
  Element d1 = casimir(1);
  CHECK(d1 == Element::term(Monomial(1, 1, 1), 1));

  Element d3 = casimir(3);
  CHECK(d3.termCount() == 3);
  for (const auto& [m, c] : d3.terms()) {
    CHECK(m.bidegree() == Bidegree{1, 1});
    CHECK(c == 1);
  }
  CHECK(d3 == Element::term(Monomial(3, 1, 1), 1) + Element::term(Monomial(3, 2, 2), 1) +
                  Element::term(Monomial(3, 4, 4), 1));
}

TEST_CASE("casimir is central") {
  const int n = 4;
  Element delta = casimir(n);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Element m = Element::term(randomMonomial(n, rng), 1);
    CHECK(multiply(delta, m) == multiply(m, delta));
  }
}

TEST_CASE("casimir square at n=2") {
  // (theta_1 xi_1 + theta_2 xi_2)^2 = 2 theta_1 xi_1 theta_2 xi_2, which is
  // -2 theta_1 theta_2 xi_1 xi_2 once re-sorted
  Element sq = multiply(casimir(2), casimir(2));
  CHECK(sq.termCount() == 1);
  CHECK(sq.coefficient(Monomial(2, 3, 3)) == -2);
  CHECK(sq == testing::naiveMultiply(casimir(2), casimir(2)));
}

TEST_CASE("casimir powers vanish exactly above the rank") {
  CHECK(casimirPower(5, 0) == Element::one(5));
  CHECK(casimirPower(3, 4).isZero());
  Element top = casimirPower(3, 3);
  CHECK_FALSE(top.isZero());
  auto d = top.homogeneousBidegree();
  REQUIRE(d.has_value());
  CHECK(*d == Bidegree{3, 3});
  for (int k = 0; k <= 6; ++k)
    CHECK(casimirPower(6, k).isZero() == (k > 6));
}

TEST_CASE("multiplication agrees with the transposition-sort oracle") {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      Monomial a = randomMonomial(n, rng);
      Monomial b = randomMonomial(n, rng);
      Element lhs = multiply(Element::term(a, 1), Element::term(b, 1));
      Element rhs(n);
      if (auto p = testing::naiveProduct(a, b)) rhs = Element::term(p->first, p->second);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      Element a = Element::term(randomMonomial(n, rng), Rational(1, 2));
      Element b = Element::term(randomMonomial(n, rng), 3) + casimir(n);
      Element c = Element::term(randomMonomial(n, rng), -2);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("bidegree additivity when the product is nonzero") {
  std::mt19937_64 rng(13);
  const int n = 6;
  for (int trial = 0; trial < 300; ++trial) {
    Monomial a = randomMonomial(n, rng);
    Monomial b = randomMonomial(n, rng);
    Element p = multiply(Element::term(a, 1), Element::term(b, 1));
    if (p.isZero()) continue;
    Bidegree expect{a.bidegree().theta + b.bidegree().theta,
                    a.bidegree().xi + b.bidegree().xi};
    CHECK(*p.homogeneousBidegree() == expect);
  }
}

TEST_CASE("v-basis monomials") {
  CHECK(vBasisMonomial({1}, {}, 2) == Element::generatorTheta(1, 2));

  // shared indices are paired at the front; for a single index the product is
  // already canonical
  CHECK(vBasisMonomial({1}, {1}, 1) == Element::term(Monomial(1, 1, 1), 1));

  // v({1,2},{2}) = theta_2 xi_2 theta_1 = +theta_1 theta_2 xi_2
  CHECK(vBasisMonomial({1, 2}, {2}, 2) ==
        Element::term(Monomial(2, 3, maskFromIndices({2}, 2)), 1));

  // the transition delta_2 . v({1}, {}) = v({1,2}, {2})
  CHECK(multiply(casimir(2), vBasisMonomial({1}, {}, 2)) == vBasisMonomial({1, 2}, {2}, 2));

  CHECK_THROWS_AS(vBasisMonomial({3}, {}, 2), std::invalid_argument);

  // always a single signed monomial with the prescribed supports
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Mask> dist(0, fullMask(6));
  for (int trial = 0; trial < 200; ++trial) {
    Mask a = dist(rng), b = dist(rng);
    Element v = vBasisMonomialMask(a, b, 6);
    REQUIRE(v.termCount() == 1);
    const auto& [m, c] = *v.terms().begin();
    CHECK(m.thetaMask() == a);
    CHECK(m.xiMask() == b);
    CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("single-step transition is sign-free on random pairs") {
  const int n = 5;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Mask> dist(0, fullMask(n));
  Element delta = casimir(n);
  for (int trial = 0; trial < 100; ++trial) {
    Mask a = dist(rng), b = dist(rng);
    Element lhs = multiply(delta, vBasisMonomialMask(a, b, n));
    Element rhs(n);
    Mask free = fullMask(n) & ~(a | b);
    while (free != 0) {
      Mask c = free & (~free + 1);
      rhs += vBasisMonomialMask(a | c, b | c, n);
      free &= free - 1;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("monomials and paths are mutually inverse") {
  // the empty monomial is the all-up path
  CHECK(toPath(Monomial::one(3)) == Path::fromString("U U U"));

  for (int n = 1; n <= 6; ++n) {
    for (Mask a = 0; a <= fullMask(n); ++a) {
      for (Mask b = 0; b <= fullMask(n); ++b) {
        Monomial m(n, a, b);
        CHECK(fromPath(toPath(m)) == m);
      }
    }
  }
}

TEST_CASE("path statistics measure monomial supports") {
  for (Mask a = 0; a <= fullMask(5); ++a)
    for (Mask b = 0; b <= fullMask(5); ++b) {
      Monomial m(5, a, b);
      PathStatistics st = statistics(toPath(m));
      CHECK(st.thetaDegree == popcount(a));
      CHECK(st.xiDegree == popcount(b));
      CHECK(st.totalDegree == m.totalDegree());
    }
}

TEST_CASE("nine-step figure path") {
  // theta support {3,4,5,6,9}, xi support {4,5,9}
  Monomial m(9, maskFromIndices({3, 4, 5, 6, 9}, 9), maskFromIndices({4, 5, 9}, 9));
  CHECK(toPath(m) == Path::fromString("U U Ht D D Ht U U D"));
  CHECK(fromPath(Path::fromString("U U Ht D D Ht U U D")) == m);
}

TEST_CASE("poincare duality via random nonzero pairings") {
  // complementary monomials pair to +-(top monomial)
  const int n = 4;
  Monomial top(n, fullMask(n), fullMask(n));
  for (Mask a = 0; a <= fullMask(n); ++a) {
    Monomial m(n, a, fullMask(n) & ~a);
    Monomial comp(n, fullMask(n) & ~a, a);
    Element p = multiply(Element::term(m, 1), Element::term(comp, 1));
    REQUIRE(p.termCount() == 1);
    CHECK((p.coefficient(top) == 1 || p.coefficient(top) == -1));
  }
}
