#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeintorus/chebyshev.hpp"
#include "skeintorus/qtorus.hpp"

using namespace skeintorus;

namespace {

TorusPtr random_torus(std::mt19937_64& rng, int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  std::uniform_int_distribution<long> d(-3, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = d(rng);
      m[j][i] = -m[i][j];
    }
  return make_torus(std::move(labels), std::move(m));
}

ExponentVector random_exponents(std::mt19937_64& rng, const CommutationMatrix& torus) {
  std::uniform_int_distribution<long> d(-3, 3);
  ExponentVector k;
  for (const Label& l : torus.labels()) k.set(l, d(rng));
  return k;
}

TorusElement random_element(std::mt19937_64& rng, const TorusPtr& torus,
                            const ContextPtr& ctx = nullptr) {
  std::uniform_int_distribution<int> nterms(1, 3), coeffd(-3, 3), expd(-2, 2);
  TorusElement x = TorusElement::zero(torus, ctx);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    PolyTerms t;
    t[expd(rng)] = coeffd(rng);
    x = x + TorusElement::monomial(torus, ctx, random_exponents(rng, *torus),
                                   GroundScalar::from_terms(std::move(t), ctx));
  }
  return x;
}

}  // namespace

TEST_CASE("normalized monomial product law") {
  TorusPtr ke = ke_torus();
  ExponentVector eK = ExponentVector::unit("K");
  ExponentVector eE = ExponentVector::unit("E");

  // <k,k> = 0 by antisymmetry
  CHECK(monomial_product(ke, nullptr, eK, eK) ==
        TorusElement::monomial(ke, nullptr, eK.scaled(2)));

  CHECK(monomial_product(ke, nullptr, eK, eE) ==
        TorusElement::monomial(ke, nullptr, eK.plus(eE), GroundScalar::v_power(2)));
  CHECK(monomial_product(ke, nullptr, eE, eK) ==
        TorusElement::monomial(ke, nullptr, eK.plus(eE), GroundScalar::v_power(-2)));

  // x^k x^n = q^{<k,n>} x^n x^k on random data
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    TorusPtr torus = random_torus(rng, 3);
    ExponentVector k = random_exponents(rng, *torus), n = random_exponents(rng, *torus);
    TorusElement lhs = monomial_product(torus, nullptr, k, n);
    TorusElement rhs = monomial_product(torus, nullptr, n, k) *
                       GroundScalar::q_power(torus->pairing(k, n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("multiply: unit, inverses, KE expansion") {
  TorusPtr ke = ke_torus();
  TorusElement one = TorusElement::unit(ke);
  TorusElement K = TorusElement::generator(ke, nullptr, "K");
  TorusElement E = TorusElement::generator(ke, nullptr, "E");
  CHECK((one + K) * one == one + K);
  CHECK(K * K.inverse() == one);

  // (K + K^-1 + E)^2 - 2 = K^2 + K^-2 + E^2 + [2]_q([EK] + [EK^-1])
  TorusElement s = ke_sum(nullptr);
  TorusElement lhs = s * s - one * GroundScalar::integer(2);
  ExponentVector ek1;  // E K
  ek1.set("E", 1);
  ek1.set("K", 1);
  ExponentVector ek2;  // E K^-1
  ek2.set("E", 1);
  ek2.set("K", -1);
  TorusElement rhs = TorusElement::generator(ke, nullptr, "K", 2) +
                     TorusElement::generator(ke, nullptr, "K", -2) +
                     TorusElement::generator(ke, nullptr, "E", 2) +
                     TorusElement::monomial(ke, nullptr, ek1, quantum_integer(2)) +
                     TorusElement::monomial(ke, nullptr, ek2, quantum_integer(2));
  CHECK(lhs == rhs);
}

TEST_CASE("multiply is associative on random triples") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    TorusPtr torus = random_torus(rng, 3);
    TorusElement x = random_element(rng, torus), y = random_element(rng, torus),
                 z = random_element(rng, torus);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("powers of normalized monomials") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    TorusPtr torus = random_torus(rng, 3);
    ExponentVector k = random_exponents(rng, *torus);
    TorusElement xk = TorusElement::monomial(torus, nullptr, k);
    for (long n = 0; n <= 5; ++n)
      CHECK(xk.pow(n) == TorusElement::monomial(torus, nullptr, k.scaled(n)));
    CHECK(xk.pow(-2) == TorusElement::monomial(torus, nullptr, k.scaled(-2)));
  }
}

TEST_CASE("weyl normalization") {
  TorusPtr ke = ke_torus();
  ExponentVector eK = ExponentVector::unit("K");
  ExponentVector eE = ExponentVector::unit("E");

  std::vector<ExponentVector> single{eK};
  CHECK(weyl_normalize(ke, nullptr, single) == TorusElement::generator(ke, nullptr, "K"));

  std::vector<ExponentVector> fs{eE, eK};
  TorusElement w = weyl_normalize(ke, nullptr, fs);
  CHECK(w == TorusElement::monomial(ke, nullptr, eK.plus(eE)));
  // equals v^{-<e_E,e_K>} * (E-then-K ordered product)
  CHECK(w == monomial_product(ke, nullptr, eE, eK) *
                 GroundScalar::v_power(-ke->pairing(eE, eK)));

  // invariance under permutation of the factor list
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    TorusPtr torus = random_torus(rng, 4);
    std::vector<ExponentVector> factors;
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < n; ++j) factors.push_back(random_exponents(rng, *torus));
    TorusElement base = weyl_normalize(torus, nullptr, factors);
    std::shuffle(factors.begin(), factors.end(), rng);
    CHECK(weyl_normalize(torus, nullptr, factors) == base);
  }
}

TEST_CASE("reflection is an anti-involution") {
  TorusPtr ke = ke_torus();
  ExponentVector eK = ExponentVector::unit("K");
  TorusElement vk = TorusElement::monomial(ke, nullptr, eK, GroundScalar::v_power(1));
  CHECK(vk.reflection() == TorusElement::monomial(ke, nullptr, eK, GroundScalar::v_power(-1)));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    TorusPtr torus = random_torus(rng, 3);
    TorusElement x = random_element(rng, torus), y = random_element(rng, torus);
    CHECK(x.reflection().reflection() == x);
    CHECK((x * y).reflection() == y.reflection() * x.reflection());
  }
}

TEST_CASE("ordered factorization reproduces the monomial") {
  TorusPtr ke = ke_torus();
  SUBCASE("single generator") {
    OrderedFactorization f =
        factor_ordered(*ke, ExponentVector::unit("E", 3), std::vector<Label>{"K", "E"});
    CHECK(f.v_exponent == 0);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<Label, long>{"E", 3});
  }
  SUBCASE("empty exponent vector") {
    OrderedFactorization f = factor_ordered(*ke, ExponentVector{}, std::vector<Label>{"K", "E"});
    CHECK(f.v_exponent == 0);
    CHECK(f.factors.empty());
  }
  SUBCASE("multiply back, random") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 150; ++i) {
      TorusPtr torus = random_torus(rng, 4);
      ExponentVector k = random_exponents(rng, *torus);
      std::vector<Label> order = torus->labels();
      std::shuffle(order.begin(), order.end(), rng);
      OrderedFactorization f = factor_ordered(*torus, k, order);
      TorusElement prod =
          TorusElement::unit(torus) * GroundScalar::v_power(f.v_exponent);
      for (const auto& [l, e] : f.factors)
        prod = prod * TorusElement::generator(torus, nullptr, l, e);
      CHECK(prod == TorusElement::monomial(torus, nullptr, k));
    }
  }
  SUBCASE("missing label") {
    CHECK_THROWS_AS(
        (void)factor_ordered(*ke, ExponentVector::unit("K"), std::vector<Label>{"E"}),
        MissingLabel);
  }
}

TEST_CASE("grading exposes the term map") {
  TorusPtr ke = ke_torus();
  CHECK(TorusElement::zero(ke).terms().empty());
  TorusElement x = TorusElement::generator(ke, nullptr, "K");
  CHECK(x.terms().size() == 1);
  CHECK(x.terms().begin()->second.is_one());
  TorusElement y = x + TorusElement::generator(ke, nullptr, "E");
  CHECK(y.terms().size() == 2);
}

TEST_CASE("exact right division") {
  TorusPtr ke = ke_torus();
  TorusElement K = TorusElement::generator(ke, nullptr, "K");
  TorusElement E = TorusElement::generator(ke, nullptr, "E");
  TorusElement den = K + E;
  std::mt19937_64 rng(47);
  for (int i = 0; i < 50; ++i) {
    TorusElement w = random_element(rng, ke);
    CHECK(divide_right_exact(w * den, den) == w);
    CHECK(divide_right_exact(w * den.pow(2), den.pow(2)) == w);
  }
  TorusElement one = TorusElement::unit(ke);
  CHECK_THROWS_AS((void)divide_right_exact(K + one, den), ExactDivisionFailure);
}

TEST_CASE("mismatched tori are rejected") {
  TorusPtr a = make_torus({"x", "y"}, {{0, 1}, {-1, 0}});
  TorusPtr b = make_torus({"x", "y"}, {{0, 2}, {-2, 0}});
  TorusElement xa = TorusElement::generator(a, nullptr, "x");
  TorusElement xb = TorusElement::generator(b, nullptr, "x");
  CHECK_THROWS_AS((void)(xa * xb), TorusMismatch);
}
