#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeintorus/frobenius.hpp"
#include "skeintorus/surface.hpp"

using namespace skeintorus;

namespace {

TorusElement random_element(std::mt19937_64& rng, const TorusPtr& torus,
                            const ContextPtr& ctx = nullptr) {
  std::uniform_int_distribution<int> nterms(1, 3), expd(-2, 2), coeffd(-3, 3);
  TorusElement x = TorusElement::zero(torus, ctx);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    ExponentVector k;
    for (const Label& l : torus->labels()) k.set(l, expd(rng));
    x = x + TorusElement::monomial(torus, ctx, k,
                                   GroundScalar::integer(coeffd(rng), ctx));
  }
  return x;
}

}  // namespace

TEST_CASE("frobenius basics") {
  TorusPtr target = make_torus({"x", "y"}, {{0, 1}, {-1, 0}});

  SUBCASE("N = 1 is the identity") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
      TorusElement x = random_element(rng, target);
      CHECK(frobenius(x, 1, target) == x);
    }
  }

  SUBCASE("generators map to N-th powers") {
    TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(4));
    TorusElement g = TorusElement::generator(source, nullptr, "x");
    CHECK(frobenius(g, 2, target) == TorusElement::generator(target, nullptr, "x", 2));
  }

  SUBCASE("matrix scale precondition is checked") {
    TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(3));
    TorusElement g = TorusElement::generator(source, nullptr, "x");
    CHECK_THROWS_AS((void)frobenius(g, 2, target), MatrixScaleMismatch);
    TorusPtr other = make_torus({"x", "z"}, {{0, 4}, {-4, 0}});
    TorusElement h = TorusElement::generator(other, nullptr, "x");
    CHECK_THROWS_AS((void)frobenius(h, 2, target), MatrixScaleMismatch);
  }
}

TEST_CASE("frobenius is a ring homomorphism with injective support map") {
  std::mt19937_64 rng(67);
  for (long N : {2L, 3L}) {
    TorusPtr target = make_torus({"x", "y", "z"}, {{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
    TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(N * N));
    for (int i = 0; i < 100; ++i) {
      TorusElement x = random_element(rng, source);
      TorusElement y = random_element(rng, source);
      CHECK(frobenius(x * y, N, target) ==
            frobenius(x, N, target) * frobenius(y, N, target));
      CHECK(frobenius(x + y, N, target) ==
            frobenius(x, N, target) + frobenius(y, N, target));
      // support-injective: term counts survive
      CHECK(frobenius(x, N, target).terms().size() == x.terms().size());
    }
  }
}

TEST_CASE("cyclotomic scalars map through v -> v^{N^2}") {
  ContextPtr c16 = make_context(16);
  TorusPtr target = make_torus({"x"}, {{0}});
  TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(4));
  // epsilon = v^{2 N^2} on the source side becomes xi^{N^2 * N^2}... the
  // integer scalars are fixed, v picks up the fourth power.
  TorusElement x = TorusElement::monomial(source, c16, ExponentVector::unit("x"),
                                          GroundScalar::v_power(2, c16));
  TorusElement fx = frobenius(x, 2, target);
  CHECK(fx == TorusElement::monomial(target, c16, ExponentVector::unit("x", 2),
                                     GroundScalar::v_power(8, c16)));
}

TEST_CASE("image check on the annulus pair") {
  auto [s, q] = builtin("annulus2");
  ContextPtr c16 = make_context(16);
  TorusPtr target = std::make_shared<const CommutationMatrix>(x_matrix(s, q));
  TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(4));

  ExponentVector kx, ky;
  kx.add("a", -1);
  kx.add("b", -1);
  kx.add("c", 1);
  kx.add("d", 1);
  ky.add("a", 1);
  ky.add("b", -1);
  TorusElement alpha = TorusElement::monomial(source, c16, kx) +
                       TorusElement::monomial(source, c16, ky) +
                       TorusElement::monomial(source, c16, ky.scaled(-1));
  TorusElement powers = TorusElement::monomial(target, c16, kx.scaled(2)) +
                        TorusElement::monomial(target, c16, ky.scaled(2)) +
                        TorusElement::monomial(target, c16, ky.scaled(-2));
  CHECK(frobenius_image_check(alpha, powers, 2));
  TorusElement wrong = powers + TorusElement::unit(target, c16);
  CHECK_FALSE(frobenius_image_check(alpha, wrong, 2));
}
