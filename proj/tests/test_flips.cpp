#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeintorus/flips.hpp"

using namespace skeintorus;

namespace {

TorusElement random_positive_element(std::mt19937_64& rng, const TorusPtr& torus,
                                     const ContextPtr& ctx) {
  std::uniform_int_distribution<int> nterms(1, 3), expd(0, 2), coeffd(-3, 3);
  TorusElement x = TorusElement::zero(torus, ctx);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    ExponentVector k;
    for (const Label& l : torus->labels()) k.set(l, expd(rng));
    PolyTerms t;
    t[expd(rng)] = coeffd(rng);
    x = x + TorusElement::monomial(torus, ctx, k, GroundScalar::from_terms(std::move(t), ctx));
  }
  return x;
}

}  // namespace

TEST_CASE("quad flips as Case 1 with opposite side pairs") {
  auto [s, q] = builtin("quad");
  FlipResult f = flip(s, q, "a");
  CHECK(f.kase == FlipCase::One);
  CHECK(f.a_star == "a*");
  // {b,d} and {c,e} are the two pairs of opposite quadrilateral sides.
  std::set<std::set<Label>> pairs{{f.b, f.d}, {f.c, f.e}};
  CHECK(pairs == std::set<std::set<Label>>{{"b", "d"}, {"c", "e"}});
  CHECK_NOTHROW((void)validate(s, f.q));
  // a* joins the two corners not joined by a.
  const EdgeDef& star = f.q.edge("a*");
  std::set<Label> star_ends{star.p0, star.p1};
  CHECK(star_ends == std::set<Label>{"p2", "p4"});
}

TEST_CASE("eye flips as Case 2") {
  auto [s, q] = builtin("eye");
  FlipResult f = flip(s, q, "a");
  CHECK(f.kase == FlipCase::Two);
  CHECK(f.b == "b");
  CHECK(f.c == "c");
  CHECK(f.beta == "beta");
  CHECK(f.q.monogon_holes.at("a*") == "beta");
  // a* is a loop at the opposite corner p2.
  CHECK(f.q.edge("a*").p0 == "p2");
  CHECK(f.q.edge("a*").p1 == "p2");
  // vertex matrix flank convention carries over: P'(a*, c) = +2
  CommutationMatrix p = vertex_matrix(f.q);
  CHECK(p.entry("a*", "c") == 2);
  CHECK(p.entry("a*", "b") == -2);
}

TEST_CASE("boundary and self-folded edges cannot be flipped") {
  auto [s, q] = builtin("quad");
  CHECK_THROWS_AS((void)flip(s, q, "b"), NotFlippable);
  CHECK_THROWS_AS((void)flip(s, q, "zz"), MissingLabel);
}

TEST_CASE("flip is an involution up to the name toggle") {
  for (const char* name : {"quad", "eye", "annulus2", "eye3"}) {
    CAPTURE(name);
    auto [s, q] = builtin(name);
    ValidationResult val = validate(s, q);
    for (const Label& a : val.classes.inner) {
      CAPTURE(a);
      FlipResult f1 = flip(s, q, a);
      FlipResult f2 = flip(s, f1.q, f1.a_star);
      CHECK(same_quasitriangulation(f2.q, q));
    }
  }
}

TEST_CASE("annulus transfer formula") {
  auto [s, q] = builtin("annulus2");
  TransferMap theta(s, q, "b", nullptr);

  // Theta(b) = [a^2 (b*)^{-1}] + [cd(b*)^{-1}]
  ExponentVector k1;
  k1.add("a", 2);
  k1.add("b*", -1);
  ExponentVector k2;
  k2.add("c", 1);
  k2.add("d", 1);
  k2.add("b*", -1);
  TorusElement expected = TorusElement::monomial(theta.target(), nullptr, k1) +
                          TorusElement::monomial(theta.target(), nullptr, k2);
  CHECK(theta.flipped_image() == expected);

  TorusElement b = TorusElement::generator(theta.source(), nullptr, "b");
  CHECK(theta.apply(b) == expected);
  // Theta(u) = u for u != b
  for (const Label& u : {"a", "c", "d"})
    CHECK(theta.apply(TorusElement::generator(theta.source(), nullptr, u)) ==
          TorusElement::generator(theta.target(), nullptr, u));
}

TEST_CASE("case 1 bracket terms satisfy XY = q^4 YX") {
  for (auto [name, edge] : std::vector<std::pair<const char*, const char*>>{
           {"quad", "a"}, {"annulus2", "a"}, {"annulus2", "b"}}) {
    CAPTURE(name);
    auto [s, q] = builtin(name);
    TransferMap theta(s, q, edge, nullptr);
    const FlipResult& f = theta.flip_result();
    REQUIRE(f.kase == FlipCase::One);
    ExponentVector kx, ky;
    kx.add(f.b, 1);
    kx.add(f.d, 1);
    kx.add(f.a_star, -1);
    ky.add(f.c, 1);
    ky.add(f.e, 1);
    ky.add(f.a_star, -1);
    CHECK(theta.target()->pairing(kx, ky) == 4);
  }
}

TEST_CASE("transfer round trip is the identity on polynomial elements") {
  std::mt19937_64 rng(53);
  for (const char* name : {"quad", "eye", "annulus2"}) {
    CAPTURE(name);
    auto [s, q] = builtin(name);
    ValidationResult val = validate(s, q);
    for (const Label& a : val.classes.inner) {
      CAPTURE(a);
      for (long m : {0L, 16L}) {
        ContextPtr ctx = m == 0 ? nullptr : make_context(m);
        TransferMap theta(s, q, a, ctx);
        TransferMap back(s, theta.flip_result().q, theta.flip_result().a_star, ctx);
        for (int i = 0; i < 15; ++i) {
          TorusElement x = random_positive_element(rng, theta.source(), ctx);
          CHECK(back.apply(theta.apply(x)) == x);
        }
      }
    }
  }
}

TEST_CASE("transfer is multiplicative where defined") {
  std::mt19937_64 rng(59);
  auto [s, q] = builtin("quad");
  TransferMap theta(s, q, "a", nullptr);
  for (int i = 0; i < 25; ++i) {
    TorusElement x = random_positive_element(rng, theta.source(), nullptr);
    TorusElement y = random_positive_element(rng, theta.source(), nullptr);
    CHECK(theta.apply(x * y) == theta.apply(x) * theta.apply(y));
  }
}

TEST_CASE("transfer rejects non-polynomial input") {
  auto [s, q] = builtin("quad");
  TransferMap theta(s, q, "a", nullptr);
  TorusElement bad = TorusElement::generator(theta.source(), nullptr, "a", -1) +
                     TorusElement::generator(theta.source(), nullptr, "b");
  CHECK_THROWS_AS((void)theta.apply(bad), NegativeFlippedExponent);
}

TEST_CASE("frobenius flip criterion") {
  auto [s, q] = builtin("quad");
  CHECK(verify_frobenius_flip(s, q, "a", 16, 2));
  CHECK_FALSE(verify_frobenius_flip(s, q, "a", 16, 3));
  CHECK_FALSE(verify_frobenius_flip(s, q, "a", 0, 2));  // symbolic ring
  for (long m = 1; m <= 24; ++m) {
    long N = root_data(m).N;
    if (N >= 2) CHECK(verify_frobenius_flip(s, q, "a", m, N));
    for (long Np = 2; Np <= 6; ++Np)
      if (Np != N) CHECK_FALSE(verify_frobenius_flip(s, q, "a", m, Np));
  }
}
