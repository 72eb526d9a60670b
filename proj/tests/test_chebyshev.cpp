#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeintorus/chebyshev.hpp"

using namespace skeintorus;

TEST_CASE("chebyshev polynomials of type one") {
  CHECK(cheb_poly(0).coefficients == std::vector<Int>{2});
  CHECK(cheb_poly(1).coefficients == std::vector<Int>{0, 1});
  CHECK(cheb_poly(2).coefficients == std::vector<Int>{-2, 0, 1});
  CHECK(cheb_poly(4).coefficients == std::vector<Int>{2, 0, -4, 0, 1});
}

TEST_CASE("T_n(K + K^-1) = K^n + K^-n") {
  TorusPtr ke = ke_torus();
  TorusElement K = TorusElement::generator(ke, nullptr, "K");
  TorusElement x = K + K.inverse();
  for (long n = 1; n <= 10; ++n)
    CHECK(cheb_eval(x, n) ==
          TorusElement::generator(ke, nullptr, "K", n) +
              TorusElement::generator(ke, nullptr, "K", -n));
  TorusElement y = ke_sum(nullptr);
  CHECK(cheb_eval(y, 1) == y);
}

TEST_CASE("closed form matches brute force over the symbolic ring") {
  for (long n = 1; n <= 12; ++n)
    CHECK(cheb_closed_form(n) == cheb_eval(ke_sum(nullptr), n));
}

TEST_CASE("closed form instances") {
  // n = 1: empty double sum
  CHECK(cheb_closed_form(1) == ke_sum(nullptr));
  // n = 5 at ord(q^2) = 5 collapses to K^5 + K^-5 + E^5
  ContextPtr c20 = make_context(20);
  TorusPtr ke = ke_torus();
  TorusElement expected = TorusElement::generator(ke, c20, "K", 5) +
                          TorusElement::generator(ke, c20, "K", -5) +
                          TorusElement::generator(ke, c20, "E", 5);
  CHECK(cheb_closed_form(5, c20) == expected);
}

TEST_CASE("root of unity collapse for 2 <= n <= 10") {
  for (long n = 2; n <= 10; ++n) {
    ContextPtr ctx = make_context(4 * n);
    TorusPtr ke = ke_torus();
    TorusElement expected = TorusElement::generator(ke, ctx, "K", n) +
                            TorusElement::generator(ke, ctx, "K", -n) +
                            TorusElement::generator(ke, ctx, "E", n);
    CHECK(cheb_eval(ke_sum(ctx), n) == expected);
  }
}

TEST_CASE("scalar threading identity at m = 16") {
  ContextPtr c16 = make_context(16);
  GroundScalar s = -GroundScalar::v_power(4, c16) - GroundScalar::v_power(-4, c16);
  CHECK(cheb_eval_scalar(s, 2) == GroundScalar::integer(-2, c16));
}

TEST_CASE("T_N(-xi^2 - xi^-2) = -eps^2 - eps^-2 for m <= 64") {
  for (long m = 1; m <= 64; ++m) {
    ContextPtr ctx = make_context(m);
    RootData rd = root_data(m);
    GroundScalar lhs = cheb_eval_scalar(
        -GroundScalar::v_power(4, ctx) - GroundScalar::v_power(-4, ctx), rd.N);
    GroundScalar eps = GroundScalar::v_power(rd.epsilon_v_exponent, ctx);
    CHECK(lhs == -eps.pow(2) - eps.pow(-2));
  }
}
