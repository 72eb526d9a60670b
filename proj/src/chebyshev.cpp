#include "skeintorus/chebyshev.hpp"

#include <array>

namespace skeintorus {

ChebyshevPolynomial cheb_poly(long n) {
  if (n < 0) throw Error("Chebyshev index must be >= 0");
  std::vector<Int> prev{2};      // T_0
  std::vector<Int> cur{0, 1};    // T_1
  if (n == 0) return {0, prev};
  for (long i = 2; i <= n; ++i) {
    std::vector<Int> next(i + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

TorusElement cheb_eval(const TorusElement& x, long n) {
  ChebyshevPolynomial t = cheb_poly(n);
  TorusElement acc = TorusElement::zero(x.torus(), x.context());
  TorusElement power = TorusElement::unit(x.torus(), x.context());
  for (std::size_t i = 0; i < t.coefficients.size(); ++i) {
    if (t.coefficients[i] != 0)
      acc = acc + power * GroundScalar::integer(t.coefficients[i], x.context());
    if (i + 1 < t.coefficients.size()) power = power * x;
  }
  return acc;
}

GroundScalar cheb_eval_scalar(const GroundScalar& s, long n) {
  ChebyshevPolynomial t = cheb_poly(n);
  GroundScalar acc = GroundScalar::zero(s.context());
  GroundScalar power = GroundScalar::one(s.context());
  for (std::size_t i = 0; i < t.coefficients.size(); ++i) {
    if (t.coefficients[i] != 0)
      acc += power * GroundScalar::integer(t.coefficients[i], s.context());
    if (i + 1 < t.coefficients.size()) power = power * s;
  }
  return acc;
}

TorusPtr ke_torus() {
  static const TorusPtr torus =
      make_torus({"K", "E"}, {{0, 2}, {-2, 0}});
  return torus;
}

TorusElement ke_sum(const ContextPtr& ctx) {
  TorusPtr torus = ke_torus();
  return TorusElement::generator(torus, ctx, "K") +
         TorusElement::generator(torus, ctx, "K", -1) +
         TorusElement::generator(torus, ctx, "E");
}

TorusElement cheb_closed_form(long n, const ContextPtr& ctx) {
  if (n < 1) throw Error("closed form needs n >= 1");
  TorusPtr torus = ke_torus();
  TorusElement out = TorusElement::generator(torus, ctx, "K", n) +
                     TorusElement::generator(torus, ctx, "K", -n) +
                     TorusElement::generator(torus, ctx, "E", n);
  for (long r = 1; r <= n - 1; ++r)
    for (long j = 0; j <= n - r; ++j) {
      GroundScalar c = chebyshev_coefficient(n, r, j, ctx);
      // [E^r K^{n-2j-r}] is the normalized monomial x^{(n-2j-r, r)}.
      ExponentVector k;
      k.set("K", n - 2 * j - r);
      k.set("E", r);
      out = out + TorusElement::monomial(torus, ctx, k, c);
    }
  return out;
}

}  // namespace skeintorus
