#pragma once

#include <vector>

#include "skeintorus/qtorus.hpp"

namespace skeintorus {

// Chebyshev polynomials of type one: T_0 = 2, T_1 = z, T_n = z T_{n-1} - T_{n-2}.
struct ChebyshevPolynomial {
  long n = 0;
  std::vector<Int> coefficients;  // coefficients[i] multiplies z^i
};

ChebyshevPolynomial cheb_poly(long n);

// T_n evaluated on a torus element / a ground scalar.
TorusElement cheb_eval(const TorusElement& x, long n);
GroundScalar cheb_eval_scalar(const GroundScalar& s, long n);

// The two-generator torus with KE = q^2 EK.
TorusPtr ke_torus();

// K + K^{-1} + E.
TorusElement ke_sum(const ContextPtr& ctx);

// Closed form of T_n(K + K^{-1} + E):
//   K^n + K^{-n} + E^n + sum_{r=1}^{n-1} sum_{j=0}^{n-r} c(n,r,j) [E^r K^{n-2j-r}].
TorusElement cheb_closed_form(long n, const ContextPtr& ctx = nullptr);

}  // namespace skeintorus
