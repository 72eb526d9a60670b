#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <string>

#include "skeintorus/errors.hpp"

namespace skeintorus {

using Int = boost::multiprecision::cpp_int;

// Sparse integer polynomial / Laurent polynomial in v, exponent -> coefficient.
using PolyTerms = std::map<long, Int>;

// Working modulo the m-th cyclotomic polynomial, with v a primitive m-th root
// of unity.  Reduction first folds exponents into [0, m-1] via v^m = 1, then
// takes the remainder mod Phi_m, so canonical exponents lie in [0, deg Phi_m).
class CyclotomicContext {
 public:
  explicit CyclotomicContext(long m);

  long order() const { return m_; }
  const PolyTerms& phi() const { return phi_; }
  long phi_degree() const { return phi_degree_; }

  void reduce(PolyTerms& terms) const;

 private:
  long m_;
  PolyTerms phi_;
  long phi_degree_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

ContextPtr make_context(long m);

// Laurent polynomial in v = q^{1/2} with arbitrary-precision integer
// coefficients, optionally reduced in a cyclotomic ring.  Always canonical:
// no zero coefficients are stored, and in cyclotomic mode terms are reduced.
class GroundScalar {
 public:
  GroundScalar() = default;  // zero, symbolic

  static GroundScalar zero(ContextPtr ctx = nullptr);
  static GroundScalar integer(Int n, ContextPtr ctx = nullptr);
  static GroundScalar one(ContextPtr ctx = nullptr) { return integer(1, std::move(ctx)); }
  static GroundScalar v_power(long e, ContextPtr ctx = nullptr);
  static GroundScalar q_power(long e, ContextPtr ctx = nullptr) {
    return v_power(2 * e, std::move(ctx));
  }
  static GroundScalar monomial(Int coeff, long v_exp, ContextPtr ctx = nullptr);
  static GroundScalar from_terms(PolyTerms terms, ContextPtr ctx = nullptr);

  const PolyTerms& terms() const { return terms_; }
  const ContextPtr& context() const { return ctx_; }
  bool symbolic() const { return ctx_ == nullptr; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_integer() const;
  // True when the scalar is a single term +/- v^e (hence invertible).
  bool is_unit_monomial() const;

  GroundScalar operator-() const;
  GroundScalar operator+(const GroundScalar& o) const;
  GroundScalar operator-(const GroundScalar& o) const;
  GroundScalar operator*(const GroundScalar& o) const;
  GroundScalar& operator+=(const GroundScalar& o) { return *this = *this + o; }
  GroundScalar& operator*=(const GroundScalar& o) { return *this = *this * o; }
  bool operator==(const GroundScalar& o) const;
  bool operator!=(const GroundScalar& o) const { return !(*this == o); }
  bool operator<(const GroundScalar& o) const;  // arbitrary total order

  GroundScalar pow(long n) const;       // n >= 0, or any n for unit monomials
  GroundScalar inverse() const;         // unit monomials only
  GroundScalar conjugate() const;       // v -> v^{-1}
  GroundScalar substitute(long t) const;  // v -> v^t, re-canonicalized

  // Move a symbolic scalar into a cyclotomic ring (or strip to symbolic when
  // ctx is null and the scalar is symbolic already).
  GroundScalar in_context(ContextPtr ctx) const;

  std::string str() const;

 private:
  PolyTerms terms_;
  ContextPtr ctx_;

  void canonicalize();
};

// Exact division in the symbolic Laurent ring; throws ExactDivisionFailure
// when a remainder is left.
GroundScalar divide_exact(const GroundScalar& num, const GroundScalar& den);

void check_context(const GroundScalar& a, const GroundScalar& b);
bool same_context(const ContextPtr& a, const ContextPtr& b);

// Phi_m as a symbolic polynomial in v.
GroundScalar cyclotomic_polynomial(long m);

// [n]_q with q = v^2.
GroundScalar quantum_integer(long n, ContextPtr ctx = nullptr);

// Gaussian binomial [n choose k]_q, exact.
GroundScalar quantum_binomial(long n, long k, ContextPtr ctx = nullptr);

// c(n,r,j) = [n]_q/[r]_q * [n-j-1 choose r-1]_q * [r+j-1 choose r-1]_q.
GroundScalar chebyshev_coefficient(long n, long r, long j, ContextPtr ctx = nullptr);

// prod_{j=1}^{k} (1 - B^{N-j+1}) / (1 - B^j) with B = v^{base_exponent}.
GroundScalar gauss_binomial(long N, long k, long base_exponent, ContextPtr ctx = nullptr);

struct RootData {
  long m;                    // order of v
  long N;                    // ord(xi^4) = m / gcd(m, 8)
  long epsilon_v_exponent;   // epsilon = v^{2 N^2 mod m}
  int sign_xi_2N;            // value of xi^{2N}, +1 or -1
};

RootData root_data(long m);

}  // namespace skeintorus
