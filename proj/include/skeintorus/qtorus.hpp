#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skeintorus/scalars.hpp"

namespace skeintorus {

using Label = std::string;

// Finitely supported map label -> integer exponent, canonical (no zeros).
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::map<Label, long> entries);
  static ExponentVector unit(const Label& l, long e = 1);

  long get(const Label& l) const;
  void set(const Label& l, long e);
  void add(const Label& l, long e);
  bool is_zero() const { return entries_.empty(); }
  bool all_nonneg() const;
  const std::map<Label, long>& entries() const { return entries_; }

  ExponentVector plus(const ExponentVector& o) const;
  ExponentVector minus(const ExponentVector& o) const;
  ExponentVector scaled(long s) const;

  bool operator==(const ExponentVector& o) const { return entries_ == o.entries_; }
  bool operator<(const ExponentVector& o) const { return entries_ < o.entries_; }

  std::string str() const;

 private:
  std::map<Label, long> entries_;
};

// Antisymmetric integer matrix over named generators; owns the label universe
// and the pairing <k,n>_A = sum A_ij k(i) n(j).
class CommutationMatrix {
 public:
  CommutationMatrix(std::vector<Label> labels, std::vector<std::vector<long>> entries);
  static CommutationMatrix zero(std::vector<Label> labels);

  const std::vector<Label>& labels() const { return labels_; }
  bool has(const Label& l) const { return index_.count(l) != 0; }
  std::size_t index(const Label& l) const;
  long entry(const Label& a, const Label& b) const;
  const std::vector<std::vector<long>>& entries() const { return entries_; }

  long pairing(const ExponentVector& k, const ExponentVector& n) const;
  CommutationMatrix scaled(long s) const;

  bool operator==(const CommutationMatrix& o) const {
    return labels_ == o.labels_ && entries_ == o.entries_;
  }

 private:
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::vector<std::vector<long>> entries_;
};

using TorusPtr = std::shared_ptr<const CommutationMatrix>;

TorusPtr make_torus(std::vector<Label> labels, std::vector<std::vector<long>> entries);

// Element of T(A) in the normalized-monomial basis: term (k -> c) is c x^k.
class TorusElement {
 public:
  TorusElement() = default;
  TorusElement(TorusPtr torus, ContextPtr ctx);

  static TorusElement zero(TorusPtr torus, ContextPtr ctx = nullptr);
  static TorusElement unit(TorusPtr torus, ContextPtr ctx = nullptr);
  static TorusElement monomial(TorusPtr torus, ContextPtr ctx, ExponentVector k,
                               GroundScalar coeff);
  static TorusElement monomial(TorusPtr torus, ContextPtr ctx, ExponentVector k);
  static TorusElement generator(TorusPtr torus, ContextPtr ctx, const Label& l,
                                long exp = 1);

  const TorusPtr& torus() const { return torus_; }
  const ContextPtr& context() const { return ctx_; }
  // The Z^I-grading: exponent vector -> coefficient.
  const std::map<ExponentVector, GroundScalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // T_+ membership: every exponent of every term nonnegative.
  bool is_positive() const;

  void add_term(const ExponentVector& k, const GroundScalar& c);

  TorusElement operator-() const;
  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;
  TorusElement operator*(const GroundScalar& s) const;
  bool operator==(const TorusElement& o) const;
  bool operator!=(const TorusElement& o) const { return !(*this == o); }

  TorusElement pow(long n) const;  // n < 0 only for invertible monomials
  TorusElement inverse() const;
  TorusElement reflection() const;  // conjugates scalars, fixes x^k

  std::string str() const;

 private:
  TorusPtr torus_;
  ContextPtr ctx_;
  std::map<ExponentVector, GroundScalar> terms_;
};

// x^k x^n = v^{<k,n>_A} x^{k+n}.
TorusElement monomial_product(const TorusPtr& torus, const ContextPtr& ctx,
                              const ExponentVector& k, const ExponentVector& n);

// Order-independent Weyl normalization of normalized monomials: x^{sum k_i}.
TorusElement weyl_normalize(const TorusPtr& torus, const ContextPtr& ctx,
                            std::span<const ExponentVector> factors);

struct OrderedFactorization {
  long v_exponent = 0;                          // x^k = v^e * prod factors
  std::vector<std::pair<Label, long>> factors;  // single-generator powers, in order
};

OrderedFactorization factor_ordered(const CommutationMatrix& torus, const ExponentVector& k,
                                    std::span<const Label> order);

// Exact right division: w with w * den = num, or ExactDivisionFailure.
// den must have an invertible-coefficient leading term.
TorusElement divide_right_exact(const TorusElement& num, const TorusElement& den);

}  // namespace skeintorus
