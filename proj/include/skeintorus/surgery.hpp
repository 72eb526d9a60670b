#pragma once

#include "skeintorus/flips.hpp"
#include "skeintorus/surface.hpp"

namespace skeintorus {

// Relation data for a monogon-family letter x:
//   x x* = q^2 b^2 + q^-2 c^2 + beta b c.
struct MonogonRelation {
  Label partner;  // x*
  Label b, c;
  Label beta;
};

// Everything needed to compute in Z(Delta): the extended commutation data
// over Delta united with the monogon duals and the unmarked components, plus
// the defining relations.  The extended entries for the duals are read off
// the Case 2 flips.
class SurgeryContext {
 public:
  SurgeryContext(MarkedSurfaceSpec surface, Quasitriangulation q, ContextPtr ctx);

  const MarkedSurfaceSpec& surface() const { return surface_; }
  const Quasitriangulation& triangulation() const { return q_; }
  const ValidationResult& validation() const { return val_; }
  const ContextPtr& scalar_context() const { return ctx_; }
  const TorusPtr& extended_torus() const { return ext_; }
  const TorusPtr& x_torus() const { return x_; }

  bool is_monogon_letter(const Label& l) const { return relations_.count(l) != 0; }
  bool is_unmarked(const Label& l) const { return unmarked_.count(l) != 0; }
  const MonogonRelation& relation(const Label& l) const;
  const std::vector<Label>& letter_order() const { return order_; }
  std::size_t order_index(const Label& l) const;

 private:
  MarkedSurfaceSpec surface_;
  Quasitriangulation q_;
  ValidationResult val_;
  ContextPtr ctx_;
  TorusPtr ext_, x_;
  std::map<Label, MonogonRelation> relations_;
  std::set<Label> unmarked_;
  std::vector<Label> order_;
  std::map<Label, std::size_t> order_index_;
};

using SurgeryCtxPtr = std::shared_ptr<const SurgeryContext>;

SurgeryCtxPtr make_surgery_context(const MarkedSurfaceSpec& surface,
                                   const Quasitriangulation& q, ContextPtr ctx = nullptr);

// Element of Z(Delta) in the normal-form basis: term (k -> c) is c H^h x^{{k}}
// with k over Delta united with the monogon duals (monogon exponents are
// nonnegative and never paired with their dual) and h the unmarked part.
class SurgeryElement {
 public:
  SurgeryElement() = default;
  explicit SurgeryElement(SurgeryCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static SurgeryElement zero(SurgeryCtxPtr ctx);
  static SurgeryElement one(SurgeryCtxPtr ctx);
  static SurgeryElement monomial(SurgeryCtxPtr ctx, const ExponentVector& k,
                                 GroundScalar coeff);
  static SurgeryElement monomial(SurgeryCtxPtr ctx, const ExponentVector& k);
  static SurgeryElement generator(SurgeryCtxPtr ctx, const Label& l, long exp = 1);
  static SurgeryElement scalar(SurgeryCtxPtr ctx, const GroundScalar& c);

  const SurgeryCtxPtr& context() const { return ctx_; }
  const std::map<ExponentVector, GroundScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SurgeryElement operator-() const;
  SurgeryElement operator+(const SurgeryElement& o) const;
  SurgeryElement operator-(const SurgeryElement& o) const;
  SurgeryElement operator*(const SurgeryElement& o) const;  // rewriting product
  SurgeryElement operator*(const GroundScalar& s) const;
  bool operator==(const SurgeryElement& o) const;
  bool operator!=(const SurgeryElement& o) const { return !(*this == o); }

  SurgeryElement pow(long n) const;  // n < 0 only for invertible monomials

  void add_term(const ExponentVector& k, const GroundScalar& c);

 private:
  SurgeryCtxPtr ctx_;
  std::map<ExponentVector, GroundScalar> terms_;
};

// The embedding theta : Z(Delta) -> X(Delta), identity on edges and unmarked
// components, a* -> [a^{-1}b^2] + [a^{-1}c^2] + beta [a^{-1}bc].
TorusElement theta_embed(const SurgeryElement& u);

// Coordinate-change homomorphism attached to a surface modification.
struct SurgeryHom {
  SurgeryCtxPtr source, target;
  std::map<Label, SurgeryElement> images;  // labels not listed map to themselves
  // bookkeeping for the new cells, keyed by their role in the construction
  std::map<std::string, Label> named;

  SurgeryElement apply(const SurgeryElement& x) const;
  SurgeryElement image_of(const Label& l) const;
};

// Scenario 1: add a marked point in the interior of boundary edge a.
SurgeryHom psi_add_point_boundary(const SurgeryCtxPtr& ctx, const Label& a);

// Scenario 2: add a marked point on an unmarked component beta.
SurgeryHom psi_add_point_unmarked(const SurgeryCtxPtr& ctx, const Label& beta);

// Plugging: glue a disk along the unmarked component beta.
SurgeryHom psi_plug_hole(const SurgeryCtxPtr& ctx, const Label& beta);

}  // namespace skeintorus
