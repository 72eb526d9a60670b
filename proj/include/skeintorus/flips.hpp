#pragma once

#include "skeintorus/surface.hpp"

namespace skeintorus {

enum class FlipCase { One, Two };

// a* is named by toggling a trailing star, so flipping twice restores names.
Label star_name(const Label& name);

struct FlipResult {
  Quasitriangulation q;  // the flipped quasitriangulation
  FlipCase kase = FlipCase::One;
  Label a, a_star;
  // Case 1: quadrilateral sides with {b,d} and {c,e} the opposite pairs;
  // Case 2: triangle sides b (q^2 side) and c, and the hole beta.
  Label b, c, d, e, beta;
};

FlipResult flip(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                const Label& a);

// The transfer homomorphism Theta_{Delta,Delta'} induced by a flip, defined on
// elements whose a-exponents can be cleared.  Elements live over the coordinate-torus
// matrices (edges plus unmarked components).
class TransferMap {
 public:
  TransferMap(const MarkedSurfaceSpec& surface, const Quasitriangulation& from,
              const Label& a, ContextPtr ctx);

  const TorusPtr& source() const { return source_; }
  const TorusPtr& target() const { return target_; }
  const FlipResult& flip_result() const { return flip_; }
  const TorusElement& flipped_image() const { return flipped_image_; }

  TorusElement apply(const TorusElement& x) const;

 private:
  FlipResult flip_;
  TorusPtr source_, target_;
  ContextPtr ctx_;
  TorusElement flipped_image_;
  std::vector<Label> order_;

  TorusElement apply_polynomial(const TorusElement& x) const;
};

TorusElement transfer(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                      const Label& a, const TorusElement& x);

// Checks (X+Y)^N = X^N + Y^N for X = [bd(a*)^{-1}], Y = [ce(a*)^{-1}] after a
// Case 1 flip; m = 0 means the symbolic ring.
bool verify_frobenius_flip(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                           const Label& a, long m, long N);

}  // namespace skeintorus
