#include "skeintorus/frobenius.hpp"

namespace skeintorus {

TorusElement frobenius(const TorusElement& x, long N, const TorusPtr& target) {
  if (N < 1) throw Error("frobenius needs N >= 1");
  const CommutationMatrix& src = *x.torus();
  if (src.labels() != target->labels())
    throw MatrixScaleMismatch("frobenius source and target have different generators");
  if (!(src == target->scaled(N * N)))
    throw MatrixScaleMismatch("frobenius source matrix is not N^2 times the target");

  TorusElement out = TorusElement::zero(target, x.context());
  for (const auto& [k, c] : x.terms())
    out.add_term(k.scaled(N), x.context() ? c.substitute(N * N) : c);
  return out;
}

bool frobenius_image_check(const TorusElement& x, const TorusElement& y, long N) {
  return frobenius(x, N, y.torus()) == y;
}

}  // namespace skeintorus
