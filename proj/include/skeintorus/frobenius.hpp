#pragma once

#include "skeintorus/qtorus.hpp"

namespace skeintorus {

// F_N : T(N^2 A) -> T(A), x^k -> x^{Nk}.  The source matrix must equal
// N^2 * target entry-wise.  In cyclotomic mode the source scalars are read
// through v -> v^{N^2} (the coefficient map under epsilon = xi^{N^2}).
TorusElement frobenius(const TorusElement& x, long N, const TorusPtr& target);

bool frobenius_image_check(const TorusElement& x, const TorusElement& y, long N);

}  // namespace skeintorus
