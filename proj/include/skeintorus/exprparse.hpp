#pragma once

#include <string>

#include "skeintorus/surgery.hpp"

namespace skeintorus {

// Noncommutative Laurent expressions:
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := atom (('*')? atom)*
//   atom   := sint | 'v' ('^' sint)? | 'q' ('^' sint)? | ident ('^' sint)?
//           | '[' atom+ ']' | '(' expr ')'
// 'v' and 'q' are reserved scalar literals; an ident may carry a trailing
// star, so `a*` is a name while `a * b` is a product.
TorusElement parse_expression(const std::string& text, const TorusPtr& torus,
                              const ContextPtr& ctx = nullptr);

// The same grammar evaluated in Z(Delta); products go through the rewriting
// engine, so `a a*` is legal.
SurgeryElement parse_surgery_expression(const std::string& text, const SurgeryCtxPtr& ctx);

// Canonical printing; parse(print(x)) == x, terms in exponent order.
std::string print_scalar(const GroundScalar& s);
std::string print_element(const TorusElement& x);
std::string print_element(const SurgeryElement& x);

// Surface files:
//   boundary <name> [<p1> <p2> ...]
//   edge <name> <p> <p'>
//   order <point> <half-edge> ...      (clockwise, `name.0` / `name.1`)
//   hole <boundary-name> in <monogon-edge>
// '#' starts a comment.  Boundary edges and genus are inferred and the
// result is validated.
std::pair<MarkedSurfaceSpec, Quasitriangulation> parse_surface(const std::string& text);

std::string print_surface(const MarkedSurfaceSpec& surface, const Quasitriangulation& q);

}  // namespace skeintorus
