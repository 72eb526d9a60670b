#include "skeintorus/flips.hpp"

#include <algorithm>

namespace skeintorus {

Label star_name(const Label& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

namespace {

// Rotate a face cycle so that it starts with the given dart.
std::vector<HalfEdgeRef> rotate_to(const std::vector<HalfEdgeRef>& cycle, HalfEdgeRef dart) {
  auto it = std::find(cycle.begin(), cycle.end(), dart);
  if (it == cycle.end()) throw Error("dart not on face");
  std::vector<HalfEdgeRef> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

const Label& arrival_vertex(const Quasitriangulation& q, const HalfEdgeRef& dart) {
  return q.edge(dart.edge).endpoint(1 - dart.end);
}

HalfEdgeRef arrival_half_edge(const HalfEdgeRef& dart) { return {dart.edge, 1 - dart.end}; }

void insert_after(std::vector<HalfEdgeRef>& list, const HalfEdgeRef& anchor,
                  std::vector<HalfEdgeRef> inserted) {
  auto it = std::find(list.begin(), list.end(), anchor);
  if (it == list.end()) throw Error("rotation anchor not found");
  list.insert(std::next(it), inserted.begin(), inserted.end());
}

void remove_half_edge(std::vector<HalfEdgeRef>& list, const HalfEdgeRef& h) {
  auto it = std::find(list.begin(), list.end(), h);
  if (it == list.end()) throw Error("half-edge not found in rotation");
  list.erase(it);
}

}  // namespace

FlipResult flip(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                const Label& a) {
  ValidationResult val = validate(surface, q);
  if (!q.has_edge(a)) throw MissingLabel("unknown edge " + a);
  if (val.classes.boundary.count(a)) throw NotFlippable("cannot flip boundary edge " + a);

  FlipResult out;
  out.a = a;
  out.a_star = star_name(a);
  if (q.has_edge(out.a_star))
    throw NotFlippable("name " + out.a_star + " is already taken");
  out.q = q;

  // The inner faces adjacent to the two darts of a.
  const Face* f0 = nullptr;
  const Face* f1 = nullptr;
  for (const Face& f : val.faces) {
    if (f.kind == Face::Kind::Boundary) continue;
    for (const HalfEdgeRef& d : f.cycle) {
      if (d.edge != a) continue;
      (d.end == 0 ? f0 : f1) = &f;
    }
  }
  if (!f0 || !f1) throw NotFlippable("edge " + a + " is not adjacent to two faces");

  const bool monogon = val.classes.monogon.count(a) != 0;
  if (!monogon && f0 == f1)
    throw NotFlippable("edge " + a + " is self-folded and cannot be flipped");

  auto& edges = out.q.edges;
  const auto erase_edge = [&](const Label& name) {
    edges.erase(std::find_if(edges.begin(), edges.end(),
                             [&](const EdgeDef& e) { return e.name == name; }));
  };

  if (!monogon) {
    if (f0->kind != Face::Kind::Triangle || f1->kind != Face::Kind::Triangle)
      throw NotFlippable("edge " + a + " is not between two triangles");
    out.kase = FlipCase::One;
    std::vector<HalfEdgeRef> t1 = rotate_to(f0->cycle, {a, 0});
    std::vector<HalfEdgeRef> t2 = rotate_to(f1->cycle, {a, 1});
    // First sides after a pair up opposite each other, and so do the second;
    // the assignment keeps [bd(a*)^{-1}] [ce(a*)^{-1}] = q^4 [ce..][bd..].
    out.d = t1[1].edge;
    out.e = t1[2].edge;
    out.b = t2[1].edge;
    out.c = t2[2].edge;

    const Label u = arrival_vertex(q, t1[1]);
    const Label v = arrival_vertex(q, t2[1]);
    insert_after(out.q.vertex_orders.at(u), arrival_half_edge(t1[1]), {{out.a_star, 0}});
    insert_after(out.q.vertex_orders.at(v), arrival_half_edge(t2[1]), {{out.a_star, 1}});
    remove_half_edge(out.q.vertex_orders.at(q.edge(a).p0), {a, 0});
    remove_half_edge(out.q.vertex_orders.at(q.edge(a).p1), {a, 1});
    erase_edge(a);
    edges.push_back({out.a_star, u, v});
  } else {
    out.kase = FlipCase::Two;
    const Face* tri = (f0->kind == Face::Kind::Triangle) ? f0 : f1;
    const Face* mono = (f0->kind == Face::Kind::HoledMonogon) ? f0 : f1;
    if (tri->kind != Face::Kind::Triangle || mono->kind != Face::Kind::HoledMonogon)
      throw NotFlippable("monogon edge " + a + " has no adjacent triangle");
    out.beta = mono->hole;
    const HalfEdgeRef tri_dart = (tri == f0) ? HalfEdgeRef{a, 0} : HalfEdgeRef{a, 1};
    std::vector<HalfEdgeRef> t = rotate_to(tri->cycle, tri_dart);
    out.c = t[1].edge;
    out.b = t[2].edge;

    const Label r = arrival_vertex(q, t[1]);
    insert_after(out.q.vertex_orders.at(r), arrival_half_edge(t[1]),
                 {{out.a_star, 0}, {out.a_star, 1}});
    remove_half_edge(out.q.vertex_orders.at(q.edge(a).p0), {a, 0});
    remove_half_edge(out.q.vertex_orders.at(q.edge(a).p0), {a, 1});
    erase_edge(a);
    edges.push_back({out.a_star, r, r});
    out.q.monogon_holes.erase(a);
    out.q.monogon_holes[out.a_star] = out.beta;
  }

  validate(surface, out.q);  // the flip must land on a quasitriangulation
  return out;
}

TransferMap::TransferMap(const MarkedSurfaceSpec& surface, const Quasitriangulation& from,
                         const Label& a, ContextPtr ctx)
    : flip_(flip(surface, from, a)), ctx_(std::move(ctx)) {
  source_ = std::make_shared<const CommutationMatrix>(x_matrix(surface, from));
  target_ = std::make_shared<const CommutationMatrix>(x_matrix(surface, flip_.q));
  order_ = source_->labels();

  ExponentVector first, second;
  if (flip_.kase == FlipCase::One) {
    // Theta(a) = [ce(a*)^{-1}] + [bd(a*)^{-1}]
    first.add(flip_.c, 1);
    first.add(flip_.e, 1);
    first.add(flip_.a_star, -1);
    second.add(flip_.b, 1);
    second.add(flip_.d, 1);
    second.add(flip_.a_star, -1);
    flipped_image_ = TorusElement::monomial(target_, ctx_, first) +
                     TorusElement::monomial(target_, ctx_, second);
  } else {
    // Theta(a) = [b^2(a*)^{-1}] + [c^2(a*)^{-1}] + beta [bc(a*)^{-1}]
    first.add(flip_.b, 2);
    first.add(flip_.a_star, -1);
    second.add(flip_.c, 2);
    second.add(flip_.a_star, -1);
    ExponentVector third;
    third.add(flip_.b, 1);
    third.add(flip_.c, 1);
    third.add(flip_.beta, 1);
    third.add(flip_.a_star, -1);
    flipped_image_ = TorusElement::monomial(target_, ctx_, first) +
                     TorusElement::monomial(target_, ctx_, second) +
                     TorusElement::monomial(target_, ctx_, third);
  }
}

TorusElement TransferMap::apply_polynomial(const TorusElement& x) const {
  TorusElement out = TorusElement::zero(target_, ctx_);
  for (const auto& [k, coeff] : x.terms()) {
    OrderedFactorization f = factor_ordered(*source_, k, order_);
    TorusElement acc = TorusElement::monomial(target_, ctx_, ExponentVector{},
                                              coeff * GroundScalar::v_power(f.v_exponent, ctx_));
    for (const auto& [label, exp] : f.factors) {
      if (label == flip_.a)
        acc = acc * flipped_image_.pow(exp);
      else
        acc = acc * TorusElement::generator(target_, ctx_, label, exp);
    }
    out = out + acc;
  }
  return out;
}

TorusElement TransferMap::apply(const TorusElement& x) const {
  if (!x.torus() || !(*x.torus() == *source_))
    throw TorusMismatch("transfer input is not over the source torus");
  if (!same_context(x.context(), ctx_))
    throw ContextMismatch("transfer input over a different ground ring");
  long min_a = 0;
  for (const auto& [k, c] : x.terms()) min_a = std::min(min_a, k.get(flip_.a));
  if (min_a >= 0) return apply_polynomial(x);
  // Clear negative powers: x = y a^{min_a} with y polynomial in a, so
  // Theta(x) = Theta(y) Theta(a)^{min_a}, recovered by exact division.
  const long m = -min_a;
  TorusElement y = x * TorusElement::generator(x.torus(), ctx_, flip_.a, m);
  TorusElement image = apply_polynomial(y);
  try {
    return divide_right_exact(image, flipped_image_.pow(m));
  } catch (const ExactDivisionFailure&) {
    throw NegativeFlippedExponent("element is not polynomial in the flipped edge " + flip_.a);
  }
}

TorusElement transfer(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                      const Label& a, const TorusElement& x) {
  TransferMap theta(surface, q, a, x.context());
  return theta.apply(x);
}

bool verify_frobenius_flip(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                           const Label& a, long m, long N) {
  ContextPtr ctx = (m == 0) ? nullptr : make_context(m);
  TransferMap theta(surface, q, a, ctx);
  if (theta.flip_result().kase != FlipCase::One)
    throw NotFlippable("frobenius flip check needs a Case 1 flip");
  const FlipResult& fr = theta.flip_result();
  ExponentVector kx, ky;
  kx.add(fr.b, 1);
  kx.add(fr.d, 1);
  kx.add(fr.a_star, -1);
  ky.add(fr.c, 1);
  ky.add(fr.e, 1);
  ky.add(fr.a_star, -1);
  TorusElement X = TorusElement::monomial(theta.target(), ctx, kx);
  TorusElement Y = TorusElement::monomial(theta.target(), ctx, ky);
  return (X + Y).pow(N) == X.pow(N) + Y.pow(N);
}

}  // namespace skeintorus
