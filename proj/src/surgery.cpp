#include "skeintorus/surgery.hpp"

#include <algorithm>
#include <deque>

namespace skeintorus {

namespace {

using Run = std::pair<Label, long>;
using Word = std::vector<Run>;

}  // namespace

SurgeryContext::SurgeryContext(MarkedSurfaceSpec surface, Quasitriangulation q,
                               ContextPtr ctx)
    : surface_(std::move(surface)), q_(std::move(q)), val_(validate(surface_, q_)),
      ctx_(std::move(ctx)) {
  x_ = std::make_shared<const CommutationMatrix>(x_matrix(surface_, q_));
  for (const Label& h : surface_.unmarked_components()) unmarked_.insert(h);

  // Relation data and dual commutations come from performing each Case 2
  // flip; star-star entries from flipping both monogons.
  std::vector<Label> monogons(val_.classes.monogon.begin(), val_.classes.monogon.end());
  std::map<Label, FlipResult> flips;
  for (const Label& a : monogons) flips.emplace(a, flip(surface_, q_, a));

  for (const Label& a : monogons) {
    const FlipResult& f = flips.at(a);
    relations_[a] = {f.a_star, f.b, f.c, f.beta};
    FlipResult back = flip(surface_, f.q, f.a_star);
    relations_[f.a_star] = {a, back.b, back.c, back.beta};
  }
  for (const auto& [letter, rel] : relations_)
    if (relations_.count(rel.b) || relations_.count(rel.c))
      throw ContextError("monogon relation for " + letter +
                         " involves another monogon letter; unsupported");

  // Extended labels: edges, duals, unmarked components, sorted.
  std::vector<Label> labels = q_.edge_labels();
  for (const Label& a : monogons) labels.push_back(flips.at(a).a_star);
  for (const Label& h : unmarked_) labels.push_back(h);
  std::sort(labels.begin(), labels.end());

  std::map<Label, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
  std::vector<std::vector<long>> m(labels.size(), std::vector<long>(labels.size(), 0));
  CommutationMatrix base = vertex_matrix(q_);
  for (const Label& x : q_.edge_labels())
    for (const Label& y : q_.edge_labels()) m[idx.at(x)][idx.at(y)] = base.entry(x, y);
  for (const Label& a : monogons) {
    const FlipResult& f = flips.at(a);
    CommutationMatrix flipped = vertex_matrix(f.q);
    for (const Label& u : f.q.edge_labels()) {
      if (u == f.a_star) continue;
      m[idx.at(f.a_star)][idx.at(u)] = flipped.entry(f.a_star, u);
      m[idx.at(u)][idx.at(f.a_star)] = flipped.entry(u, f.a_star);
    }
    // the excluded pair (a, a*) keeps a zero entry; it is never consulted
  }
  for (std::size_t i = 0; i < monogons.size(); ++i)
    for (std::size_t j = i + 1; j < monogons.size(); ++j) {
      const FlipResult& fi = flips.at(monogons[i]);
      FlipResult fij = flip(surface_, fi.q, monogons[j]);
      CommutationMatrix twice = vertex_matrix(fij.q);
      long e = twice.entry(fi.a_star, fij.a_star);
      m[idx.at(fi.a_star)][idx.at(fij.a_star)] = e;
      m[idx.at(fij.a_star)][idx.at(fi.a_star)] = -e;
    }
  ext_ = make_torus(std::move(labels), std::move(m));

  // Canonical letter order: sorted, with each monogon edge immediately
  // followed by its dual.
  std::vector<Label> base_labels = q_.edge_labels();
  for (const Label& h : unmarked_) base_labels.push_back(h);
  std::sort(base_labels.begin(), base_labels.end());
  for (const Label& l : base_labels) {
    order_.push_back(l);
    if (auto it = relations_.find(l); it != relations_.end())
      order_.push_back(it->second.partner);
  }
  for (std::size_t i = 0; i < order_.size(); ++i) order_index_[order_[i]] = i;
}

const MonogonRelation& SurgeryContext::relation(const Label& l) const {
  auto it = relations_.find(l);
  if (it == relations_.end()) throw MissingLabel("no monogon relation for " + l);
  return it->second;
}

std::size_t SurgeryContext::order_index(const Label& l) const {
  auto it = order_index_.find(l);
  if (it == order_index_.end()) throw MissingLabel("unknown surgery letter " + l);
  return it->second;
}

SurgeryCtxPtr make_surgery_context(const MarkedSurfaceSpec& surface,
                                   const Quasitriangulation& q, ContextPtr ctx) {
  return std::make_shared<const SurgeryContext>(surface, q, std::move(ctx));
}

namespace {

void check_same_context(const SurgeryElement& a, const SurgeryElement& b) {
  if (!a.context() || !b.context()) throw ContextMismatch("surgery element without context");
  if (a.context() == b.context()) return;
  if (!(*a.context()->extended_torus() == *b.context()->extended_torus()) ||
      !same_context(a.context()->scalar_context(), b.context()->scalar_context()))
    throw ContextMismatch("surgery operands over different contexts");
}

// Normal form: monogon-family and unmarked exponents are nonnegative, and a
// letter never appears together with its dual.
void check_normal_form(const SurgeryContext& ctx, const ExponentVector& k) {
  for (const auto& [l, e] : k.entries()) {
    if (ctx.is_monogon_letter(l)) {
      if (e < 0)
        throw Error("negative power of monogon letter " + l + " is not in Z(Delta)");
      if (k.get(ctx.relation(l).partner) > 0)
        throw Error("monomial mixes " + l + " with its dual");
    } else if (ctx.is_unmarked(l)) {
      if (e < 0) throw Error("negative power of unmarked component " + l);
    }
  }
}

Word word_of(const SurgeryContext& ctx, const ExponentVector& k) {
  Word w;
  for (const Label& l : ctx.letter_order()) {
    long e = k.get(l);
    if (e != 0) w.emplace_back(l, e);
  }
  return w;
}

// v-exponent with (ordered product of runs) = v^w x^{sum}.
long word_weight(const SurgeryContext& ctx, const Word& w) {
  long acc = 0;
  const CommutationMatrix& ext = *ctx.extended_torus();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      acc += ext.entry(w[i].first, w[j].first) * w[i].second * w[j].second;
  return acc;
}

}  // namespace

SurgeryElement SurgeryElement::zero(SurgeryCtxPtr ctx) { return SurgeryElement(std::move(ctx)); }

SurgeryElement SurgeryElement::one(SurgeryCtxPtr ctx) {
  return monomial(std::move(ctx), ExponentVector{});
}

SurgeryElement SurgeryElement::monomial(SurgeryCtxPtr ctx, const ExponentVector& k,
                                        GroundScalar coeff) {
  check_normal_form(*ctx, k);
  for (const auto& [l, e] : k.entries()) ctx->extended_torus()->index(l);
  SurgeryElement u(ctx);
  u.add_term(k, coeff.in_context(ctx->scalar_context()));
  return u;
}

SurgeryElement SurgeryElement::monomial(SurgeryCtxPtr ctx, const ExponentVector& k) {
  GroundScalar one = GroundScalar::one(ctx->scalar_context());
  return monomial(std::move(ctx), k, std::move(one));
}

SurgeryElement SurgeryElement::generator(SurgeryCtxPtr ctx, const Label& l, long exp) {
  return monomial(std::move(ctx), ExponentVector::unit(l, exp));
}

SurgeryElement SurgeryElement::scalar(SurgeryCtxPtr ctx, const GroundScalar& c) {
  return monomial(std::move(ctx), ExponentVector{}, c);
}

void SurgeryElement::add_term(const ExponentVector& k, const GroundScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SurgeryElement SurgeryElement::operator-() const {
  SurgeryElement r(ctx_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SurgeryElement SurgeryElement::operator+(const SurgeryElement& o) const {
  check_same_context(*this, o);
  SurgeryElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

SurgeryElement SurgeryElement::operator-(const SurgeryElement& o) const {
  return *this + (-o);
}

SurgeryElement SurgeryElement::operator*(const GroundScalar& s) const {
  SurgeryElement r(ctx_);
  const GroundScalar sc = s.in_context(ctx_->scalar_context());
  for (const auto& [k, c] : terms_) r.add_term(k, c * sc);
  return r;
}

bool SurgeryElement::operator==(const SurgeryElement& o) const {
  check_same_context(*this, o);
  return terms_ == o.terms_;
}

SurgeryElement SurgeryElement::operator*(const SurgeryElement& o) const {
  check_same_context(*this, o);
  const SurgeryContext& ctx = *ctx_;
  const ContextPtr& sc = ctx.scalar_context();
  SurgeryElement out = zero(ctx_);

  for (const auto& [ku, cu] : terms_)
    for (const auto& [kv, cv] : o.terms_) {
      Word wu = word_of(ctx, ku);
      Word wv = word_of(ctx, kv);
      GroundScalar coeff =
          cu * cv * GroundScalar::v_power(-word_weight(ctx, wu) - word_weight(ctx, wv), sc);
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());

      // Rewriting loop: sort letters by the canonical order, collecting
      // q-powers; an adjacent dual pair is replaced through its relation,
      // which strictly reduces the number of monogon letters.
      std::deque<std::pair<Word, GroundScalar>> work;
      work.emplace_back(std::move(w), std::move(coeff));
      long guard = 0;
      while (!work.empty()) {
        if (++guard > 100000) throw Error("surgery rewriting does not terminate");
        auto [word, c] = std::move(work.front());
        work.pop_front();

        bool changed = true;
        bool expanded = false;
        while (changed && !expanded) {
          changed = false;
          for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            auto& [la, ea] = word[i];
            auto& [lb, eb] = word[i + 1];
            if (la == lb) {
              ea += eb;
              word.erase(word.begin() + i + 1);
              if (ea == 0) word.erase(word.begin() + i);
              changed = true;
              break;
            }
            const bool duals =
                ctx.is_monogon_letter(la) && ctx.relation(la).partner == lb;
            if (duals) {
              // x x* -> q^2 b^2 + q^-2 c^2 + beta b c, consuming one pair.
              const MonogonRelation& rel = ctx.relation(la);
              Word prefix(word.begin(), word.begin() + i);
              Word suffix(word.begin() + i + 2, word.end());
              if (ea > 1) prefix.emplace_back(la, ea - 1);
              if (eb > 1) suffix.insert(suffix.begin(), {lb, eb - 1});
              auto emit = [&](std::initializer_list<Run> middle, const GroundScalar& f) {
                Word nw = prefix;
                nw.insert(nw.end(), middle.begin(), middle.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                work.emplace_back(std::move(nw), c * f);
              };
              emit({{rel.b, 2}}, GroundScalar::q_power(2, sc));
              emit({{rel.c, 2}}, GroundScalar::q_power(-2, sc));
              emit({{rel.b, 1}, {rel.c, 1}, {rel.beta, 1}}, GroundScalar::one(sc));
              expanded = true;
              break;
            }
            if (ctx.order_index(la) > ctx.order_index(lb)) {
              // swap: x^ea y^eb = q^{P(x,y) ea eb} y^eb x^ea
              c = c * GroundScalar::q_power(
                          ctx.extended_torus()->entry(la, lb) * ea * eb, sc);
              std::swap(word[i], word[i + 1]);
              changed = true;
              break;
            }
          }
        }
        if (expanded) continue;

        ExponentVector k;
        for (const auto& [l, e] : word) k.add(l, e);
        out.add_term(k, c * GroundScalar::v_power(word_weight(ctx, word), sc));
      }
    }
  return out;
}

SurgeryElement SurgeryElement::pow(long n) const {
  if (n < 0) {
    if (terms_.size() != 1)
      throw NonInvertibleImage("cannot invert a non-monomial surgery element");
    const auto& [k, c] = *terms_.begin();
    ExponentVector ki = k.scaled(-1);
    check_normal_form(*ctx_, ki);  // throws when a monogon or unmarked power flips sign
    return monomial(ctx_, ki, c.inverse()).pow(-n);
  }
  SurgeryElement acc = one(ctx_);
  SurgeryElement base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

TorusElement theta_embed(const SurgeryElement& u) {
  const SurgeryContext& ctx = *u.context();
  const TorusPtr& x = ctx.x_torus();
  const ContextPtr& sc = ctx.scalar_context();

  // theta(a*) = [a^{-1}b^2] + [a^{-1}c^2] + beta [a^{-1}bc]
  auto star_image = [&](const Label& star) {
    const Label& a = ctx.relation(star).partner;
    const MonogonRelation& rel = ctx.relation(a);
    ExponentVector k1, k2, k3;
    k1.add(a, -1);
    k1.add(rel.b, 2);
    k2.add(a, -1);
    k2.add(rel.c, 2);
    k3.add(a, -1);
    k3.add(rel.b, 1);
    k3.add(rel.c, 1);
    k3.add(rel.beta, 1);
    return TorusElement::monomial(x, sc, k1) + TorusElement::monomial(x, sc, k2) +
           TorusElement::monomial(x, sc, k3);
  };

  TorusElement out = TorusElement::zero(x, sc);
  for (const auto& [k, c] : u.terms()) {
    Word w = word_of(ctx, k);
    TorusElement acc = TorusElement::monomial(
        x, sc, ExponentVector{},
        c * GroundScalar::v_power(-word_weight(ctx, w), sc));
    for (const auto& [l, e] : w) {
      if (ctx.is_monogon_letter(l) && !ctx.triangulation().has_edge(l))
        acc = acc * star_image(l).pow(e);
      else
        acc = acc * TorusElement::generator(x, sc, l, e);
    }
    out = out + acc;
  }
  return out;
}

SurgeryElement SurgeryHom::image_of(const Label& l) const {
  auto it = images.find(l);
  if (it != images.end()) return it->second;
  return SurgeryElement::generator(target, l);
}

SurgeryElement SurgeryHom::apply(const SurgeryElement& x) const {
  if (x.context() != source &&
      !(*x.context()->extended_torus() == *source->extended_torus()))
    throw ContextMismatch("surgery hom applied to a foreign element");
  const SurgeryContext& ctx = *source;
  SurgeryElement out = SurgeryElement::zero(target);
  for (const auto& [k, c] : x.terms()) {
    Word w = word_of(ctx, k);
    SurgeryElement acc = SurgeryElement::scalar(
        target, c * GroundScalar::v_power(-word_weight(ctx, w), ctx.scalar_context()));
    for (const auto& [l, e] : w) {
      if (acc.is_zero()) break;
      acc = acc * image_of(l).pow(e);
    }
    out = out + acc;
  }
  return out;
}

namespace {

// The half-edge of a boundary edge that sits first in its vertex list (the
// departure side of its bigon), and the one that sits last.
std::pair<HalfEdgeRef, HalfEdgeRef> bigon_stubs(const Quasitriangulation& q, const Label& g) {
  std::optional<HalfEdgeRef> first, last;
  for (int end : {0, 1}) {
    const Label& at = q.edge(g).endpoint(end);
    const auto& list = q.vertex_orders.at(at);
    if (list.front() == HalfEdgeRef{g, end}) first = HalfEdgeRef{g, end};
    if (list.back() == HalfEdgeRef{g, end}) last = HalfEdgeRef{g, end};
  }
  if (!first || !last || *first == *last)
    throw NotBoundaryEdge("edge " + g + " does not hug a boundary segment");
  return {*first, *last};
}

Label fresh_label(const Quasitriangulation& q, const MarkedSurfaceSpec& s, Label base) {
  auto taken = [&](const Label& l) {
    if (q.has_edge(l)) return true;
    for (const auto& c : s.components) {
      if (c.name == l) return true;
      for (const auto& p : c.points)
        if (p == l) return true;
    }
    return false;
  };
  while (taken(base)) base += "'";
  return base;
}

void insert_stub_after(std::vector<HalfEdgeRef>& list, const HalfEdgeRef& anchor,
                       std::vector<HalfEdgeRef> inserted) {
  auto it = std::find(list.begin(), list.end(), anchor);
  if (it == list.end()) throw Error("rotation anchor not found");
  list.insert(std::next(it), inserted.begin(), inserted.end());
}

}  // namespace

SurgeryHom psi_add_point_boundary(const SurgeryCtxPtr& ctx, const Label& a) {
  const MarkedSurfaceSpec& s = ctx->surface();
  const Quasitriangulation& q = ctx->triangulation();
  if (!q.has_edge(a)) throw MissingLabel("unknown edge " + a);
  if (!ctx->validation().classes.boundary.count(a))
    throw NotBoundaryEdge("edge " + a + " is not a boundary edge");

  // The boundary bigon of a runs against one segment; split that segment.
  const Face* bigon = nullptr;
  for (const Face& f : ctx->validation().faces)
    if (f.kind == Face::Kind::Boundary && f.edges[0] == a) bigon = &f;
  const BoundaryComponent& comp = s.component(bigon->segment_component);
  const std::size_t i = bigon->segment_index;
  const Label u = comp.points[i];
  const Label w = comp.points[(i + 1) % comp.points.size()];

  MarkedSurfaceSpec s2 = s;
  Quasitriangulation q2 = q;
  const Label p = fresh_label(q, s, a + "p");
  const Label a1 = fresh_label(q, s, a + "1");
  Quasitriangulation qtmp = q;
  qtmp.edges.push_back({a1, "", ""});
  const Label a2 = fresh_label(qtmp, s, a + "2");

  for (auto& c : s2.components)
    if (c.name == comp.name) c.points.insert(c.points.begin() + i + 1, p);

  auto [first_stub, last_stub] = bigon_stubs(q, a);
  // first_stub sits at w (start of the bigon walk), last_stub at u.
  q2.edges.push_back({a1, u, p});
  q2.edges.push_back({a2, p, w});
  insert_stub_after(q2.vertex_orders.at(u), last_stub, {{a1, 0}});
  auto& wlist = q2.vertex_orders.at(w);
  wlist.insert(std::find(wlist.begin(), wlist.end(), first_stub), {a2, 1});
  q2.vertex_orders[p] = {{a1, 1}, {a2, 0}};
  q2.boundary_flags.erase(a);
  q2.boundary_flags.insert(a1);
  q2.boundary_flags.insert(a2);

  SurgeryHom psi;
  psi.source = ctx;
  psi.target = make_surgery_context(s2, q2, ctx->scalar_context());
  psi.named = {{"point", p}, {"a1", a1}, {"a2", a2}};
  return psi;  // identity on every generator of Z(Delta)
}

SurgeryHom psi_add_point_unmarked(const SurgeryCtxPtr& ctx, const Label& beta) {
  const MarkedSurfaceSpec& s = ctx->surface();
  const Quasitriangulation& q = ctx->triangulation();
  if (!ctx->is_unmarked(beta)) throw NotUnmarked(beta + " is not an unmarked component");
  Label a;
  for (const auto& [edge, hole] : q.monogon_holes)
    if (hole == beta) a = edge;
  const MonogonRelation& rel = ctx->relation(a);

  MarkedSurfaceSpec s2 = s;
  Quasitriangulation q2 = q;
  const Label p = fresh_label(q, s, beta + "p");
  const Label d = fresh_label(q, s, a + "d");
  const Label e = fresh_label(q, s, a + "e");
  const Label f = fresh_label(q, s, a + "f");

  for (auto& c : s2.components)
    if (c.name == beta) c.points = {p};

  // At the base vertex of a: [.., flank, a.h1, d.0, e.0, a.h2, flank, ..];
  // at p the transplanted annulus pattern [f.0, d.1, e.1, f.1].
  const Label base = q.edge(a).p0;
  const auto& list = q.vertex_orders.at(base);
  HalfEdgeRef h1{a, 0};
  for (std::size_t i = 0; i + 1 < list.size(); ++i)
    if (list[i].edge == a && list[i + 1].edge == a) h1 = list[i];
  q2.edges.push_back({d, base, p});
  q2.edges.push_back({e, base, p});
  q2.edges.push_back({f, p, p});
  insert_stub_after(q2.vertex_orders.at(base), h1, {{d, 0}, {e, 0}});
  q2.vertex_orders[p] = {{f, 0}, {d, 1}, {e, 1}, {f, 1}};
  q2.boundary_flags.insert(f);
  q2.monogon_holes.erase(a);

  SurgeryHom psi;
  psi.source = ctx;
  psi.target = make_surgery_context(s2, q2, ctx->scalar_context());
  psi.named = {{"point", p}, {"d", d}, {"e", e}, {"f", f}};

  // Psi(beta) = [d^{-1}e] + [ad^{-1}e^{-1}f] + [de^{-1}]
  ExponentVector b1, b2, b3;
  b1.add(d, -1);
  b1.add(e, 1);
  b2.add(a, 1);
  b2.add(d, -1);
  b2.add(e, -1);
  b2.add(f, 1);
  b3.add(d, 1);
  b3.add(e, -1);
  psi.images[beta] = SurgeryElement::monomial(psi.target, b1) +
                     SurgeryElement::monomial(psi.target, b2) +
                     SurgeryElement::monomial(psi.target, b3);

  // Psi(a*) = [a^{-1}b^2]+[a^{-1}c^2]+[a^{-1}bcd^{-1}e]+[bcd^{-1}e^{-1}f]+[a^{-1}bcde^{-1}]
  auto star_term = [&](std::initializer_list<std::pair<Label, long>> extra) {
    ExponentVector k;
    for (const auto& [l, ee] : extra) k.add(l, ee);
    return SurgeryElement::monomial(psi.target, k);
  };
  psi.images[rel.partner] =
      star_term({{a, -1}, {rel.b, 2}}) + star_term({{a, -1}, {rel.c, 2}}) +
      star_term({{a, -1}, {rel.b, 1}, {rel.c, 1}, {d, -1}, {e, 1}}) +
      star_term({{rel.b, 1}, {rel.c, 1}, {d, -1}, {e, -1}, {f, 1}}) +
      star_term({{a, -1}, {rel.b, 1}, {rel.c, 1}, {d, 1}, {e, -1}});
  return psi;
}

SurgeryHom psi_plug_hole(const SurgeryCtxPtr& ctx, const Label& beta) {
  const MarkedSurfaceSpec& s = ctx->surface();
  const Quasitriangulation& q = ctx->triangulation();
  if (!ctx->is_unmarked(beta)) throw NotUnmarked(beta + " is not an unmarked component");
  Label a;
  for (const auto& [edge, hole] : q.monogon_holes)
    if (hole == beta) a = edge;
  const MonogonRelation& rel = ctx->relation(a);
  const Label b = rel.b;  // removed together with a
  const Label c = rel.c;  // survives

  MarkedSurfaceSpec s2 = s;
  std::erase_if(s2.components, [&](const BoundaryComponent& x) { return x.name == beta; });

  Quasitriangulation q2 = q;
  for (auto& [point, list] : q2.vertex_orders)
    std::erase_if(list, [&](const HalfEdgeRef& h) { return h.edge == a || h.edge == b; });
  std::erase_if(q2.edges, [&](const EdgeDef& x) { return x.name == a || x.name == b; });
  q2.monogon_holes.erase(a);
  if (q2.boundary_flags.erase(b)) q2.boundary_flags.insert(c);

  SurgeryHom psi;
  psi.source = ctx;
  psi.target = make_surgery_context(s2, q2, ctx->scalar_context());
  psi.named = {{"a", a}, {"b", b}, {"c", c}};
  psi.images[a] = SurgeryElement::zero(psi.target);
  psi.images[rel.partner] = SurgeryElement::zero(psi.target);
  psi.images[b] = SurgeryElement::generator(psi.target, c);
  psi.images[beta] = SurgeryElement::scalar(
      psi.target, -GroundScalar::q_power(2, ctx->scalar_context()) -
                      GroundScalar::q_power(-2, ctx->scalar_context()));
  return psi;
}

}  // namespace skeintorus
