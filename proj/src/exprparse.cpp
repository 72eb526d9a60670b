#include "skeintorus/exprparse.hpp"

#include <cctype>
#include <sstream>

namespace skeintorus {

namespace {

enum class Tok { End, Number, VLit, QLit, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket };

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  long number = 0;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { next(); }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      number = std::stol(text.substr(start, pos - start));
      tok = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '\''))
        ++pos;
      // a trailing star with no space belongs to the name
      if (pos < text.size() && text[pos] == '*') ++pos;
      ident = text.substr(start, pos - start);
      if (ident == "v")
        tok = Tok::VLit;
      else if (ident == "q")
        tok = Tok::QLit;
      else
        tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '[': tok = Tok::LBracket; return;
      case ']': tok = Tok::RBracket; return;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", tok_pos);
    }
  }

  long parse_sint() {
    bool neg = false;
    if (tok == Tok::Minus) {
      neg = true;
      next();
    }
    if (tok != Tok::Number) throw SyntaxError("expected an integer", tok_pos);
    long n = number;
    next();
    return neg ? -n : n;
  }

  long optional_exponent() {
    if (tok != Tok::Caret) return 1;
    next();
    return parse_sint();
  }
};

// The parser is generic over the target algebra; the torus and surgery
// evaluations share the grammar.
template <class Alg>
struct Parser {
  Alg& alg;
  Lexer lex;

  Parser(Alg& a, const std::string& text) : alg(a), lex(text) {}

  typename Alg::Value run() {
    auto v = parse_expr();
    if (lex.tok != Tok::End) throw SyntaxError("trailing input", lex.tok_pos);
    return v;
  }

  typename Alg::Value parse_expr() {
    bool neg = false;
    if (lex.tok == Tok::Minus) {
      neg = true;
      lex.next();
    }
    auto acc = parse_term();
    if (neg) acc = alg.negate(acc);
    while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
      bool minus = lex.tok == Tok::Minus;
      lex.next();
      auto t = parse_term();
      acc = alg.add(acc, minus ? alg.negate(t) : t);
    }
    return acc;
  }

  bool at_atom() const {
    switch (lex.tok) {
      case Tok::Number:
      case Tok::VLit:
      case Tok::QLit:
      case Tok::Ident:
      case Tok::LParen:
      case Tok::LBracket:
        return true;
      default:
        return false;
    }
  }

  typename Alg::Value parse_term() {
    auto acc = parse_atom();
    while (lex.tok == Tok::Star || at_atom()) {
      if (lex.tok == Tok::Star) lex.next();
      acc = alg.multiply(acc, parse_atom());
    }
    return acc;
  }

  typename Alg::Value parse_atom() {
    const std::size_t at = lex.tok_pos;
    switch (lex.tok) {
      case Tok::Minus: {
        lex.next();
        return alg.negate(parse_atom());
      }
      case Tok::Number: {
        long n = lex.number;
        lex.next();
        return alg.scalar(GroundScalar::integer(n));
      }
      case Tok::VLit: {
        lex.next();
        return alg.scalar(GroundScalar::v_power(lex.tok == Tok::Caret ? lex.optional_exponent() : 1));
      }
      case Tok::QLit: {
        lex.next();
        return alg.scalar(GroundScalar::q_power(lex.tok == Tok::Caret ? lex.optional_exponent() : 1));
      }
      case Tok::Ident: {
        Label name = lex.ident;
        lex.next();
        long e = lex.optional_exponent();
        return alg.generator(name, e, at);
      }
      case Tok::LParen: {
        lex.next();
        auto v = parse_expr();
        if (lex.tok != Tok::RParen) throw SyntaxError("expected ')'", lex.tok_pos);
        lex.next();
        return v;
      }
      case Tok::LBracket: {
        lex.next();
        ExponentVector k;
        GroundScalar coeff = GroundScalar::one();
        bool any = false;
        while (lex.tok != Tok::RBracket) {
          if (!at_atom()) throw SyntaxError("expected a factor in Weyl bracket", lex.tok_pos);
          auto item = parse_atom();
          auto [ik, ic] = alg.as_monomial(item, at);
          k = k.plus(ik);
          coeff = coeff * ic.in_context(nullptr);
          any = true;
        }
        lex.next();
        if (!any) throw SyntaxError("empty Weyl bracket", at);
        return alg.monomial(k, coeff, at);
      }
      default:
        throw SyntaxError("expected a factor", at);
    }
  }
};

struct TorusAlgebra {
  using Value = TorusElement;
  TorusPtr torus;
  ContextPtr ctx;

  Value scalar(const GroundScalar& s) const {
    return TorusElement::monomial(torus, ctx, ExponentVector{}, s.in_context(ctx));
  }
  Value generator(const Label& l, long e, std::size_t at) const {
    if (!torus->has(l)) throw UnknownGenerator("unknown generator " + l);
    return TorusElement::generator(torus, ctx, l, e);
  }
  Value monomial(const ExponentVector& k, const GroundScalar& c, std::size_t at) const {
    for (const auto& [l, e] : k.entries())
      if (!torus->has(l)) throw UnknownGenerator("unknown generator " + l);
    return TorusElement::monomial(torus, ctx, k, c.in_context(ctx));
  }
  std::pair<ExponentVector, GroundScalar> as_monomial(const Value& v, std::size_t at) const {
    if (v.terms().size() != 1)
      throw SyntaxError("Weyl bracket factors must be monomials", at);
    GroundScalar c = v.terms().begin()->second;
    PolyTerms raw = c.terms();
    return {v.terms().begin()->first, GroundScalar::from_terms(std::move(raw), nullptr)};
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value multiply(const Value& a, const Value& b) const { return a * b; }
  Value negate(const Value& a) const { return -a; }
};

struct SurgeryAlgebra {
  using Value = SurgeryElement;
  SurgeryCtxPtr ctx;

  Value scalar(const GroundScalar& s) const { return SurgeryElement::scalar(ctx, s); }
  Value generator(const Label& l, long e, std::size_t at) const {
    if (!ctx->extended_torus()->has(l)) throw UnknownGenerator("unknown generator " + l);
    try {
      return SurgeryElement::generator(ctx, l, e);
    } catch (const Error& err) {
      throw SyntaxError(err.what(), at);
    }
  }
  Value monomial(const ExponentVector& k, const GroundScalar& c, std::size_t at) const {
    for (const auto& [l, e] : k.entries())
      if (!ctx->extended_torus()->has(l)) throw UnknownGenerator("unknown generator " + l);
    try {
      return SurgeryElement::monomial(ctx, k, c.in_context(ctx->scalar_context()));
    } catch (const Error& err) {
      throw SyntaxError(err.what(), at);
    }
  }
  std::pair<ExponentVector, GroundScalar> as_monomial(const Value& v, std::size_t at) const {
    if (v.terms().size() != 1)
      throw SyntaxError("Weyl bracket factors must be monomials", at);
    GroundScalar c = v.terms().begin()->second;
    PolyTerms raw = c.terms();
    return {v.terms().begin()->first, GroundScalar::from_terms(std::move(raw), nullptr)};
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value multiply(const Value& a, const Value& b) const { return a * b; }
  Value negate(const Value& a) const { return -a; }
};

}  // namespace

TorusElement parse_expression(const std::string& text, const TorusPtr& torus,
                              const ContextPtr& ctx) {
  TorusAlgebra alg{torus, ctx};
  Parser<TorusAlgebra> p(alg, text);
  return p.run();
}

SurgeryElement parse_surgery_expression(const std::string& text, const SurgeryCtxPtr& ctx) {
  SurgeryAlgebra alg{ctx};
  Parser<SurgeryAlgebra> p(alg, text);
  return p.run();
}

namespace {

// One scalar term `c v^e`, printed as a q-power when the exponent is even.
std::string scalar_term(const Int& c, long e, bool lead) {
  std::ostringstream os;
  Int abs = c < 0 ? Int(-c) : c;
  if (c < 0)
    os << (lead ? "-" : " - ");
  else if (!lead)
    os << " + ";
  std::string power;
  if (e != 0) {
    if (e % 2 == 0) {
      long k = e / 2;
      power = (k == 1) ? "q" : "q^" + std::to_string(k);
    } else {
      power = (e == 1) ? "v" : "v^" + std::to_string(e);
    }
  }
  if (power.empty())
    os << abs.str();
  else if (abs == 1)
    os << power;
  else
    os << abs.str() << "*" << power;
  return os.str();
}

std::string monomial_str(const ExponentVector& k) {
  std::ostringstream os;
  const auto& entries = k.entries();
  if (entries.size() > 1) os << "[";
  bool first = true;
  for (const auto& [l, e] : entries) {
    if (!first) os << " ";
    first = false;
    os << l;
    if (e != 1) os << "^" << e;
  }
  if (entries.size() > 1) os << "]";
  return os.str();
}

template <class Terms>
std::string element_str(const Terms& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string mono = k.is_zero() ? "" : monomial_str(k);
    const PolyTerms& ct = c.terms();
    bool simple = ct.size() == 1;
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) {
      os << (simple ? scalar_term(ct.begin()->second, ct.begin()->first, true)
                    : "(" + print_scalar(c) + ")");
      continue;
    }
    if (c.is_one()) {
      os << mono;
    } else if (simple) {
      os << scalar_term(ct.begin()->second, ct.begin()->first, true) << " * " << mono;
    } else {
      os << "(" << print_scalar(c) << ") * " << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string print_scalar(const GroundScalar& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    os << scalar_term(c, e, first);
    first = false;
  }
  return os.str();
}

std::string print_element(const TorusElement& x) { return element_str(x.terms()); }

std::string print_element(const SurgeryElement& x) { return element_str(x.terms()); }

std::pair<MarkedSurfaceSpec, Quasitriangulation> parse_surface(const std::string& text) {
  MarkedSurfaceSpec surface;
  Quasitriangulation q;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    any = true;
    if (word == "boundary") {
      BoundaryComponent comp;
      if (!(ls >> comp.name)) throw SyntaxError("boundary needs a name", lineno);
      Label p;
      while (ls >> p) comp.points.push_back(p);
      surface.components.push_back(std::move(comp));
    } else if (word == "edge") {
      EdgeDef e;
      if (!(ls >> e.name >> e.p0 >> e.p1))
        throw SyntaxError("edge needs a name and two endpoints", lineno);
      q.edges.push_back(std::move(e));
    } else if (word == "order") {
      Label point;
      if (!(ls >> point)) throw SyntaxError("order needs a point", lineno);
      std::vector<HalfEdgeRef> list;
      std::string h;
      while (ls >> h) {
        auto dot = h.rfind('.');
        if (dot == std::string::npos || (h.substr(dot + 1) != "0" && h.substr(dot + 1) != "1"))
          throw SyntaxError("half-edge must be written name.0 or name.1", lineno);
        list.push_back({h.substr(0, dot), h[dot + 1] == '1' ? 1 : 0});
      }
      if (list.empty()) throw SyntaxError("order needs at least one half-edge", lineno);
      if (!q.vertex_orders.emplace(point, std::move(list)).second)
        throw SyntaxError("duplicate order line for " + point, lineno);
    } else if (word == "hole") {
      Label beta, inword, edge;
      if (!(ls >> beta >> inword >> edge) || inword != "in")
        throw SyntaxError("hole line must read `hole <boundary> in <edge>`", lineno);
      q.monogon_holes[edge] = beta;
    } else {
      throw SyntaxError("unknown directive " + word, lineno);
    }
  }
  if (!any) throw EmptySurface("surface file has no content");
  infer_boundary_flags(surface, q);
  validate_inferring_genus(surface, q);
  return {surface, q};
}

std::string print_surface(const MarkedSurfaceSpec& surface, const Quasitriangulation& q) {
  std::ostringstream os;
  for (const auto& comp : surface.components) {
    os << "boundary " << comp.name;
    for (const auto& p : comp.points) os << " " << p;
    os << "\n";
  }
  for (const auto& e : q.edges) os << "edge " << e.name << " " << e.p0 << " " << e.p1 << "\n";
  for (const auto& comp : surface.components)
    for (const auto& p : comp.points) {
      auto it = q.vertex_orders.find(p);
      if (it == q.vertex_orders.end()) continue;
      os << "order " << p;
      for (const auto& h : it->second) os << " " << h.edge << "." << h.end;
      os << "\n";
    }
  for (const auto& [edge, beta] : q.monogon_holes)
    os << "hole " << beta << " in " << edge << "\n";
  return os.str();
}

}  // namespace skeintorus
