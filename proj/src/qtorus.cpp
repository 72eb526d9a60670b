#include "skeintorus/qtorus.hpp"

#include <algorithm>
#include <sstream>

namespace skeintorus {

ExponentVector::ExponentVector(std::map<Label, long> entries) : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();)
    it = (it->second == 0) ? entries_.erase(it) : std::next(it);
}

ExponentVector ExponentVector::unit(const Label& l, long e) {
  ExponentVector k;
  k.set(l, e);
  return k;
}

long ExponentVector::get(const Label& l) const {
  auto it = entries_.find(l);
  return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::set(const Label& l, long e) {
  if (e == 0)
    entries_.erase(l);
  else
    entries_[l] = e;
}

void ExponentVector::add(const Label& l, long e) { set(l, get(l) + e); }

bool ExponentVector::all_nonneg() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second >= 0; });
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (const auto& [l, e] : o.entries_) r.add(l, e);
  return r;
}

ExponentVector ExponentVector::minus(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (const auto& [l, e] : o.entries_) r.add(l, -e);
  return r;
}

ExponentVector ExponentVector::scaled(long s) const {
  ExponentVector r;
  if (s == 0) return r;
  for (const auto& [l, e] : entries_) r.entries_.emplace(l, s * e);
  return r;
}

std::string ExponentVector::str() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [l, e] : entries_) {
    if (!first) os << " ";
    first = false;
    os << l;
    if (e != 1) os << "^" << e;
  }
  os << "]";
  return os.str();
}

CommutationMatrix::CommutationMatrix(std::vector<Label> labels,
                                     std::vector<std::vector<long>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (entries_.size() != n) throw Error("commutation matrix shape mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw Error("commutation matrix shape mismatch");
    if (entries_[i][i] != 0) throw Error("commutation matrix has nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (entries_[i][j] != -entries_[j][i])
        throw Error("commutation matrix is not antisymmetric");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw Error("duplicate generator label " + labels_[i]);
}

CommutationMatrix CommutationMatrix::zero(std::vector<Label> labels) {
  std::vector<std::vector<long>> entries(labels.size(),
                                         std::vector<long>(labels.size(), 0));
  return CommutationMatrix(std::move(labels), std::move(entries));
}

std::size_t CommutationMatrix::index(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw MissingLabel("unknown generator " + l);
  return it->second;
}

long CommutationMatrix::entry(const Label& a, const Label& b) const {
  return entries_[index(a)][index(b)];
}

long CommutationMatrix::pairing(const ExponentVector& k, const ExponentVector& n) const {
  long acc = 0;
  for (const auto& [la, ea] : k.entries())
    for (const auto& [lb, eb] : n.entries()) acc += entries_[index(la)][index(lb)] * ea * eb;
  return acc;
}

CommutationMatrix CommutationMatrix::scaled(long s) const {
  std::vector<std::vector<long>> entries = entries_;
  for (auto& row : entries)
    for (auto& x : row) x *= s;
  return CommutationMatrix(labels_, std::move(entries));
}

TorusPtr make_torus(std::vector<Label> labels, std::vector<std::vector<long>> entries) {
  return std::make_shared<const CommutationMatrix>(std::move(labels), std::move(entries));
}

namespace {

void check_same_torus(const TorusElement& a, const TorusElement& b) {
  if (!a.torus() || !b.torus()) throw TorusMismatch("torus element without a torus");
  if (a.torus() != b.torus() && !(*a.torus() == *b.torus()))
    throw TorusMismatch("operands over different quantum tori");
  if (!same_context(a.context(), b.context()))
    throw ContextMismatch("torus operands over different ground rings");
}

}  // namespace

TorusElement::TorusElement(TorusPtr torus, ContextPtr ctx)
    : torus_(std::move(torus)), ctx_(std::move(ctx)) {}

TorusElement TorusElement::zero(TorusPtr torus, ContextPtr ctx) {
  return TorusElement(std::move(torus), std::move(ctx));
}

TorusElement TorusElement::unit(TorusPtr torus, ContextPtr ctx) {
  return monomial(std::move(torus), std::move(ctx), ExponentVector{});
}

TorusElement TorusElement::monomial(TorusPtr torus, ContextPtr ctx, ExponentVector k,
                                    GroundScalar coeff) {
  TorusElement x(std::move(torus), ctx);
  x.add_term(k, coeff.in_context(ctx));
  return x;
}

TorusElement TorusElement::monomial(TorusPtr torus, ContextPtr ctx, ExponentVector k) {
  GroundScalar one = GroundScalar::one(ctx);
  return monomial(std::move(torus), std::move(ctx), std::move(k), std::move(one));
}

TorusElement TorusElement::generator(TorusPtr torus, ContextPtr ctx, const Label& l,
                                     long exp) {
  torus->index(l);  // throws MissingLabel
  return monomial(std::move(torus), std::move(ctx), ExponentVector::unit(l, exp));
}

bool TorusElement::is_positive() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.all_nonneg(); });
}

void TorusElement::add_term(const ExponentVector& k, const GroundScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TorusElement TorusElement::operator-() const {
  TorusElement r(torus_, ctx_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  check_same_torus(*this, o);
  TorusElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator*(const TorusElement& o) const {
  check_same_torus(*this, o);
  TorusElement r(torus_, ctx_);
  for (const auto& [k, ck] : terms_)
    for (const auto& [n, cn] : o.terms_) {
      GroundScalar c = ck * cn * GroundScalar::v_power(torus_->pairing(k, n), ctx_);
      r.add_term(k.plus(n), c);
    }
  return r;
}

TorusElement TorusElement::operator*(const GroundScalar& s) const {
  TorusElement r(torus_, ctx_);
  const GroundScalar sc = s.in_context(ctx_);
  for (const auto& [k, c] : terms_) r.add_term(k, c * sc);
  return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
  check_same_torus(*this, o);
  return terms_ == o.terms_;
}

TorusElement TorusElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  TorusElement acc = unit(torus_, ctx_);
  TorusElement base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

TorusElement TorusElement::inverse() const {
  if (terms_.size() != 1)
    throw NonInvertibleImage("cannot invert a non-monomial torus element");
  const auto& [k, c] = *terms_.begin();
  // x^k x^{-k} = 1 since <k,-k> = 0.
  return monomial(torus_, ctx_, k.scaled(-1), c.inverse());
}

TorusElement TorusElement::reflection() const {
  TorusElement r(torus_, ctx_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conjugate());
  return r;
}

std::string TorusElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << k.str();
  }
  return os.str();
}

TorusElement monomial_product(const TorusPtr& torus, const ContextPtr& ctx,
                              const ExponentVector& k, const ExponentVector& n) {
  return TorusElement::monomial(torus, ctx, k.plus(n),
                                GroundScalar::v_power(torus->pairing(k, n), ctx));
}

TorusElement weyl_normalize(const TorusPtr& torus, const ContextPtr& ctx,
                            std::span<const ExponentVector> factors) {
  ExponentVector sum;
  for (const auto& k : factors) {
    for (const auto& [l, e] : k.entries()) torus->index(l);
    sum = sum.plus(k);
  }
  return TorusElement::monomial(torus, ctx, sum);
}

OrderedFactorization factor_ordered(const CommutationMatrix& torus, const ExponentVector& k,
                                    std::span<const Label> order) {
  for (const auto& [l, e] : k.entries()) {
    if (std::find(order.begin(), order.end(), l) == order.end())
      throw MissingLabel("factor order does not cover generator " + l);
  }
  OrderedFactorization f;
  for (const Label& l : order) {
    long e = k.get(l);
    if (e != 0) f.factors.emplace_back(l, e);
  }
  // Ordered product of the factors is v^w x^k; the prefactor cancels w.
  long w = 0;
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    for (std::size_t j = i + 1; j < f.factors.size(); ++j)
      w += torus.entry(f.factors[i].first, f.factors[j].first) * f.factors[i].second *
           f.factors[j].second;
  f.v_exponent = -w;
  return f;
}

namespace {

// Translation-invariant total order: lexicographic on the dense exponent
// tuple in torus label order.  (The sparse map order is not a monomial order.)
bool dense_less(const CommutationMatrix& torus, const ExponentVector& a,
                const ExponentVector& b) {
  for (const Label& l : torus.labels()) {
    long ea = a.get(l), eb = b.get(l);
    if (ea != eb) return ea < eb;
  }
  return false;
}

const std::pair<const ExponentVector, GroundScalar>* leading_term(
    const CommutationMatrix& torus, const TorusElement& x) {
  const std::pair<const ExponentVector, GroundScalar>* best = nullptr;
  for (const auto& term : x.terms())
    if (!best || dense_less(torus, best->first, term.first)) best = &term;
  return best;
}

}  // namespace

TorusElement divide_right_exact(const TorusElement& num, const TorusElement& den) {
  if (den.is_zero()) throw ExactDivisionFailure("division by zero torus element");
  if (!same_context(num.context(), den.context()))
    throw ContextMismatch("torus division over different ground rings");
  const TorusPtr& torus = num.torus();
  const auto* lead = leading_term(*torus, den);
  if (!lead->second.is_unit_monomial())
    throw ExactDivisionFailure("divisor leading coefficient is not a unit");

  TorusElement rem = num;
  TorusElement quot = TorusElement::zero(torus, num.context());
  for (int guard = 0; !rem.is_zero(); ++guard) {
    if (guard > 20000) throw ExactDivisionFailure("torus division left a remainder");
    const auto* top = leading_term(*torus, rem);
    ExponentVector shift = top->first.minus(lead->first);
    // w x^shift * c x^{k_lead} contributes w c v^{<shift,k_lead>} x^{top}.
    GroundScalar w = top->second * lead->second.inverse() *
                     GroundScalar::v_power(-torus->pairing(shift, lead->first), num.context());
    TorusElement piece = TorusElement::monomial(torus, num.context(), shift, w);
    quot.add_term(shift, w);
    rem = rem - piece * den;
  }
  return quot;
}

}  // namespace skeintorus
