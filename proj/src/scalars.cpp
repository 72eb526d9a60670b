#include "skeintorus/scalars.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace skeintorus {

namespace {

void add_term(PolyTerms& terms, long exp, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(exp);
  if (it == terms.end()) {
    terms.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

PolyTerms mul_terms(const PolyTerms& a, const PolyTerms& b) {
  PolyTerms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(out, ea + eb, ca * cb);
  return out;
}

// Exact Laurent division.  Both operands are shifted so their lowest
// exponent is zero, then ordinary descending long division runs over Z.
PolyTerms divide_terms_exact(const PolyTerms& num, const PolyTerms& den) {
  if (den.empty()) throw ExactDivisionFailure("division by zero scalar");
  if (num.empty()) return {};
  const long num_shift = num.begin()->first;
  const long den_shift = den.begin()->first;

  PolyTerms rem;
  for (const auto& [e, c] : num) rem.emplace(e - num_shift, c);
  PolyTerms d;
  for (const auto& [e, c] : den) d.emplace(e - den_shift, c);

  const long dd = d.rbegin()->first;
  const Int& dlead = d.rbegin()->second;
  PolyTerms quot;
  while (!rem.empty() && rem.rbegin()->first >= dd) {
    const long re = rem.rbegin()->first;
    const Int& rc = rem.rbegin()->second;
    if (rc % dlead != 0) throw ExactDivisionFailure("non-exact scalar division");
    Int qc = rc / dlead;
    long qe = re - dd;
    add_term(quot, qe, qc);
    for (const auto& [e, c] : d) add_term(rem, e + qe, -qc * c);
  }
  if (!rem.empty()) throw ExactDivisionFailure("scalar division left a remainder");
  if (!quot.empty() && num_shift != den_shift) {
    PolyTerms shifted;
    for (const auto& [e, c] : quot) shifted.emplace(e + num_shift - den_shift, c);
    return shifted;
  }
  return quot;
}

const PolyTerms& cyclotomic_terms(long m) {
  static std::map<long, PolyTerms> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (v^m - 1) / prod_{d | m, d < m} Phi_d, by induction on divisors.
  std::vector<long> stack{m};
  while (!stack.empty()) {
    long k = stack.back();
    if (cache.count(k)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (long d = 1; d < k; ++d)
      if (k % d == 0 && !cache.count(d)) {
        stack.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    stack.pop_back();
    PolyTerms num;
    num[k] = 1;
    num[0] = -1;
    for (long d = 1; d < k; ++d)
      if (k % d == 0) num = divide_terms_exact(num, cache.at(d));
    cache.emplace(k, std::move(num));
  }
  return cache.at(m);
}

}  // namespace

CyclotomicContext::CyclotomicContext(long m) : m_(m) {
  if (m < 1) throw ContextError("cyclotomic order must be >= 1");
  phi_ = cyclotomic_terms(m);
  phi_degree_ = phi_.rbegin()->first;
}

void CyclotomicContext::reduce(PolyTerms& terms) const {
  PolyTerms folded;
  for (const auto& [e, c] : terms) {
    long r = e % m_;
    if (r < 0) r += m_;
    add_term(folded, r, c);
  }
  // Phi_m is monic, so the remainder is computed over Z.
  while (!folded.empty() && folded.rbegin()->first >= phi_degree_) {
    const long e = folded.rbegin()->first;
    const Int c = folded.rbegin()->second;
    const long shift = e - phi_degree_;
    for (const auto& [pe, pc] : phi_) add_term(folded, pe + shift, -c * pc);
  }
  terms = std::move(folded);
}

ContextPtr make_context(long m) { return std::make_shared<CyclotomicContext>(m); }

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order() == b->order();
}

void check_context(const GroundScalar& a, const GroundScalar& b) {
  if (!same_context(a.context(), b.context()))
    throw ContextMismatch("scalar operands over different ground rings");
}

void GroundScalar::canonicalize() {
  if (ctx_) ctx_->reduce(terms_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

GroundScalar GroundScalar::zero(ContextPtr ctx) {
  GroundScalar s;
  s.ctx_ = std::move(ctx);
  return s;
}

GroundScalar GroundScalar::integer(Int n, ContextPtr ctx) {
  return monomial(std::move(n), 0, std::move(ctx));
}

GroundScalar GroundScalar::v_power(long e, ContextPtr ctx) {
  return monomial(1, e, std::move(ctx));
}

GroundScalar GroundScalar::monomial(Int coeff, long v_exp, ContextPtr ctx) {
  GroundScalar s;
  s.ctx_ = std::move(ctx);
  if (coeff != 0) s.terms_.emplace(v_exp, std::move(coeff));
  s.canonicalize();
  return s;
}

GroundScalar GroundScalar::from_terms(PolyTerms terms, ContextPtr ctx) {
  GroundScalar s;
  s.ctx_ = std::move(ctx);
  s.terms_ = std::move(terms);
  s.canonicalize();
  return s;
}

bool GroundScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool GroundScalar::is_integer() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool GroundScalar::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

GroundScalar GroundScalar::operator-() const {
  GroundScalar s;
  s.ctx_ = ctx_;
  for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
  return s;
}

GroundScalar GroundScalar::operator+(const GroundScalar& o) const {
  check_context(*this, o);
  GroundScalar s;
  s.ctx_ = ctx_ ? ctx_ : o.ctx_;
  s.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) add_term(s.terms_, e, c);
  return s;
}

GroundScalar GroundScalar::operator-(const GroundScalar& o) const { return *this + (-o); }

GroundScalar GroundScalar::operator*(const GroundScalar& o) const {
  check_context(*this, o);
  GroundScalar s;
  s.ctx_ = ctx_ ? ctx_ : o.ctx_;
  s.terms_ = mul_terms(terms_, o.terms_);
  s.canonicalize();
  return s;
}

bool GroundScalar::operator==(const GroundScalar& o) const {
  check_context(*this, o);
  return terms_ == o.terms_;
}

bool GroundScalar::operator<(const GroundScalar& o) const { return terms_ < o.terms_; }

GroundScalar GroundScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  GroundScalar acc = one(ctx_);
  GroundScalar base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

GroundScalar GroundScalar::inverse() const {
  if (!is_unit_monomial())
    throw NonInvertibleImage("scalar is not an invertible monomial: " + str());
  const auto& [e, c] = *terms_.begin();
  return monomial(c, -e, ctx_);
}

GroundScalar GroundScalar::conjugate() const {
  PolyTerms out;
  for (const auto& [e, c] : terms_) out.emplace(-e, c);
  return from_terms(std::move(out), ctx_);
}

GroundScalar GroundScalar::substitute(long t) const {
  PolyTerms out;
  for (const auto& [e, c] : terms_) add_term(out, t * e, c);
  return from_terms(std::move(out), ctx_);
}

GroundScalar GroundScalar::in_context(ContextPtr ctx) const {
  if (same_context(ctx_, ctx)) {
    GroundScalar s = *this;
    s.ctx_ = std::move(ctx);
    return s;
  }
  if (ctx_)
    throw ContextMismatch("cannot move a cyclotomic scalar into another ring");
  return from_terms(terms_, std::move(ctx));
}

std::string GroundScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.str();
      continue;
    }
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.str() << "*";
    if (e % 2 == 0) {
      long k = e / 2;
      os << (k == 1 ? "q" : "q^" + std::to_string(k));
    } else {
      os << (e == 1 ? "v" : "v^" + std::to_string(e));
    }
  }
  return os.str();
}

GroundScalar divide_exact(const GroundScalar& num, const GroundScalar& den) {
  check_context(num, den);
  if (num.context())
    throw ContextError("exact division is defined over the symbolic ring");
  return GroundScalar::from_terms(divide_terms_exact(num.terms(), den.terms()), nullptr);
}

GroundScalar cyclotomic_polynomial(long m) {
  if (m < 1) throw Error("cyclotomic index must be >= 1");
  return GroundScalar::from_terms(cyclotomic_terms(m), nullptr);
}

GroundScalar quantum_integer(long n, ContextPtr ctx) {
  if (n == 0) return GroundScalar::zero(std::move(ctx));
  const long a = n < 0 ? -n : n;
  PolyTerms t;
  for (long j = 0; j < a; ++j) t[2 * (a - 1 - 2 * j)] = (n < 0) ? -1 : 1;
  return GroundScalar::from_terms(std::move(t), std::move(ctx));
}

GroundScalar quantum_binomial(long n, long k, ContextPtr ctx) {
  if (k < 0) throw Error("quantum binomial needs k >= 0");
  GroundScalar num = GroundScalar::one();
  GroundScalar den = GroundScalar::one();
  for (long j = 1; j <= k; ++j) {
    num = num * quantum_integer(n - j + 1);
    den = den * quantum_integer(j);
  }
  return divide_exact(num, den).in_context(std::move(ctx));
}

GroundScalar chebyshev_coefficient(long n, long r, long j, ContextPtr ctx) {
  if (n < 1 || r < 1 || r > n - 1 || j < 0 || j > n - r)
    throw Error("chebyshev coefficient indices out of range");
  GroundScalar num = quantum_integer(n) * quantum_binomial(n - j - 1, r - 1) *
                     quantum_binomial(r + j - 1, r - 1);
  return divide_exact(num, quantum_integer(r)).in_context(std::move(ctx));
}

GroundScalar gauss_binomial(long N, long k, long base_exponent, ContextPtr ctx) {
  if (k < 0 || k > N) throw Error("gauss binomial needs 0 <= k <= N");
  GroundScalar num = GroundScalar::one();
  GroundScalar den = GroundScalar::one();
  const GroundScalar one = GroundScalar::one();
  for (long j = 1; j <= k; ++j) {
    num = num * (one - GroundScalar::v_power(base_exponent * (N - j + 1)));
    den = den * (one - GroundScalar::v_power(base_exponent * j));
  }
  return divide_exact(num, den).in_context(std::move(ctx));
}

RootData root_data(long m) {
  if (m < 1) throw Error("root order must be >= 1");
  RootData rd;
  rd.m = m;
  rd.N = m / std::gcd(m, 8L);
  rd.epsilon_v_exponent = (2 * rd.N * rd.N) % m;
  rd.sign_xi_2N = ((4 * rd.N) % m == 0) ? 1 : -1;
  return rd;
}

}  // namespace skeintorus
