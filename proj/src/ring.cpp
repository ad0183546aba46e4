#include "acm/ring.hpp"

#include <algorithm>
#include <sstream>

namespace acm {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("exponent overflow in monomial product");
  }
  return out;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2) throw DomainError("field characteristic must exceed 2, got " + std::to_string(p));
  if (p >= (1u << 31)) throw DomainError("field characteristic must be below 2^31");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1;
  Coeff base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw DomainError("division by zero in F_p");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);
}

long long PrimeField::to_symmetric(Coeff a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

Monomial::Monomial(int nvars) : n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw StructuralError("monomial supports at most " + std::to_string(kMaxVars) + " variables");
  }
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw DomainError("negative exponent");
    m.exp_[i] = exps[i];
    m.deg_ = checked_add(m.deg_, exps[i]);
  }
  return m;
}

Monomial Monomial::variable(int nvars, int i) {
  Monomial m(nvars);
  if (i < 0 || i >= nvars) throw StructuralError("variable index out of range");
  m.exp_[static_cast<std::size_t>(i)] = 1;
  m.deg_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (int i = 0; i < n_; ++i) out.exp_[i] = checked_add(exp_[i], other.exp_[i]);
  out.deg_ = checked_add(deg_, other.deg_);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (int i = 0; i < n_; ++i) out.exp_[i] = exp_[i] - other.exp_[i];
  out.deg_ = deg_ - other.deg_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (int i = 0; i < n_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(n_);
  for (int i = 0; i < n_; ++i) {
    out.exp_[i] = std::max(exp_[i], other.exp_[i]);
    out.deg_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out(n_);
  for (int i = 0; i < n_; ++i) {
    out.exp_[i] = std::min(exp_[i], other.exp_[i]);
    out.deg_ += out.exp_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < n_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw StructuralError("monomials live in rings with different numbers of variables");
  }
  return degrevlex(a, b);
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[static_cast<std::size_t>(var)] = x;
      self(self, var + 1, left - x);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; });
  return out;
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names)
    : field_(p), names_(std::move(names)) {
  if (names_.size() < 2) throw DomainError("the ring needs at least two variables");
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw DomainError("duplicate variable name " + names_[i]);
    }
  }
}

std::shared_ptr<const PolyRing> PolyRing::make(std::uint32_t p, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(p, std::move(names));
}

std::shared_ptr<const PolyRing> PolyRing::standard(std::uint32_t p, int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return make(p, std::move(names));
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[static_cast<std::size_t>(i)];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw StructuralError("ring mismatch");
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Polynomial f(ring);
  Coeff v = ring->field().from_int(c);
  if (v != 0) f.terms_.push_back({v, ring->one()});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Polynomial f(ring);
  f.terms_.push_back({1, ring->variable(i)});
  return f;
}

Polynomial Polynomial::term(RingPtr ring, Coeff c, Monomial m) {
  Polynomial f(std::move(ring));
  if (m.nvars() != f.ring_->nvars()) throw StructuralError("monomial does not belong to the ring");
  if (c != 0) f.terms_.push_back({c, m});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  const PrimeField& k = f.ring_->field();
  for (const Term& t : terms) {
    if (t.mono.nvars() != f.ring_->nvars()) {
      throw StructuralError("monomial does not belong to the ring");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex(a.mono, b.mono) > 0; });
  for (const Term& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = k.add(f.terms_.back().coeff, t.coeff);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (t.coeff % k.characteristic() != 0) {
      f.terms_.push_back({t.coeff % k.characteristic(), t.mono});
    }
  }
  return f;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no degree");
  int d = terms_.front().mono.degree();
  for (const Term& t : terms_) {
    if (t.mono.degree() != d) return std::nullopt;
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || degree().has_value();
}

Polynomial add_scaled(const Polynomial& f, const Polynomial& g, Coeff c) {
  require_same_ring(f.ring_, g.ring_);
  const PrimeField& k = f.ring_->field();
  Polynomial out(f.ring_);
  if (c == 0) {
    out.terms_ = f.terms_;
    return out;
  }
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.terms_.push_back(*a++);
      continue;
    }
    if (a == f.terms_.end()) {
      out.terms_.push_back({k.mul(c, b->coeff), b->mono});
      ++b;
      continue;
    }
    auto cmp = degrevlex(a->mono, b->mono);
    if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else if (cmp < 0) {
      out.terms_.push_back({k.mul(c, b->coeff), b->mono});
      ++b;
    } else {
      Coeff s = k.add(a->coeff, k.mul(c, b->coeff));
      if (s != 0) out.terms_.push_back({s, a->mono});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& g) const { return add_scaled(*this, g, 1); }

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return add_scaled(*this, g, ring_->field().neg(1));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const PrimeField& k = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : g.terms_) prod.push_back({k.mul(a.coeff, b.coeff), a.mono * b.mono});
  }
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  const PrimeField& k = ring_->field();
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({k.mul(c, t.coeff), t.mono});
  return out;
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  const PrimeField& k = ring_->field();
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order, so no re-sort.
  for (const Term& t : terms_) out.terms_.push_back({k.mul(c, t.coeff), t.mono * m});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coeff));
}

bool Polynomial::operator==(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  return terms_ == g.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const PrimeField& k = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    long long c = k.to_symmetric(t.coeff);
    bool negative = c < 0;
    long long mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << ring_->monomial_to_string(t.mono);
    }
  }
  return os.str();
}

}  // namespace acm
