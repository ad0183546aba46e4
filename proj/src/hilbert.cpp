#include "acm/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace acm {

// ---------------------------------------------------------------------------
// Rational polynomials

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().numerator() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(Rational c) { return RationalPolynomial(std::vector<Rational>{c}); }

RationalPolynomial RationalPolynomial::binomial(long long c, int m) {
  RationalPolynomial out = constant(1);
  long long fact = 1;
  for (int i = 0; i < m; ++i) {
    out = out * RationalPolynomial(std::vector<Rational>{Rational(c - i), Rational(1)});
    fact *= (i + 1);
  }
  return out.scaled(Rational(1, fact));
}

Rational RationalPolynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)]
                                                       : Rational(0);
}

Rational RationalPolynomial::operator()(Rational t) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

RationalPolynomial RationalPolynomial::shifted(long long s) const {
  RationalPolynomial out;
  RationalPolynomial lin(std::vector<Rational>{Rational(s), Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + constant(*it);
  return out;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  return *this + o.scaled(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::scaled(Rational c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c.numerator() == 0) continue;
    bool negative = c.numerator() < 0;
    Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag.numerator() == 1 && mag.denominator() == 1;
    if (!unit || i == 0) {
      os << mag.numerator();
      if (mag.denominator() != 1) os << '/' << mag.denominator();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

void accumulate(std::map<int, long long>& into, int exp, long long c) {
  if (c == 0) return;
  long long& slot = into[exp];
  slot += c;
  if (slot == 0) into.erase(exp);
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (nvars != o.nvars) throw StructuralError("Hilbert series over different rings");
  HilbertSeries out = *this;
  for (const auto& [e, c] : o.numerator) accumulate(out.numerator, e, c);
  return out;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  HilbertSeries neg = o;
  for (auto& [e, c] : neg.numerator) c = -c;
  return *this + neg;
}

HilbertSeries HilbertSeries::shifted(int k) const {
  HilbertSeries out;
  out.nvars = nvars;
  for (const auto& [e, c] : numerator) out.numerator[e - k] = c;
  return out;
}

long long HilbertSeries::value(int d) const {
  long long v = 0;
  for (const auto& [e, c] : numerator) {
    if (d >= e) v += c * binom(d - e + nvars - 1, nvars - 1);
  }
  return v;
}

std::string HilbertSeries::numerator_string() const {
  if (numerator.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : numerator) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      if (mag != 1) os << '*';
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

HilbertSeries hilbert_series(const Resolution& res) {
  HilbertSeries hs;
  hs.nvars = res.ring->nvars();
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int a : res.modules[i].twists) accumulate(hs.numerator, a, i % 2 == 0 ? 1 : -1);
  }
  return hs;
}

std::map<int, long long> monomial_quotient_numerator(std::vector<Monomial> gens) {
  // minimal generators only
  std::vector<Monomial> mins;
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) < 0; });
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& n : mins) redundant = redundant || n.divides(m);
    if (!redundant) mins.push_back(m);
  }
  std::map<int, long long> out;
  if (mins.empty()) {
    out[0] = 1;
    return out;
  }
  if (mins.front().is_one()) return out;
  bool coprime = true;
  for (std::size_t i = 0; i < mins.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < mins.size() && coprime; ++j) coprime = mins[i].coprime(mins[j]);
  }
  if (coprime) {
    out[0] = 1;
    for (const auto& m : mins) {
      std::map<int, long long> next;
      for (const auto& [e, c] : out) {
        accumulate(next, e, c);
        accumulate(next, e + m.degree(), -c);
      }
      out = std::move(next);
    }
    return out;
  }
  Monomial pivot = mins.back();
  mins.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(mins.size());
  for (const auto& m : mins) colon.push_back(m / m.gcd(pivot));
  out = monomial_quotient_numerator(mins);
  for (const auto& [e, c] : monomial_quotient_numerator(std::move(colon))) {
    accumulate(out, e + pivot.degree(), -c);
  }
  return out;
}

HilbertSeries hilbert_series(const GroebnerBasis& g) {
  const OrderedModule& mod = *g.ambient();
  HilbertSeries hs;
  hs.nvars = mod.ring()->nvars();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(mod.rank()));
  for (const auto& e : g.elements()) leads[static_cast<std::size_t>(e.lead().comp)].push_back(e.lead().mono);
  for (int i = 0; i < mod.rank(); ++i) {
    for (const auto& [e, c] : monomial_quotient_numerator(leads[static_cast<std::size_t>(i)])) {
      accumulate(hs.numerator, e + mod.twist(i), c);
    }
  }
  return hs;
}

NumericalInvariants invariants(const HilbertSeries& hs) {
  NumericalInvariants inv;
  const int n = hs.nvars;
  if (hs.numerator.empty()) {
    inv.zero_module = true;
    inv.krull_dim = -1;
    inv.proj_dim = -1;
    inv.codim = n;
    return inv;
  }
  std::map<int, long long> q = hs.numerator;
  auto at_one = [](const std::map<int, long long>& m) {
    long long s = 0;
    for (const auto& [e, c] : m) s += c;
    return s;
  };
  int d = n;
  while (d > 0 && at_one(q) == 0) {
    // divide by (1 - t): partial sums
    std::map<int, long long> next;
    long long run = 0;
    int lo = q.begin()->first;
    int hi = q.rbegin()->first;
    for (int e = lo; e < hi; ++e) {
      auto it = q.find(e);
      if (it != q.end()) run += it->second;
      accumulate(next, e, run);
    }
    q = std::move(next);
    --d;
  }
  inv.krull_dim = d;
  inv.proj_dim = d - 1;
  inv.codim = n - d;
  inv.degree = at_one(q);
  if (d > 0) {
    for (const auto& [e, c] : q) {
      inv.hilbert_polynomial =
          inv.hilbert_polynomial + RationalPolynomial::binomial(d - 1 - e, d - 1).scaled(Rational(c));
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Sheaf invariants

RationalPolynomial euler_characteristic(const Resolution& res, int shift) {
  const int r = res.ring->r();
  RationalPolynomial out;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    Rational sign = i % 2 == 0 ? 1 : -1;
    for (int a : res.modules[i].twists) {
      out = out + RationalPolynomial::binomial(shift - a + r, r).scaled(sign);
    }
  }
  return out;
}

long long sheaf_degree(const Resolution& res) {
  long long deg = 0;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    long long sign = i % 2 == 0 ? 1 : -1;
    for (int a : res.modules[i].twists) deg += sign * -a;
  }
  return deg;
}

int module_rank(const Resolution& res) {
  int rank = 0;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    rank += (i % 2 == 0 ? 1 : -1) * res.modules[i].rank();
  }
  return rank;
}

int projective_dimension(const Resolution& res) {
  if (res.minimal) return res.length();
  return minimalize(res).length();
}

H3Report check_H3(const Resolution& resP, const Resolution& resN, int r) {
  H3Report rep;
  rep.k = static_cast<int>(sheaf_degree(resN) - sheaf_degree(resP));
  rep.s = projective_dimension(resP) + 2;
  rep.p = euler_characteristic(resP, -rep.k) - euler_characteristic(resN, -rep.k) +
          RationalPolynomial::binomial(r, r);
  int rank_p = module_rank(resP);
  int rank_n = module_rank(resN);
  rep.rank_ok = rank_n == rank_p + 1;
  rep.degree_ok = rep.p.degree() == r - rep.s;
  rep.pass = rep.rank_ok && rep.degree_ok;
  if (!rep.rank_ok) {
    rep.diagnosis = "rank N = " + std::to_string(rank_n) + " but rank P + 1 = " +
                    std::to_string(rank_p + 1);
  } else if (!rep.degree_ok) {
    rep.diagnosis = "p(t) = " + rep.p.to_string() + " has degree " + std::to_string(rep.p.degree()) +
                    ", expected " + std::to_string(r - rep.s);
  }
  return rep;
}

bool is_regular_sequence(const RingPtr& ring, const std::vector<Polynomial>& forms) {
  ModulePtr m = OrderedModule::term_over_position(ring, FreeModule{{0}});
  std::vector<FreeElem> gens;
  for (const auto& f : forms) {
    if (f.is_zero()) return false;
    gens.push_back(FreeElem::from_components(m, {f}));
  }
  return invariants(hilbert_series(buchberger(m, gens))).codim == static_cast<int>(forms.size());
}

}  // namespace acm
