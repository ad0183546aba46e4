#pragma once

// Homogeneous polynomial arithmetic over a prime field F_p in the graded ring
// R = K[x_0, ..., x_r].  Terms are kept strictly descending in degrevlex.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acm/error.hpp"

namespace acm {

using Coeff = std::uint32_t;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff from_int(long long v) const;
  /// Representative in (-p/2, p/2].
  long long to_symmetric(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

inline constexpr int kMaxVars = 16;

/// Exponent vector with cached total degree.  Unused slots stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int nvars, int i);

  int nvars() const { return n_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const {
    return deg_ == other.deg_ && exp_ == other.exp_;
  }

 private:
  std::array<std::int32_t, kMaxVars> exp_{};
  std::int32_t deg_ = 0;
  std::int32_t n_ = 0;
};

/// Degrevlex without the shape check.  Degree first, then the last variable
/// where the exponents differ: the smaller exponent wins.
inline std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

/// Checked degrevlex comparison; throws StructuralError on nvars mismatch.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b);

/// Pure lex with x_0 > x_1 > ... (used to order Schreyer frames).
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// All monomials of degree d in nvars variables, degrevlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

class PolyRing {
 public:
  /// p must be an odd prime below 2^31; at least two variables.
  PolyRing(std::uint32_t p, std::vector<std::string> names);

  static std::shared_ptr<const PolyRing> make(std::uint32_t p,
                                              std::vector<std::string> names);
  /// Variables x0, ..., x{n-1}.
  static std::shared_ptr<const PolyRing> standard(std::uint32_t p, int nvars);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  int nvars() const { return static_cast<int>(names_.size()); }
  /// Dimension r of the ambient projective space.
  int r() const { return nvars() - 1; }
  const std::vector<std::string>& names() const { return names_; }

  Monomial one() const { return Monomial(nvars()); }
  Monomial variable(int i) const { return Monomial::variable(nvars(), i); }
  std::string monomial_to_string(const Monomial& m) const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && names_ == other.names_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Throws StructuralError unless both handles denote the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Coeff coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial term(RingPtr ring, Coeff c, Monomial m);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Common total degree, or nullopt when not homogeneous.  Throws
  /// DomainError for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(Coeff c, const Monomial& m) const;
  /// Monic multiple (leading coefficient 1); zero stays zero.
  Polynomial monic() const;

  /// Structural equality of term lists (same ring required).
  bool operator==(const Polynomial& g) const;

  std::string to_string() const;

 private:
  friend Polynomial add_scaled(const Polynomial&, const Polynomial&, Coeff);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f + c * g in a single merge pass.
Polynomial add_scaled(const Polynomial& f, const Polynomial& g, Coeff c);

}  // namespace acm
