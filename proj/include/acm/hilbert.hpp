#pragma once

// Hilbert series and polynomials, numerical invariants, Euler characteristics
// of the associated sheaves on P^r, and the Euler-characteristic test for the
// twist k of a construction.

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "acm/gb.hpp"
#include "acm/resolve.hpp"

namespace acm {

using Rational = boost::rational<long long>;

/// Polynomial in one variable t with exact rational coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(Rational c);
  /// binom(t + c, m) as a polynomial in t.
  static RationalPolynomial binomial(long long c, int m);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(Rational t) const;
  /// q(t) = p(t + s).
  RationalPolynomial shifted(long long s) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial scaled(Rational c) const;
  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// numerator(t) / (1 - t)^nvars; the numerator may carry negative powers.
struct HilbertSeries {
  std::map<int, long long> numerator;
  int nvars = 0;

  bool operator==(const HilbertSeries&) const = default;
  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  /// Series of M(k): numerator multiplied by t^{-k}.
  HilbertSeries shifted(int k) const;
  /// dim_K M_d, read off the series.
  long long value(int d) const;
  std::string numerator_string() const;
};

struct NumericalInvariants {
  bool zero_module = false;
  /// Krull dimension of the module (-1 for the zero module).
  int krull_dim = -1;
  /// Dimension of the support in P^r; -1 when empty.
  int proj_dim = -1;
  /// r - proj_dim.
  int codim = 0;
  /// Multiplicity: the numerator at t = 1 after cancelling (1 - t).
  long long degree = 0;
  RationalPolynomial hilbert_polynomial;
};

/// Alternating sum of t^a over the twists of the resolution.
HilbertSeries hilbert_series(const Resolution& res);
/// Series of F / M from a Gröbner basis of M in F (via the initial module).
HilbertSeries hilbert_series(const GroebnerBasis& g);
/// Numerator of R / J for a monomial ideal J.
std::map<int, long long> monomial_quotient_numerator(std::vector<Monomial> gens);

NumericalInvariants invariants(const HilbertSeries& hs);

/// t -> chi(M~(t + shift)) on P^r for the module resolved by res.
RationalPolynomial euler_characteristic(const Resolution& res, int shift = 0);
/// Sum over i of (-1)^i times the sum of -a over the twists of F_i.
long long sheaf_degree(const Resolution& res);
/// Alternating sum of ranks.
int module_rank(const Resolution& res);
/// Length of the minimal resolution (cover at index 0).
int projective_dimension(const Resolution& res);

struct H3Report {
  int k = 0;
  int s = 0;
  RationalPolynomial p;
  bool rank_ok = false;
  bool degree_ok = false;
  bool pass = false;
  std::string diagnosis;
};

/// Twist k = deg N - deg P and the polynomial
/// p(t) = -chi(N(t - k)) + chi(P(t - k)) + binom(t + r, r); passes when
/// deg p = r - s (s = pd(P) + 2) and rank N = rank P + 1.
H3Report check_H3(const Resolution& resP, const Resolution& resN, int r);

/// Codimension of (forms) equals the number of forms.
bool is_regular_sequence(const RingPtr& ring, const std::vector<Polynomial>& forms);

}  // namespace acm
