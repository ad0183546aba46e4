#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace acm;
using testing::P;

TEST_CASE("degrevlex comparisons") {
  auto r = PolyRing::make(32003, {"x0", "x1", "x2"});
  Monomial x0sq = P(r, "x0^2").lead().mono;
  Monomial x0x1 = P(r, "x0*x1").lead().mono;
  Monomial x2 = P(r, "x2").lead().mono;
  CHECK(monomial_compare(x0sq, x0x1) > 0);
  CHECK(monomial_compare(x0x1, x0x1) == 0);
  CHECK(monomial_compare(x2, x0sq) < 0);
  // x1^2 > x0*x2 in degrevlex (x2 is the cheapest variable)
  CHECK(monomial_compare(P(r, "x1^2").lead().mono, P(r, "x0*x2").lead().mono) > 0);
  auto r2 = PolyRing::make(32003, {"a", "b"});
  CHECK_THROWS_AS(monomial_compare(x2, r2->variable(0)), StructuralError);
}

TEST_CASE("polynomial products") {
  auto r = PolyRing::make(32003, {"x", "y"});
  CHECK((P(r, "x+y") * P(r, "x-y")) == P(r, "x^2 - y^2"));
  CHECK((P(r, "x+y") * P(r, "x-y")).to_string() == "x^2 - y^2");
  auto f = P(r, "3*x^2*y - 5*y^3");
  CHECK(f * Polynomial::constant(r, 1) == f);
  CHECK_THROWS_AS(PolyRing::make(2, {"x", "y"}), DomainError);
  CHECK_THROWS_AS(PolyRing::make(9, {"x", "y"}), DomainError);
  CHECK_THROWS_AS(PolyRing::make(32003, {"x"}), DomainError);
  auto other = PolyRing::make(101, {"x", "y"});
  CHECK_THROWS_AS(P(r, "x") * P(other, "x"), StructuralError);
}

TEST_CASE("polynomial degree") {
  auto r = PolyRing::make(32003, {"x0", "x1"});
  CHECK(P(r, "x0*x1").degree() == 2);
  CHECK_FALSE(P(r, "x0 + x1^2").degree().has_value());
  CHECK(P(r, "5").degree() == 0);
  CHECK_THROWS_AS(Polynomial(r).degree(), DomainError);
}

TEST_CASE("exponent overflow is an error") {
  auto r = PolyRing::make(32003, {"x", "y"});
  std::vector<int> e{std::numeric_limits<int>::max() - 1, 0};
  Monomial big = Monomial::from_exponents(e);
  CHECK_THROWS_AS(big * r->variable(0) * r->variable(0), DomainError);
}

TEST_CASE("coefficients live in F_p") {
  auto r = PolyRing::make(7, {"x", "y"});
  CHECK(P(r, "7*x").is_zero());
  CHECK(P(r, "8*x") == P(r, "x"));
  CHECK(P(r, "6*x").to_string() == "-x");
  CHECK(r->field().mul(r->field().inv(3), 3) == 1);
}

namespace {

bool strictly_sorted(const Polynomial& f) {
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    if (f.terms()[i].coeff == 0) return false;
    if (i > 0 && degrevlex(f.terms()[i - 1].mono, f.terms()[i].mono) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ring axioms on random forms") {
  auto r = testing::ring4();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    auto f = testing::random_form(r, rng, 1 + trial % 3, 4);
    auto g = testing::random_form(r, rng, 1 + trial % 2, 3);
    auto h = testing::random_form(r, rng, 1 + trial % 2, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(strictly_sorted(f * (g + h)));
    CHECK(strictly_sorted(f - f));
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("degrevlex is a total order within a degree") {
  auto r = testing::ring4();
  std::vector<Monomial> ms;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) {
        std::vector<int> e{a, b, c, 3 - a - b - c};
        ms.push_back(Monomial::from_exponents(e));
      }
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      auto ab = degrevlex(a, b);
      CHECK((ab > 0) == (degrevlex(b, a) < 0));
      CHECK((ab == 0) == (a == b));
      for (const auto& c : ms) {
        if (ab > 0 && degrevlex(b, c) > 0) CHECK(degrevlex(a, c) > 0);
      }
    }
  }
  auto sorted = ms;
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return degrevlex(a, b) > 0; });
  auto again = ms;
  std::reverse(again.begin(), again.end());
  std::sort(again.begin(), again.end(), [](auto& a, auto& b) { return degrevlex(a, b) > 0; });
  CHECK(sorted == again);
}

TEST_CASE("parser") {
  auto r = testing::ring4();
  CHECK(P(r, "(x+y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(P(r, "-x^2") == -P(r, "x^2"));
  CHECK(P(r, "x*y - x*z").to_string() == "x*y - x*z");
  CHECK_THROWS_AS(P(r, "x + q"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "(x + y"), ParseError);
  try {
    P(r, "x + q");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_form(r, "x + y^2"), DomainError);
}
