#pragma once

#include <random>
#include <string>
#include <vector>

#include "acm/gb.hpp"
#include "acm/parse.hpp"

namespace testing {

inline acm::RingPtr ring4() { return acm::PolyRing::make(32003, {"x", "y", "z", "w"}); }

inline acm::Polynomial P(const acm::RingPtr& r, const std::string& s) {
  return acm::parse_polynomial(r, s);
}

inline std::vector<acm::Polynomial> polys(const acm::RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<acm::Polynomial> out;
  for (const char* s : xs) out.push_back(P(r, s));
  return out;
}

/// Random homogeneous polynomial of degree d with at most `terms` terms.
inline acm::Polynomial random_form(const acm::RingPtr& r, std::mt19937_64& rng, int d, int terms) {
  std::vector<acm::Term> ts;
  std::uniform_int_distribution<acm::Coeff> coeff(1, r->characteristic() - 1);
  std::uniform_int_distribution<int> var(0, r->nvars() - 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(r->nvars()), 0);
    for (int i = 0; i < d; ++i) ++e[static_cast<std::size_t>(var(rng))];
    ts.push_back({coeff(rng), acm::Monomial::from_exponents(e)});
  }
  return acm::Polynomial::from_terms(r, std::move(ts));
}

/// Random ideal generators: `count` forms with degrees in [lo, hi].
inline std::vector<acm::Polynomial> random_ideal(const acm::RingPtr& r, std::mt19937_64& rng,
                                                 int count, int lo, int hi, int terms) {
  std::uniform_int_distribution<int> deg(lo, hi);
  std::uniform_int_distribution<int> nterms(1, terms);
  std::vector<acm::Polynomial> out;
  while (static_cast<int>(out.size()) < count) {
    auto f = random_form(r, rng, deg(rng), nterms(rng));
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

inline acm::ModulePtr rank1(const acm::RingPtr& r) {
  return acm::OrderedModule::term_over_position(r, acm::FreeModule{{0}});
}

inline std::vector<acm::FreeElem> as_elems(const acm::ModulePtr& m,
                                           const std::vector<acm::Polynomial>& fs) {
  std::vector<acm::FreeElem> out;
  for (const auto& f : fs) out.push_back(acm::FreeElem::from_components(m, {f}));
  return out;
}

}  // namespace testing
