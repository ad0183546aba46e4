#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace acm;
using testing::P;

namespace {

GroebnerBasis ideal_gb(const RingPtr& r, const std::vector<Polynomial>& gens) {
  auto m = testing::rank1(r);
  return buchberger(m, testing::as_elems(m, gens));
}

bool spair_closed(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].lead().comp != e[j].lead().comp) continue;
      if (!reduce(s_element(e[i], e[j]), g).remainder.is_zero()) return false;
    }
  }
  return true;
}

bool auto_reduced(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].lead().coeff != 1) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : e[j].terms()) {
        if (t.comp == e[i].lead().comp && e[i].lead().mono.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

// Sum of sigma_u * g_u in the ambient module.
FreeElem apply_syzygy(const FreeElem& sigma, const std::vector<FreeElem>& gens) {
  FreeElem out(gens.front().ambient());
  for (const auto& t : sigma.terms()) {
    out = out.add_scaled(gens[static_cast<std::size_t>(t.comp)], t.coeff, t.mono);
  }
  return out;
}

}  // namespace

TEST_CASE("reduce examples") {
  auto r = testing::ring4();
  auto g = ideal_gb(r, {P(r, "x")});
  auto m = g.ambient();
  auto red = reduce(FreeElem::from_components(m, {P(r, "x*y")}), g, true);
  CHECK(red.remainder.is_zero());
  CHECK(red.quotients.at(0) == P(r, "y"));
  red = reduce(FreeElem::from_components(m, {P(r, "y^2")}), g, true);
  CHECK(red.remainder == FreeElem::from_components(m, {P(r, "y^2")}));
  CHECK(red.quotients.at(0).is_zero());
  auto g2 = ideal_gb(r, testing::polys(r, {"x*y", "z^2"}));
  red = reduce(g2.elements()[1], g2, true);
  CHECK(red.remainder.is_zero());
  CHECK(red.quotients[1] == Polynomial::constant(r, 1));
  CHECK(red.quotients[0].is_zero());

  auto other = testing::rank1(r);
  CHECK_THROWS_AS(reduce(FreeElem::from_components(other, {P(r, "x")}), g), StructuralError);
}

TEST_CASE("monomial generators are their own basis") {
  auto r = testing::ring4();
  auto gens = testing::polys(r, {"x*y", "x*z", "x*w", "y*z", "y*w", "z*w"});
  auto g = ideal_gb(r, gens);
  REQUIRE(g.size() == 6);
  for (const auto& f : gens) {
    bool found = false;
    for (const auto& e : g.elements()) found = found || e.components()[0] == f;
    CHECK(found);
  }
  CHECK(ideal_gb(r, {P(r, "x")}).size() == 1);
}

TEST_CASE("S-pair completion") {
  auto r = PolyRing::make(32003, {"x", "y", "z"});
  auto g = ideal_gb(r, testing::polys(r, {"x^2 - y*z", "y^2 - x*z"}));
  CHECK(spair_closed(g));
  CHECK(auto_reduced(g));
  auto m = g.ambient();
  CHECK(submodule_contains(FreeElem::from_components(m, {P(r, "x^2 - y*z")}), g));
  CHECK(submodule_contains(FreeElem::from_components(m, {P(r, "y^2 - x*z")}), g));
  // leads x*y and x^2 overlap, so the basis must grow
  auto h = ideal_gb(r, testing::polys(r, {"x*y - z^2", "x^2 - y*z"}));
  CHECK(h.size() > 2);
  CHECK(spair_closed(h));
  CHECK(auto_reduced(h));
}

TEST_CASE("membership") {
  auto r = testing::ring4();
  auto g = ideal_gb(r, {P(r, "x")});
  CHECK(submodule_contains(FreeElem::from_components(g.ambient(), {P(r, "x*y")}), g));
  CHECK_FALSE(submodule_contains(FreeElem::from_components(g.ambient(), {P(r, "y")}), g));
}

TEST_CASE("Schreyer syzygies") {
  auto r = testing::ring4();
  SUBCASE("Koszul pair") {
    auto g = ideal_gb(r, testing::polys(r, {"x", "y"}));
    auto s = syzygy_basis(g);
    REQUIRE(s.syzygies.size() == 1);
    CHECK(s.syzygies[0].degree() == 2);
    CHECK(apply_syzygy(s.syzygies[0], s.generators).is_zero());
    auto comps = s.syzygies[0].components();
    CHECK(comps[0].degree() == 1);
    CHECK(comps[1].degree() == 1);
  }
  SUBCASE("principal") {
    auto g = ideal_gb(r, {P(r, "x")});
    CHECK(syzygy_basis(g).syzygies.empty());
  }
  SUBCASE("tetrahedron") {
    auto g = ideal_gb(r, testing::polys(r, {"x*y", "x*z", "x*w", "y*z", "y*w", "z*w"}));
    auto s = syzygy_basis(g);
    CHECK(s.syzygies.size() == 8);
    for (const auto& sig : s.syzygies) {
      CHECK(sig.degree() == 3);
      CHECK(apply_syzygy(sig, s.generators).is_zero());
    }
  }
}

TEST_CASE("image solver") {
  auto r = testing::ring4();
  GradedMap a = GradedMap::from_columns(r, FreeModule{{1, 1}}, FreeModule{{0}},
                                        {{P(r, "x")}, {P(r, "y")}});
  ImageSolver solver(a);
  auto x = solver.solve({P(r, "x*z + y*w")});
  REQUIRE(x.has_value());
  CHECK((P(r, "x") * (*x)[0] + P(r, "y") * (*x)[1]) == P(r, "x*z + y*w"));
  CHECK_FALSE(solver.contains({P(r, "z^2")}));
  auto ker = solver.kernel();
  REQUIRE(ker.size() == 1);
  CHECK((P(r, "x") * ker[0][0] + P(r, "y") * ker[0][1]).is_zero());
}

TEST_CASE("property: Buchberger output is S-pair closed and auto-reduced") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    auto r = trial % 2 ? testing::ring4() : PolyRing::make(101, {"a", "b", "c"});
    auto gens = testing::random_ideal(r, rng, 2 + trial % 3, 1, 3, 3);
    auto g = ideal_gb(r, gens);
    CHECK(spair_closed(g));
    CHECK(auto_reduced(g));
    for (const auto& f : gens) {
      CHECK(submodule_contains(FreeElem::from_components(g.ambient(), {f}), g));
    }
  }
}

TEST_CASE("property: reduce is idempotent and determinism") {
  std::mt19937_64 rng(99);
  auto r = testing::ring4();
  for (int trial = 0; trial < 120; ++trial) {
    auto gens = testing::random_ideal(r, rng, 3, 1, 2, 3);
    auto g = ideal_gb(r, gens);
    auto g2 = ideal_gb(r, gens);
    REQUIRE(g.size() == g2.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.elements()[i] == g2.elements()[i]);
    auto f = FreeElem::from_components(g.ambient(), {testing::random_form(r, rng, 3, 6)});
    auto once = reduce(f, g).remainder;
    CHECK(reduce(once, g).remainder == once);
    auto tracked = reduce(f, g, true);
    FreeElem recon = tracked.remainder;
    for (std::size_t i = 0; i < g.size(); ++i) {
      recon = recon + g.elements()[i].times(tracked.quotients[i]);
    }
    CHECK(recon == f);
  }
}

TEST_CASE("property: Schreyer syzygies vanish on the generators") {
  std::mt19937_64 rng(5);
  auto r = testing::ring4();
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = testing::random_ideal(r, rng, 3, 1, 2, 2);
    auto s = syzygy_basis(ideal_gb(r, gens));
    for (const auto& sig : s.syzygies) CHECK(apply_syzygy(sig, s.generators).is_zero());
  }
}
