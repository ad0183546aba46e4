#include "acm/modops.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "acm/linalg.hpp"

namespace acm {

// ---------------------------------------------------------------------------
// Seeds

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Seed Seed::derive(std::uint64_t step) const {
  std::vector<std::uint64_t> p = path_;
  p.push_back(step);
  return Seed(value_, std::move(p));
}

std::mt19937_64 Seed::engine() const {
  std::uint64_t h = splitmix64(value_);
  for (std::uint64_t step : path_) h = splitmix64(h ^ splitmix64(step + 0x632be59bd9b4e019ULL));
  return std::mt19937_64(h);
}

Coeff uniform_coeff(std::mt19937_64& rng, const PrimeField& k) {
  const std::uint64_t p = k.characteristic();
  const std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() / p * p;
  for (;;) {
    std::uint64_t x = rng();
    if (x < bound) return static_cast<Coeff>(x % p);
  }
}

// ---------------------------------------------------------------------------
// Ideals

namespace {

ModulePtr rank_one(const RingPtr& ring) {
  return OrderedModule::term_over_position(ring, FreeModule{{0}});
}

std::vector<FreeElem> as_elements(const ModulePtr& m, const std::vector<Polynomial>& gens) {
  std::vector<FreeElem> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(FreeElem::from_components(m, {g}));
  return out;
}

GradedMap row_matrix(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  FreeModule src;
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : gens) {
    src.twists.push_back(*g.degree());
    cols.push_back({g});
  }
  return GradedMap::from_columns(ring, src, FreeModule{{0}}, cols);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    if (!g.degree()) throw DomainError("generator " + g.to_string() + " is not homogeneous");
    gens_.push_back(std::move(g));
  }
  ModulePtr m = rank_one(ring_);
  gb_ = buchberger(m, as_elements(m, gens_));
}

bool Ideal::is_unit() const {
  for (const auto& e : gb_.elements()) {
    if (e.lead().mono.is_one()) return true;
  }
  return false;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gb_.empty()) return false;
  return submodule_contains(FreeElem::from_components(gb_.ambient(), {f}), gb_);
}

bool Ideal::contains(const Ideal& j) const {
  for (const auto& g : j.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

Resolution Ideal::quotient_resolution() const { return resolve_quotient(ring_, gens_); }

Resolution Ideal::minimal_resolution() const { return minimalize(quotient_resolution()); }

std::vector<Polynomial> Ideal::minimal_generators() const {
  if (is_unit()) return {Polynomial::constant(ring_, 1)};
  Resolution m = minimal_resolution();
  if (m.maps.empty()) return {};
  return m.maps[0].row(0);
}

HilbertSeries Ideal::hilbert_series() const {
  if (gb_.ambient()) return acm::hilbert_series(gb_);
  HilbertSeries hs;
  hs.nvars = ring_->nvars();
  hs.numerator[0] = 1;
  return hs;
}

NumericalInvariants Ideal::invariants() const { return acm::invariants(hilbert_series()); }

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n < 0) throw DomainError("negative ideal power");
  Ideal out(a.ring(), {Polynomial::constant(a.ring(), 1)});
  for (int i = 0; i < n; ++i) out = Ideal(a.ring(), ideal_product(out, a).minimal_generators());
  return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  std::vector<Polynomial> gens = a.generators();
  for (const auto& h : b.generators()) gens.push_back(-h);
  std::vector<Polynomial> out;
  for (const auto& k : kernel_generators(row_matrix(ring, gens))) {
    Polynomial f(ring);
    for (std::size_t i = 0; i < a.generators().size(); ++i) f += k[i] * a.generators()[i];
    out.push_back(std::move(f));
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& i, const Polynomial& f) {
  const RingPtr& ring = i.ring();
  if (f.is_zero() || i.is_unit()) return Ideal(ring, {Polynomial::constant(ring, 1)});
  if (i.is_zero()) return Ideal(ring, {});
  std::vector<Polynomial> gens{f};
  gens.insert(gens.end(), i.generators().begin(), i.generators().end());
  std::vector<Polynomial> out;
  for (const auto& k : kernel_generators(row_matrix(ring, gens))) out.push_back(k[0]);
  return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  const RingPtr& ring = i.ring();
  if (j.is_zero()) return Ideal(ring, {Polynomial::constant(ring, 1)});
  std::optional<Ideal> out;
  for (const auto& h : j.generators()) {
    Ideal q = ideal_quotient(i, h);
    out = out ? ideal_intersect(*out, q) : q;
  }
  return *out;
}

bool ideal_contains(const Ideal& i, const Ideal& j) { return i.contains(j); }

Ideal saturate(const Ideal& i) {
  const RingPtr& ring = i.ring();
  if (i.is_zero() || i.is_unit()) return i;
  std::optional<Ideal> out;
  for (int v = 0; v < ring->nvars(); ++v) {
    Polynomial x = Polynomial::variable(ring, v);
    Ideal cur = i;
    for (;;) {
      Ideal next = ideal_quotient(cur, x);
      if (cur.contains(next)) break;
      cur = Ideal(ring, next.minimal_generators());
    }
    out = out ? ideal_intersect(*out, cur) : cur;
  }
  return Ideal(ring, out->minimal_generators());
}

bool is_saturated(const Ideal& i) {
  const RingPtr& ring = i.ring();
  std::vector<Polynomial> vars;
  for (int v = 0; v < ring->nvars(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return i.contains(ideal_quotient(i, Ideal(ring, vars)));
}

// ---------------------------------------------------------------------------
// Presentations

int column_degree(const std::vector<Polynomial>& col, const FreeModule& f) {
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (!col[j].is_zero()) return *col[j].degree() + f.twists[j];
  }
  throw DomainError("the zero vector has no degree");
}

namespace {

bool is_zero_column(const std::vector<Polynomial>& col) {
  return std::all_of(col.begin(), col.end(), [](const Polynomial& p) { return p.is_zero(); });
}

GradedMap matrix_of_columns(const RingPtr& ring, const FreeModule& target,
                            const std::vector<std::vector<Polynomial>>& cols) {
  FreeModule src;
  std::vector<std::vector<Polynomial>> kept;
  for (const auto& c : cols) {
    if (is_zero_column(c)) continue;
    src.twists.push_back(column_degree(c, target));
    kept.push_back(c);
  }
  return GradedMap::from_columns(ring, src, target, kept);
}

std::vector<int> range_without(int n, int skip) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

}  // namespace

bool is_well_defined(const ModuleMap& phi) {
  GradedMap image = phi.matrix.compose(phi.source.relations);
  if (image.is_zero()) return true;
  ImageMembership target(phi.target.relations);
  for (int c = 0; c < image.cols(); ++c) {
    if (!target.contains(image.column(c))) return false;
  }
  return true;
}

PrunedPresentation prune(const ModulePresentation& m) {
  const RingPtr& ring = m.ring;
  const PrimeField& k = ring->field();
  ModulePresentation cur = m;
  GradedMap transform = GradedMap::identity(ring, m.cover);
  while (auto unit = cur.relations.first_unit()) {
    auto [r, c] = *unit;
    const GradedMap& d = cur.relations;
    Coeff uinv = k.inv(d(r, c).lead().coeff);
    GradedMap rel = d;
    for (int j = 0; j < d.cols(); ++j) {
      if (j == c || d(r, j).is_zero()) continue;
      Polynomial factor = d(r, j).scaled(k.neg(uinv));
      for (int s = 0; s < d.rows(); ++s) {
        if (s != r && !d(s, c).is_zero()) rel.set(s, j, d(s, j) + d(s, c) * factor);
      }
    }
    GradedMap t = transform;
    for (int j = 0; j < transform.cols(); ++j) {
      if (transform(r, j).is_zero()) continue;
      Polynomial factor = transform(r, j).scaled(k.neg(uinv));
      for (int s = 0; s < d.rows(); ++s) {
        if (s != r && !d(s, c).is_zero()) t.set(s, j, transform(s, j) + d(s, c) * factor);
      }
    }
    std::vector<int> rows = range_without(d.rows(), r);
    cur.relations = rel.submatrix(rows, range_without(d.cols(), c));
    transform = t.submatrix(rows, range_without(t.cols(), -1));
    cur.cover.twists.erase(cur.cover.twists.begin() + r);
    if (cur.embedding) {
      const GradedMap& img = cur.embedding->images;
      cur.embedding->images = img.submatrix(range_without(img.rows(), -1), rows);
    }
  }
  std::vector<int> nonzero;
  for (int j = 0; j < cur.relations.cols(); ++j) {
    if (!is_zero_column(cur.relations.column(j))) nonzero.push_back(j);
  }
  cur.relations = cur.relations.submatrix(range_without(cur.relations.rows(), -1), nonzero);
  return {std::move(cur), std::move(transform)};
}

bool is_zero_module(const ModulePresentation& m) { return prune(m).module.cover.empty(); }

ModulePresentation kernel_of_map(const ModuleMap& phi) {
  if (!is_well_defined(phi)) throw ConstructionError("map is not well defined on relations");
  const RingPtr& ring = phi.source.ring;
  const FreeModule& f0 = phi.source.cover;
  const int s0 = f0.rank();
  std::vector<std::vector<Polynomial>> ucols;
  for (const auto& k : kernel_generators(GradedMap::hconcat(phi.matrix, phi.target.relations))) {
    std::vector<Polynomial> u(k.begin(), k.begin() + s0);
    if (!is_zero_column(u)) ucols.push_back(std::move(u));
  }
  GradedMap u = matrix_of_columns(ring, f0, ucols);
  std::vector<std::vector<Polynomial>> rcols;
  for (const auto& k : kernel_generators(GradedMap::hconcat(u, phi.source.relations))) {
    rcols.emplace_back(k.begin(), k.begin() + u.cols());
  }
  ModulePresentation ker;
  ker.ring = ring;
  ker.cover = u.source();
  ker.relations = matrix_of_columns(ring, ker.cover, rcols);
  ker.embedding = Embedding{f0, u};
  return prune(ker).module;
}

ModulePresentation cokernel(const GradedMap& gamma, const ModulePresentation& n) {
  if (!(gamma.target() == n.cover)) throw StructuralError("map does not land in the module's cover");
  return ModulePresentation::cokernel_of(GradedMap::hconcat(n.relations, gamma));
}

HomModule hom_module(const ModulePresentation& m, int a) {
  const RingPtr& ring = m.ring;
  GradedMap d = m.relations.dual(-a);
  GradedMap g = matrix_of_columns(ring, d.source(), kernel_generators(d));
  ModulePresentation h;
  h.ring = ring;
  h.cover = g.source();
  h.relations = matrix_of_columns(ring, h.cover, kernel_generators(g));
  h.embedding = Embedding{d.source(), g};
  return HomModule{prune(h).module, a};
}

GradedMap evaluation_map(const ModulePresentation& m, const HomModule& h) {
  const GradedMap& images = h.module.embedding->images;
  FreeModule target;
  for (int t : h.module.cover.twists) target.twists.push_back(-(h.a + t));
  GradedMap e(m.ring, m.cover, target);
  for (int i = 0; i < images.cols(); ++i) {
    for (int j = 0; j < images.rows(); ++j) e.set(i, j, images(j, i));
  }
  return e;
}

HilbertSeries hilbert_series(const ModulePresentation& m) {
  ModulePtr amb = OrderedModule::term_over_position(m.ring, m.cover);
  std::vector<FreeElem> cols;
  for (int j = 0; j < m.relations.cols(); ++j) {
    cols.push_back(FreeElem::from_components(amb, m.relations.column(j)));
  }
  return hilbert_series(buchberger(amb, cols));
}

int rank_from_hilbert(const ModulePresentation& m) {
  NumericalInvariants inv = invariants(hilbert_series(m));
  const int r = m.ring->r();
  if (inv.zero_module || inv.proj_dim < r) return 0;
  Rational lead = inv.hilbert_polynomial.coeff(r);
  for (int i = 2; i <= r; ++i) lead *= i;
  if (lead.denominator() != 1) throw StructuralError("non-integral rank from the Hilbert polynomial");
  return static_cast<int>(lead.numerator());
}

bool is_torsion_free(const ModulePresentation& m) {
  HomModule h = hom_module(m, 0);
  GradedMap e = evaluation_map(m, h);
  ModuleMap phi{m, ModulePresentation::free(m.ring, e.target()), e};
  return is_zero_module(kernel_of_map(phi));
}

RankOneEmbedding embed_rank1(const ModulePresentation& m, int k) {
  int rank = rank_from_hilbert(m);
  if (rank != 1) throw ConstructionError("rank " + std::to_string(rank) + " is not 1");
  HomModule h = hom_module(m, k);
  int pick = -1;
  for (int i = 0; i < h.module.cover.rank(); ++i) {
    if (h.module.cover.twists[static_cast<std::size_t>(i)] == 0) {
      pick = i;
      break;
    }
  }
  if (pick < 0) throw ConstructionError("no degree-0 homomorphism to R(" + std::to_string(k) + ")");
  GradedMap all = evaluation_map(m, h);
  GradedMap phi = all.submatrix({pick}, range_without(all.cols(), -1));
  ModuleMap map{m, ModulePresentation::free(m.ring, phi.target()), phi};
  if (!is_zero_module(kernel_of_map(map))) throw ConstructionError("torsion cokernel");
  RankOneEmbedding out{Ideal(m.ring, phi.row(0)), phi, false};
  out.saturated = is_saturated(out.ideal);
  return out;
}

// ---------------------------------------------------------------------------
// Random homomorphisms

RandomMap random_graded_map(const ModulePresentation& p, const ModulePresentation& n,
                            const Seed& seed) {
  const RingPtr& ring = n.ring;
  const PrimeField& k = ring->field();
  struct Param {
    int j;  // generator of P
    int i;  // generator of N
    Monomial m;
  };
  std::vector<Param> params;
  for (int j = 0; j < p.cover.rank(); ++j) {
    for (int i = 0; i < n.cover.rank(); ++i) {
      int d = p.cover.twists[static_cast<std::size_t>(j)] - n.cover.twists[static_cast<std::size_t>(i)];
      for (const auto& m : monomials_of_degree(ring->nvars(), d)) params.push_back({j, i, m});
    }
  }
  const int np = static_cast<int>(params.size());

  FpMatrix basis;
  if (p.relations.cols() == 0) {
    for (int a = 0; a < np; ++a) {
      std::vector<Coeff> v(static_cast<std::size_t>(np), 0);
      v[static_cast<std::size_t>(a)] = 1;
      basis.push_back(std::move(v));
    }
  } else {
    ModulePtr amb = OrderedModule::term_over_position(ring, n.cover);
    std::vector<FreeElem> rel;
    for (int c = 0; c < n.relations.cols(); ++c) {
      rel.push_back(FreeElem::from_components(amb, n.relations.column(c)));
    }
    GroebnerBasis g = buchberger(amb, rel);
    // one equation per (relation of P, component, monomial) of the normal form
    std::vector<std::tuple<int, int, Monomial>> keys;
    FpMatrix eqs;
    auto row_of = [&](int l, int comp, const Monomial& m) {
      for (std::size_t r = 0; r < keys.size(); ++r) {
        const auto& [kl, kc, km] = keys[r];
        if (kl == l && kc == comp && km == m) return r;
      }
      keys.emplace_back(l, comp, m);
      eqs.emplace_back(static_cast<std::size_t>(np), 0);
      return keys.size() - 1;
    };
    for (int a = 0; a < np; ++a) {
      const Param& pr = params[static_cast<std::size_t>(a)];
      for (int l = 0; l < p.relations.cols(); ++l) {
        const Polynomial& rho = p.relations(pr.j, l);
        if (rho.is_zero()) continue;
        std::vector<Polynomial> comps(static_cast<std::size_t>(n.cover.rank()), Polynomial(ring));
        comps[static_cast<std::size_t>(pr.i)] = rho.times_term(1, pr.m);
        FreeElem nf = reduce(FreeElem::from_components(amb, comps), g).remainder;
        for (const auto& t : nf.terms()) {
          std::size_t r = row_of(l, t.comp, t.mono);
          eqs[r][static_cast<std::size_t>(a)] = k.add(eqs[r][static_cast<std::size_t>(a)], t.coeff);
        }
      }
    }
    basis = nullspace(std::move(eqs), np, k);
  }

  RandomMap out;
  out.matrix = GradedMap(ring, p.cover, n.cover);
  out.dimension = static_cast<int>(basis.size());
  out.zero = basis.empty();
  if (out.zero) return out;
  std::mt19937_64 rng = seed.engine();
  std::vector<Coeff> values(static_cast<std::size_t>(np), 0);
  for (const auto& b : basis) {
    Coeff c = uniform_coeff(rng, k);
    for (int a = 0; a < np; ++a) {
      values[static_cast<std::size_t>(a)] = k.add(values[static_cast<std::size_t>(a)], k.mul(c, b[static_cast<std::size_t>(a)]));
    }
  }
  std::vector<std::vector<Term>> entries(static_cast<std::size_t>(p.cover.rank() * n.cover.rank()));
  for (int a = 0; a < np; ++a) {
    const Param& pr = params[static_cast<std::size_t>(a)];
    Coeff v = values[static_cast<std::size_t>(a)];
    if (v != 0) entries[static_cast<std::size_t>(pr.j * n.cover.rank() + pr.i)].push_back({v, pr.m});
  }
  bool all_zero = true;
  for (int j = 0; j < p.cover.rank(); ++j) {
    for (int i = 0; i < n.cover.rank(); ++i) {
      auto& ts = entries[static_cast<std::size_t>(j * n.cover.rank() + i)];
      if (ts.empty()) continue;
      all_zero = false;
      out.matrix.set(i, j, Polynomial::from_terms(ring, std::move(ts)));
    }
  }
  out.zero = all_zero;
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

ModulePresentation pushout(const ModulePresentation& a, const ModulePresentation& b,
                           const GradedMap& phi, const GradedMap& psi) {
  if (!(phi.source() == psi.source())) throw StructuralError("push-out maps need a common source");
  if (!(phi.target() == a.cover) || !(psi.target() == b.cover)) {
    throw StructuralError("push-out maps do not land in the given modules");
  }
  GradedMap diff = GradedMap::vconcat(phi, psi.scaled(a.ring->field().neg(1)));
  GradedMap rel = GradedMap::hconcat(diff, GradedMap::direct_sum(a.relations, b.relations));
  return ModulePresentation::cokernel_of(rel);
}

ModulePresentation canonical_module(const Resolution& quotient_res, int c) {
  const Resolution& res = quotient_res.minimal ? quotient_res : minimalize(quotient_res);
  if (res.length() != c) {
    throw DomainError("not CM: projective dimension " + std::to_string(res.length()) +
                      " differs from codimension " + std::to_string(c));
  }
  if (c == 0) return ModulePresentation::free(res.ring, FreeModule{{res.ring->r() + 1}});
  return ModulePresentation::cokernel_of(res.maps[static_cast<std::size_t>(c - 1)].dual(res.ring->r() + 1));
}

ModulePresentation ideal_module(const Ideal& i, int twist) {
  const RingPtr& ring = i.ring();
  FreeModule amb{{-twist}};
  FreeModule cover;
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : i.generators()) {
    cover.twists.push_back(*g.degree() - twist);
    cols.push_back({g});
  }
  GradedMap images = GradedMap::from_columns(ring, cover, amb, cols);
  ModulePresentation m;
  m.ring = ring;
  m.cover = cover;
  m.relations = matrix_of_columns(ring, cover, kernel_generators(images));
  m.embedding = Embedding{amb, images};
  return m;
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  ModulePresentation out;
  out.ring = a.ring;
  out.cover = a.cover + b.cover;
  out.relations = GradedMap::direct_sum(a.relations, b.relations);
  if (a.embedding && b.embedding) {
    out.embedding = Embedding{a.embedding->ambient + b.embedding->ambient,
                              GradedMap::direct_sum(a.embedding->images, b.embedding->images)};
  }
  return out;
}

}  // namespace acm
