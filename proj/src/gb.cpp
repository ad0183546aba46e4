#include "acm/gb.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace acm {

// ---------------------------------------------------------------------------
// Ordered modules

struct SchreyerBuilder {
  static ModulePtr build(RingPtr ring, std::vector<int> twists, std::vector<int> blocks,
                         std::vector<Monomial> weights, std::vector<int> ranks, bool schreyer) {
    auto m = std::shared_ptr<OrderedModule>(new OrderedModule());
    m->ring_ = std::move(ring);
    m->twists_ = std::move(twists);
    m->blocks_ = std::move(blocks);
    m->weights_ = std::move(weights);
    m->ranks_ = std::move(ranks);
    m->schreyer_ = schreyer;
    return m;
  }
};

ModulePtr OrderedModule::term_over_position(RingPtr ring, const FreeModule& f) {
  return with_blocks(std::move(ring), f, std::vector<int>(f.twists.size(), 0));
}

ModulePtr OrderedModule::with_blocks(RingPtr ring, const FreeModule& f, std::vector<int> blocks) {
  if (blocks.size() != f.twists.size()) throw StructuralError("block list has the wrong length");
  std::vector<Monomial> weights(f.twists.size(), ring->one());
  std::vector<int> ranks(f.twists.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = static_cast<int>(i);
  return SchreyerBuilder::build(ring, f.twists, std::move(blocks), std::move(weights),
                                std::move(ranks), false);
}

std::strong_ordering OrderedModule::compare(const Monomial& m, int i, const Monomial& n,
                                            int j) const {
  if (blocks_[i] != blocks_[j]) return blocks_[j] <=> blocks_[i];
  int dm = m.degree() + twists_[i];
  int dn = n.degree() + twists_[j];
  if (dm != dn) return dm <=> dn;
  auto c = schreyer_ ? degrevlex(m * weights_[i], n * weights_[j]) : degrevlex(m, n);
  if (c != 0) return c;
  return ranks_[j] <=> ranks_[i];
}

// ---------------------------------------------------------------------------
// Elements

namespace {

bool term_greater(const OrderedModule& mod, const ModTerm& a, const ModTerm& b) {
  return mod.compare(a.mono, a.comp, b.mono, b.comp) > 0;
}

}  // namespace

FreeElem make_elem(ModulePtr ambient, std::vector<ModTerm> terms) {
  const OrderedModule& mod = *ambient;
  const PrimeField& k = mod.ring()->field();
  std::sort(terms.begin(), terms.end(),
            [&](const ModTerm& a, const ModTerm& b) { return term_greater(mod, a, b); });
  FreeElem out(std::move(ambient));
  for (const ModTerm& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().comp == t.comp &&
        out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = k.add(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

FreeElem FreeElem::from_components(ModulePtr ambient, const std::vector<Polynomial>& comps) {
  if (static_cast<int>(comps.size()) != ambient->rank()) {
    throw StructuralError("component count does not match the ambient rank");
  }
  std::vector<ModTerm> terms;
  std::optional<int> deg;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Polynomial& f = comps[i];
    if (f.is_zero()) continue;
    require_same_ring(ambient->ring(), f.ring());
    auto d = f.degree();
    if (!d) throw DomainError("component " + f.to_string() + " is not homogeneous");
    int total = *d + ambient->twist(static_cast<int>(i));
    if (deg && *deg != total) throw DomainError("element components have incompatible degrees");
    deg = total;
    for (const Term& t : f.terms()) terms.push_back({t.coeff, t.mono, static_cast<int>(i)});
  }
  return make_elem(std::move(ambient), std::move(terms));
}

FreeElem FreeElem::basis(ModulePtr ambient, int i) {
  std::vector<ModTerm> terms{{1, ambient->ring()->one(), i}};
  return make_elem(std::move(ambient), std::move(terms));
}

int FreeElem::degree() const {
  if (terms_.empty()) throw DomainError("the zero element has no degree");
  return terms_.front().mono.degree() + ambient_->twist(terms_.front().comp);
}

std::vector<Polynomial> FreeElem::components() const {
  const RingPtr& ring = ambient_->ring();
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(ambient_->rank()));
  for (const ModTerm& t : terms_) parts[static_cast<std::size_t>(t.comp)].push_back({t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

FreeElem FreeElem::add_scaled(const FreeElem& g, Coeff c, const Monomial& m) const {
  const OrderedModule& mod = *ambient_;
  const PrimeField& k = mod.ring()->field();
  FreeElem out(ambient_);
  if (c == 0 || g.terms_.empty()) {
    out.terms_ = terms_;
    return out;
  }
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end()) {
      out.terms_.push_back({k.mul(c, b->coeff), bm, b->comp});
      ++b;
      continue;
    }
    auto cmp = (a->comp == b->comp && a->mono == bm)
                   ? std::strong_ordering::equal
                   : mod.compare(a->mono, a->comp, bm, b->comp);
    if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else if (cmp < 0) {
      out.terms_.push_back({k.mul(c, b->coeff), bm, b->comp});
      ++b;
    } else {
      Coeff s = k.add(a->coeff, k.mul(c, b->coeff));
      if (s != 0) out.terms_.push_back({s, a->mono, a->comp});
      ++a;
      ++b;
    }
  }
  return out;
}

FreeElem FreeElem::operator-(const FreeElem& g) const {
  return add_scaled(g, ambient_->ring()->field().neg(1), ambient_->ring()->one());
}

FreeElem FreeElem::times_term(Coeff c, const Monomial& m) const {
  FreeElem out(ambient_);
  if (c == 0) return out;
  const PrimeField& k = ambient_->ring()->field();
  out.terms_.reserve(terms_.size());
  for (const ModTerm& t : terms_) out.terms_.push_back({k.mul(c, t.coeff), t.mono * m, t.comp});
  return out;
}

FreeElem FreeElem::times(const Polynomial& f) const {
  FreeElem out(ambient_);
  for (const Term& t : f.terms()) out = out.add_scaled(*this, t.coeff, t.mono);
  return out;
}

FreeElem FreeElem::monic() const {
  if (terms_.empty()) return *this;
  return times_term(ambient_->ring()->field().inv(lead().coeff), ambient_->ring()->one());
}

FreeElem FreeElem::restrict(int first, int count, ModulePtr target) const {
  std::vector<ModTerm> kept;
  for (const ModTerm& t : terms_) {
    if (t.comp >= first && t.comp < first + count) kept.push_back({t.coeff, t.mono, t.comp - first});
  }
  return make_elem(std::move(target), std::move(kept));
}

std::vector<int> GroebnerBasis::degrees() const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.degree());
  return out;
}

// ---------------------------------------------------------------------------
// Division

namespace {

struct DivisorIndex {
  // divisors grouped by lead component, in list order
  std::map<int, std::vector<int>> by_comp;

  explicit DivisorIndex(const std::vector<FreeElem>& divisors) {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divisors[i].is_zero()) by_comp[divisors[i].lead().comp].push_back(static_cast<int>(i));
    }
  }

  int find(const std::vector<FreeElem>& divisors, const ModTerm& t) const {
    auto it = by_comp.find(t.comp);
    if (it == by_comp.end()) return -1;
    for (int i : it->second) {
      if (divisors[static_cast<std::size_t>(i)].lead().mono.divides(t.mono)) return i;
    }
    return -1;
  }
};

}  // namespace

Reduction reduce_by(const FreeElem& f, const std::vector<FreeElem>& divisors, bool track) {
  const ModulePtr& ambient = f.ambient();
  for (const auto& g : divisors) {
    if (g.ambient() != ambient && !g.is_zero()) {
      throw StructuralError("element and divisor live in different modules");
    }
  }
  const RingPtr& ring = ambient->ring();
  const PrimeField& k = ring->field();
  DivisorIndex index(divisors);

  std::vector<std::vector<Term>> quotient_terms(track ? divisors.size() : 0);
  std::vector<ModTerm> remainder;
  FreeElem h = f;
  while (!h.is_zero()) {
    const ModTerm lt = h.lead();
    int i = index.find(divisors, lt);
    if (i < 0) {
      remainder.push_back(lt);
      FreeElem rest(ambient);
      std::vector<ModTerm> tail(h.terms().begin() + 1, h.terms().end());
      h = make_elem(ambient, std::move(tail));
      continue;
    }
    const FreeElem& g = divisors[static_cast<std::size_t>(i)];
    Coeff c = k.mul(lt.coeff, k.inv(g.lead().coeff));
    Monomial m = lt.mono / g.lead().mono;
    h = h.add_scaled(g, k.neg(c), m);
    if (track) quotient_terms[static_cast<std::size_t>(i)].push_back({c, m});
  }
  Reduction out;
  out.remainder = make_elem(ambient, std::move(remainder));
  if (track) {
    out.quotients.reserve(divisors.size());
    for (auto& q : quotient_terms) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  }
  return out;
}

Reduction reduce(const FreeElem& f, const GroebnerBasis& g, bool track) {
  if (f.ambient() != g.ambient()) throw StructuralError("ambient module mismatch in reduce");
  return reduce_by(f, g.elements(), track);
}

bool submodule_contains(const FreeElem& f, const GroebnerBasis& g) {
  return reduce(f, g, false).remainder.is_zero();
}

FreeElem s_element(const FreeElem& f, const FreeElem& g) {
  const ModTerm& a = f.lead();
  const ModTerm& b = g.lead();
  if (a.comp != b.comp) throw StructuralError("S-element of leads in different components");
  const PrimeField& k = f.ambient()->ring()->field();
  Monomial l = a.mono.lcm(b.mono);
  FreeElem left = f.times_term(k.inv(a.coeff), l / a.mono);
  return left.add_scaled(g, k.neg(k.inv(b.coeff)), l / b.mono);
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

class Buchberger {
 public:
  explicit Buchberger(ModulePtr ambient) : ambient_(std::move(ambient)) {}

  void run(const std::vector<FreeElem>& gens) {
    std::map<int, std::vector<FreeElem>> pending_gens;
    for (const auto& g : gens) {
      if (g.ambient() != ambient_) throw StructuralError("generator in a different module");
      if (!g.is_zero()) pending_gens[g.degree()].push_back(g);
    }
    while (!pending_gens.empty() || !pairs_.empty()) {
      int d = next_degree(pending_gens);
      auto git = pending_gens.find(d);
      if (git != pending_gens.end()) {
        for (const auto& g : git->second) insert(reduce_by(g, basis_, false).remainder);
        pending_gens.erase(git);
      }
      auto pit = pairs_.find(d);
      while (pit != pairs_.end() && !pit->second.empty()) {
        auto [i, j] = pit->second.front();
        pit->second.pop_front();
        bool skip = criteria_discard(i, j);
        pending_.erase({i, j});
        if (!skip) {
          insert(reduce_by(s_element(basis_[static_cast<std::size_t>(i)],
                                     basis_[static_cast<std::size_t>(j)]),
                           basis_, false)
                     .remainder);
        }
        pit = pairs_.find(d);
      }
      if (pit != pairs_.end()) pairs_.erase(pit);
    }
  }

  GroebnerBasis reduced() const {
    // drop elements whose lead is divisible by another lead
    std::vector<FreeElem> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const ModTerm& a = basis_[i].lead();
        const ModTerm& b = basis_[j].lead();
        if (a.comp == b.comp && b.mono.divides(a.mono)) {
          redundant = !(a.mono == b.mono) || j < i;
        }
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<FreeElem> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<FreeElem> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      FreeElem tail = make_elem(ambient_, std::vector<ModTerm>(minimal[i].terms().begin() + 1,
                                                               minimal[i].terms().end()));
      FreeElem red = reduce_by(tail, others, false).remainder;
      std::vector<ModTerm> terms{minimal[i].lead()};
      terms.insert(terms.end(), red.terms().begin(), red.terms().end());
      out.push_back(make_elem(ambient_, std::move(terms)).monic());
    }
    const OrderedModule& mod = *ambient_;
    std::sort(out.begin(), out.end(), [&](const FreeElem& a, const FreeElem& b) {
      return term_greater(mod, a.lead(), b.lead());
    });
    return GroebnerBasis(ambient_, std::move(out));
  }

 private:
  int next_degree(const std::map<int, std::vector<FreeElem>>& gens) const {
    int d = std::numeric_limits<int>::max();
    if (!gens.empty()) d = gens.begin()->first;
    for (const auto& [deg, list] : pairs_) {
      if (!list.empty()) {
        d = std::min(d, deg);
        break;
      }
    }
    return d;
  }

  bool criteria_discard(int i, int j) const {
    const ModTerm& a = basis_[static_cast<std::size_t>(i)].lead();
    const ModTerm& b = basis_[static_cast<std::size_t>(j)].lead();
    if (ambient_->rank() == 1 && a.mono.coprime(b.mono)) return true;
    Monomial l = a.mono.lcm(b.mono);
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == i || k == j) continue;
      const ModTerm& c = basis_[static_cast<std::size_t>(k)].lead();
      if (c.comp != a.comp || !c.mono.divides(l)) continue;
      if (!pending_.count(key(i, k)) && !pending_.count(key(j, k))) return true;
    }
    return false;
  }

  static std::pair<int, int> key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

  void insert(const FreeElem& r) {
    if (r.is_zero()) return;
    FreeElem g = r.monic();
    int n = static_cast<int>(basis_.size());
    basis_.push_back(g);
    for (int i = 0; i < n; ++i) {
      const ModTerm& a = basis_[static_cast<std::size_t>(i)].lead();
      if (a.comp != g.lead().comp) continue;
      int d = a.mono.lcm(g.lead().mono).degree() + ambient_->twist(a.comp);
      pairs_[d].push_back({i, n});
      pending_.insert({i, n});
    }
  }

  ModulePtr ambient_;
  std::vector<FreeElem> basis_;
  std::map<int, std::deque<std::pair<int, int>>> pairs_;
  std::set<std::pair<int, int>> pending_;
};

}  // namespace

GroebnerBasis buchberger(ModulePtr ambient, const std::vector<FreeElem>& gens) {
  Buchberger b(ambient);
  b.run(gens);
  return b.reduced();
}

// ---------------------------------------------------------------------------
// Schreyer syzygies

SyzygyResult schreyer_syzygies(ModulePtr ambient, std::vector<FreeElem> basis) {
  const RingPtr& ring = ambient->ring();
  const PrimeField& k = ring->field();
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const FreeElem& e) { return e.is_zero(); }),
              basis.end());
  // Lex-descending leads inside each component keep the frame short.
  std::stable_sort(basis.begin(), basis.end(), [&](const FreeElem& a, const FreeElem& b) {
    int pa = ambient->position(a.lead().comp);
    int pb = ambient->position(b.lead().comp);
    if (pa != pb) return pa < pb;
    return lex_compare(a.lead().mono, b.lead().mono) > 0;
  });

  std::vector<int> twists, blocks, ranks;
  std::vector<Monomial> weights;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ModTerm& lt = basis[i].lead();
    twists.push_back(basis[i].degree());
    blocks.push_back(ambient->block(lt.comp));
    weights.push_back(lt.mono * ambient->weight(lt.comp));
    ranks.push_back(static_cast<int>(i));
  }
  SyzygyResult out;
  out.module = SchreyerBuilder::build(ring, std::move(twists), std::move(blocks),
                                      std::move(weights), std::move(ranks), true);

  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) {
    const ModTerm& li = basis[static_cast<std::size_t>(i)].lead();
    std::vector<std::pair<Monomial, int>> cands;
    for (int j = i + 1; j < n; ++j) {
      const ModTerm& lj = basis[static_cast<std::size_t>(j)].lead();
      if (lj.comp != li.comp) continue;
      cands.push_back({li.mono.lcm(lj.mono) / li.mono, j});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = true;
      for (std::size_t b = 0; b < cands.size() && keep; ++b) {
        if (a == b || !cands[b].first.divides(cands[a].first)) continue;
        keep = !(cands[a].first == cands[b].first) ? false : b > a;
      }
      if (!keep) continue;
      int j = cands[a].second;
      const FreeElem& gi = basis[static_cast<std::size_t>(i)];
      const FreeElem& gj = basis[static_cast<std::size_t>(j)];
      Reduction red = reduce_by(s_element(gi, gj), basis, true);
      if (!red.remainder.is_zero()) {
        throw StructuralError("Schreyer syzygies need a Gröbner basis as input");
      }
      Monomial l = li.mono.lcm(gj.lead().mono);
      std::vector<ModTerm> terms;
      terms.push_back({k.inv(li.coeff), l / li.mono, i});
      terms.push_back({k.neg(k.inv(gj.lead().coeff)), l / gj.lead().mono, j});
      for (int u = 0; u < n; ++u) {
        for (const Term& t : red.quotients[static_cast<std::size_t>(u)].terms()) {
          terms.push_back({k.neg(t.coeff), t.mono, u});
        }
      }
      FreeElem sigma = make_elem(out.module, std::move(terms)).monic();
      out.syzygies.push_back(std::move(sigma));
    }
  }
  out.generators = std::move(basis);
  return out;
}

SyzygyResult syzygy_basis(const GroebnerBasis& g) {
  return schreyer_syzygies(g.ambient(), g.elements());
}

// ---------------------------------------------------------------------------
// Linear algebra over R

ImageSolver::ImageSolver(const GradedMap& a) : map_(a) {
  FreeModule combined = a.target() + a.source();
  std::vector<int> blocks(static_cast<std::size_t>(combined.rank()), 1);
  std::fill(blocks.begin(), blocks.begin() + a.rows(), 0);
  combined_ = OrderedModule::with_blocks(a.ring(), combined, std::move(blocks));
  std::vector<FreeElem> gens;
  gens.reserve(static_cast<std::size_t>(a.cols()));
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<Polynomial> comps = a.column(j);
    for (int i = 0; i < a.cols(); ++i) {
      comps.push_back(i == j ? Polynomial::constant(a.ring(), 1) : Polynomial(a.ring()));
    }
    gens.push_back(FreeElem::from_components(combined_, comps));
  }
  basis_ = buchberger(combined_, gens);
}

std::optional<std::vector<Polynomial>> ImageSolver::solve(const std::vector<Polynomial>& b) const {
  if (static_cast<int>(b.size()) != map_.rows()) throw StructuralError("right-hand side has the wrong length");
  std::vector<Polynomial> comps = b;
  for (int i = 0; i < map_.cols(); ++i) comps.emplace_back(map_.ring());
  FreeElem rhs = FreeElem::from_components(combined_, comps);
  FreeElem rem = reduce(rhs, basis_).remainder;
  if (!rem.is_zero() && rem.lead().comp < map_.rows()) return std::nullopt;
  std::vector<Polynomial> all = rem.components();
  std::vector<Polynomial> x;
  x.reserve(static_cast<std::size_t>(map_.cols()));
  for (int j = 0; j < map_.cols(); ++j) x.push_back(-all[static_cast<std::size_t>(map_.rows() + j)]);
  return x;
}

bool ImageSolver::contains(const std::vector<Polynomial>& b) const { return solve(b).has_value(); }

std::vector<std::vector<Polynomial>> ImageSolver::kernel() const {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& g : basis_.elements()) {
    if (g.lead().comp < map_.rows()) continue;
    std::vector<Polynomial> all = g.components();
    out.emplace_back(all.begin() + map_.rows(), all.end());
  }
  return out;
}

ImageMembership::ImageMembership(const GradedMap& a) {
  ambient_ = OrderedModule::term_over_position(a.ring(), a.target());
  std::vector<FreeElem> gens;
  for (int j = 0; j < a.cols(); ++j) gens.push_back(FreeElem::from_components(ambient_, a.column(j)));
  basis_ = buchberger(ambient_, gens);
}

bool ImageMembership::contains(const std::vector<Polynomial>& b) const {
  return submodule_contains(FreeElem::from_components(ambient_, b), basis_);
}

std::vector<std::vector<Polynomial>> kernel_generators(const GradedMap& a) {
  return ImageSolver(a).kernel();
}

}  // namespace acm
