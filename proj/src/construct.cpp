#include "acm/construct.hpp"

#include <numeric>

#include "acm/error.hpp"

namespace acm {

namespace {

Resolution minimal_module_resolution(const ModulePresentation& m) {
  return minimalize(free_resolution(m));
}

ModulePresentation free_of(const RingPtr& ring, FreeModule f) {
  return ModulePresentation::free(ring, std::move(f));
}

// Free modules and submodules of free modules need no test.
bool torsion_free_input(const ModulePresentation& m) {
  if (m.relations.cols() == 0 || m.embedding) return true;
  return is_torsion_free(m);
}

std::vector<int> all_indices(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

int last_rank(const Resolution& res) {
  int len = res.length();
  return len < 0 ? 0 : res.modules[static_cast<std::size_t>(len)].rank();
}

// Zero map out of the empty module into f.
GradedMap no_relations(const RingPtr& ring, const FreeModule& f) {
  return GradedMap(ring, FreeModule{}, f);
}

}  // namespace

ModulePresentation syzygy_module(const Ideal& ix, int j) {
  Resolution rx = ix.minimal_resolution();
  int pd = rx.length() - 1;
  if (j < 1 || j > pd - 1) {
    throw DomainError("syzygy index " + std::to_string(j) + " outside [1, " + std::to_string(pd - 1) + "]");
  }
  auto uj = static_cast<std::size_t>(j);
  ModulePresentation n;
  n.ring = ix.ring();
  n.cover = rx.modules[uj + 1];
  n.relations = uj + 1 < rx.maps.size() ? rx.maps[uj + 1] : no_relations(n.ring, n.cover);
  n.embedding = Embedding{rx.modules[uj], rx.maps[uj]};
  return n;
}

HypothesisReport verify_hypotheses(const ModulePresentation& p, const ModulePresentation& n) {
  HypothesisReport rep;
  int r = n.ring->r();
  Resolution rp = minimal_module_resolution(p);
  Resolution rn = minimal_module_resolution(n);
  rep.pd_p = rp.length();
  rep.pd_n = rn.length();
  rep.s = rep.pd_p + 2;
  std::vector<std::string> why;
  bool tf_p = torsion_free_input(p);
  bool tf_n = torsion_free_input(n);
  rep.h1 = tf_p && rep.s <= r;
  if (!tf_p) why.push_back("P has torsion");
  if (rep.s > r) why.push_back("s = " + std::to_string(rep.s) + " exceeds r = " + std::to_string(r));
  rep.h2 = tf_n && rep.pd_n <= rep.pd_p + 1;
  if (!tf_n) why.push_back("N has torsion");
  if (rep.pd_n > rep.pd_p + 1) why.push_back("pd(N) = " + std::to_string(rep.pd_n) + " exceeds pd(P) + 1");
  H3Report h3 = check_H3(rp, rn, r);
  rep.h3 = h3.pass;
  rep.k = h3.k;
  rep.rank_ok = h3.rank_ok;
  rep.p_degree = h3.p.degree();
  if (!h3.pass) why.push_back(h3.diagnosis);
  rep.pass = rep.h1 && rep.h2 && rep.h3;
  for (std::size_t i = 0; i < why.size(); ++i) rep.diagnosis += (i ? "; " : "") + why[i];
  return rep;
}

bool ConstructionCertificate::pass() const {
  bool base = hypotheses.pass && acm && codim == hypotheses.s && cone_equals_direct &&
              generator_bound && summand_bound;
  if (!x) return base;
  return base && contains_x && cm_type_bound && dual_sequence.value_or(true);
}

int cm_type(const Ideal& i) { return last_rank(i.minimal_resolution()); }

CmComparison compare_with(const Ideal& id, const Ideal& ix) {
  CmComparison c;
  c.contains_x = ideal_contains(ix, id);
  c.cm_type_x = cm_type(ix);
  c.cm_type_d = cm_type(id);
  c.cm_type_bound = c.cm_type_x <= c.cm_type_d;
  c.gorenstein_x = c.cm_type_x == 1;
  c.gorenstein_d = c.cm_type_d == 1;
  return c;
}

HilbertSeries dual_kernel_series(const ModulePresentation& p, const ModulePresentation& n,
                                 const GradedMap& gamma, int s) {
  int w = n.ring->r() + 1;
  if (s >= 3) {
    Resolution rp = minimal_module_resolution(p);
    const GradedMap& last = rp.maps.at(static_cast<std::size_t>(s - 3));
    return hilbert_series(ModulePresentation::cokernel_of(last.dual(w)));
  }
  // Hom(N, omega) -> Hom(P, omega) inside the free module Hom(P.cover, omega).
  HomModule hn = hom_module(n, -w);
  GradedMap dual_gamma = gamma.dual(w);
  GradedMap image = dual_gamma.compose(hn.module.embedding->images);
  HilbertSeries quotient = hilbert_series(ModulePresentation::cokernel_of(image));
  if (p.relations.cols() == 0) return quotient;
  HomModule hp = hom_module(p, -w);
  return quotient - hilbert_series(ModulePresentation::cokernel_of(hp.module.embedding->images));
}

ConstructionCertificate construct_acm(const ModulePresentation& n, const ModulePresentation& p,
                                      const ConstructOptions& opts) {
  HypothesisReport hyp = verify_hypotheses(p, n);
  if (!hyp.pass) throw ConstructionError("hypotheses fail: " + hyp.diagnosis);
  std::string last = "no attempt made";
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    RandomMap g = random_graded_map(p, n, opts.seed.derive(static_cast<std::uint64_t>(attempt)));
    if (g.zero) throw ConstructionError("zero map: no nonzero degree-0 map P -> N");
    if (!is_zero_module(kernel_of_map({p, n, g.matrix}))) {
      last = "gamma not injective";
      continue;
    }
    std::optional<RankOneEmbedding> emb;
    try {
      emb = embed_rank1(cokernel(g.matrix, n), hyp.k);
    } catch (const ConstructionError& e) {
      last = e.what();
      continue;
    }

    ConstructionCertificate cert;
    cert.hypotheses = hyp;
    cert.seed = opts.seed.value();
    cert.attempts = attempt + 1;
    cert.k = hyp.k;
    cert.gamma = g.matrix;
    cert.id = Ideal(emb->ideal.ring(), emb->ideal.minimal_generators());

    Resolution rp = minimal_module_resolution(p);
    Resolution rn = minimal_module_resolution(n);
    cert.betti_p = module_betti(rp);
    cert.betti_n = module_betti(rn);
    Resolution rd = cert.id.minimal_resolution();
    cert.betti_id = ideal_betti(rd).shifted(cert.k);
    cert.codim = cert.id.invariants().codim;
    cert.pd_quotient = rd.length();
    cert.acm = cert.pd_quotient == cert.codim;

    // The cone is built on the given covers, where gamma lives.
    Resolution fp = free_resolution(p);
    Resolution fn = free_resolution(n);
    Resolution cone = mapping_cone(lift_chain_map(g.matrix, fp, fn), fp, fn);
    cert.betti_cone = module_betti(minimalize(cone));
    cert.cone_equals_direct = cert.betti_cone == cert.betti_id;

    cert.min_generators = static_cast<int>(cert.id.minimal_generators().size());
    cert.generator_bound = cert.min_generators <= cert.betti_n.total(1);
    cert.summand_bound = true;
    const auto entries = cert.betti_id.entries();
    for (const auto& [key, count] : entries) {
      auto [i, a] = key;
      if (count > cert.betti_n.at(i, a) + cert.betti_p.at(i - 1, a)) cert.summand_bound = false;
    }
    cert.cm_type_d = last_rank(rd);
    cert.gorenstein_d = cert.cm_type_d == 1;
    return cert;
  }
  throw ConstructionError("retries exhausted: " + last);
}

ConstructionCertificate construct_from_x(const Ideal& ix, const ModulePresentation& p,
                                         const ConstructOptions& opts, int j) {
  Resolution rx = ix.minimal_resolution();
  int t = ix.invariants().codim;
  if (rx.length() != t) throw DomainError("X is not ACM");
  int s = minimal_module_resolution(p).length() + 2;
  if (s >= t) {
    throw DomainError("s = " + std::to_string(s) + " must be smaller than codim X = " + std::to_string(t));
  }
  if (j == 0) j = t - s;
  ModulePresentation n = syzygy_module(ix, j);
  ConstructionCertificate cert = construct_acm(n, p, opts);
  cert.x = ix;
  CmComparison cmp = compare_with(cert.id, ix);
  cert.contains_x = cmp.contains_x;
  cert.cm_type_x = cmp.cm_type_x;
  cert.gorenstein_x = cmp.gorenstein_x;
  cert.cm_type_bound = cmp.cm_type_bound;
  if (j != t - s) return cert;
  if (cert.acm) {
    Resolution rd = cert.id.minimal_resolution();
    HilbertSeries lhs = hilbert_series(canonical_module(rd, cert.codim).shifted(-cert.k));
    HilbertSeries wx = hilbert_series(canonical_module(rx, t));
    cert.dual_sequence = lhs == dual_kernel_series(p, n, cert.gamma, s) + wx;
  } else {
    cert.dual_sequence = false;
  }
  return cert;
}

SplitReport split_dichotomy_test(const Ideal& id, const FreeModule& p, const Seed& seed,
                                 bool zero_psi) {
  const RingPtr& ring = id.ring();
  Resolution rd = id.minimal_resolution();
  if (rd.length() < 1) throw DomainError("I_D must be a proper nonzero ideal");
  FreeModule h1 = rd.modules[1];
  ModulePresentation k;
  k.ring = ring;
  k.cover = rd.length() >= 2 ? rd.modules[2] : FreeModule{};
  k.relations = rd.length() >= 3 ? rd.maps[2] : no_relations(ring, k.cover);
  GradedMap j = rd.length() >= 2 ? rd.maps[1] : GradedMap(ring, FreeModule{}, h1);

  ModulePresentation pm = free_of(ring, p);
  GradedMap psi = zero_psi ? GradedMap(ring, k.cover, p) : random_graded_map(k, pm, seed).matrix;
  ModulePresentation n = pushout(free_of(ring, h1), pm, j, psi);

  SplitReport rep;
  rep.psi_zero = psi.is_zero();
  rep.betti_n = module_betti(minimal_module_resolution(n));
  rep.expected = module_betti(minimal_module_resolution(pm)) + ideal_betti(rd);
  rep.additive = rep.betti_n == rep.expected;
  return rep;
}

namespace {

struct SerreData {
  Resolution rd;
  FreeModule h1;
  FreeModule h2;
  GradedMap phi;
};

SerreData codim2_data(const Ideal& id) {
  SerreData d{id.minimal_resolution(), {}, {}, {}};
  if (d.rd.length() != 2 || id.invariants().codim != 2) {
    throw DomainError("D must be ACM of codimension 2");
  }
  d.h1 = d.rd.modules[1];
  d.h2 = d.rd.modules[2];
  d.phi = d.rd.maps[1];
  return d;
}

}  // namespace

SerreReport serre_codim2(const Ideal& id, int c, const Seed& seed, int retries) {
  const RingPtr& ring = id.ring();
  int r = ring->r();
  SerreData d = codim2_data(id);
  ModulePresentation omega = canonical_module(d.rd, 2);
  if (hilbert_series(omega).value(c) <= 0) {
    throw ConstructionError("no nonzero section of omega_D(" + std::to_string(c) + ")");
  }
  FreeModule line{{r + 1 - c}};
  ImageMembership lifts(d.phi.dual(0));
  for (int attempt = 0; attempt < retries; ++attempt) {
    RandomMap rm = random_graded_map(free_of(ring, d.h2), free_of(ring, line),
                                     seed.derive(static_cast<std::uint64_t>(attempt)));
    if (rm.zero) throw ConstructionError("no nonzero section: Hom(H_2, O(c - r - 1)) vanishes");
    if (lifts.contains(rm.matrix.dual(0).column(0))) continue;
    SerreReport rep;
    rep.psi = rm.matrix;
    rep.n = pushout(free_of(ring, d.h1), free_of(ring, line), d.phi, rm.matrix);
    Resolution rn = minimal_module_resolution(rep.n);
    rep.betti_n = module_betti(rn);
    rep.pd_n = rn.length();
    rep.h2_is_line_bundle = d.h2 == line;
    rep.attempts = attempt + 1;
    return rep;
  }
  throw ConstructionError("all samples factor");
}

InfinitesimalReport infinitesimal_double(const Ideal& iy, int m, const ConstructOptions& opts) {
  return infinitesimal_double(iy, FreeModule{{m}}, opts);
}

InfinitesimalReport infinitesimal_double(const Ideal& iy, const FreeModule& pf,
                                         const ConstructOptions& opts) {
  ModulePresentation single = ideal_module(iy);
  ModulePresentation n = direct_sum(single, single);
  ModulePresentation p = free_of(iy.ring(), pf);
  InfinitesimalReport rep{construct_acm(n, p, opts), false};
  rep.in_square = ideal_contains(ideal_power(iy, 2), rep.certificate.id);
  return rep;
}

TwistReport twist_extension(const Ideal& id, int c, const Polynomial& f, const Seed& seed,
                            int retries) {
  const RingPtr& ring = id.ring();
  int r = ring->r();
  if (f.is_zero()) throw DomainError("f not transversal: f is zero");
  auto fd = f.degree();
  if (!fd) throw DomainError("f is not homogeneous");
  TwistReport rep;
  rep.d = *fd;
  Ideal fi(ring, {f});
  if (!f.is_unit() && ideal_sum(id, fi).invariants().codim != 3) {
    throw DomainError("f not transversal: V(f) does not cut D in codimension 3");
  }
  SerreData d = codim2_data(id);
  SerreReport base = serre_codim2(id, c, seed, retries);

  FreeModule line{{r + 1 - c - rep.d}};
  std::vector<std::vector<Polynomial>> cols;
  for (int j = 0; j < base.psi.cols(); ++j) cols.push_back({base.psi(0, j) * f});
  GradedMap fpsi = GradedMap::from_columns(ring, d.h2, line, cols);
  ModulePresentation n2 = pushout(free_of(ring, d.h1), free_of(ring, line), d.phi, fpsi);

  GradedMap mult = GradedMap::from_columns(ring, base.psi.target(), line, {{f}});
  GradedMap eps = GradedMap::direct_sum(GradedMap::identity(ring, d.h1), mult);
  ModuleMap em{base.n, n2, eps};
  if (!is_well_defined(em)) throw StructuralError("the induced map N -> N' is not well defined");
  rep.epsilon_injective = is_zero_module(kernel_of_map(em));
  rep.coker_series = hilbert_series(cokernel(eps, n2));
  rep.expected_series = fi.hilbert_series().shifted(c + rep.d - r - 1);
  rep.pass = rep.epsilon_injective && rep.coker_series == rep.expected_series;
  return rep;
}

KoszulReport koszul_reconstruct(const Ideal& id, const std::vector<Polynomial>& forms) {
  const RingPtr& ring = id.ring();
  Resolution rd = id.minimal_resolution();
  int s = rd.length();
  if (id.invariants().codim != s) throw DomainError("D is not ACM");
  KoszulReport rep;
  auto t = static_cast<int>(forms.size());
  if (t == 0) {
    rep.x = id;
    rep.n = ideal_module(id);
    rep.p = free_of(ring, FreeModule{});
    rep.reconstructed = id;
    rep.matches = true;
    return rep;
  }
  if (!is_regular_sequence(ring, forms)) throw DomainError("the forms are not a regular sequence");
  rep.x = ideal_sum(id, Ideal(ring, forms));
  int cx = rep.x.invariants().codim;
  if (s + t > ring->r()) throw DomainError("codimension overflow: s + t exceeds r");
  if (cx != s + t) throw DomainError("the forms do not cut D in codimension s + t");

  TensorComplex tc = tensor_complexes(rd, koszul_complex(ring, forms));
  const Resolution& g = tc.complex;
  auto ut = static_cast<std::size_t>(t);
  // G'_{t+j}: the summands H_i (x) wedge^{t+j-i} F with i > j.
  auto primed = [&](int j) {
    std::vector<int> sel;
    auto h = static_cast<std::size_t>(t + j);
    if (h >= tc.blocks.size()) return sel;
    for (const auto& b : tc.blocks[h]) {
      if (b.i <= j) continue;
      for (int e = 0; e < b.size; ++e) sel.push_back(b.offset + e);
    }
    return sel;
  };

  rep.n.ring = ring;
  rep.n.cover = g.modules.at(ut + 1);
  rep.n.relations = ut + 1 < g.maps.size() ? g.maps[ut + 1] : no_relations(ring, rep.n.cover);
  rep.n.embedding = Embedding{g.modules[ut], g.maps[ut]};

  std::vector<int> sel1 = primed(1);
  std::vector<int> sel2 = primed(2);
  rep.p.ring = ring;
  for (int i : sel1) rep.p.cover.twists.push_back(rep.n.cover.twists[static_cast<std::size_t>(i)]);
  rep.p.relations = ut + 1 < g.maps.size() ? g.maps[ut + 1].submatrix(sel1, sel2)
                                           : no_relations(ring, rep.p.cover);
  GradedMap incl = GradedMap::identity(ring, rep.n.cover).submatrix(all_indices(rep.n.cover.rank()), sel1);

  rep.k = 0;
  for (const auto& f : forms) rep.k -= *f.degree();
  RankOneEmbedding emb = embed_rank1(cokernel(incl, rep.n), rep.k);
  rep.reconstructed = emb.ideal;
  rep.matches = rep.reconstructed == id;
  return rep;
}

}  // namespace acm
