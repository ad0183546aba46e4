#pragma once

// Module and ideal operations: kernels, cokernels, Hom, saturation, colon
// ideals, push-outs, canonical modules, rank-one embeddings and seeded random
// homomorphisms.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acm/gb.hpp"
#include "acm/hilbert.hpp"
#include "acm/module.hpp"
#include "acm/resolve.hpp"

namespace acm {

/// Reproducible randomness: a 64-bit value plus a derivation path.
class Seed {
 public:
  explicit Seed(std::uint64_t value, std::vector<std::uint64_t> path = {})
      : value_(value), path_(std::move(path)) {}

  std::uint64_t value() const { return value_; }
  const std::vector<std::uint64_t>& path() const { return path_; }
  /// Child seed one level down the path.
  Seed derive(std::uint64_t step) const;
  std::mt19937_64 engine() const;
  bool operator==(const Seed&) const = default;

 private:
  std::uint64_t value_;
  std::vector<std::uint64_t> path_;
};

/// Uniform element of F_p (rejection sampling, so the stream is portable).
Coeff uniform_coeff(std::mt19937_64& rng, const PrimeField& k);

/// Homogeneous ideal with a cached reduced Gröbner basis.
class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped; inhomogeneous ones are rejected.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& gb() const { return gb_; }
  bool is_zero() const { return gb_.empty(); }
  bool is_unit() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& j) const;
  bool operator==(const Ideal& j) const { return contains(j) && j.contains(*this); }

  /// Resolution of R / I (not minimalized).
  Resolution quotient_resolution() const;
  /// Minimal resolution of R / I.
  Resolution minimal_resolution() const;
  /// Minimal generators read off the minimal resolution.
  std::vector<Polynomial> minimal_generators() const;
  HilbertSeries hilbert_series() const;
  /// Invariants of R / I.
  NumericalInvariants invariants() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int n);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// I : (f).
Ideal ideal_quotient(const Ideal& i, const Polynomial& f);
/// I : J.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
/// J subset of I.
bool ideal_contains(const Ideal& i, const Ideal& j);
/// I : (x_0, ..., x_r)^infinity.
Ideal saturate(const Ideal& i);
bool is_saturated(const Ideal& i);

/// Homomorphism of presented modules, given on generators:
/// matrix: source.cover -> target.cover.
struct ModuleMap {
  ModulePresentation source;
  ModulePresentation target;
  GradedMap matrix;
};

/// Degree of a nonzero homogeneous column vector over F (the degree of the
/// element it represents).
int column_degree(const std::vector<Polynomial>& col, const FreeModule& f);

/// True iff matrix * source.relations lands in im(target.relations).
bool is_well_defined(const ModuleMap& phi);

/// Presentation of ker(phi); the embedding records generator images in the
/// source cover.  Throws ConstructionError when phi is not well defined.
ModulePresentation kernel_of_map(const ModuleMap& phi);

/// N / gamma(P) where gamma: P.cover -> N.cover is given on generators.
ModulePresentation cokernel(const GradedMap& gamma, const ModulePresentation& n);

struct PrunedPresentation {
  ModulePresentation module;
  /// old cover -> new cover (identifies the two presented modules).
  GradedMap transform;
};

/// Removes generators that are unit combinations of the others.
PrunedPresentation prune(const ModulePresentation& m);
bool is_zero_module(const ModulePresentation& m);

struct HomModule {
  /// Presentation of Hom(M, R(a)) with embedding into Hom(F_0, R(a)).
  ModulePresentation module;
  int a = 0;
};

/// Hom(M, R(a)) = ker(Hom(F_0, R(a)) -> Hom(F_1, R(a))), minimally generated.
HomModule hom_module(const ModulePresentation& m, int a);

/// Evaluation M -> free module at the generators of Hom(M, R(a)): row i is
/// the i-th generator, landing in R(a + h_i) where h_i is its degree.
GradedMap evaluation_map(const ModulePresentation& m, const HomModule& h);

/// Rank via the leading coefficient of the Hilbert polynomial times r!.
int rank_from_hilbert(const ModulePresentation& m);

/// Torsion-freeness: the evaluation map M -> M^** is injective.
bool is_torsion_free(const ModulePresentation& m);

struct RankOneEmbedding {
  Ideal ideal;
  /// Degree-0 map M -> R(k) on generators.
  GradedMap phi;
  bool saturated = false;
};

/// M ≅ I(k) for a saturated ideal I; throws ConstructionError("torsion
/// cokernel") when the degree-0 map to R(k) has a kernel, or when the rank
/// is not one.
RankOneEmbedding embed_rank1(const ModulePresentation& m, int k);

struct RandomMap {
  /// P.cover -> N.cover.
  GradedMap matrix;
  /// dim_K of the degree-0 homomorphisms found.
  int dimension = 0;
  bool zero = false;
};

/// Uniformly random degree-0 homomorphism P -> N (well defined on P's
/// relations), deterministic per seed.
RandomMap random_graded_map(const ModulePresentation& p, const ModulePresentation& n,
                            const Seed& seed);

/// coker((phi, -psi): K -> A + B), including the relations of A and B.
ModulePresentation pushout(const ModulePresentation& a, const ModulePresentation& b,
                           const GradedMap& phi, const GradedMap& psi);

/// Ext^c(R/I, R(-r-1)) from a minimal resolution of R/I with pd = c.
/// Throws DomainError("not CM") otherwise.
ModulePresentation canonical_module(const Resolution& quotient_res, int c);

/// Presentation of the free module or ideal twisted as a module.
ModulePresentation ideal_module(const Ideal& i, int twist = 0);
/// Direct sum of presentations.
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);

HilbertSeries hilbert_series(const ModulePresentation& m);

}  // namespace acm
