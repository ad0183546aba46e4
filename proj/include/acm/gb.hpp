#pragma once

// Gröbner bases of graded submodules of free modules (Buchberger with the
// normal selection strategy), division with quotient tracking, and Schreyer
// syzygies.

#include <memory>
#include <optional>
#include <vector>

#include "acm/module.hpp"

namespace acm {

/// A free module together with a monomial order on its terms m*e_i.
///
/// Terms are compared by: block (lower block is larger), weighted degree
/// deg(m) + twist(i), degrevlex of m * weight(i), then generator rank (lower
/// rank is larger).  With unit weights and rank = index this is the
/// term-over-position order; Schreyer orders store the induced lead monomials
/// as weights.
class OrderedModule {
 public:
  static std::shared_ptr<const OrderedModule> term_over_position(RingPtr ring,
                                                                 const FreeModule& f);
  /// Elimination order: every term in block b beats every term in block b+1.
  static std::shared_ptr<const OrderedModule> with_blocks(RingPtr ring, const FreeModule& f,
                                                          std::vector<int> blocks);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int i) const { return twists_[static_cast<std::size_t>(i)]; }
  int block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  const Monomial& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  int position(int i) const { return ranks_[static_cast<std::size_t>(i)]; }
  FreeModule free_module() const { return FreeModule{twists_}; }
  bool is_schreyer() const { return schreyer_; }

  std::strong_ordering compare(const Monomial& m, int i, const Monomial& n, int j) const;

 private:
  friend struct SchreyerBuilder;
  OrderedModule() = default;

  RingPtr ring_;
  std::vector<int> twists_;
  std::vector<int> blocks_;
  std::vector<Monomial> weights_;
  std::vector<int> ranks_;
  bool schreyer_ = false;
};

using ModulePtr = std::shared_ptr<const OrderedModule>;

struct ModTerm {
  Coeff coeff;
  Monomial mono;
  int comp;
  bool operator==(const ModTerm&) const = default;
};

/// Element of an ordered free module; terms strictly descending.
class FreeElem {
 public:
  FreeElem() = default;
  explicit FreeElem(ModulePtr ambient) : ambient_(std::move(ambient)) {}

  /// Builds from one polynomial per generator; checks degree compatibility.
  static FreeElem from_components(ModulePtr ambient, const std::vector<Polynomial>& comps);
  static FreeElem basis(ModulePtr ambient, int i);

  const ModulePtr& ambient() const { return ambient_; }
  const std::vector<ModTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModTerm& lead() const { return terms_.front(); }
  /// Degree of the (homogeneous) element; throws on zero.
  int degree() const;

  std::vector<Polynomial> components() const;

  FreeElem operator+(const FreeElem& g) const { return add_scaled(g, 1, ambient_->ring()->one()); }
  FreeElem operator-(const FreeElem& g) const;
  /// this + c * m * g.
  FreeElem add_scaled(const FreeElem& g, Coeff c, const Monomial& m) const;
  FreeElem times_term(Coeff c, const Monomial& m) const;
  FreeElem times(const Polynomial& f) const;
  FreeElem monic() const;
  /// Keeps only the terms whose component lies in [first, first + count),
  /// re-indexed into `target`.
  FreeElem restrict(int first, int count, ModulePtr target) const;

  bool operator==(const FreeElem& g) const { return terms_ == g.terms_; }

 private:
  friend FreeElem make_elem(ModulePtr, std::vector<ModTerm>);
  ModulePtr ambient_;
  std::vector<ModTerm> terms_;
};

/// Sorts and merges raw terms into an element.
FreeElem make_elem(ModulePtr ambient, std::vector<ModTerm> terms);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(ModulePtr ambient, std::vector<FreeElem> elements)
      : ambient_(std::move(ambient)), elements_(std::move(elements)) {}

  const ModulePtr& ambient() const { return ambient_; }
  const std::vector<FreeElem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::vector<int> degrees() const;

 private:
  ModulePtr ambient_;
  std::vector<FreeElem> elements_;
};

struct Reduction {
  FreeElem remainder;
  /// f = sum quotients[i] * G[i] + remainder (empty unless tracking).
  std::vector<Polynomial> quotients;
};

/// Full division: the remainder has no term divisible by a lead term of G.
Reduction reduce(const FreeElem& f, const GroebnerBasis& g, bool track = false);
/// Division by an arbitrary element list (used before a basis is complete).
Reduction reduce_by(const FreeElem& f, const std::vector<FreeElem>& divisors, bool track);

/// Reduced, monic Gröbner basis of the submodule generated by `gens`.
GroebnerBasis buchberger(ModulePtr ambient, const std::vector<FreeElem>& gens);

bool submodule_contains(const FreeElem& f, const GroebnerBasis& g);

/// S-element of two basis elements with lead terms in the same component.
FreeElem s_element(const FreeElem& f, const FreeElem& g);

struct SyzygyResult {
  /// Basis elements in the order used for the new module's generators
  /// (sorted by lead component, then lead monomial lex-descending).
  std::vector<FreeElem> generators;
  /// Schreyer-ordered free module, one generator per element of `generators`.
  ModulePtr module;
  /// Minimal Gröbner basis of the syzygy module w.r.t. the Schreyer order.
  std::vector<FreeElem> syzygies;
};

/// Schreyer syzygies of a Gröbner basis (need not be reduced).
SyzygyResult schreyer_syzygies(ModulePtr ambient, std::vector<FreeElem> basis);
SyzygyResult syzygy_basis(const GroebnerBasis& g);

/// Matrix-level linear algebra over R backed by elimination Gröbner bases.
class ImageSolver {
 public:
  explicit ImageSolver(const GradedMap& a);

  /// x with A x = b, or nullopt when b is not in the image.
  std::optional<std::vector<Polynomial>> solve(const std::vector<Polynomial>& b) const;
  bool contains(const std::vector<Polynomial>& b) const;
  /// Generators of ker A (as columns over A's source).
  std::vector<std::vector<Polynomial>> kernel() const;

 private:
  GradedMap map_;
  ModulePtr combined_;
  GroebnerBasis basis_;
};

/// Submodule membership for columns of a matrix: b in im(A)?
class ImageMembership {
 public:
  explicit ImageMembership(const GradedMap& a);
  bool contains(const std::vector<Polynomial>& b) const;
  const GroebnerBasis& basis() const { return basis_; }

 private:
  ModulePtr ambient_;
  GroebnerBasis basis_;
};

std::vector<std::vector<Polynomial>> kernel_generators(const GradedMap& a);

}  // namespace acm
