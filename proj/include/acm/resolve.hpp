#pragma once

// Graded free resolutions and the chain-complex toolkit built on them:
// Schreyer resolutions, minimalization, Betti tables, chain-map lifting,
// mapping cones, Koszul complexes and tensor products.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acm/gb.hpp"
#include "acm/module.hpp"

namespace acm {

/// (homological index i, twist a) -> number of R(-a) summands in F_i.
class BettiTable {
 public:
  BettiTable() = default;
  /// Table of the modules F_0, F_1, ..., labelled first_index, first_index + 1, ...
  static BettiTable from_modules(const std::vector<FreeModule>& modules, int first_index);

  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  int at(int i, int a) const;
  int total(int i) const;
  bool empty() const { return entries_.empty(); }
  int min_index() const;
  int max_index() const;

  void add(int i, int a, int count);
  /// Table of M(k): twist a becomes a - k.
  BettiTable shifted(int k) const;
  /// Keeps only indices >= first.
  BettiTable from_index(int first) const;
  BettiTable operator+(const BettiTable& other) const;
  bool operator==(const BettiTable&) const = default;

  /// Macaulay-style text: a header of indices, a "total:" row, then one row
  /// per value of a - i with "." for zero entries.
  std::string render() const;

 private:
  std::map<std::pair<int, int>, int> entries_;
};

/// A finite complex of graded free modules F_0 <- F_1 <- ... <- F_n.
/// For a resolution of M, F_0 is the free cover of M.
struct Resolution {
  RingPtr ring;
  std::vector<FreeModule> modules;
  /// maps[i]: modules[i + 1] -> modules[i].
  std::vector<GradedMap> maps;
  bool minimal = false;
  /// False when a length cap stopped the computation early.
  bool complete = true;

  /// Index of the last nonzero module (-1 for the zero complex).
  int length() const;
  /// True iff consecutive maps compose to zero.
  bool is_complex() const;
  /// True iff no map has a nonzero constant entry.
  bool has_no_units() const;
  /// Betti table with F_0 labelled first_index.
  BettiTable betti(int first_index = 0) const;
};

/// Resolution of coker(relations: F_1 -> F_0) by iterated Schreyer syzygies.
/// max_len caps the number of maps (default: number of variables).
Resolution free_resolution(const ModulePresentation& m, int max_len = -1);
/// Resolution of R/I.
Resolution resolve_quotient(const RingPtr& ring, const std::vector<Polynomial>& gens, int max_len = -1);

/// Cancels unit entries (lowest map first, column-major scan) until none remain.
Resolution minimalize(const Resolution& res);

/// Minimal Betti table of the ideal I from a resolution of R/I (F_0 = R
/// dropped, F_1 labelled 1).
BettiTable ideal_betti(const Resolution& quotient_res);
/// Minimal Betti table of a module from its resolution, cover labelled 1.
BettiTable module_betti(const Resolution& res);

/// Lifts gamma0: G_0 -> F_0 to a chain map between resP (G) and resN (F):
/// delta_j gamma_j = gamma_{j-1} Delta_j.  Throws ConstructionError("not a
/// homomorphism into N") when the relations of P do not land in those of N.
std::vector<GradedMap> lift_chain_map(const GradedMap& gamma0, const Resolution& resP,
                                      const Resolution& resN);

/// Mapping cone of a chain map; resolves coker(gamma) when gamma_0 induces an
/// injective map on the resolved modules.  C_0 = F_0, C_j = G_{j-1} + F_j with
/// differential [[Delta_{j-1}, 0], [(-1)^(j+1) gamma_{j-1}, delta_j]].
Resolution mapping_cone(const std::vector<GradedMap>& gammas, const Resolution& resP,
                        const Resolution& resN);

/// Koszul complex of forms f_1..f_t: K_j = exterior power with standard
/// signs, K_0 = R.  Basis of K_j is the j-subsets in lexicographic order.
Resolution koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& forms);

struct TensorBlock {
  int i;  // index in the first complex
  int j;  // index in the second complex
  int offset;
  int size;
};

struct TensorComplex {
  Resolution complex;
  /// blocks[h] lists the summands A_i (x) B_j of T_h in order.
  std::vector<std::vector<TensorBlock>> blocks;
};

/// Total complex with differential (d_A (x) 1) + (-1)^i (1 (x) d_B).
TensorComplex tensor_complexes(const Resolution& a, const Resolution& b);

}  // namespace acm
