#pragma once

// Graded free modules, homogeneous matrices between them, and finitely
// presented graded modules.
//
// Twist convention: a FreeModule with twists {a_1, ..., a_n} is
// R(-a_1) + ... + R(-a_n); its i-th basis vector sits in degree a_i.  A
// degree-0 map F -> G with source twists a_j and target twists b_i has entry
// (i, j) homogeneous of degree a_j - b_i (zero when negative).

#include <optional>
#include <vector>

#include "acm/ring.hpp"

namespace acm {

struct FreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  bool empty() const { return twists.empty(); }
  /// F(k): every twist a becomes a - k.
  FreeModule shifted(int k) const;
  FreeModule operator+(const FreeModule& other) const;  // direct sum
  bool operator==(const FreeModule&) const = default;
};

class GradedMap {
 public:
  GradedMap() = default;
  /// Zero map.
  GradedMap(RingPtr ring, FreeModule source, FreeModule target);
  /// Column-major entries (entries[col * rows + row]); validated.
  GradedMap(RingPtr ring, FreeModule source, FreeModule target,
            std::vector<Polynomial> entries);
  /// One column per element; each column is a component list of the target.
  static GradedMap from_columns(RingPtr ring, FreeModule source, FreeModule target,
                                const std::vector<std::vector<Polynomial>>& columns);
  static GradedMap identity(RingPtr ring, const FreeModule& f);

  const RingPtr& ring() const { return ring_; }
  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }

  const Polynomial& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(col) * rows() + row];
  }
  /// Sets one entry, checking its degree.
  void set(int row, int col, Polynomial value);

  std::vector<Polynomial> column(int col) const;
  std::vector<Polynomial> row(int r) const;

  /// this ∘ other.
  GradedMap compose(const GradedMap& other) const;
  GradedMap operator+(const GradedMap& other) const;
  GradedMap operator-(const GradedMap& other) const;
  GradedMap scaled(Coeff c) const;
  /// Hom(-, R(-n)) of this map: source and target swap, twists become n - a.
  GradedMap dual(int n) const;
  /// Same matrix between the twisted modules F(k) -> G(k).
  GradedMap shifted(int k) const;

  /// Keeps the listed rows and columns, in the given order.
  GradedMap submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// [a | b]: common target, sources concatenated.
  static GradedMap hconcat(const GradedMap& a, const GradedMap& b);
  /// [a ; b]: common source, targets concatenated.
  static GradedMap vconcat(const GradedMap& a, const GradedMap& b);
  /// Block diagonal a + b.
  static GradedMap direct_sum(const GradedMap& a, const GradedMap& b);

  bool is_zero() const;
  /// First nonzero constant entry in column-major scan order, if any.
  std::optional<std::pair<int, int>> first_unit() const;

  /// Throws DomainError if any entry has the wrong degree.
  void validate() const;

  bool operator==(const GradedMap& other) const;

 private:
  RingPtr ring_;
  FreeModule source_;
  FreeModule target_;
  std::vector<Polynomial> entries_;
};

/// Checks that entry (row, col) may hold `value`.
bool degree_compatible(const Polynomial& value, int source_twist, int target_twist);

/// Image of a graded module inside an ambient free module.
struct Embedding {
  FreeModule ambient;
  /// ambient <- cover; column i is the image of generator i.
  GradedMap images;
};

/// coker(relations: F_1 -> F_0), with F_0 = cover.
struct ModulePresentation {
  RingPtr ring;
  FreeModule cover;
  GradedMap relations;
  std::optional<Embedding> embedding;

  static ModulePresentation free(RingPtr ring, FreeModule f);
  static ModulePresentation cokernel_of(GradedMap relations);

  int num_generators() const { return cover.rank(); }
  bool is_free_presentation() const { return relations.is_zero(); }
  /// M(k).
  ModulePresentation shifted(int k) const;
};

}  // namespace acm
