#pragma once

// Construction of ACM schemes as cokernels of injective maps P -> N between
// torsion-free graded modules, the syzygy variant starting from an ACM
// scheme X, certification of the output, and the codimension-two variants
// (Serre-style extensions, infinitesimal neighbourhoods, twists).

#include <optional>
#include <string>
#include <vector>

#include "acm/hilbert.hpp"
#include "acm/modops.hpp"
#include "acm/resolve.hpp"

namespace acm {

/// N = ker(delta_j) in the minimal resolution of I_X: generated by F_{j+1},
/// presented by delta_{j+2}, embedded in F_j via delta_{j+1}.
/// Requires 1 <= j <= pd(I_X) - 1.
ModulePresentation syzygy_module(const Ideal& ix, int j);

struct HypothesisReport {
  int pd_p = 0;
  int pd_n = 0;
  /// pd(P) + 2.
  int s = 0;
  bool h1 = false;
  bool h2 = false;
  bool h3 = false;
  int k = 0;
  bool rank_ok = false;
  /// Degree of p(t).
  int p_degree = -1;
  bool pass = false;
  std::string diagnosis;
};

/// h1: P torsion-free with pd(P) <= r - 2.  h2: N torsion-free with
/// pd(N) <= pd(P) + 1.  h3: rank(N) = rank(P) + 1 and the degree bound on p(t).
HypothesisReport verify_hypotheses(const ModulePresentation& p, const ModulePresentation& n);

struct ConstructionCertificate {
  HypothesisReport hypotheses;
  std::uint64_t seed = 0;
  /// Attempts consumed (1 on a first-try success).
  int attempts = 0;
  int k = 0;
  GradedMap gamma;
  Ideal id;
  BettiTable betti_p;
  BettiTable betti_n;
  /// Minimal Betti table of I_D(k).
  BettiTable betti_id;
  /// Minimalized mapping cone of the lifted chain map.
  BettiTable betti_cone;
  int codim = 0;
  int pd_quotient = 0;
  bool acm = false;
  bool cone_equals_direct = false;
  int min_generators = 0;
  bool generator_bound = false;
  bool summand_bound = false;
  int cm_type_d = 0;
  bool gorenstein_d = false;

  /// Present when the run started from X.
  std::optional<Ideal> x;
  bool contains_x = false;
  int cm_type_x = 0;
  bool gorenstein_x = false;
  bool cm_type_bound = false;
  /// HS(omega_D(-k)) = HS(E) + HS(omega_X).
  std::optional<bool> dual_sequence;

  bool pass() const;
};

struct ConstructOptions {
  Seed seed{0};
  int retries = 8;
};

/// Random degree-0 gamma: P -> N until the cokernel embeds as I_D(k); then
/// certifies the result.  Throws ConstructionError on hypothesis failure or
/// when every attempt fails ("retries exhausted: <last failure>").
ConstructionCertificate construct_acm(const ModulePresentation& n, const ModulePresentation& p,
                                      const ConstructOptions& opts = {});

/// construct_acm with N the j-th syzygy module of X (j = 0 picks t - s,
/// s = pd(P) + 2), plus the containment and CM-type checks.  The dualizing
/// sequence is checked only when j = t - s.
ConstructionCertificate construct_from_x(const Ideal& ix, const ModulePresentation& p,
                                         const ConstructOptions& opts = {}, int j = 0);

struct CmComparison {
  bool contains_x = false;
  int cm_type_x = 0;
  int cm_type_d = 0;
  /// cm_type(X) <= cm_type(D).
  bool cm_type_bound = false;
  bool gorenstein_x = false;
  bool gorenstein_d = false;
};

/// Containment and CM-type comparison of a candidate D against X.
CmComparison compare_with(const Ideal& id, const Ideal& ix);

/// Rank of the last module in the minimal resolution of R/I.
int cm_type(const Ideal& i);

/// Series of E in 0 -> E -> omega_D(-k) -> omega_X -> 0, E = Ext^{s-2}(P, omega)
/// for s >= 3 and coker(Hom(N, omega) -> Hom(P, omega)) for s = 2.
HilbertSeries dual_kernel_series(const ModulePresentation& p, const ModulePresentation& n,
                                 const GradedMap& gamma, int s);

struct SplitReport {
  bool psi_zero = false;
  /// Minimal Betti table of N equals that of P plus that of I_D.
  bool additive = false;
  BettiTable betti_n;
  BettiTable expected;
};

/// N = push-out of H_1 and P along psi: K -> P, K = ker(H_1 -> I_D), with
/// psi random (or zero when zero_psi); reports Betti additivity.
SplitReport split_dichotomy_test(const Ideal& id, const FreeModule& p, const Seed& seed,
                                 bool zero_psi = false);

struct SerreReport {
  ModulePresentation n;
  /// psi: H_2 -> R(c - r - 1) on generators.
  GradedMap psi;
  BettiTable betti_n;
  int pd_n = 0;
  /// H_2 is R(c - r - 1).
  bool h2_is_line_bundle = false;
  int attempts = 0;
};

/// Rank-two extension 0 -> R(c - r - 1) -> N -> I_D -> 0 from a random
/// psi that does not factor through H_2 -> H_1.
SerreReport serre_codim2(const Ideal& id, int c, const Seed& seed, int retries = 8);

struct InfinitesimalReport {
  ConstructionCertificate certificate;
  /// I_D is contained in I_Y^2.
  bool in_square = false;
};

/// construct_acm with N = I_Y + I_Y and P = R(-m).
InfinitesimalReport infinitesimal_double(const Ideal& iy, int m, const ConstructOptions& opts = {});
/// Same with an arbitrary free P.
InfinitesimalReport infinitesimal_double(const Ideal& iy, const FreeModule& p,
                                         const ConstructOptions& opts = {});

struct TwistReport {
  int d = 0;
  bool epsilon_injective = false;
  HilbertSeries coker_series;
  HilbertSeries expected_series;
  bool pass = false;
};

/// Builds N from psi and N' from f psi, the map N -> N' given by (1, f) on
/// generators, and compares its cokernel with O_S(c + d - r - 1).
TwistReport twist_extension(const Ideal& id, int c, const Polynomial& f, const Seed& seed,
                            int retries = 8);

struct KoszulReport {
  /// X = D cut by the forms.
  Ideal x;
  ModulePresentation p;
  ModulePresentation n;
  int k = 0;
  Ideal reconstructed;
  bool matches = false;
};

/// Recovers D from X = D n V(f_1..f_t) through the tensor-product
/// resolution; P and N come from the split of G_{t+j}.
KoszulReport koszul_reconstruct(const Ideal& id, const std::vector<Polynomial>& forms);

}  // namespace acm
