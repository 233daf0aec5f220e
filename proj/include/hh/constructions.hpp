#ifndef HH_CONSTRUCTIONS_HPP
#define HH_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hh/hopf.hpp"
#include "hh/rep.hpp"

namespace hh {

/// Finite group by its multiplication table. table[g][h] = g·h.
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;

  static FiniteGroup make(std::vector<std::string> names,
                          std::vector<std::vector<std::size_t>> table);
  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric(std::size_t n); // n ≤ 4 is plenty here
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
  void check() const;
};

/// Conjugacy classes, the e_σ basis of C_{QG} and the p_σ idempotents of
/// R_{(QG)*}.
struct ConjugacyData {
  std::vector<std::vector<std::size_t>> classes; // sorted representatives first
  /// class index of each element
  std::vector<std::size_t> class_of;
};
ConjugacyData conjugacy_classes(const FiniteGroup& g);

/// QG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfAlgebra group_algebra(const FiniteGroup& g);

/// (QG)* on the dual basis p_x: p_x p_y = δ_{x,y} p_x,
/// Δ(p_x) = Σ_g p_{xg⁻¹} ⊗ p_g, ε(p_x) = δ_{x,1}, S(p_x) = p_{x⁻¹}.
HopfAlgebra dual_group_algebra(const FiniteGroup& g);

/// G-graded algebra: degree label per basis vector. Strong check is
/// A_g·A_h = A_{gh} for all pairs.
struct GradedAlgebra {
  Algebra alg;
  FiniteGroup group;
  std::vector<std::size_t> degree; // per basis vector
  std::vector<Subspace> component;
  bool strongly_graded = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};
GradedAlgebra graded_algebra(const Algebra& a, const FiniteGroup& g,
                             const std::vector<std::size_t>& degree);

/// The QG-comodule algebra of a strongly graded algebra, ρ(a_g) = a_g ⊗ g.
/// Throws when the grading is not strong, naming the failing pair.
ComoduleAlgebra strongly_graded(const GradedAlgebra& g);

/// A group action by algebra automorphisms, one matrix per group element.
struct GroupAction {
  FiniteGroup group;
  std::vector<Matrix> act;
  void check(const Algebra& a) const; // automorphisms forming a G-action
};

/// The (QG)*-comodule algebra of a G-action, ρ(a) = Σ_x x(a) ⊗ p_x.
ComoduleAlgebra action_comodule_algebra(const Algebra& a, const GroupAction& action);

/// Q[t]/(t² − d) with the conjugation Z/2-action and its (Q[Z/2])*-comodule
/// structure. d must be square-free (trial division up to 10^4) and ≠ 0, 1.
struct QuadraticExtension {
  ComoduleAlgebra ext;
  GroupAction action;
};
QuadraticExtension galois_field_extension_sqrt(long d);

/// Q[s,t]/(s²−p, t²−q), basis {1, s, t, st}.
Algebra biquadratic_field(long p, long q);

/// M_n(Q) on the E_pq basis (row-major).
Algebra matrix_algebra(std::size_t n);

/// Conjugation action of Z/k by an invertible u with u^k central.
GroupAction inner_action(const Algebra& a, const Matrix& u, std::size_t k);

/// Truncated Ore extension T = ⊕_{n ≤ D} A·Xⁿ with Xa = σ(a)X + δ(a).
/// Basis index = n·dim(A) + i for a_i Xⁿ. Products that would exceed degree
/// D are flagged; callers that need exactness must refuse flagged results.
struct OreTruncated {
  ComoduleAlgebra base; // A with its H-coaction
  Matrix sigma;
  Matrix delta;
  std::size_t truncation = 0;
  std::vector<std::vector<Matrix>> reorder; // reorder[n][k] = f_k^{(n)}

  static OreTruncated make(ComoduleAlgebra base, Matrix sigma, Matrix delta,
                           std::size_t truncation);

  std::size_t dim() const { return base.dim() * (truncation + 1); }
  /// Product with overflow flag: second member false when degrees > D were
  /// dropped with nonzero coefficients.
  std::pair<Matrix, bool> multiply(const Matrix& f, const Matrix& g) const;
  /// ρ_T(aXⁿ) = Σ a₀Xⁿ ⊗ a₁, as a matrix (dim·nH) × dim.
  Matrix coaction() const;
  /// Coinvariants of ρ_T; equals the B-span of the Xⁿ.
  Subspace coinvariant_space() const;
};

/// A^σ ∩ A^δ ∩ Z(A): the degree-zero slice of the center of the Ore
/// extension.
Subspace ore_center_slice(const OreTruncated& o);

struct TeExampleReport {
  bool hypotheses_ok = false;
  bool z_prime_subcomodule = false;
  bool coinvariants_match = false;
  bool beta_bijective = false;
  bool centrally_galois = false;
  std::size_t z_prime_dim = 0;
  std::size_t beta_rows = 0, beta_cols = 0;
  /// β-certificates on the slice: per H-basis vector h, pairs (a′, a″) in A
  /// with β_{Z′}(Σ a′⊗a″) = 1⊗h. Reusable by the chain-level operators.
  std::vector<std::vector<std::pair<Matrix, Matrix>>> certificates;
  std::string message;
};
TeExampleReport verify_ore_centrally_galois(const OreTruncated& o);

} // namespace hh

#endif
