#ifndef HH_HOPF_HPP
#define HH_HOPF_HPP

#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/coalgebra.hpp"
#include "hh/matrix.hpp"

namespace hh {

/// Finite-dimensional Hopf algebra over Q. Algebra and coalgebra share the
/// basis; the antipode is a dim × dim matrix.
struct HopfAlgebra {
  Algebra alg;
  Coalgebra coa;
  Matrix antipode;

  std::size_t dim() const { return alg.dim; }
  const Matrix& comult() const { return coa.comult; }
  const Matrix& counit() const { return coa.counit; }
  const Matrix& mult() const { return alg.mult; }
  const Matrix& unit() const { return alg.unit; }

  /// Validates everything; throws on failure.
  static HopfAlgebra make(Algebra alg, Coalgebra coa, Matrix antipode);
  /// Shape checks only — validate_hopf reports axiom failures.
  static HopfAlgebra make_unchecked(Algebra alg, Coalgebra coa, Matrix antipode);
  static HopfAlgebra scalars();
};

struct AxiomCheck {
  std::string axiom;
  bool pass;
  std::string counterexample; // empty when pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// Checks associativity, unit, coassociativity, counit, bialgebra
/// compatibility and the antipode axiom; reports the first failing basis
/// tuple per axiom.
ValidationReport validate_hopf(const HopfAlgebra& h);

/// R_H = ker(Δ − τ∘Δ), the subalgebra of cocommutative elements, with its
/// induced algebra structure and R_H⁺ = R_H ∩ ker ε.
struct CocommutativeSubalgebra {
  Subspace space;
  Subspace plus_part;
  Subalgebra sub; // induced multiplication and unit, inclusion matrix
};
CocommutativeSubalgebra compute_R_H(const HopfAlgebra& h);

/// C_H = coker(m − m∘τ) with the induced coalgebra structure and the trace
/// projection π_H.
struct TraceCoalgebra {
  Quotient quotient;
  Matrix pi; // = quotient.projection()
  Coalgebra coa;
};
TraceCoalgebra compute_C_H(const HopfAlgebra& h);

/// R_H⁺·H = H⁺ = ker ε, as subspaces.
bool has_enough_cocommutative_elements(const HopfAlgebra& h);

bool is_cosemisimple(const Coalgebra& c);

/// Transpose-dual Hopf algebra on the dual basis.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

struct InvolutionReport {
  bool s_squared_is_id;
  /// Σ h₂ S h₁ = ε(h)1 = Σ S h₂ · h₁ on every basis vector.
  bool twisted_counit_identity;
};
InvolutionReport is_involutive_antipode(const HopfAlgebra& h);

/// Subspace of H* of all α with α(xy) = α(yx); equals R_{H*}.
Subspace trace_maps(const Algebra& a);

/// H⁺ = ker ε.
Subspace augmentation_ideal(const HopfAlgebra& h);

} // namespace hh

#endif
