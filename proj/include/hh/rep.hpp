#ifndef HH_REP_HPP
#define HH_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hh/coalgebra.hpp"
#include "hh/hopf.hpp"
#include "hh/matrix.hpp"

namespace hh {

/// Algebra A with a colinear multiplicative right H-coaction. Caches the
/// coinvariant subalgebra B = A^coH and its induced structure.
struct ComoduleAlgebra {
  Algebra alg;
  HopfAlgebra hopf;
  Matrix coaction; // (nA·nH) × nA
  Subspace coinv;  // B inside A
  Subalgebra b;    // induced algebra on B with inclusion

  static ComoduleAlgebra make(Algebra alg, HopfAlgebra hopf, Matrix coaction);
  std::size_t dim() const { return alg.dim; }
  std::size_t hdim() const { return hopf.dim(); }
  /// ρ_A as a right comodule; throws on axiom failure.
  void check() const;
};

/// Q as an H-comodule algebra (coaction 1 ↦ 1 ⊗ 1).
ComoduleAlgebra scalar_comodule_algebra(const HopfAlgebra& h);

/// A-bimodule with a right H-coaction satisfying the two Hopf-module
/// compatibilities. Does not own its comodule algebra.
struct HopfBimodule {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> left;  // per A-basis vector
  std::vector<Matrix> right;
  Matrix coaction; // (dim·nH) × dim

  static HopfBimodule canonical(const ComoduleAlgebra& e); // M = A
  Matrix left_act(const Matrix& a) const;
  Matrix right_act(const Matrix& a) const;
  void check(const ComoduleAlgebra& e) const;
};

/// Coinvariants of a right coaction M → M ⊗ H: kernel of ρ − (− ⊗ 1).
Subspace coinvariants(const Matrix& coaction, std::size_t dim, const Matrix& unit_h);

/// X^R for a sub-collection of commuting pairs: the simultaneous kernel of
/// L_r − R_r over a basis of r. left/right act on a dim-dimensional space.
Subspace invariants(const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                    std::size_t dim, const Subspace& r);

/// X_R = X/[R,X] with [R,X] spanned by all r·x − x·r.
Quotient commutator_quotient(const std::vector<Matrix>& left,
                             const std::vector<Matrix>& right, std::size_t dim,
                             const Subspace& r);

/// X ⊗_B Y for a right B-action on X and a left B-action on Y, as a quotient
/// of X ⊗ Y by the balancing relations.
Quotient relative_tensor(std::size_t dim_x, std::size_t dim_y,
                         const std::vector<Matrix>& right_on_x,
                         const std::vector<Matrix>& left_on_y);

/// M □_C V = ker(ρ_M ⊗ V − M ⊗ ρ_V) inside M ⊗ V.
Subspace cotensor(const Matrix& coaction_m, std::size_t dim_m,
                  const Matrix& coaction_v, std::size_t dim_v, std::size_t dim_c);

/// Restriction of a linear action to an invariant subspace, in the
/// subspace's basis coordinates. Throws if the subspace is not invariant.
Matrix restrict_to_subspace(const Matrix& op, const Subspace& s);

/// Object of _R M^C: left R-module whose right C-coaction is R-linear.
struct RModComodule {
  Algebra r;
  Coalgebra c;
  std::size_t dim = 0;
  std::vector<Matrix> act; // left R-action per basis of r
  Matrix coaction;         // (dim·c) × dim
  void check() const;      // module axioms, comodule axioms, R-linearity of ρ
};

struct TensCotensReport {
  bool ok = false;
  std::size_t lhs_dim = 0; // (X ⊗_R M) □_C V
  std::size_t rhs_dim = 0; // X ⊗_R (M □_C V)
  std::string message;
};

/// Verifies (X⊗_R M)□_C V ≅ X⊗_R(M□_C V) through the canonical map,
/// for X a right R-module and V an injective left C-comodule.
TensCotensReport tensor_cotensor_commute_check(const RightModule& x,
                                               const RModComodule& m,
                                               const LeftComodule& v);

} // namespace hh

#endif
