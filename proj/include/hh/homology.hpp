#ifndef HH_HOMOLOGY_HPP
#define HH_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "hh/galois.hpp"
#include "hh/rep.hpp"

namespace hh {

/// Truncated chain complex: spaces in degrees 0..top with differentials
/// d[n] : C_n → C_{n−1} for 1 ≤ n ≤ top.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d; // d[0] unused
  std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
  void check() const; // d ∘ d = 0
};

/// Homology at one degree with canonical (RREF-complement) representatives.
struct HomologyDegree {
  std::size_t chain_dim = 0;
  Subspace cycles;
  Subspace boundaries;
  Quotient quot; // boundaries inside cycle coordinates
  Matrix rep;    // chain_dim × dim(), columns are representative cycles
  std::size_t dim() const { return quot.dim(); }
  /// Homology coordinates of a cycle; throws if not a cycle.
  Matrix project(const Matrix& cycle) const;
};

struct Homology {
  std::vector<HomologyDegree> deg; // 0..top−1
  std::vector<std::size_t> dims() const;
};

Homology homology(const ChainComplex& c);

/// Induced map on homology of a chain-level F : C_n → C_m ⊗ W. Checks that
/// F carries cycles into cycles⊗W and boundaries into boundaries⊗W.
Matrix descend_map(const Matrix& f, const HomologyDegree& from, const HomologyDegree& to,
                   std::size_t w = 1);

/// C_n(R,X) = X ⊗ R^{⊗n} with the standard b differential, up to degree
/// n_max (build with n_max = N+1 for exact homology through degree N).
ChainComplex hochschild_complex(const Algebra& r, const Bimodule& x, std::size_t n_max);

/// M as a bimodule over a subalgebra of A.
Bimodule restrict_bimodule(const HopfBimodule& m, const Subalgebra& sub);
/// M as a bimodule over A itself.
Bimodule ambient_bimodule(const Algebra& a, const HopfBimodule& m);

/// ρ_n(M) : C_n(B,M) → C_n(B,M) ⊗ H, coacting through the coefficients.
Matrix chain_coaction_B(const HopfBimodule& m, std::size_t nh, std::size_t bdim,
                        std::size_t n);

/// ϱ_n(M) : C_n(A,M) → C_n(A,M) ⊗ C_H, the diagonal coaction pushed through
/// π_H.
Matrix chain_coaction_A(const ComoduleAlgebra& e, const HopfBimodule& m,
                        const TraceCoalgebra& ch, std::size_t n);

/// Homology of C(B,M) with the descended H- and C_H-coactions and the
/// Z₀ = Z(A)∩B action.
struct StructuredHomologyB {
  Homology hom;
  std::vector<Matrix> coaction_h; // H_n → H_n ⊗ H
  std::vector<Matrix> coaction_c; // H_n → H_n ⊗ C_H
  std::vector<std::vector<Matrix>> z0_action; // per degree, per Z₀ basis
  Subspace z0;
};
StructuredHomologyB induced_coaction_on_HH_B(const ComoduleAlgebra& e,
                                             const HopfBimodule& m, std::size_t n_max);

/// Homology of C(A,M) with the descended C_H-coaction and Z₀-action.
struct StructuredHomologyA {
  Homology hom;
  std::vector<Matrix> coaction_c;
  std::vector<std::vector<Matrix>> z0_action;
  Subspace z0;
};
StructuredHomologyA coaction_on_HH_A(const ComoduleAlgebra& e, const HopfBimodule& m,
                                     std::size_t n_max);

/// Chain operators m ↦ Σ a″ m a′ on coefficients, built from the central
/// β_Z certificates of a centrally Galois extension.
struct CentralChainAction {
  std::vector<std::vector<std::pair<Matrix, Matrix>>> certificates; // per H basis
  /// Σ_j a″_j (−) a′_j ⊗ id on M ⊗ (tail); h in H coordinates.
  Matrix chain_op(const HopfBimodule& m, std::size_t tail_dim, const Matrix& h) const;
};

/// The UM action on HH_n(B,M) realized through the certificate chain maps
/// (centrally Galois only); degree 0 is checked against the κ-formula action.
struct UMHomologyAction {
  bool supported = false;
  std::string message;
  Homology hom; // of C(B,M)
  std::vector<std::vector<Matrix>> action; // per degree ≤ N, per H basis
  bool degree0_matches_um = false;
};
UMHomologyAction induced_um_action_on_HH_B(const ComoduleAlgebra& e, const HopfBimodule& m,
                                           std::size_t n_max);

struct TorResult {
  ChainComplex bar;
  Homology hom;
  std::vector<std::size_t> dims;
};
/// Tor^R(X, Y) through the truncated bar resolution X ⊗ R^{⊗p} ⊗ Y.
TorResult tor(const RightModule& x, const LeftModule& y, std::size_t n_max);

/// Q as the trivial right module over a subalgebra of H, acting through ε.
RightModule trivial_right_module(const Subalgebra& sub_of_h, const Matrix& counit_h);

struct TorCoactionReport {
  bool ok = false;
  std::vector<std::size_t> dims;
  std::string message;
};
/// The C-coaction on Tor_*^R(X, M) for M in _R M^C: chain-level coaction
/// through M, descent, and per-degree comodule axioms.
TorCoactionReport tor_coaction_check(const RightModule& x, const RModComodule& m,
                                     std::size_t n_max);

struct PhiReport {
  bool well_defined = false;
  bool bijective = false;
  std::size_t domain_dim = 0, codomain_dim = 0;
  Matrix matrix; // on the quotient domain
  std::string message;
};
/// Degree-0 edge map φ(M) : K ⊗_{R_H} (M_B □ V) → M_A □ V.
PhiReport edge_map(const GaloisExtension& g, const HopfBimodule& m,
                       const LeftComodule& v);

struct DegreeReport {
  std::size_t lhs = 0, rhs = 0;
  bool bijective = false;
};
struct TheoremReport {
  bool applicable = false;
  bool pass = false;
  std::vector<DegreeReport> degrees;
  std::string message;
};

/// K ⊗_{R_H} HH_n(B, M□V) ≅ HH_n(A,M) □ V through the lifted edge maps.
TheoremReport verify_edge_collapse(const ComoduleAlgebra& e, const HopfBimodule& m,
                                    const LeftComodule& v, std::size_t N);

/// HH_n(A,M)^G ≅ p₁·HH_n(B, M^G) for a classical G-Galois action.
TheoremReport verify_group_invariants(const ComoduleAlgebra& e, const GroupAction& action,
                                      const HopfBimodule& m, std::size_t N);

/// HH_n(A,M)□V ≅ HH_n(B, M□V) for centrally Galois extensions and
/// Z-symmetric M.
TheoremReport verify_cotensor_comparison(const ComoduleAlgebra& e, const HopfBimodule& m,
                                  const LeftComodule& v, std::size_t N);

/// HH_n(A,M) ≅ Z ⊗_{Z′} HH_n(B, M^coH).
TheoremReport verify_center_descent(const ComoduleAlgebra& e, const HopfBimodule& m,
                                  std::size_t N);

/// The certificate-induced action equals ε(h)·id on HH_n(B,M) for Z-symmetric M over a
/// centrally Galois extension.
TheoremReport verify_central_action_trivial(const ComoduleAlgebra& e, const HopfBimodule& m,
                                  std::size_t N);

/// Cyclic bicomplex CC(A) (b / −b′ columns, 1−t / N rows) and the homology
/// of its total complex.
struct CyclicResult {
  ChainComplex tot; // degrees 0..N+1
  Homology hom;
  std::vector<std::size_t> hc_dims; // 0..N
  std::vector<std::vector<std::size_t>> block_q; // per degree: q of each block
  std::vector<std::vector<std::size_t>> block_offset;
};
CyclicResult cyclic_complex(const Algebra& a, std::size_t N);

/// HC_n(A)^coH ≅ HC_n(B), with chain-level colinearity checks for t, s, b,
/// b′ and the Connes operators.
TheoremReport verify_cyclic_coinvariants(const ComoduleAlgebra& e, std::size_t N);

} // namespace hh

#endif
