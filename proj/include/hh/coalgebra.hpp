#ifndef HH_COALGEBRA_HPP
#define HH_COALGEBRA_HPP

#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/matrix.hpp"

namespace hh {

/// Finite-dimensional coalgebra: comultiplication as a dim² × dim matrix on
/// the lexicographic tensor basis, counit as a 1 × dim row.
struct Coalgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix comult; // dim² × dim
  Matrix counit; // 1 × dim

  static Coalgebra make(std::vector<std::string> labels,
                        const std::vector<StructureEntry>& entries,
                        const Matrix& counit);
  static Coalgebra make_unchecked(std::vector<std::string> labels, Matrix comult,
                                  Matrix counit);

  bool is_cocommutative() const;
  /// Dual algebra on the dual basis: mult = comultᵀ, unit = counitᵀ.
  Algebra dual_algebra() const;
  void check() const;
};

/// Right comodule ρ : M → M ⊗ C.
struct Comodule {
  Coalgebra over;
  std::size_t dim = 0;
  Matrix coaction; // (dim·c) × dim
  void check() const;
  /// ρ(m) = m ⊗ g for a grouplike g.
  static Comodule trivial(const Coalgebra& c, const Matrix& grouplike, std::size_t dim);
};

/// Left comodule ρ : V → C ⊗ V.
struct LeftComodule {
  Coalgebra over;
  std::size_t dim = 0;
  Matrix coaction; // (c·dim) × dim
  void check() const;
  static LeftComodule regular(const Coalgebra& c); // V = C with Δ
  static LeftComodule trivial(const Coalgebra& c, const Matrix& grouplike, std::size_t dim);
};

} // namespace hh

#endif
