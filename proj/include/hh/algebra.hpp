#ifndef HH_ALGEBRA_HPP
#define HH_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hh/matrix.hpp"

namespace hh {

/// One structure-constant entry: the (i,j)-product (or the comultiplication
/// of e_i) has coefficient value on the k-indexed basis slot.
struct StructureEntry {
  std::size_t i, j, k;
  Rational value;
};

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants on a labeled basis. Multiplication is a dim × dim² matrix on
/// the lexicographic tensor basis (left factor major).
struct Algebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix mult; // dim × dim²
  Matrix unit; // dim × 1

  static Algebra make(std::vector<std::string> labels,
                      const std::vector<StructureEntry>& entries,
                      const Matrix& unit);
  /// Same, without the associativity/unit validation.
  static Algebra make_unchecked(std::vector<std::string> labels, Matrix mult,
                                Matrix unit);
  static Algebra scalars(); // Q

  Matrix multiply(const Matrix& x, const Matrix& y) const;
  /// L_x and R_x as dim × dim matrices.
  Matrix left_mult(const Matrix& x) const;
  Matrix right_mult(const Matrix& x) const;
  Matrix basis_vector(std::size_t i) const { return Matrix::unit_column(dim, i); }

  bool is_commutative() const;
  /// Throws std::invalid_argument naming the first failing basis tuple.
  void check() const;
};

/// A bimodule over an algebra, by one action matrix per algebra basis vector
/// on each side.
struct Bimodule {
  Algebra over;
  std::size_t dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  static Bimodule regular(const Algebra& a);
  Matrix left_act(const Matrix& a) const;
  Matrix right_act(const Matrix& a) const;
  void check() const;
};

struct RightModule {
  Algebra over;
  std::size_t dim = 0;
  std::vector<Matrix> act; // x ↦ x·e_i
  void check() const;
};

struct LeftModule {
  Algebra over;
  std::size_t dim = 0;
  std::vector<Matrix> act; // x ↦ e_i·x
  void check() const;
};

/// The induced algebra on a multiplicatively closed, unital subspace,
/// together with the inclusion (ambient × dim) in its columns.
struct Subalgebra {
  Algebra alg;
  Matrix inclusion;
  Subspace space;
};

/// Throws if the subspace is not closed under multiplication or misses the
/// unit.
Subalgebra induced_subalgebra(const Algebra& a, const Subspace& s,
                              const std::vector<std::string>& labels = {});

/// Center of a, as the simultaneous kernel of all L_i − R_i.
Subspace center(const Algebra& a);

/// Semisimplicity over Q via nondegeneracy of the trace form
/// (x, y) ↦ trace(L_x L_y) of left-multiplication operators.
bool is_semisimple(const Algebra& a);

} // namespace hh

#endif
