#ifndef HH_MATRIX_HPP
#define HH_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hh/rational.hpp"

namespace hh {

/// Dense matrix over the rationals, row-major. Vectors are n-by-1 matrices.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(const std::vector<Rational>& entries);
  static Matrix unit_column(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;
  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;
  void set_col(std::size_t j, const Matrix& v);
  bool is_zero() const;

  /// Appends the rows of o (same column count).
  Matrix vstack(const Matrix& o) const;
  /// Appends the columns of o (same row count).
  Matrix hstack(const Matrix& o) const;

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product on the lexicographic tensor basis, left factor major:
/// (a ⊗ b)[(i_a·rb + i_b), (j_a·cb + j_b)] = a[i_a,j_a]·b[i_b,j_b].
Matrix kron(const Matrix& a, const Matrix& b);

/// Permutation of tensor factors. dims are the factor dimensions in the
/// current order; order[t] names which current factor sits in slot t of the
/// new order. Returns P with P·(x_{d0} ⊗ x_{d1} ⊗ ...) reindexed accordingly.
Matrix tensor_permutation(const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& order);

/// Flip x⊗y -> y⊗x for factor dimensions m, n.
Matrix flip(std::size_t m, std::size_t n);

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; canonical and idempotent.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of m·x = rhs (free variables set to zero), or nullopt when
/// the system is inconsistent. rhs may have several columns; all must be
/// solvable or nullopt is returned.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of Q^n with canonical RREF row basis.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of the rows of gens.
  static Subspace from_rows(std::size_t ambient, const Matrix& gens);
  /// Span of the columns of gens.
  static Subspace from_columns(std::size_t ambient, const Matrix& gens);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// RREF rows.
  const Matrix& basis() const { return basis_; }
  /// ambient × dim matrix whose columns are the basis vectors.
  Matrix basis_columns() const { return basis_.transpose(); }

  bool contains(const Matrix& column_vector) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector in the row basis; nullopt if not a member.
  std::optional<Matrix> coordinates(const Matrix& column_vector) const;

  bool operator==(const Subspace& o) const = default;

private:
  std::size_t ambient_ = 0;
  Matrix basis_; // dim × ambient, RREF
};

Subspace kernel(const Matrix& m);
/// Column space of m, inside Q^rows.
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Quotient of Q^n by a subspace, with canonical representatives on the
/// non-pivot coordinates of the relation basis.
class Quotient {
public:
  Quotient() = default;
  static Quotient by(const Subspace& relations);

  std::size_t ambient() const { return relations_.ambient(); }
  std::size_t dim() const { return projection_.rows(); }
  const Subspace& relations() const { return relations_; }
  /// dim × ambient; class map.
  const Matrix& projection() const { return projection_; }
  /// ambient × dim; projection ∘ section = id.
  const Matrix& section() const { return section_; }

private:
  Subspace relations_;
  Matrix projection_;
  Matrix section_;
};

} // namespace hh

#endif
