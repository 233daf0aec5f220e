#include "hh/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hh {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Matrix Matrix::unit_column(std::size_t n, std::size_t i) {
  Matrix m(n, 1);
  m.at(i, 0) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix add: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sub: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix mul: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (hh::is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (!hh::is_zero(b)) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix r(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Matrix Matrix::row(std::size_t i) const {
  Matrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

void Matrix::set_col(std::size_t j, const Matrix& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!hh::is_zero(x)) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << rational_to_string(at(i, j));
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Rational& x = a.at(ia, ja);
      if (is_zero(x)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          const Rational& y = b.at(ib, jb);
          if (!is_zero(y)) r.at(ia * b.rows() + ib, ja * b.cols() + jb) = x * y;
        }
    }
  return r;
}

Matrix tensor_permutation(const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& order) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> new_dims(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) new_dims[t] = dims[order[t]];
  Matrix p(total, total);
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // decode flat (old order, first factor major)
    std::size_t rem = flat;
    for (std::size_t t = dims.size(); t-- > 0;) {
      idx[t] = rem % dims[t];
      rem /= dims[t];
    }
    std::size_t target = 0;
    for (std::size_t t = 0; t < order.size(); ++t)
      target = target * new_dims[t] + idx[order[t]];
    p.at(target, flat) = 1;
  }
  return p;
}

Matrix flip(std::size_t m, std::size_t n) {
  return tensor_permutation({m, n}, {1, 0});
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!is_zero(a.at(i, c))) { sel = i; break; }
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(sel, j));
    Rational inv = 1 / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!is_zero(a.at(r, j))) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Rational f = a.at(i, c);
      if (is_zero(f)) continue;
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a.at(r, j))) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: shape mismatch");
  auto full = rref(m.hstack(rhs));
  std::size_t nrank = 0;
  for (auto p : full.pivots)
    if (p < m.cols()) ++nrank;
    else return std::nullopt; // pivot in an rhs column: inconsistent
  Matrix x(m.cols(), rhs.cols());
  for (std::size_t i = 0; i < nrank; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.at(full.pivots[i], j) = full.mat.at(i, m.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto aug = rref(m.hstack(Matrix::identity(m.rows())));
  if (aug.pivots.size() != m.rows() || (m.rows() > 0 && aug.pivots.back() >= m.cols()))
    return std::nullopt;
  Matrix inv(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.mat.at(i, m.cols() + j);
  return inv;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  return from_rows(ambient, Matrix::identity(ambient));
}

Subspace Subspace::from_rows(std::size_t ambient, const Matrix& gens) {
  if (gens.rows() > 0 && gens.cols() != ambient)
    throw std::invalid_argument("subspace generators have wrong length");
  auto rr = rref(gens.rows() ? gens : Matrix(0, ambient));
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(rr.pivots.size(), ambient);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) s.basis_.at(i, j) = rr.mat.at(i, j);
  return s;
}

Subspace Subspace::from_columns(std::size_t ambient, const Matrix& gens) {
  return from_rows(ambient, gens.transpose());
}

bool Subspace::contains(const Matrix& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i).transpose())) return false;
  return true;
}

std::optional<Matrix> Subspace::coordinates(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("subspace membership: wrong vector length");
  // Reduce against the RREF basis; coordinates are read off the pivot coords.
  Matrix coords(dim(), 1);
  Matrix rem = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t piv = 0;
    while (piv < ambient_ && is_zero(basis_.at(i, piv))) ++piv;
    const Rational c = rem.at(piv, 0);
    if (is_zero(c)) continue;
    coords.at(i, 0) = c;
    for (std::size_t j = piv; j < ambient_; ++j)
      if (!is_zero(basis_.at(i, j))) rem.at(j, 0) -= c * basis_.at(i, j);
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

Subspace kernel(const Matrix& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(k, free_cols[k]) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      basis.at(k, rr.pivots[i]) = -rr.mat.at(i, free_cols[k]);
  }
  return Subspace::from_rows(m.cols(), basis);
}

Subspace image(const Matrix& m) {
  return Subspace::from_columns(m.rows(), m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  // x = A^T u = B^T v  <=>  (u, v) in ker [A^T | -B^T]
  Matrix at = a.basis_columns(), bt = b.basis_columns();
  Matrix sys = at.hstack(bt * Rational(-1));
  Subspace k = kernel(sys);
  Matrix gens(k.dim(), a.ambient());
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Matrix u(a.dim(), 1);
    for (std::size_t j = 0; j < a.dim(); ++j) u.at(j, 0) = k.basis().at(i, j);
    Matrix x = at * u;
    for (std::size_t j = 0; j < a.ambient(); ++j) gens.at(i, j) = x.at(j, 0);
  }
  return Subspace::from_rows(a.ambient(), gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::from_rows(a.ambient(), a.basis().vstack(b.basis()));
}

Quotient Quotient::by(const Subspace& relations) {
  Quotient q;
  q.relations_ = relations;
  const std::size_t n = relations.ambient();
  const Matrix& r = relations.basis();
  std::vector<std::size_t> pivot_of_row(r.rows());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t p = 0;
    while (p < n && is_zero(r.at(i, p))) ++p;
    pivot_of_row[i] = p;
    is_pivot[p] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  q.projection_ = Matrix(free_cols.size(), n);
  q.section_ = Matrix(n, free_cols.size());
  for (std::size_t a = 0; a < free_cols.size(); ++a) {
    q.projection_.at(a, free_cols[a]) = 1;
    q.section_.at(free_cols[a], a) = 1;
    for (std::size_t i = 0; i < r.rows(); ++i)
      q.projection_.at(a, pivot_of_row[i]) = -r.at(i, free_cols[a]);
  }
  return q;
}

} // namespace hh
