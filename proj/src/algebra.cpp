#include "hh/algebra.hpp"

#include <stdexcept>

namespace hh {

namespace {
std::string tuple_msg(const char* what, std::size_t i, std::size_t j, std::size_t k) {
  return std::string(what) + " fails at basis tuple (" + std::to_string(i) + ", " +
         std::to_string(j) + ", " + std::to_string(k) + ")";
}
} // namespace

Algebra Algebra::make(std::vector<std::string> labels,
                      const std::vector<StructureEntry>& entries, const Matrix& unit) {
  const std::size_t n = labels.size();
  Matrix mult(n, n * n);
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n)
      throw std::invalid_argument("structure constant index out of range");
    mult.at(e.k, e.i * n + e.j) += e.value;
  }
  Algebra a = make_unchecked(std::move(labels), std::move(mult), unit);
  a.check();
  return a;
}

Algebra Algebra::make_unchecked(std::vector<std::string> labels, Matrix mult, Matrix unit) {
  Algebra a;
  a.dim = labels.size();
  a.labels = std::move(labels);
  a.mult = std::move(mult);
  a.unit = std::move(unit);
  if (a.mult.rows() != a.dim || a.mult.cols() != a.dim * a.dim ||
      a.unit.rows() != a.dim || a.unit.cols() != 1)
    throw std::invalid_argument("algebra data has wrong shape");
  return a;
}

Algebra Algebra::scalars() {
  Matrix m(1, 1);
  m.at(0, 0) = 1;
  return make_unchecked({"1"}, m, m);
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
  return mult * kron(x, y);
}

Matrix Algebra::left_mult(const Matrix& x) const {
  return mult * kron(x, Matrix::identity(dim));
}

Matrix Algebra::right_mult(const Matrix& x) const {
  return mult * kron(Matrix::identity(dim), x);
}

bool Algebra::is_commutative() const {
  return mult == mult * flip(dim, dim);
}

void Algebra::check() const {
  const Matrix id = Matrix::identity(dim);
  // associativity: m(m ⊗ id) = m(id ⊗ m) on every basis triple
  Matrix lhs = mult * kron(mult, id);
  Matrix rhs = mult * kron(id, mult);
  for (std::size_t c = 0; c < dim * dim * dim; ++c)
    for (std::size_t r = 0; r < dim; ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) {
        std::size_t i = c / (dim * dim), j = (c / dim) % dim, k = c % dim;
        throw std::invalid_argument(tuple_msg("associativity", i, j, k));
      }
  if (left_mult(unit) != id || right_mult(unit) != id)
    throw std::invalid_argument("unit axiom fails");
}

Bimodule Bimodule::regular(const Algebra& a) {
  Bimodule m;
  m.over = a;
  m.dim = a.dim;
  for (std::size_t i = 0; i < a.dim; ++i) {
    m.left.push_back(a.left_mult(a.basis_vector(i)));
    m.right.push_back(a.right_mult(a.basis_vector(i)));
  }
  return m;
}

Matrix Bimodule::left_act(const Matrix& a) const {
  Matrix r(dim, dim);
  for (std::size_t i = 0; i < over.dim; ++i)
    if (!is_zero(a.at(i, 0))) r = r + left[i] * a.at(i, 0);
  return r;
}

Matrix Bimodule::right_act(const Matrix& a) const {
  Matrix r(dim, dim);
  for (std::size_t i = 0; i < over.dim; ++i)
    if (!is_zero(a.at(i, 0))) r = r + right[i] * a.at(i, 0);
  return r;
}

void Bimodule::check() const {
  const std::size_t n = over.dim;
  if (left.size() != n || right.size() != n)
    throw std::invalid_argument("bimodule: one action matrix per algebra basis vector");
  const Matrix idm = Matrix::identity(dim);
  if (left_act(over.unit) != idm || right_act(over.unit) != idm)
    throw std::invalid_argument("bimodule: unit must act as identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = over.multiply(over.basis_vector(i), over.basis_vector(j));
      if (left[i] * left[j] != left_act(prod))
        throw std::invalid_argument(tuple_msg("left module axiom", i, j, 0));
      if (right[j] * right[i] != right_act(prod))
        throw std::invalid_argument(tuple_msg("right module axiom", i, j, 0));
      if (left[i] * right[j] != right[j] * left[i])
        throw std::invalid_argument(tuple_msg("bimodule commutation", i, j, 0));
    }
}

void RightModule::check() const {
  const std::size_t n = over.dim;
  if (act.size() != n) throw std::invalid_argument("right module: wrong action count");
  Matrix u(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(over.unit.at(i, 0))) u = u + act[i] * over.unit.at(i, 0);
  if (u != Matrix::identity(dim))
    throw std::invalid_argument("right module: unit must act as identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = over.multiply(over.basis_vector(i), over.basis_vector(j));
      Matrix viaconst(dim, dim);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(prod.at(k, 0))) viaconst = viaconst + act[k] * prod.at(k, 0);
      if (act[j] * act[i] != viaconst)
        throw std::invalid_argument(tuple_msg("right module axiom", i, j, 0));
    }
}

void LeftModule::check() const {
  const std::size_t n = over.dim;
  if (act.size() != n) throw std::invalid_argument("left module: wrong action count");
  Matrix u(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(over.unit.at(i, 0))) u = u + act[i] * over.unit.at(i, 0);
  if (u != Matrix::identity(dim))
    throw std::invalid_argument("left module: unit must act as identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = over.multiply(over.basis_vector(i), over.basis_vector(j));
      Matrix viaconst(dim, dim);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(prod.at(k, 0))) viaconst = viaconst + act[k] * prod.at(k, 0);
      if (act[i] * act[j] != viaconst)
        throw std::invalid_argument(tuple_msg("left module axiom", i, j, 0));
    }
}

Subalgebra induced_subalgebra(const Algebra& a, const Subspace& s,
                              const std::vector<std::string>& labels) {
  const std::size_t k = s.dim();
  Matrix incl = s.basis_columns();
  auto unit_coords = s.coordinates(a.unit);
  if (!unit_coords)
    throw std::invalid_argument("subalgebra: subspace does not contain the unit");
  Matrix mult(k, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix prod = a.multiply(incl.col(i), incl.col(j));
      auto coords = s.coordinates(prod);
      if (!coords)
        throw std::invalid_argument("subalgebra: subspace not closed under multiplication");
      for (std::size_t t = 0; t < k; ++t) mult.at(t, i * k + j) = coords->at(t, 0);
    }
  Subalgebra sub;
  std::vector<std::string> lb = labels;
  if (lb.empty())
    for (std::size_t i = 0; i < k; ++i) lb.push_back("s" + std::to_string(i));
  sub.alg = Algebra::make_unchecked(lb, std::move(mult), *unit_coords);
  sub.alg.check();
  sub.inclusion = std::move(incl);
  sub.space = s;
  return sub;
}

Subspace center(const Algebra& a) {
  Matrix stacked(0, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix e = a.basis_vector(i);
    stacked = stacked.vstack(a.left_mult(e) - a.right_mult(e));
  }
  return kernel(stacked);
}

bool is_semisimple(const Algebra& a) {
  std::vector<Matrix> lm;
  for (std::size_t i = 0; i < a.dim; ++i) lm.push_back(a.left_mult(a.basis_vector(i)));
  Matrix gram(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix p = lm[i] * lm[j];
      Rational tr = 0;
      for (std::size_t t = 0; t < a.dim; ++t) tr += p.at(t, t);
      gram.at(i, j) = tr;
    }
  return rank(gram) == a.dim;
}

} // namespace hh
