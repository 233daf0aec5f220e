#include "hh/coalgebra.hpp"

#include <stdexcept>

namespace hh {

Coalgebra Coalgebra::make(std::vector<std::string> labels,
                          const std::vector<StructureEntry>& entries,
                          const Matrix& counit) {
  const std::size_t n = labels.size();
  Matrix comult(n * n, n);
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n)
      throw std::invalid_argument("coalgebra structure constant out of range");
    comult.at(e.j * n + e.k, e.i) += e.value;
  }
  Coalgebra c = make_unchecked(std::move(labels), std::move(comult), counit);
  c.check();
  return c;
}

Coalgebra Coalgebra::make_unchecked(std::vector<std::string> labels, Matrix comult,
                                    Matrix counit) {
  Coalgebra c;
  c.dim = labels.size();
  c.labels = std::move(labels);
  c.comult = std::move(comult);
  c.counit = std::move(counit);
  if (c.comult.rows() != c.dim * c.dim || c.comult.cols() != c.dim ||
      c.counit.rows() != 1 || c.counit.cols() != c.dim)
    throw std::invalid_argument("coalgebra data has wrong shape");
  return c;
}

bool Coalgebra::is_cocommutative() const {
  return flip(dim, dim) * comult == comult;
}

Algebra Coalgebra::dual_algebra() const {
  std::vector<std::string> dual_labels;
  for (const auto& l : labels) dual_labels.push_back(l + "*");
  return Algebra::make_unchecked(dual_labels, comult.transpose(), counit.transpose());
}

void Coalgebra::check() const {
  const Matrix id = Matrix::identity(dim);
  Matrix lhs = kron(comult, id) * comult;
  Matrix rhs = kron(id, comult) * comult;
  for (std::size_t c = 0; c < dim; ++c)
    if (lhs.col(c) != rhs.col(c))
      throw std::invalid_argument("coassociativity fails at basis vector " + std::to_string(c));
  if (kron(counit, id) * comult != id || kron(id, counit) * comult != id)
    throw std::invalid_argument("counit axiom fails");
}

void Comodule::check() const {
  const std::size_t c = over.dim;
  const Matrix idm = Matrix::identity(dim);
  if (coaction.rows() != dim * c || coaction.cols() != dim)
    throw std::invalid_argument("right comodule: coaction has wrong shape");
  if (kron(coaction, Matrix::identity(c)) * coaction !=
      kron(idm, over.comult) * coaction)
    throw std::invalid_argument("right comodule: coassociativity fails");
  if (kron(idm, over.counit) * coaction != idm)
    throw std::invalid_argument("right comodule: counit law fails");
}

Comodule Comodule::trivial(const Coalgebra& c, const Matrix& grouplike, std::size_t dim) {
  Comodule m;
  m.over = c;
  m.dim = dim;
  m.coaction = kron(Matrix::identity(dim), grouplike);
  m.check();
  return m;
}

void LeftComodule::check() const {
  const std::size_t c = over.dim;
  const Matrix idm = Matrix::identity(dim);
  if (coaction.rows() != c * dim || coaction.cols() != dim)
    throw std::invalid_argument("left comodule: coaction has wrong shape");
  // (Δ ⊗ id) ρ = (id ⊗ ρ) ρ
  if (kron(over.comult, idm) * coaction != kron(Matrix::identity(c), coaction) * coaction)
    throw std::invalid_argument("left comodule: coassociativity fails");
  if (kron(over.counit, idm) * coaction != idm)
    throw std::invalid_argument("left comodule: counit law fails");
}

LeftComodule LeftComodule::regular(const Coalgebra& c) {
  LeftComodule v;
  v.over = c;
  v.dim = c.dim;
  v.coaction = c.comult;
  v.check();
  return v;
}

LeftComodule LeftComodule::trivial(const Coalgebra& c, const Matrix& grouplike,
                                   std::size_t dim) {
  LeftComodule v;
  v.over = c;
  v.dim = dim;
  v.coaction = kron(grouplike, Matrix::identity(dim));
  v.check();
  return v;
}

} // namespace hh
