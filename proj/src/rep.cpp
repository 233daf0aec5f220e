#include "hh/rep.hpp"

#include <stdexcept>

namespace hh {

ComoduleAlgebra ComoduleAlgebra::make(Algebra alg, HopfAlgebra hopf, Matrix coaction) {
  ComoduleAlgebra e;
  e.alg = std::move(alg);
  e.hopf = std::move(hopf);
  e.coaction = std::move(coaction);
  e.check();
  e.coinv = coinvariants(e.coaction, e.alg.dim, e.hopf.unit());
  std::vector<std::string> blabels;
  for (std::size_t i = 0; i < e.coinv.dim(); ++i) blabels.push_back("b" + std::to_string(i));
  e.b = induced_subalgebra(e.alg, e.coinv, blabels);
  return e;
}

ComoduleAlgebra scalar_comodule_algebra(const HopfAlgebra& h) {
  return ComoduleAlgebra::make(Algebra::scalars(), h, Matrix(h.unit()));
}

void ComoduleAlgebra::check() const {
  const std::size_t na = alg.dim, nh = hopf.dim();
  if (coaction.rows() != na * nh || coaction.cols() != na)
    throw std::invalid_argument("comodule algebra: coaction has wrong shape");
  Comodule as_comodule{hopf.coa, na, coaction};
  as_comodule.check();
  // ρ is an algebra morphism and ρ(1) = 1 ⊗ 1
  const Matrix ida = Matrix::identity(na), idh = Matrix::identity(nh);
  Matrix mid_flip = kron(kron(ida, flip(nh, na)), idh);
  Matrix lhs = coaction * alg.mult;
  Matrix rhs = kron(alg.mult, hopf.mult()) * mid_flip * kron(coaction, coaction);
  if (lhs != rhs)
    throw std::invalid_argument("comodule algebra: coaction is not multiplicative");
  if (coaction * alg.unit != kron(alg.unit, hopf.unit()))
    throw std::invalid_argument("comodule algebra: coaction not unital");
}

HopfBimodule HopfBimodule::canonical(const ComoduleAlgebra& e) {
  HopfBimodule m;
  m.dim = e.alg.dim;
  m.labels = e.alg.labels;
  for (std::size_t i = 0; i < e.alg.dim; ++i) {
    m.left.push_back(e.alg.left_mult(e.alg.basis_vector(i)));
    m.right.push_back(e.alg.right_mult(e.alg.basis_vector(i)));
  }
  m.coaction = e.coaction;
  m.check(e);
  return m;
}

Matrix HopfBimodule::left_act(const Matrix& a) const {
  Matrix r(dim, dim);
  for (std::size_t i = 0; i < left.size(); ++i)
    if (!is_zero(a.at(i, 0))) r = r + left[i] * a.at(i, 0);
  return r;
}

Matrix HopfBimodule::right_act(const Matrix& a) const {
  Matrix r(dim, dim);
  for (std::size_t i = 0; i < right.size(); ++i)
    if (!is_zero(a.at(i, 0))) r = r + right[i] * a.at(i, 0);
  return r;
}

void HopfBimodule::check(const ComoduleAlgebra& e) const {
  const std::size_t na = e.alg.dim, nh = e.hopf.dim();
  Bimodule bm{e.alg, dim, left, right};
  bm.check();
  Comodule cm{e.hopf.coa, dim, coaction};
  cm.check();
  // right compatibility ρ(m a) = Σ m₀a₀ ⊗ m₁a₁, and its left analogue
  for (std::size_t ai = 0; ai < na; ++ai) {
    Matrix rho_a = e.coaction.col(ai); // in A ⊗ H
    Matrix right_side(dim * nh, dim * nh), left_side(dim * nh, dim * nh);
    for (std::size_t t = 0; t < na; ++t)
      for (std::size_t u = 0; u < nh; ++u) {
        const Rational& c = rho_a.at(t * nh + u, 0);
        if (is_zero(c)) continue;
        Matrix rh = e.hopf.alg.right_mult(Matrix::unit_column(nh, u));
        Matrix lh = e.hopf.alg.left_mult(Matrix::unit_column(nh, u));
        right_side = right_side + kron(right[t], rh) * c;
        left_side = left_side + kron(left[t], lh) * c;
      }
    if (coaction * right[ai] != right_side * coaction)
      throw std::invalid_argument("hopf bimodule: right compatibility fails at a = " +
                                  std::to_string(ai));
    if (coaction * left[ai] != left_side * coaction)
      throw std::invalid_argument("hopf bimodule: left compatibility fails at a = " +
                                  std::to_string(ai));
  }
}

Subspace coinvariants(const Matrix& coaction, std::size_t dim, const Matrix& unit_h) {
  return kernel(coaction - kron(Matrix::identity(dim), unit_h));
}

Subspace invariants(const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                    std::size_t dim, const Subspace& r) {
  Matrix stacked(0, dim);
  Matrix cols = r.basis_columns();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Matrix lr(dim, dim), rr(dim, dim);
    for (std::size_t t = 0; t < left.size(); ++t) {
      const Rational& c = cols.at(t, i);
      if (is_zero(c)) continue;
      lr = lr + left[t] * c;
      rr = rr + right[t] * c;
    }
    stacked = stacked.vstack(lr - rr);
  }
  if (stacked.rows() == 0) return Subspace::full(dim);
  return kernel(stacked);
}

Quotient commutator_quotient(const std::vector<Matrix>& left,
                             const std::vector<Matrix>& right, std::size_t dim,
                             const Subspace& r) {
  Matrix gens(dim, 0);
  Matrix cols = r.basis_columns();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Matrix lr(dim, dim), rr(dim, dim);
    for (std::size_t t = 0; t < left.size(); ++t) {
      const Rational& c = cols.at(t, i);
      if (is_zero(c)) continue;
      lr = lr + left[t] * c;
      rr = rr + right[t] * c;
    }
    gens = gens.hstack(lr - rr);
  }
  return Quotient::by(Subspace::from_columns(dim, gens));
}

Quotient relative_tensor(std::size_t dim_x, std::size_t dim_y,
                         const std::vector<Matrix>& right_on_x,
                         const std::vector<Matrix>& left_on_y) {
  if (right_on_x.size() != left_on_y.size())
    throw std::invalid_argument("relative tensor: B-bases differ");
  const Matrix idx = Matrix::identity(dim_x), idy = Matrix::identity(dim_y);
  Matrix gens(dim_x * dim_y, 0);
  for (std::size_t b = 0; b < right_on_x.size(); ++b)
    gens = gens.hstack(kron(right_on_x[b], idy) - kron(idx, left_on_y[b]));
  return Quotient::by(Subspace::from_columns(dim_x * dim_y, gens));
}

Subspace cotensor(const Matrix& coaction_m, std::size_t dim_m,
                  const Matrix& coaction_v, std::size_t dim_v, std::size_t dim_c) {
  Matrix lhs = kron(coaction_m, Matrix::identity(dim_v)); // M⊗V → M⊗C⊗V
  Matrix rhs = kron(Matrix::identity(dim_m), coaction_v); // M⊗V → M⊗C⊗V
  (void)dim_c;
  return kernel(lhs - rhs);
}

Matrix restrict_to_subspace(const Matrix& op, const Subspace& s) {
  Matrix cols = s.basis_columns();
  Matrix restricted(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto coords = s.coordinates(op * cols.col(j));
    if (!coords)
      throw std::invalid_argument("restrict_to_subspace: subspace is not invariant");
    restricted.set_col(j, *coords);
  }
  return restricted;
}

void RModComodule::check() const {
  LeftModule lm{r, dim, act};
  lm.check();
  Comodule cm{c, dim, coaction};
  cm.check();
  const Matrix idc = Matrix::identity(c.dim);
  for (std::size_t i = 0; i < r.dim; ++i)
    if (coaction * act[i] != kron(act[i], idc) * coaction)
      throw std::invalid_argument("coaction is not R-linear at basis vector " +
                                  std::to_string(i));
}

TensCotensReport tensor_cotensor_commute_check(const RightModule& x,
                                               const RModComodule& m,
                                               const LeftComodule& v) {
  TensCotensReport rep;
  if (!is_cosemisimple(m.c)) {
    rep.message = "coalgebra is not cosemisimple; V-injectivity is not certified";
    return rep;
  }
  // X ⊗_R M and the quotient coaction on it
  Quotient xm = relative_tensor(x.dim, m.dim, x.act, m.act);
  const std::size_t nc = m.c.dim;
  Matrix rho_xm = kron(xm.projection(), Matrix::identity(nc)) *
                  kron(Matrix::identity(x.dim), m.coaction) * xm.section();
  Subspace lhs = cotensor(rho_xm, xm.dim(), v.coaction, v.dim, nc);
  rep.lhs_dim = lhs.dim();

  // M □_C V with its R-action restricted from M ⊗ V
  Subspace mv = cotensor(m.coaction, m.dim, v.coaction, v.dim, nc);
  std::vector<Matrix> act_on_mv;
  for (std::size_t i = 0; i < m.r.dim; ++i)
    act_on_mv.push_back(restrict_to_subspace(kron(m.act[i], Matrix::identity(v.dim)), mv));
  Quotient rhs = relative_tensor(x.dim, mv.dim(), x.act, act_on_mv);
  rep.rhs_dim = rhs.dim();

  // canonical map X ⊗_R (M□V) → (X ⊗_R M) □ V:
  // lift, include M□V into M⊗V, reassociate (a no-op on flat indices),
  // project by xm ⊗ id_V, then read coordinates in the lhs cotensor.
  Matrix incl = kron(Matrix::identity(x.dim), mv.basis_columns()); // X⊗(M□V) → X⊗M⊗V
  Matrix to_ambient = kron(xm.projection(), Matrix::identity(v.dim)) * incl * rhs.section();
  Matrix lhs_cols = lhs.basis_columns();
  Matrix canonical(lhs.dim(), rhs.dim());
  for (std::size_t j = 0; j < rhs.dim(); ++j) {
    auto coords = lhs.coordinates(to_ambient.col(j));
    if (!coords) {
      rep.message = "canonical map does not land in the cotensor product";
      return rep;
    }
    canonical.set_col(j, *coords);
  }
  rep.ok = (rep.lhs_dim == rep.rhs_dim) && rank(canonical) == rep.lhs_dim;
  if (!rep.ok)
    rep.message = "canonical map is not bijective (dims " + std::to_string(rep.rhs_dim) +
                  " → " + std::to_string(rep.lhs_dim) + ")";
  return rep;
}

} // namespace hh
