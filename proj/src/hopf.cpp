#include "hh/hopf.hpp"

#include <stdexcept>

namespace hh {

namespace {

/// First column where two equal-shaped matrices differ, as a printable tuple.
std::string first_mismatch(const Matrix& a, const Matrix& b,
                           const std::vector<std::size_t>& factor_dims) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a.at(r, c) != b.at(r, c)) {
        std::string s = "basis tuple (";
        std::size_t rem = c, total = 1;
        for (auto d : factor_dims) total *= d;
        std::vector<std::size_t> idx(factor_dims.size());
        for (std::size_t t = factor_dims.size(); t-- > 0;) {
          idx[t] = rem % factor_dims[t];
          rem /= factor_dims[t];
        }
        for (std::size_t t = 0; t < idx.size(); ++t)
          s += (t ? ", " : "") + std::to_string(idx[t]);
        return s + ")";
      }
  return "";
}

} // namespace

HopfAlgebra HopfAlgebra::make(Algebra alg, Coalgebra coa, Matrix antipode) {
  HopfAlgebra h = make_unchecked(std::move(alg), std::move(coa), std::move(antipode));
  auto rep = validate_hopf(h);
  for (const auto& c : rep.checks)
    if (!c.pass)
      throw std::invalid_argument("hopf axiom '" + c.axiom + "' fails at " + c.counterexample);
  return h;
}

HopfAlgebra HopfAlgebra::make_unchecked(Algebra alg, Coalgebra coa, Matrix antipode) {
  if (alg.dim != coa.dim)
    throw std::invalid_argument("hopf algebra: algebra/coalgebra dimension mismatch");
  if (antipode.rows() != alg.dim || antipode.cols() != alg.dim)
    throw std::invalid_argument("hopf algebra: antipode has wrong shape");
  HopfAlgebra h;
  h.alg = std::move(alg);
  h.coa = std::move(coa);
  h.antipode = std::move(antipode);
  return h;
}

HopfAlgebra HopfAlgebra::scalars() {
  Algebra a = Algebra::scalars();
  Matrix one(1, 1);
  one.at(0, 0) = 1;
  Coalgebra c = Coalgebra::make_unchecked({"1"}, one, one);
  return make_unchecked(a, c, one);
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ValidationReport validate_hopf(const HopfAlgebra& h) {
  ValidationReport rep;
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  auto add = [&](const std::string& axiom, const Matrix& lhs, const Matrix& rhs,
                 std::vector<std::size_t> dims) {
    bool pass = lhs == rhs;
    rep.checks.push_back({axiom, pass, pass ? "" : first_mismatch(lhs, rhs, dims)});
  };

  add("associativity", h.mult() * kron(h.mult(), id), h.mult() * kron(id, h.mult()),
      {n, n, n});
  add("unit", h.alg.left_mult(h.unit()).hstack(h.alg.right_mult(h.unit())),
      id.hstack(id), {n});
  add("coassociativity", kron(h.comult(), id) * h.comult(),
      kron(id, h.comult()) * h.comult(), {n});
  add("counit", (kron(h.counit(), id) * h.comult()).hstack(kron(id, h.counit()) * h.comult()),
      id.hstack(id), {n});
  // Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ), ε∘m = ε⊗ε, Δ(1) = 1⊗1, ε(1) = 1
  Matrix mid_flip = kron(kron(id, flip(n, n)), id);
  add("comultiplication multiplicative", h.comult() * h.mult(),
      kron(h.mult(), h.mult()) * mid_flip * kron(h.comult(), h.comult()), {n, n});
  add("counit multiplicative", h.counit() * h.mult(), kron(h.counit(), h.counit()), {n, n});
  add("comultiplication unital", h.comult() * h.unit(), kron(h.unit(), h.unit()), {1});
  add("counit unital", h.counit() * h.unit(), Matrix::identity(1), {1});
  Matrix unit_eps = h.unit() * h.counit();
  add("antipode left", h.mult() * kron(h.antipode, id) * h.comult(), unit_eps, {n});
  add("antipode right", h.mult() * kron(id, h.antipode) * h.comult(), unit_eps, {n});
  return rep;
}

CocommutativeSubalgebra compute_R_H(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Subspace space = kernel(h.comult() - flip(n, n) * h.comult());
  CocommutativeSubalgebra r;
  r.space = space;
  r.sub = induced_subalgebra(h.alg, space); // throws if not closed — impossible for valid h
  r.plus_part = intersect(space, kernel(h.counit()));
  return r;
}

TraceCoalgebra compute_C_H(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Subspace commutators = image(h.mult() - h.mult() * flip(n, n));
  TraceCoalgebra t;
  t.quotient = Quotient::by(commutators);
  t.pi = t.quotient.projection();
  const Matrix& s = t.quotient.section();
  // induced comultiplication and counit on representatives
  Matrix comult = kron(t.pi, t.pi) * h.comult() * s;
  Matrix counit = h.counit() * s;
  // well-definedness: (π⊗π)Δ and ε must kill the commutator subspace
  Matrix rel = commutators.basis_columns();
  if (rel.cols() > 0) {
    if (!(kron(t.pi, t.pi) * h.comult() * rel).is_zero())
      throw std::runtime_error("C_H: induced comultiplication not well-defined");
    if (!(h.counit() * rel).is_zero())
      throw std::runtime_error("C_H: induced counit not well-defined");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.quotient.dim(); ++i) labels.push_back("c" + std::to_string(i));
  t.coa = Coalgebra::make_unchecked(labels, std::move(comult), std::move(counit));
  t.coa.check();
  return t;
}

bool has_enough_cocommutative_elements(const HopfAlgebra& h) {
  auto r = compute_R_H(h);
  const std::size_t n = h.dim();
  Matrix gens(0, n);
  Matrix plus_cols = r.plus_part.basis_columns();
  for (std::size_t i = 0; i < r.plus_part.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      gens = gens.vstack(h.alg.multiply(plus_cols.col(i), h.alg.basis_vector(j)).transpose());
  Subspace rplus_h = Subspace::from_rows(n, gens);
  return rplus_h == kernel(h.counit());
}

bool is_cosemisimple(const Coalgebra& c) { return is_semisimple(c.dual_algebra()); }

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  Algebra dual_alg = h.coa.dual_algebra();
  std::vector<std::string> labels = dual_alg.labels;
  Coalgebra dual_coa =
      Coalgebra::make_unchecked(labels, h.mult().transpose(), h.unit().transpose());
  HopfAlgebra d = HopfAlgebra::make_unchecked(std::move(dual_alg), std::move(dual_coa),
                                              h.antipode.transpose());
  auto rep = validate_hopf(d);
  if (!rep.ok()) throw std::runtime_error("dual hopf algebra failed validation");
  return d;
}

InvolutionReport is_involutive_antipode(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  InvolutionReport rep;
  rep.s_squared_is_id = (h.antipode * h.antipode == id);
  Matrix unit_eps = h.unit() * h.counit();
  Matrix tw = flip(n, n) * h.comult(); // Σ h₂ ⊗ h₁
  rep.twisted_counit_identity =
      (h.mult() * kron(id, h.antipode) * tw == unit_eps) &&
      (h.mult() * kron(h.antipode, id) * tw == unit_eps);
  return rep;
}

Subspace trace_maps(const Algebra& a) {
  Matrix comm = a.mult - a.mult * flip(a.dim, a.dim); // dim × dim²
  return kernel(comm.transpose());
}

Subspace augmentation_ideal(const HopfAlgebra& h) { return kernel(h.counit()); }

} // namespace hh
