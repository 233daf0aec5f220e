#include "hh/homology.hpp"

#include <stdexcept>

namespace hh {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void decode(std::size_t t, std::size_t base, std::vector<std::size_t>& digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = t % base;
    t /= base;
  }
}

std::size_t encode(const std::vector<std::size_t>& digits, std::size_t base) {
  std::size_t t = 0;
  for (auto d : digits) t = t * base + d;
  return t;
}

} // namespace

void ChainComplex::check() const {
  for (std::size_t n = 2; n < d.size(); ++n)
    if (!(d[n - 1] * d[n]).is_zero())
      throw std::runtime_error("complex: d∘d ≠ 0 at degree " + std::to_string(n));
}

Matrix HomologyDegree::project(const Matrix& cycle) const {
  auto coords = cycles.coordinates(cycle);
  if (!coords) throw std::invalid_argument("homology projection of a non-cycle");
  return quot.projection() * *coords;
}

std::vector<std::size_t> Homology::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : deg) out.push_back(d.dim());
  return out;
}

Homology homology(const ChainComplex& c) {
  Homology h;
  for (std::size_t n = 0; n + 1 <= c.top(); ++n) {
    HomologyDegree hd;
    hd.chain_dim = c.dims[n];
    hd.cycles = (n == 0) ? Subspace::full(c.dims[0]) : kernel(c.d[n]);
    hd.boundaries = image(c.d[n + 1]);
    Matrix bcols = hd.boundaries.basis_columns();
    Matrix bc(hd.cycles.dim(), hd.boundaries.dim());
    for (std::size_t j = 0; j < hd.boundaries.dim(); ++j) {
      auto coords = hd.cycles.coordinates(bcols.col(j));
      if (!coords) throw std::runtime_error("boundary is not a cycle");
      bc.set_col(j, *coords);
    }
    hd.quot = Quotient::by(Subspace::from_columns(hd.cycles.dim(), bc));
    hd.rep = hd.cycles.basis_columns() * hd.quot.section();
    h.deg.push_back(std::move(hd));
  }
  return h;
}

Matrix descend_map(const Matrix& f, const HomologyDegree& from, const HomologyDegree& to,
                   std::size_t w) {
  auto component = [&](const Matrix& v, std::size_t k) {
    Matrix comp(to.chain_dim, 1);
    for (std::size_t i = 0; i < to.chain_dim; ++i) comp.at(i, 0) = v.at(i * w + k, 0);
    return comp;
  };
  Matrix bcols = from.boundaries.basis_columns();
  for (std::size_t j = 0; j < from.boundaries.dim(); ++j) {
    Matrix v = f * bcols.col(j);
    for (std::size_t k = 0; k < w; ++k)
      if (!to.boundaries.contains(component(v, k)))
        throw std::runtime_error("chain map does not preserve boundaries");
  }
  Matrix out(to.dim() * w, from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    Matrix v = f * from.rep.col(j);
    for (std::size_t k = 0; k < w; ++k) {
      Matrix coords = to.project(component(v, k));
      for (std::size_t al = 0; al < to.dim(); ++al) out.at(al * w + k, j) = coords.at(al, 0);
    }
  }
  return out;
}

ChainComplex hochschild_complex(const Algebra& r, const Bimodule& x, std::size_t n_max) {
  const std::size_t rd = r.dim, xd = x.dim;
  ChainComplex c;
  c.d.push_back(Matrix());
  c.dims.push_back(xd);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t src = xd * ipow(rd, n), dst = xd * ipow(rd, n - 1);
    const std::size_t tail = ipow(rd, n), tail1 = ipow(rd, n - 1);
    Matrix d(dst, src);
    std::vector<std::size_t> digits(n), nd(n - 1);
    for (std::size_t flat = 0; flat < src; ++flat) {
      const std::size_t x_idx = flat / tail, t = flat % tail;
      decode(t, rd, digits);
      // x r₁ ⊗ r₂ ⊗ ⋯
      Matrix v0 = x.right[digits[0]].col(x_idx);
      for (std::size_t mi = 0; mi < xd; ++mi)
        if (!is_zero(v0.at(mi, 0))) d.at(mi * tail1 + t % tail1, flat) += v0.at(mi, 0);
      // (−1)^i x ⊗ ⋯ r_i r_{i+1} ⋯
      Rational sign(-1);
      for (std::size_t i = 1; i <= n - 1; ++i) {
        Matrix prod = r.mult.col(digits[i - 1] * rd + digits[i]);
        for (std::size_t pos = 0; pos + 1 < n; ++pos)
          nd[pos] = pos < i - 1 ? digits[pos] : digits[pos + 1];
        for (std::size_t k = 0; k < rd; ++k) {
          if (is_zero(prod.at(k, 0))) continue;
          nd[i - 1] = k;
          d.at(x_idx * tail1 + encode(nd, rd), flat) += sign * prod.at(k, 0);
        }
        sign = -sign;
      }
      // (−1)^n r_n x ⊗ r₁ ⊗ ⋯ ⊗ r_{n−1}
      const Rational last_sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
      Matrix vn = x.left[digits[n - 1]].col(x_idx);
      for (std::size_t mi = 0; mi < xd; ++mi)
        if (!is_zero(vn.at(mi, 0)))
          d.at(mi * tail1 + t / rd, flat) += last_sign * vn.at(mi, 0);
    }
    c.d.push_back(std::move(d));
    c.dims.push_back(src);
  }
  c.check();
  return c;
}

Bimodule restrict_bimodule(const HopfBimodule& m, const Subalgebra& sub) {
  Bimodule r;
  r.over = sub.alg;
  r.dim = m.dim;
  for (std::size_t i = 0; i < sub.alg.dim; ++i) {
    r.left.push_back(m.left_act(sub.inclusion.col(i)));
    r.right.push_back(m.right_act(sub.inclusion.col(i)));
  }
  return r;
}

Bimodule ambient_bimodule(const Algebra& a, const HopfBimodule& m) {
  return Bimodule{a, m.dim, m.left, m.right};
}

Matrix chain_coaction_B(const HopfBimodule& m, std::size_t nh, std::size_t bdim,
                        std::size_t n) {
  const std::size_t tail = ipow(bdim, n);
  return tensor_permutation({m.dim, nh, tail}, {0, 2, 1}) *
         kron(m.coaction, Matrix::identity(tail));
}

Matrix chain_coaction_A(const ComoduleAlgebra& e, const HopfBimodule& m,
                        const TraceCoalgebra& ch, std::size_t n) {
  const std::size_t na = e.alg.dim, nh = e.hopf.dim();
  Matrix stage = m.coaction;
  std::vector<std::size_t> dims = {m.dim, nh};
  for (std::size_t i = 0; i < n; ++i) {
    stage = kron(stage, e.coaction);
    dims.push_back(na);
    dims.push_back(nh);
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n + 1; ++i) order.push_back(2 * i);
  for (std::size_t i = 0; i < n + 1; ++i) order.push_back(2 * i + 1);
  Matrix perm = tensor_permutation(dims, order);
  Matrix fold = Matrix::identity(nh);
  for (std::size_t i = 0; i < n; ++i) fold = e.hopf.mult() * kron(fold, Matrix::identity(nh));
  return kron(Matrix::identity(m.dim * ipow(na, n)), ch.pi * fold) * perm * stage;
}

StructuredHomologyB induced_coaction_on_HH_B(const ComoduleAlgebra& e,
                                             const HopfBimodule& m, std::size_t n_max) {
  StructuredHomologyB s;
  const std::size_t nh = e.hopf.dim();
  TraceCoalgebra ch = compute_C_H(e.hopf);
  const std::size_t nc = ch.quotient.dim();
  Bimodule mb = restrict_bimodule(m, e.b);
  ChainComplex c = hochschild_complex(e.b.alg, mb, n_max);
  std::vector<Matrix> rho;
  for (std::size_t n = 0; n <= n_max; ++n)
    rho.push_back(chain_coaction_B(m, nh, e.b.alg.dim, n));
  for (std::size_t n = 1; n <= n_max; ++n)
    if (kron(c.d[n], Matrix::identity(nh)) * rho[n] != rho[n - 1] * c.d[n])
      throw std::runtime_error("chain coaction on C(B,M) is not colinear with b");
  s.hom = homology(c);
  for (std::size_t n = 0; n + 1 <= n_max; ++n) {
    s.coaction_h.push_back(descend_map(rho[n], s.hom.deg[n], s.hom.deg[n], nh));
    Matrix rho_c = kron(Matrix::identity(c.dims[n]), ch.pi) * rho[n];
    s.coaction_c.push_back(descend_map(rho_c, s.hom.deg[n], s.hom.deg[n], nc));
  }
  s.z0 = intersect(center(e.alg), e.coinv);
  Matrix zc = s.z0.basis_columns();
  for (std::size_t n = 0; n + 1 <= n_max; ++n) {
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < s.z0.dim(); ++k) {
      Matrix op = kron(m.left_act(zc.col(k)), Matrix::identity(ipow(e.b.alg.dim, n)));
      acts.push_back(descend_map(op, s.hom.deg[n], s.hom.deg[n], 1));
    }
    s.z0_action.push_back(std::move(acts));
  }
  return s;
}

StructuredHomologyA coaction_on_HH_A(const ComoduleAlgebra& e, const HopfBimodule& m,
                                     std::size_t n_max) {
  StructuredHomologyA s;
  TraceCoalgebra ch = compute_C_H(e.hopf);
  const std::size_t nc = ch.quotient.dim();
  Bimodule ma = ambient_bimodule(e.alg, m);
  ChainComplex c = hochschild_complex(e.alg, ma, n_max);
  std::vector<Matrix> rho;
  for (std::size_t n = 0; n <= n_max; ++n) rho.push_back(chain_coaction_A(e, m, ch, n));
  for (std::size_t n = 1; n <= n_max; ++n)
    if (kron(c.d[n], Matrix::identity(nc)) * rho[n] != rho[n - 1] * c.d[n])
      throw std::runtime_error("chain coaction on C(A,M) is not colinear with b");
  s.hom = homology(c);
  for (std::size_t n = 0; n + 1 <= n_max; ++n)
    s.coaction_c.push_back(descend_map(rho[n], s.hom.deg[n], s.hom.deg[n], nc));
  s.z0 = intersect(center(e.alg), e.coinv);
  Matrix zc = s.z0.basis_columns();
  for (std::size_t n = 0; n + 1 <= n_max; ++n) {
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < s.z0.dim(); ++k) {
      Matrix op = kron(m.left_act(zc.col(k)), Matrix::identity(ipow(e.alg.dim, n)));
      acts.push_back(descend_map(op, s.hom.deg[n], s.hom.deg[n], 1));
    }
    s.z0_action.push_back(std::move(acts));
  }
  return s;
}

Matrix CentralChainAction::chain_op(const HopfBimodule& m, std::size_t tail_dim,
                                 const Matrix& h) const {
  Matrix op(m.dim, m.dim);
  for (std::size_t t = 0; t < certificates.size(); ++t) {
    if (is_zero(h.at(t, 0))) continue;
    Matrix part(m.dim, m.dim);
    for (const auto& [a1, a2] : certificates[t])
      part = part + m.left_act(a2) * m.right_act(a1);
    op = op + part * h.at(t, 0);
  }
  return kron(op, Matrix::identity(tail_dim));
}

UMHomologyAction induced_um_action_on_HH_B(const ComoduleAlgebra& e, const HopfBimodule& m,
                                           std::size_t n_max) {
  UMHomologyAction res;
  CentralGaloisReport cg = centrally_galois_check(e);
  if (!cg.centrally_galois) {
    res.message = "extension is not centrally Galois; the action above degree 0 has no "
                  "computable realization";
    return res;
  }
  res.supported = true;
  const std::size_t nh = e.hopf.dim();
  CentralChainAction lam{cg.certificates};
  Bimodule mb = restrict_bimodule(m, e.b);
  ChainComplex c = hochschild_complex(e.b.alg, mb, n_max);
  res.hom = homology(c);
  // the coefficient operators must commute with the differential
  for (std::size_t t = 0; t < nh; ++t) {
    Matrix h = Matrix::unit_column(nh, t);
    for (std::size_t n = 1; n <= n_max; ++n)
      if (lam.chain_op(m, ipow(e.b.alg.dim, n - 1), h) * c.d[n] !=
          c.d[n] * lam.chain_op(m, ipow(e.b.alg.dim, n), h))
        throw std::runtime_error("certificate operator is not a chain map");
  }
  for (std::size_t n = 0; n + 1 <= n_max; ++n) {
    std::vector<Matrix> acts;
    for (std::size_t t = 0; t < nh; ++t)
      acts.push_back(descend_map(lam.chain_op(m, ipow(e.b.alg.dim, n), Matrix::unit_column(nh, t)),
                                 res.hom.deg[n], res.hom.deg[n], 1));
    res.action.push_back(std::move(acts));
  }
  GaloisExtension g = GaloisExtension::make(e);
  UMAction um = um_action(g, m);
  res.degree0_matches_um = true;
  for (std::size_t t = 0; t < nh; ++t)
    if (!(res.action[0][t] == um.action[t])) res.degree0_matches_um = false;
  return res;
}

TorResult tor(const RightModule& x, const LeftModule& y, std::size_t n_max) {
  if (!(x.over.mult == y.over.mult))
    throw std::invalid_argument("tor: modules over different algebras");
  const std::size_t rd = x.over.dim, xd = x.dim, yd = y.dim;
  const Algebra& r = x.over;
  TorResult res;
  res.bar.d.push_back(Matrix());
  res.bar.dims.push_back(xd * yd);
  for (std::size_t p = 1; p <= n_max; ++p) {
    const std::size_t tail = ipow(rd, p), tail1 = ipow(rd, p - 1);
    const std::size_t src = xd * tail * yd, dst = xd * tail1 * yd;
    Matrix d(dst, src);
    std::vector<std::size_t> digits(p), nd(p > 0 ? p - 1 : 0);
    for (std::size_t flat = 0; flat < src; ++flat) {
      const std::size_t y_idx = flat % yd;
      const std::size_t rest = flat / yd;
      const std::size_t x_idx = rest / tail, t = rest % tail;
      decode(t, rd, digits);
      // (x r₁) ⊗ ⋯ ⊗ y
      Matrix v0 = x.act[digits[0]].col(x_idx);
      for (std::size_t mi = 0; mi < xd; ++mi)
        if (!is_zero(v0.at(mi, 0)))
          d.at((mi * tail1 + t % tail1) * yd + y_idx, flat) += v0.at(mi, 0);
      Rational sign(-1);
      for (std::size_t i = 1; i + 1 <= p; ++i) {
        Matrix prod = r.mult.col(digits[i - 1] * rd + digits[i]);
        for (std::size_t pos = 0; pos + 1 < p; ++pos)
          nd[pos] = pos < i - 1 ? digits[pos] : digits[pos + 1];
        for (std::size_t k = 0; k < rd; ++k) {
          if (is_zero(prod.at(k, 0))) continue;
          nd[i - 1] = k;
          d.at((x_idx * tail1 + encode(nd, rd)) * yd + y_idx, flat) += sign * prod.at(k, 0);
        }
        sign = -sign;
      }
      // (−1)^p x ⊗ ⋯ ⊗ (r_p y)
      const Rational last_sign = (p % 2 == 0) ? Rational(1) : Rational(-1);
      Matrix vp = y.act[digits[p - 1]].col(y_idx);
      for (std::size_t mi = 0; mi < yd; ++mi)
        if (!is_zero(vp.at(mi, 0)))
          d.at((x_idx * tail1 + t / rd) * yd + mi, flat) += last_sign * vp.at(mi, 0);
    }
    res.bar.d.push_back(std::move(d));
    res.bar.dims.push_back(src);
  }
  res.bar.check();
  res.hom = homology(res.bar);
  res.dims = res.hom.dims();
  return res;
}

RightModule trivial_right_module(const Subalgebra& sub_of_h, const Matrix& counit_h) {
  RightModule x;
  x.over = sub_of_h.alg;
  x.dim = 1;
  for (std::size_t i = 0; i < sub_of_h.alg.dim; ++i) {
    Matrix a(1, 1);
    a.at(0, 0) = (counit_h * sub_of_h.inclusion.col(i)).at(0, 0);
    x.act.push_back(a);
  }
  x.check();
  return x;
}

TorCoactionReport tor_coaction_check(const RightModule& x, const RModComodule& m,
                                     std::size_t n_max) {
  TorCoactionReport rep;
  m.check();
  LeftModule ym{m.r, m.dim, m.act};
  TorResult t = tor(x, ym, n_max);
  rep.dims = t.dims;
  const std::size_t nc = m.c.dim;
  std::vector<Matrix> rho;
  for (std::size_t p = 0; p <= n_max; ++p)
    rho.push_back(kron(Matrix::identity(t.bar.dims[p] / m.dim), m.coaction));
  for (std::size_t p = 1; p <= n_max; ++p)
    if (kron(t.bar.d[p], Matrix::identity(nc)) * rho[p] != rho[p - 1] * t.bar.d[p]) {
      rep.message = "bar-complex coaction is not colinear at degree " + std::to_string(p);
      return rep;
    }
  for (std::size_t p = 0; p + 1 <= n_max; ++p) {
    Matrix rbar = descend_map(rho[p], t.hom.deg[p], t.hom.deg[p], nc);
    const std::size_t hd = t.hom.deg[p].dim();
    if (kron(rbar, Matrix::identity(nc)) * rbar !=
        kron(Matrix::identity(hd), m.c.comult) * rbar) {
      rep.message = "descended coaction not coassociative at degree " + std::to_string(p);
      return rep;
    }
    if (kron(Matrix::identity(hd), m.c.counit) * rbar != Matrix::identity(hd)) {
      rep.message = "descended coaction fails counit law at degree " + std::to_string(p);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

PhiReport edge_map(const GaloisExtension& g, const HopfBimodule& m,
                       const LeftComodule& v) {
  PhiReport rep;
  const ComoduleAlgebra& e = g.ext;
  TraceCoalgebra ch = compute_C_H(e.hopf);
  CocommutativeSubalgebra rh = compute_R_H(e.hopf);
  const std::size_t nc = ch.quotient.dim(), vd = v.dim;
  UMAction u = um_action(g, m);
  Rho0 r0 = rho0(g, m, ch);
  const std::size_t mbd = u.mb.dim();
  Subspace w0 = cotensor(r0.rho_c, mbd, v.coaction, vd, nc);
  // R_H-action on M_B ⊗ V restricted to the cotensor product
  Matrix rcols = rh.space.basis_columns();
  std::vector<Matrix> op;
  std::vector<Rational> eps;
  for (std::size_t k = 0; k < rh.space.dim(); ++k) {
    op.push_back(restrict_to_subspace(kron(u.act(rcols.col(k)), Matrix::identity(vd)), w0));
    eps.push_back((e.hopf.counit() * rcols.col(k)).at(0, 0));
  }
  Matrix rels(w0.dim(), 0);
  for (std::size_t k = 0; k < op.size(); ++k)
    rels = rels.hstack(op[k] - Matrix::identity(w0.dim()) * eps[k]);
  Quotient dom = Quotient::by(Subspace::from_columns(w0.dim(), rels));
  rep.domain_dim = dom.dim();
  // M_A and the projection p : M_B → M_A
  Quotient ma = commutator_quotient(m.left, m.right, m.dim, Subspace::full(e.alg.dim));
  Matrix mb_rel = u.mb.relations().basis_columns();
  Matrix p = ma.projection() * u.mb.section();
  if (mb_rel.cols() > 0 && !(ma.projection() * mb_rel).is_zero()) {
    rep.message = "[B,M] does not map into [A,M]";
    return rep;
  }
  // C_H-coaction on M_A
  Matrix rhoa = kron(ma.projection(), ch.pi) * m.coaction * ma.section();
  Matrix ma_rel = ma.relations().basis_columns();
  if (ma_rel.cols() > 0 &&
      !(kron(ma.projection(), ch.pi) * m.coaction * ma_rel).is_zero()) {
    rep.message = "C_H-coaction does not descend to M_A";
    return rep;
  }
  Subspace ta = cotensor(rhoa, ma.dim(), v.coaction, vd, nc);
  rep.codomain_dim = ta.dim();
  // f = (p ⊗ V) on the cotensor
  Matrix f_amb = kron(p, Matrix::identity(vd)) * w0.basis_columns();
  Matrix f(ta.dim(), w0.dim());
  for (std::size_t j = 0; j < w0.dim(); ++j) {
    auto coords = ta.coordinates(f_amb.col(j));
    if (!coords) {
      rep.message = "phi does not land in M_A □ V";
      return rep;
    }
    f.set_col(j, *coords);
  }
  // φ kills the R_H⁺-multiples
  for (std::size_t k = 0; k < op.size(); ++k)
    if (!(f * (op[k] - Matrix::identity(w0.dim()) * eps[k])).is_zero()) {
      rep.message = "phi is not well-defined on K ⊗_{R_H} G_V(M)";
      return rep;
    }
  rep.well_defined = true;
  rep.matrix = f * dom.section();
  rep.bijective = (rep.domain_dim == rep.codomain_dim) && rank(rep.matrix) == rep.domain_dim;
  return rep;
}

namespace {

// ---- cyclic machinery -------------------------------------------------

Matrix cyclic_face(const Algebra& a, std::size_t q, std::size_t i) {
  const std::size_t na = a.dim;
  const std::size_t src = ipow(na, q + 1), dst = ipow(na, q);
  Matrix d(dst, src);
  std::vector<std::size_t> digits(q + 1), nd(q);
  for (std::size_t flat = 0; flat < src; ++flat) {
    decode(flat, na, digits);
    if (i < q) {
      Matrix prod = a.mult.col(digits[i] * na + digits[i + 1]);
      for (std::size_t pos = 0; pos < q; ++pos)
        nd[pos] = pos < i ? digits[pos] : digits[pos + 1];
      for (std::size_t k = 0; k < na; ++k) {
        if (is_zero(prod.at(k, 0))) continue;
        nd[i] = k;
        d.at(encode(nd, na), flat) += prod.at(k, 0);
      }
    } else {
      // a^q a^0 ⊗ a^1 ⊗ ⋯ ⊗ a^{q−1}
      Matrix prod = a.mult.col(digits[q] * na + digits[0]);
      for (std::size_t pos = 1; pos < q; ++pos) nd[pos] = digits[pos];
      for (std::size_t k = 0; k < na; ++k) {
        if (is_zero(prod.at(k, 0))) continue;
        nd[0] = k;
        d.at(encode(nd, na), flat) += prod.at(k, 0);
      }
    }
  }
  return d;
}

Matrix cyclic_b(const Algebra& a, std::size_t q, bool with_last) {
  const std::size_t na = a.dim;
  Matrix d(ipow(na, q), ipow(na, q + 1));
  Rational sign(1);
  for (std::size_t i = 0; i <= (with_last ? q : q - 1); ++i) {
    d = d + cyclic_face(a, q, i) * sign;
    sign = -sign;
  }
  return d;
}

Matrix cyclic_t(const Algebra& a, std::size_t q, bool with_sign) {
  std::vector<std::size_t> dims(q + 1, a.dim), order(q + 1);
  order[0] = q;
  for (std::size_t i = 1; i <= q; ++i) order[i] = i - 1;
  Matrix t = tensor_permutation(dims, order);
  if (with_sign && q % 2 == 1) t = -t;
  return t;
}

Matrix cyclic_norm(const Algebra& a, std::size_t q) {
  const std::size_t dim = ipow(a.dim, q + 1);
  Matrix t = cyclic_t(a, q, true);
  Matrix acc = Matrix::identity(dim), sum = Matrix::identity(dim);
  for (std::size_t i = 1; i <= q; ++i) {
    acc = acc * t;
    sum = sum + acc;
  }
  return sum;
}

Matrix cyclic_s(const Algebra& a, std::size_t q) {
  return kron(a.unit, Matrix::identity(ipow(a.dim, q + 1)));
}

} // namespace

CyclicResult cyclic_complex(const Algebra& a, std::size_t N) {
  CyclicResult res;
  const std::size_t top = N + 1;
  std::vector<Matrix> b, bp, tmat, norm;
  for (std::size_t q = 0; q <= top; ++q) {
    b.push_back(q == 0 ? Matrix(0, a.dim) : cyclic_b(a, q, true));
    bp.push_back(q == 0 ? Matrix(0, a.dim) : cyclic_b(a, q, false));
    tmat.push_back(cyclic_t(a, q, true));
    norm.push_back(cyclic_norm(a, q));
  }
  res.tot.d.push_back(Matrix());
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<std::size_t> qs, offs;
    std::size_t total = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      qs.push_back(n - p);
      offs.push_back(total);
      total += ipow(a.dim, n - p + 1);
    }
    res.block_q.push_back(qs);
    res.block_offset.push_back(offs);
    res.tot.dims.push_back(total);
    if (n == 0) continue;
    Matrix d(res.tot.dims[n - 1], total);
    auto put = [&](const Matrix& blk, std::size_t roff, std::size_t coff, Rational s) {
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
          if (!is_zero(blk.at(i, j))) d.at(roff + i, coff + j) += s * blk.at(i, j);
    };
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p;
      const std::size_t coff = offs[p];
      if (q >= 1) {
        // vertical to block (p, q−1) in degree n−1 (same p)
        const std::size_t roff = res.block_offset[n - 1][p];
        if (p % 2 == 0)
          put(b[q], roff, coff, 1);
        else
          put(bp[q], roff, coff, -1);
      }
      if (p >= 1) {
        // horizontal to block (p−1, q) in degree n−1
        const std::size_t roff = res.block_offset[n - 1][p - 1];
        if (p % 2 == 1) {
          put(Matrix::identity(ipow(a.dim, q + 1)), roff, coff, 1);
          put(tmat[q], roff, coff, -1);
        } else {
          put(norm[q], roff, coff, 1);
        }
      }
    }
    res.tot.d.push_back(std::move(d));
  }
  res.tot.check();
  res.hom = homology(res.tot);
  for (std::size_t n = 0; n <= N; ++n) res.hc_dims.push_back(res.hom.deg[n].dim());
  return res;
}

TheoremReport verify_cyclic_coinvariants(const ComoduleAlgebra& e, std::size_t N) {
  TheoremReport rep;
  CentralGaloisReport cg = centrally_galois_check(e);
  if (!cg.centrally_galois) {
    rep.message = "extension is not centrally Galois: " + cg.message;
    return rep;
  }
  rep.applicable = true;
  TraceCoalgebra ch = compute_C_H(e.hopf);
  const std::size_t nc = ch.quotient.dim();
  HopfBimodule ma = HopfBimodule::canonical(e);
  const Algebra& a = e.alg;
  // chain-level colinearity: t (signless, as displayed), b, b′, s and the
  // Connes operator B = (1−t) s N
  std::vector<Matrix> rho;
  for (std::size_t q = 0; q <= N + 1; ++q) rho.push_back(chain_coaction_A(e, ma, ch, q));
  for (std::size_t q = 0; q <= N; ++q) {
    Matrix t0 = cyclic_t(a, q, false);
    if (rho[q] * t0 != kron(t0, Matrix::identity(nc)) * rho[q]) {
      rep.message = "cyclic operator t is not colinear at q = " + std::to_string(q);
      return rep;
    }
    if (q >= 1) {
      Matrix bq = cyclic_b(a, q, true), bpq = cyclic_b(a, q, false);
      if (kron(bq, Matrix::identity(nc)) * rho[q] != rho[q - 1] * bq ||
          kron(bpq, Matrix::identity(nc)) * rho[q] != rho[q - 1] * bpq) {
        rep.message = "b or b' is not colinear at q = " + std::to_string(q);
        return rep;
      }
    }
    Matrix s = cyclic_s(a, q);
    if (rho[q + 1] * s != kron(s, Matrix::identity(nc)) * rho[q]) {
      rep.message = "extra degeneracy s is not colinear at q = " + std::to_string(q);
      return rep;
    }
    Matrix connes_b = (Matrix::identity(ipow(a.dim, q + 2)) - cyclic_t(a, q + 1, true)) *
                      cyclic_s(a, q) * cyclic_norm(a, q);
    if (rho[q + 1] * connes_b != kron(connes_b, Matrix::identity(nc)) * rho[q]) {
      rep.message = "Connes operator B is not colinear at q = " + std::to_string(q);
      return rep;
    }
  }
  CyclicResult cca = cyclic_complex(a, N);
  // blockwise coaction on the total complex and full colinearity with D
  std::vector<Matrix> tot_rho;
  for (std::size_t n = 0; n <= N + 1; ++n) {
    Matrix big(cca.tot.dims[n] * nc, cca.tot.dims[n]);
    for (std::size_t pb = 0; pb < cca.block_q[n].size(); ++pb) {
      const std::size_t q = cca.block_q[n][pb], off = cca.block_offset[n][pb];
      const Matrix& r = rho[q];
      const std::size_t dq = ipow(a.dim, q + 1);
      for (std::size_t col = 0; col < dq; ++col)
        for (std::size_t row = 0; row < dq; ++row)
          for (std::size_t y = 0; y < nc; ++y)
            if (!is_zero(r.at(row * nc + y, col)))
              big.at((off + row) * nc + y, off + col) = r.at(row * nc + y, col);
    }
    tot_rho.push_back(std::move(big));
  }
  for (std::size_t n = 1; n <= N + 1; ++n)
    if (kron(cca.tot.d[n], Matrix::identity(nc)) * tot_rho[n] != tot_rho[n - 1] * cca.tot.d[n]) {
      rep.message = "total-complex coaction is not colinear with D";
      return rep;
    }
  // Connes I and S at the level of total complexes: I is the column-0
  // inclusion, S drops columns 0 and 1
  for (std::size_t n = 1; n <= N; ++n) {
    const std::size_t dq = ipow(a.dim, n + 1);
    Matrix inc(cca.tot.dims[n], dq);
    for (std::size_t i = 0; i < dq; ++i) inc.at(cca.block_offset[n][0] + i, i) = 1;
    if (tot_rho[n] * inc != kron(inc, Matrix::identity(nc)) * rho[n]) {
      rep.message = "Connes map I is not colinear";
      return rep;
    }
    if (n >= 2) {
      Matrix sh(cca.tot.dims[n - 2], cca.tot.dims[n]);
      for (std::size_t pb = 2; pb < cca.block_q[n].size(); ++pb) {
        const std::size_t q = cca.block_q[n][pb], dqq = ipow(a.dim, q + 1);
        const std::size_t coff = cca.block_offset[n][pb];
        const std::size_t roff = cca.block_offset[n - 2][pb - 2];
        for (std::size_t i = 0; i < dqq; ++i) sh.at(roff + i, coff + i) = 1;
      }
      if (tot_rho[n - 2] * sh != kron(sh, Matrix::identity(nc)) * tot_rho[n]) {
        rep.message = "Connes map S is not colinear";
        return rep;
      }
    }
  }
  // coinvariants of HC_n(A) against HC_n(B)
  Matrix grouplike = ch.pi * e.hopf.unit();
  CyclicResult ccb = cyclic_complex(e.b.alg, N);
  rep.pass = true;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix rbar = descend_map(tot_rho[n], cca.hom.deg[n], cca.hom.deg[n], nc);
    Subspace coinv =
        kernel(rbar - kron(Matrix::identity(cca.hom.deg[n].dim()), grouplike));
    DegreeReport dr;
    dr.lhs = coinv.dim();
    dr.rhs = ccb.hc_dims[n];
    dr.bijective = dr.lhs == dr.rhs;
    if (!dr.bijective) rep.pass = false;
    rep.degrees.push_back(dr);
  }
  return rep;
}

// ---- shared edge-map pipeline for the homology comparison theorems -----

namespace {

struct EdgePipeline {
  bool ok = false;
  std::string message;
  TraceCoalgebra ch;
  CocommutativeSubalgebra rh;
  std::size_t vd = 0;
  Subspace w; // M □ V inside M ⊗ V
  Homology hom_w, hom_bm, hom_am;
  std::vector<Matrix> psi;         // HH_n(B,M□V) → HH_n(B,M) ⊗ V
  std::vector<Matrix> j;           // HH_n(B,M□V) → HH_n(A,M) ⊗ V
  std::vector<Subspace> rhs;       // HH_n(A,M) □ V
  std::vector<Subspace> cot_bm;    // HH_n(B,M) □ V  (for the Ψ-image check)
  std::vector<std::vector<Matrix>> act; // transported certificate action per degree, per H basis
  bool psi_iso_onto_cotensor = true;
};

EdgePipeline edge_pipeline(const ComoduleAlgebra& e, const HopfBimodule& m,
                           const LeftComodule& v, std::size_t N, bool need_action) {
  EdgePipeline d;
  d.ch = compute_C_H(e.hopf);
  d.rh = compute_R_H(e.hopf);
  const std::size_t nh = e.hopf.dim(), nc = d.ch.quotient.dim();
  d.vd = v.dim;
  CentralGaloisReport cg;
  if (need_action) {
    cg = centrally_galois_check(e);
    if (!cg.centrally_galois) {
      d.message = "not centrally Galois: " + cg.message;
      return d;
    }
  }
  Matrix mc_coact = kron(Matrix::identity(m.dim), d.ch.pi) * m.coaction;
  d.w = cotensor(mc_coact, m.dim, v.coaction, v.dim, nc);
  Bimodule wb;
  wb.over = e.b.alg;
  wb.dim = d.w.dim();
  for (std::size_t i = 0; i < e.b.alg.dim; ++i) {
    Matrix bvec = e.b.inclusion.col(i);
    wb.left.push_back(
        restrict_to_subspace(kron(m.left_act(bvec), Matrix::identity(v.dim)), d.w));
    wb.right.push_back(
        restrict_to_subspace(kron(m.right_act(bvec), Matrix::identity(v.dim)), d.w));
  }
  ChainComplex cw = hochschild_complex(e.b.alg, wb, N + 1);
  d.hom_w = homology(cw);
  Bimodule mb = restrict_bimodule(m, e.b);
  ChainComplex cbm = hochschild_complex(e.b.alg, mb, N + 1);
  d.hom_bm = homology(cbm);
  ChainComplex cam = hochschild_complex(e.alg, ambient_bimodule(e.alg, m), N + 1);
  d.hom_am = homology(cam);
  CentralChainAction lam{cg.certificates};
  const std::size_t bdim = e.b.alg.dim;
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t tail = ipow(bdim, n);
    Matrix perm1 =
        tensor_permutation({m.dim, v.dim, tail}, {0, 2, 1}); // (M,V,Bⁿ) → (M,Bⁿ,V)
    Matrix iota = perm1 * kron(d.w.basis_columns(), Matrix::identity(tail));
    d.psi.push_back(descend_map(iota, d.hom_w.deg[n], d.hom_bm.deg[n], v.dim));
    Matrix incl_bn = Matrix::identity(1);
    for (std::size_t k = 0; k < n; ++k) incl_bn = kron(incl_bn, e.b.inclusion);
    Matrix j_chain =
        kron(kron(Matrix::identity(m.dim), incl_bn), Matrix::identity(v.dim)) * iota;
    d.j.push_back(descend_map(j_chain, d.hom_w.deg[n], d.hom_am.deg[n], v.dim));
    // HH_n(A,M) □ V
    Matrix ca = chain_coaction_A(e, m, d.ch, n);
    Matrix ca_h = descend_map(ca, d.hom_am.deg[n], d.hom_am.deg[n], nc);
    d.rhs.push_back(cotensor(ca_h, d.hom_am.deg[n].dim(), v.coaction, v.dim, nc));
    // HH_n(B,M) □ V; the descended inclusion must hit exactly this cotensor
    Matrix cb = kron(Matrix::identity(cbm.dims[n]), d.ch.pi) *
                chain_coaction_B(m, nh, bdim, n);
    Matrix cb_h = descend_map(cb, d.hom_bm.deg[n], d.hom_bm.deg[n], nc);
    Subspace cot = cotensor(cb_h, d.hom_bm.deg[n].dim(), v.coaction, v.dim, nc);
    d.cot_bm.push_back(cot);
    if (rank(d.psi[n]) != d.hom_w.deg[n].dim() || cot.dim() != d.hom_w.deg[n].dim())
      d.psi_iso_onto_cotensor = false;
    for (std::size_t col = 0; col < d.psi[n].cols() && d.psi_iso_onto_cotensor; ++col)
      if (!cot.contains(d.psi[n].col(col))) d.psi_iso_onto_cotensor = false;
    if (need_action) {
      std::vector<Matrix> acts;
      for (std::size_t t = 0; t < nh; ++t) {
        Matrix lam_chain = lam.chain_op(m, tail, Matrix::unit_column(nh, t));
        Matrix lam_h = descend_map(lam_chain, d.hom_bm.deg[n], d.hom_bm.deg[n], 1);
        Matrix rhs_mat = kron(lam_h, Matrix::identity(v.dim)) * d.psi[n];
        auto sol = solve(d.psi[n], rhs_mat);
        if (!sol || !(d.psi[n] * *sol == rhs_mat)) {
          d.message = "transported action does not preserve the cotensor image at degree " +
                      std::to_string(n);
          return d;
        }
        acts.push_back(*sol);
      }
      d.act.push_back(std::move(acts));
    }
  }
  d.ok = true;
  return d;
}

} // namespace

TheoremReport verify_edge_collapse(const ComoduleAlgebra& e, const HopfBimodule& m,
                                    const LeftComodule& v, std::size_t N) {
  TheoremReport rep;
  if (!e.hopf.alg.is_commutative())
    rep.message = "warning: H is not commutative; ";
  GaloisExtension g = GaloisExtension::make(e);
  if (!g.bijective) {
    rep.message += "beta is not bijective";
    return rep;
  }
  EdgePipeline d = edge_pipeline(e, m, v, N, true);
  if (!d.ok) {
    rep.message += d.message;
    return rep;
  }
  rep.applicable = rep.message.empty();
  rep.pass = d.psi_iso_onto_cotensor;
  Matrix rcols = d.rh.space.basis_columns();
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t xn = d.hom_w.deg[n].dim();
    // relations (A_r − ε(r))·X_n over a basis of R_H
    Matrix rels(xn, 0);
    for (std::size_t k = 0; k < d.rh.space.dim(); ++k) {
      Matrix r = rcols.col(k);
      Matrix ar(xn, xn);
      for (std::size_t t = 0; t < e.hopf.dim(); ++t)
        if (!is_zero(r.at(t, 0))) ar = ar + d.act[n][t] * r.at(t, 0);
      Rational eps = (e.hopf.counit() * r).at(0, 0);
      Matrix diff = ar - Matrix::identity(xn) * eps;
      rels = rels.hstack(diff);
      if (!(d.j[n] * diff).is_zero()) rep.pass = false; // j must kill R⁺-multiples
    }
    DegreeReport dr;
    dr.lhs = xn - rank(rels);
    dr.rhs = d.rhs[n].dim();
    bool in_rhs = true;
    for (std::size_t col = 0; col < d.j[n].cols(); ++col)
      if (!d.rhs[n].contains(d.j[n].col(col))) in_rhs = false;
    dr.bijective = in_rhs && rank(d.j[n]) == dr.lhs && dr.lhs == dr.rhs;
    if (!dr.bijective) rep.pass = false;
    rep.degrees.push_back(dr);
  }
  return rep;
}

TheoremReport verify_cotensor_comparison(const ComoduleAlgebra& e, const HopfBimodule& m,
                                  const LeftComodule& v, std::size_t N) {
  TheoremReport rep;
  CentralGaloisReport cg = centrally_galois_check(e);
  if (!cg.centrally_galois) {
    rep.message = "not centrally Galois: " + cg.message;
    return rep;
  }
  Subspace z = center(e.alg);
  Matrix zc = z.basis_columns();
  for (std::size_t k = 0; k < z.dim(); ++k)
    if (!(m.left_act(zc.col(k)) == m.right_act(zc.col(k)))) {
      rep.message = "M is not symmetric as a Z-bimodule (Z-basis " + std::to_string(k) + ")";
      return rep;
    }
  EdgePipeline d = edge_pipeline(e, m, v, N, false);
  if (!d.ok) {
    rep.message = d.message;
    return rep;
  }
  rep.applicable = true;
  rep.pass = d.psi_iso_onto_cotensor;
  for (std::size_t n = 0; n <= N; ++n) {
    DegreeReport dr;
    dr.lhs = d.hom_w.deg[n].dim();
    dr.rhs = d.rhs[n].dim();
    bool in_rhs = true;
    for (std::size_t col = 0; col < d.j[n].cols(); ++col)
      if (!d.rhs[n].contains(d.j[n].col(col))) in_rhs = false;
    dr.bijective = in_rhs && dr.lhs == dr.rhs && rank(d.j[n]) == dr.lhs;
    if (!dr.bijective) rep.pass = false;
    rep.degrees.push_back(dr);
  }
  return rep;
}

TheoremReport verify_group_invariants(const ComoduleAlgebra& e, const GroupAction& action,
                                      const HopfBimodule& m, std::size_t N) {
  TheoremReport rep;
  GaloisExtension g = GaloisExtension::make(e);
  if (!g.bijective) {
    rep.message = "extension is not Galois";
    return rep;
  }
  TraceCoalgebra ch = compute_C_H(e.hopf);
  LeftComodule v = LeftComodule::trivial(ch.coa, ch.pi * e.hopf.unit(), 1);
  EdgePipeline d = edge_pipeline(e, m, v, N, true);
  if (!d.ok) {
    rep.message = d.message;
    return rep;
  }
  rep.applicable = true;
  rep.pass = true;
  const std::size_t nc = ch.quotient.dim();
  const std::size_t ng = action.group.order;
  for (std::size_t n = 0; n <= N; ++n) {
    // G-invariants of HH_n(A,M) through the transported comodule structure
    Matrix ca = chain_coaction_A(e, m, ch, n);
    Matrix ca_h = descend_map(ca, d.hom_am.deg[n], d.hom_am.deg[n], nc);
    const std::size_t hd = d.hom_am.deg[n].dim();
    Matrix stacked(0, hd);
    for (std::size_t x = 0; x < ng; ++x) {
      Matrix ev(1, nc); // evaluation of C_H = (QG)* coordinates at the group element
      for (std::size_t y = 0; y < nc; ++y)
        ev.at(0, y) = ch.quotient.section().at(x, y);
      Matrix gx = kron(Matrix::identity(hd), ev) * ca_h;
      stacked = stacked.vstack(gx - Matrix::identity(hd));
    }
    Subspace inv = hd == 0 ? Subspace::zero(0) : kernel(stacked);
    // p₁-component of HH_n(B, M^G)
    Matrix p1 = Matrix::unit_column(ng, action.group.identity);
    Matrix ap1(d.hom_w.deg[n].dim(), d.hom_w.deg[n].dim());
    for (std::size_t t = 0; t < ng; ++t)
      if (!is_zero(p1.at(t, 0))) ap1 = ap1 + d.act[n][t] * p1.at(t, 0);
    DegreeReport dr;
    dr.lhs = rank(ap1);
    dr.rhs = inv.dim();
    Matrix jmap = d.j[n] * ap1; // columns span the image of the p₁-part
    bool into = true;
    for (std::size_t col = 0; col < jmap.cols(); ++col)
      if (!inv.contains(jmap.col(col))) into = false;
    dr.bijective = into && rank(jmap) == dr.lhs && dr.lhs == dr.rhs;
    if (!dr.bijective) rep.pass = false;
    rep.degrees.push_back(dr);
  }
  return rep;
}

TheoremReport verify_central_action_trivial(const ComoduleAlgebra& e, const HopfBimodule& m,
                                  std::size_t N) {
  TheoremReport rep;
  CentralGaloisReport cg = centrally_galois_check(e);
  if (!cg.centrally_galois) {
    rep.message = "not centrally Galois: " + cg.message;
    return rep;
  }
  Subspace z = center(e.alg);
  Matrix zc = z.basis_columns();
  for (std::size_t k = 0; k < z.dim(); ++k)
    if (!(m.left_act(zc.col(k)) == m.right_act(zc.col(k)))) {
      rep.message = "M is not symmetric as a Z-bimodule";
      return rep;
    }
  rep.applicable = true;
  UMHomologyAction act = induced_um_action_on_HH_B(e, m, N + 1);
  if (!act.supported) {
    rep.message = act.message;
    rep.applicable = false;
    return rep;
  }
  rep.pass = act.degree0_matches_um;
  for (std::size_t n = 0; n <= N; ++n) {
    DegreeReport dr;
    dr.lhs = dr.rhs = act.hom.deg[n].dim();
    dr.bijective = true;
    for (std::size_t t = 0; t < e.hopf.dim(); ++t) {
      Rational eps = e.hopf.counit().at(0, t);
      if (!(act.action[n][t] == Matrix::identity(act.hom.deg[n].dim()) * eps))
        dr.bijective = false;
    }
    if (!dr.bijective) rep.pass = false;
    rep.degrees.push_back(dr);
  }
  return rep;
}

TheoremReport verify_center_descent(const ComoduleAlgebra& e, const HopfBimodule& m,
                                  std::size_t N) {
  TheoremReport rep;
  CentralGaloisReport cg = centrally_galois_check(e);
  if (!cg.centrally_galois) {
    rep.message = "not centrally Galois: " + cg.message;
    return rep;
  }
  const std::size_t nh = e.hopf.dim(), na = e.alg.dim;
  Subspace z = center(e.alg);
  Matrix zc = z.basis_columns();
  for (std::size_t k = 0; k < z.dim(); ++k) {
    Matrix diff = m.left_act(zc.col(k)) - m.right_act(zc.col(k));
    for (std::size_t w = 0; w < m.dim; ++w)
      if (!diff.col(w).is_zero()) {
        rep.message = "M is not Z-symmetric: counterexample Z-basis " + std::to_string(k) +
                      ", M-basis " + std::to_string(w);
        return rep;
      }
  }
  rep.applicable = true;
  TraceCoalgebra ch = compute_C_H(e.hopf);
  const std::size_t nc = ch.quotient.dim();
  // M^coH as a B-bimodule
  Subspace mc = coinvariants(m.coaction, m.dim, e.hopf.unit());
  Bimodule mcb;
  mcb.over = e.b.alg;
  mcb.dim = mc.dim();
  for (std::size_t i = 0; i < e.b.alg.dim; ++i) {
    Matrix bvec = e.b.inclusion.col(i);
    mcb.left.push_back(restrict_to_subspace(m.left_act(bvec), mc));
    mcb.right.push_back(restrict_to_subspace(m.right_act(bvec), mc));
  }
  ChainComplex cb = hochschild_complex(e.b.alg, mcb, N + 1);
  Homology hom_b = homology(cb);
  ChainComplex ca = hochschild_complex(e.alg, ambient_bimodule(e.alg, m), N + 1);
  Homology hom_a = homology(ca);
  // Z' = Z ∩ B and the module structures
  Subalgebra zsub = induced_subalgebra(e.alg, z);
  Subspace zp = intersect(z, e.coinv);
  Matrix zpc = zp.basis_columns();
  std::vector<Matrix> right_on_z;
  std::vector<Matrix> left_z_chains; // z′ acting on coefficients of C(B, M^coH)
  for (std::size_t k = 0; k < zp.dim(); ++k) {
    auto coords = z.coordinates(zpc.col(k));
    right_on_z.push_back(zsub.alg.right_mult(*coords));
    left_z_chains.push_back(restrict_to_subspace(m.left_act(zpc.col(k)), mc));
  }
  rep.pass = true;
  std::vector<Matrix> rho_q; // coaction on hom_a per degree (C_H-valued)
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix ca_n = chain_coaction_A(e, m, ch, n);
    rho_q.push_back(descend_map(ca_n, hom_a.deg[n], hom_a.deg[n], nc));
  }
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t hb = hom_b.deg[n].dim(), ha = hom_a.deg[n].dim();
    std::vector<Matrix> left_on_hom;
    for (std::size_t k = 0; k < zp.dim(); ++k)
      left_on_hom.push_back(descend_map(
          kron(left_z_chains[k], Matrix::identity(ipow(e.b.alg.dim, n))), hom_b.deg[n],
          hom_b.deg[n], 1));
    Quotient q = relative_tensor(z.dim(), hb, right_on_z, left_on_hom);
    // T(z ⊗ ω) = class of z·(inclusion of a representative of ω)
    Matrix incl_bn = Matrix::identity(1);
    for (std::size_t k = 0; k < n; ++k) incl_bn = kron(incl_bn, e.b.inclusion);
    Matrix chain_incl = kron(mc.basis_columns(), incl_bn); // C_n(B,M^coH) → C_n(A,M)
    Matrix tt(ha, z.dim() * hb);
    for (std::size_t i = 0; i < z.dim(); ++i) {
      Matrix zmul = kron(m.left_act(zc.col(i)), Matrix::identity(ipow(na, n)));
      Matrix ti = descend_map(zmul * chain_incl, hom_b.deg[n], hom_a.deg[n], 1);
      for (std::size_t jcol = 0; jcol < hb; ++jcol)
        for (std::size_t r = 0; r < ha; ++r) tt.at(r, i * hb + jcol) = ti.at(r, jcol);
    }
    Matrix qrel = q.relations().basis_columns();
    if (qrel.cols() > 0 && !(tt * qrel).is_zero()) {
      rep.pass = false;
      rep.message = "map does not factor through Z ⊗_{Z'}";
    }
    Matrix tbar = tt * q.section();
    DegreeReport dr;
    dr.lhs = q.dim();
    dr.rhs = ha;
    dr.bijective = (dr.lhs == dr.rhs) && rank(tbar) == dr.lhs;
    // H-colinearity of the isomorphism: coaction on Z ⊗_{Z'} HH from the
    // Z-factor, trivial on coefficients
    Matrix rho_z = restrict_comodule(e.coaction, z, nh);
    Matrix rho_qm = kron(q.projection(), ch.pi) *
                    tensor_permutation({z.dim(), nh, hb}, {0, 2, 1}) *
                    kron(rho_z, Matrix::identity(hb)) * q.section();
    if (!(rho_q[n] * tbar == kron(tbar, Matrix::identity(nc)) * rho_qm)) {
      dr.bijective = false;
      rep.message = "descent map is not colinear at degree " + std::to_string(n);
    }
    if (!dr.bijective) rep.pass = false;
    rep.degrees.push_back(dr);
  }
  return rep;
}

} // namespace hh
