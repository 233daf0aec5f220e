#include "hh/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hh/galois.hpp"

namespace hh {

FiniteGroup FiniteGroup::make(std::vector<std::string> names,
                              std::vector<std::vector<std::size_t>> table) {
  FiniteGroup g;
  g.order = names.size();
  g.names = std::move(names);
  g.table = std::move(table);
  g.check();
  return g;
}

void FiniteGroup::check() const {
  const std::size_t n = order;
  if (table.size() != n) throw std::invalid_argument("group table has wrong size");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table row has wrong size");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("group multiplication is not associative");
  bool found_identity = false;
  for (std::size_t e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      if (table[e][a] != a || table[a][e] != a) ok = false;
    if (ok) {
      const_cast<FiniteGroup*>(this)->identity = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw std::invalid_argument("group has no identity");
  auto& inv = const_cast<FiniteGroup*>(this)->inverse;
  inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inv[a] = b;
        found = true;
      }
    if (!found) throw std::invalid_argument("group element has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : "g" + (n > 2 ? std::to_string(i) : std::string()));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return make(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("symmetric group out of supported range");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t ord = perms.size();
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) s += std::to_string(q[i]);
    names.push_back(s + ")");
  }
  std::vector<std::vector<std::size_t>> table(ord, std::vector<std::size_t>(ord));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return std::size_t(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (std::size_t a = 0; a < ord; ++a)
    for (std::size_t b = 0; b < ord; ++b) {
      std::vector<std::size_t> comp(n);
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(comp);
    }
  return make(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order * b.order;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < a.order; ++i)
    for (std::size_t j = 0; j < b.order; ++j)
      names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
  for (std::size_t i1 = 0; i1 < a.order; ++i1)
    for (std::size_t j1 = 0; j1 < b.order; ++j1)
      for (std::size_t i2 = 0; i2 < a.order; ++i2)
        for (std::size_t j2 = 0; j2 < b.order; ++j2)
          table[i1 * b.order + j1][i2 * b.order + j2] =
              a.table[i1][i2] * b.order + b.table[j1][j2];
  return make(std::move(names), std::move(table));
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  ConjugacyData d;
  d.class_of.assign(g.order, g.order);
  for (std::size_t a = 0; a < g.order; ++a) {
    if (d.class_of[a] != g.order) continue;
    std::vector<std::size_t> cls;
    for (std::size_t x = 0; x < g.order; ++x) {
      std::size_t conj = g.mul(g.mul(x, a), g.inverse[x]);
      if (d.class_of[conj] == g.order) {
        d.class_of[conj] = d.classes.size();
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    d.classes.push_back(std::move(cls));
  }
  return d;
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order;
  std::vector<StructureEntry> mult, comult;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult.push_back({i, j, g.mul(i, j), Rational(1)});
    comult.push_back({i, i, i, Rational(1)});
  }
  Matrix unit = Matrix::unit_column(n, g.identity);
  Matrix counit(1, n);
  for (std::size_t i = 0; i < n; ++i) counit.at(0, i) = 1;
  Matrix antipode(n, n);
  for (std::size_t i = 0; i < n; ++i) antipode.at(g.inverse[i], i) = 1;
  Algebra alg = Algebra::make(g.names, mult, unit);
  Coalgebra coa = Coalgebra::make(g.names, comult, counit);
  return HopfAlgebra::make(std::move(alg), std::move(coa), std::move(antipode));
}

HopfAlgebra dual_group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order;
  std::vector<std::string> labels;
  for (const auto& s : g.names) labels.push_back("p_" + s);
  std::vector<StructureEntry> mult, comult;
  for (std::size_t x = 0; x < n; ++x) {
    mult.push_back({x, x, x, Rational(1)});
    // Δ(p_x) = Σ_g p_{x g⁻¹} ⊗ p_g
    for (std::size_t h = 0; h < n; ++h)
      comult.push_back({x, g.mul(x, g.inverse[h]), h, Rational(1)});
  }
  Matrix unit(n, 1);
  for (std::size_t x = 0; x < n; ++x) unit.at(x, 0) = 1;
  Matrix counit(1, n);
  counit.at(0, g.identity) = 1;
  Matrix antipode(n, n);
  for (std::size_t x = 0; x < n; ++x) antipode.at(g.inverse[x], x) = 1;
  Algebra alg = Algebra::make(labels, mult, unit);
  Coalgebra coa = Coalgebra::make(labels, comult, counit);
  return HopfAlgebra::make(std::move(alg), std::move(coa), std::move(antipode));
}

GradedAlgebra graded_algebra(const Algebra& a, const FiniteGroup& g,
                             const std::vector<std::size_t>& degree) {
  if (degree.size() != a.dim)
    throw std::invalid_argument("graded algebra: one degree per basis vector");
  GradedAlgebra gr;
  gr.alg = a;
  gr.group = g;
  gr.degree = degree;
  // grading multiplicative: c_{ij}^k ≠ 0 ⇒ deg k = deg i · deg j
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!is_zero(a.mult.at(k, i * a.dim + j)) &&
            degree[k] != g.mul(degree[i], degree[j]))
          throw std::invalid_argument("grading is not multiplicative at (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
  // unit in degree 1
  for (std::size_t k = 0; k < a.dim; ++k)
    if (!is_zero(a.unit.at(k, 0)) && degree[k] != g.identity)
      throw std::invalid_argument("unit is not homogeneous of degree one");
  for (std::size_t d = 0; d < g.order; ++d) {
    Matrix rows(0, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k)
      if (degree[k] == d) {
        Matrix r(1, a.dim);
        r.at(0, k) = 1;
        rows = rows.vstack(r);
      }
    gr.component.push_back(Subspace::from_rows(a.dim, rows));
  }
  // strong: A_g · A_h = A_{gh}
  for (std::size_t d1 = 0; d1 < g.order && gr.strongly_graded; ++d1)
    for (std::size_t d2 = 0; d2 < g.order && gr.strongly_graded; ++d2) {
      Matrix gens(0, a.dim);
      Matrix c1 = gr.component[d1].basis_columns(), c2 = gr.component[d2].basis_columns();
      for (std::size_t i = 0; i < gr.component[d1].dim(); ++i)
        for (std::size_t j = 0; j < gr.component[d2].dim(); ++j)
          gens = gens.vstack(a.multiply(c1.col(i), c2.col(j)).transpose());
      if (!(Subspace::from_rows(a.dim, gens) == gr.component[g.mul(d1, d2)])) {
        gr.strongly_graded = false;
        gr.failing_pair = {d1, d2};
      }
    }
  return gr;
}

ComoduleAlgebra strongly_graded(const GradedAlgebra& g) {
  if (!g.strongly_graded)
    throw std::invalid_argument(
        "grading is not strong at pair (" + std::to_string(g.failing_pair->first) + ", " +
        std::to_string(g.failing_pair->second) + ")");
  HopfAlgebra h = group_algebra(g.group);
  const std::size_t na = g.alg.dim, nh = g.group.order;
  Matrix coaction(na * nh, na);
  for (std::size_t i = 0; i < na; ++i) coaction.at(i * nh + g.degree[i], i) = 1;
  return ComoduleAlgebra::make(g.alg, std::move(h), std::move(coaction));
}

void GroupAction::check(const Algebra& a) const {
  if (act.size() != group.order)
    throw std::invalid_argument("group action: one matrix per group element");
  for (std::size_t x = 0; x < group.order; ++x) {
    const Matrix& m = act[x];
    if (m.rows() != a.dim || m.cols() != a.dim)
      throw std::invalid_argument("group action: matrix has wrong shape");
    if (m * a.unit != a.unit)
      throw std::invalid_argument("group action: element " + std::to_string(x) +
                                  " does not fix the unit");
    if (m * a.mult != a.mult * kron(m, m))
      throw std::invalid_argument("group action: element " + std::to_string(x) +
                                  " is not an algebra morphism");
    if (!inverse(m))
      throw std::invalid_argument("group action: element " + std::to_string(x) +
                                  " is not invertible");
  }
  if (act[group.identity] != Matrix::identity(a.dim))
    throw std::invalid_argument("group action: identity must act as identity");
  for (std::size_t x = 0; x < group.order; ++x)
    for (std::size_t y = 0; y < group.order; ++y)
      if (act[x] * act[y] != act[group.mul(x, y)])
        throw std::invalid_argument("group action: not a homomorphism at (" +
                                    std::to_string(x) + ", " + std::to_string(y) + ")");
}

ComoduleAlgebra action_comodule_algebra(const Algebra& a, const GroupAction& action) {
  action.check(a);
  HopfAlgebra h = dual_group_algebra(action.group);
  const std::size_t na = a.dim, ng = action.group.order;
  // ρ(a) = Σ_x x(a) ⊗ p_x
  Matrix coaction(na * ng, na);
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j)
        coaction.at(j * ng + x, i) = action.act[x].at(j, i);
  return ComoduleAlgebra::make(a, std::move(h), std::move(coaction));
}

QuadraticExtension galois_field_extension_sqrt(long d) {
  if (d == 0 || d == 1) throw std::invalid_argument("d must not be 0 or 1");
  for (long p = 2; p * p <= (d < 0 ? -d : d) && p <= 10000; ++p)
    if (d % (p * p) == 0)
      throw std::invalid_argument("d = " + std::to_string(d) + " is not square-free");
  std::vector<StructureEntry> mult = {
      {0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)},
      {1, 1, 0, Rational(d)}};
  Algebra a = Algebra::make({"1", "w"}, mult, Matrix::unit_column(2, 0));
  GroupAction action;
  action.group = FiniteGroup::cyclic(2);
  Matrix conj = Matrix::identity(2);
  conj.at(1, 1) = -1;
  action.act = {Matrix::identity(2), conj};
  QuadraticExtension q{action_comodule_algebra(a, action), action};
  return q;
}

Algebra biquadratic_field(long p, long q) {
  // basis {1, s, t, st} with s² = p, t² = q, ts = st
  std::vector<StructureEntry> m;
  auto add = [&](std::size_t i, std::size_t j, std::size_t k, Rational v) {
    m.push_back({i, j, k, v});
  };
  const Rational P(p), Q(q);
  for (std::size_t i = 0; i < 4; ++i) {
    add(0, i, i, 1);
    if (i != 0) add(i, 0, i, 1);
  }
  add(1, 1, 0, P);
  add(1, 2, 3, 1);
  add(2, 1, 3, 1);
  add(2, 2, 0, Q);
  add(1, 3, 2, P);  // s·st = s²t = p·t
  add(3, 1, 2, P);  // st·s = s t s = s² t
  add(2, 3, 1, Q);  // t·st = t s t = s t² = q·s
  add(3, 2, 1, Q);
  add(3, 3, 0, P * Q);
  return Algebra::make({"1", "s", "t", "st"}, m, Matrix::unit_column(4, 0));
}

Algebra matrix_algebra(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<StructureEntry> mult;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      labels.push_back("E" + std::to_string(p) + std::to_string(q));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (q == r) mult.push_back({p * n + q, r * n + s, p * n + s, Rational(1)});
  Matrix unit(n * n, 1);
  for (std::size_t p = 0; p < n; ++p) unit.at(p * n + p, 0) = 1;
  return Algebra::make(labels, mult, unit);
}

GroupAction inner_action(const Algebra& a, const Matrix& u, std::size_t k) {
  auto li = a.left_mult(u);
  auto u_inv_mat = inverse(li);
  if (!u_inv_mat) throw std::invalid_argument("inner action: u is not invertible");
  Matrix u_inv = *u_inv_mat * a.unit; // u⁻¹ as an element
  // u^k must be central for conjugation to define a Z/k-action
  Matrix upow = a.unit;
  for (std::size_t i = 0; i < k; ++i) upow = a.multiply(upow, u);
  if (!center(a).contains(upow))
    throw std::invalid_argument("inner action: u^k is not central");
  GroupAction action;
  action.group = FiniteGroup::cyclic(k);
  Matrix conj = a.left_mult(u) * a.right_mult(u_inv);
  Matrix cur = Matrix::identity(a.dim);
  for (std::size_t i = 0; i < k; ++i) {
    action.act.push_back(cur);
    cur = conj * cur;
  }
  action.check(a);
  return action;
}

OreTruncated OreTruncated::make(ComoduleAlgebra base, Matrix sigma, Matrix delta,
                                std::size_t truncation) {
  OreTruncated o;
  const Algebra& a = base.alg;
  const std::size_t na = a.dim, nh = base.hopf.dim();
  if (sigma.rows() != na || sigma.cols() != na || delta.rows() != na || delta.cols() != na)
    throw std::invalid_argument("ore: sigma/delta have wrong shape");
  // σ an algebra automorphism
  if (sigma * a.mult != a.mult * kron(sigma, sigma) || sigma * a.unit != a.unit ||
      !inverse(sigma))
    throw std::invalid_argument("ore: sigma is not an algebra automorphism");
  // δ a σ-derivation: δ(ab) = σ(a)δ(b) + δ(a)b
  if (delta * a.mult != a.mult * (kron(sigma, delta) + kron(delta, Matrix::identity(na))))
    throw std::invalid_argument("ore: delta is not a sigma-derivation");
  // colinearity
  if (base.coaction * sigma != kron(sigma, Matrix::identity(nh)) * base.coaction)
    throw std::invalid_argument("ore: sigma is not H-colinear");
  if (base.coaction * delta != kron(delta, Matrix::identity(nh)) * base.coaction)
    throw std::invalid_argument("ore: delta is not H-colinear");
  o.base = std::move(base);
  o.sigma = std::move(sigma);
  o.delta = std::move(delta);
  o.truncation = truncation;
  // f_k^{(n+1)} = σ f_{k−1}^{(n)} + δ f_k^{(n)}
  o.reorder.push_back({Matrix::identity(na)});
  for (std::size_t n = 1; n <= truncation; ++n) {
    std::vector<Matrix> row(n + 1, Matrix(na, na));
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) row[k] = row[k] + o.sigma * o.reorder[n - 1][k - 1];
      if (k < n) row[k] = row[k] + o.delta * o.reorder[n - 1][k];
    }
    o.reorder.push_back(std::move(row));
  }
  return o;
}

std::pair<Matrix, bool> OreTruncated::multiply(const Matrix& f, const Matrix& g) const {
  const std::size_t na = base.alg.dim, D = truncation;
  Matrix out(dim(), 1);
  bool exact = true;
  for (std::size_t n = 0; n <= D; ++n)
    for (std::size_t m = 0; m <= D; ++m) {
      Matrix fn(na, 1), gm(na, 1);
      for (std::size_t i = 0; i < na; ++i) {
        fn.at(i, 0) = f.at(n * na + i, 0);
        gm.at(i, 0) = g.at(m * na + i, 0);
      }
      if (fn.is_zero() || gm.is_zero()) continue;
      // (f_n Xⁿ)(g_m Xᵐ) = Σ_k f_n·f_k^{(n)}(g_m) X^{k+m}
      for (std::size_t k = 0; k <= n; ++k) {
        Matrix coeff = base.alg.multiply(fn, reorder[n][k] * gm);
        if (coeff.is_zero()) continue;
        if (k + m > D) {
          exact = false;
          continue;
        }
        for (std::size_t i = 0; i < na; ++i) out.at((k + m) * na + i, 0) += coeff.at(i, 0);
      }
    }
  return {out, exact};
}

Matrix OreTruncated::coaction() const {
  const std::size_t na = base.alg.dim, nh = base.hopf.dim(), D = truncation;
  Matrix rho(dim() * nh, dim());
  for (std::size_t n = 0; n <= D; ++n)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j)
        for (std::size_t u = 0; u < nh; ++u) {
          const Rational& c = base.coaction.at(j * nh + u, i);
          if (!is_zero(c)) rho.at((n * na + j) * nh + u, n * na + i) = c;
        }
  return rho;
}

Subspace OreTruncated::coinvariant_space() const {
  return coinvariants(coaction(), dim(), base.hopf.unit());
}

Subspace ore_center_slice(const OreTruncated& o) {
  const std::size_t na = o.base.alg.dim;
  Subspace a_sigma = kernel(o.sigma - Matrix::identity(na));
  Subspace a_delta = kernel(o.delta);
  return intersect(intersect(a_sigma, a_delta), center(o.base.alg));
}

TeExampleReport verify_ore_centrally_galois(const OreTruncated& o) {
  TeExampleReport rep;
  const ComoduleAlgebra& e = o.base;
  const std::size_t nh = e.hopf.dim();
  rep.hypotheses_ok = e.hopf.alg.is_commutative();
  if (!rep.hypotheses_ok) {
    rep.message = "H is not commutative";
    return rep;
  }
  Subspace zp = ore_center_slice(o);
  rep.z_prime_dim = zp.dim();
  // Z′ must be an H-subcomodule whose coinvariants are B^σ ∩ B^δ ∩ Z
  try {
    Matrix rho_zp = restrict_comodule(e.coaction, zp, nh);
    rep.z_prime_subcomodule = true;
    Subalgebra zsub = induced_subalgebra(e.alg, zp);
    ComoduleAlgebra ez = ComoduleAlgebra::make(zsub.alg, e.hopf, rho_zp);
    // coinvariants of Z′ inside A vs B ∩ Z′ computed independently
    Subspace coinv_in_a = Subspace::from_columns(
        e.alg.dim, zsub.inclusion * ez.coinv.basis_columns());
    Subspace b_slice = intersect(e.coinv, zp);
    rep.coinvariants_match = (coinv_in_a == b_slice);
    GaloisExtension gz = GaloisExtension::make(ez);
    rep.beta_rows = ez.alg.dim * nh;
    rep.beta_cols = gz.aba.dim();
    rep.beta_bijective = gz.bijective;
    rep.centrally_galois = rep.z_prime_subcomodule && rep.coinvariants_match && gz.bijective;
    if (gz.bijective) {
      for (std::size_t t = 0; t < nh; ++t) {
        auto zpairs = gz.kappa_pairs(Matrix::unit_column(nh, t));
        std::vector<std::pair<Matrix, Matrix>> apairs;
        for (const auto& [z1, z2] : zpairs)
          apairs.emplace_back(zsub.inclusion * z1, zsub.inclusion * z2);
        rep.certificates.push_back(std::move(apairs));
      }
    } else {
      rep.message = "beta on the center slice is not bijective (" +
                    std::to_string(rep.beta_cols) + " -> " + std::to_string(rep.beta_rows) +
                    ")";
    }
  } catch (const std::exception& ex) {
    rep.z_prime_subcomodule = false;
    rep.message = ex.what();
  }
  return rep;
}

} // namespace hh
