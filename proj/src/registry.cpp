#include "hh/registry.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "hh/galois.hpp"
#include "hh/homology.hpp"
#include "hh/hopf.hpp"

namespace hh {

namespace {

using json = nlohmann::ordered_json;

json jdims(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto d : v) a.push_back(d);
  return a;
}

json jvec(const Matrix& col) {
  json a = json::array();
  for (std::size_t i = 0; i < col.rows(); ++i) a.push_back(rational_to_string(col.at(i, 0)));
  return a;
}

json jcert(const std::vector<std::pair<Matrix, Matrix>>& pairs) {
  json a = json::array();
  for (const auto& [x, y] : pairs) a.push_back({{"a1", jvec(x)}, {"a2", jvec(y)}});
  return a;
}

json jtheorem(const TheoremReport& r) {
  json d;
  d["applicable"] = r.applicable;
  json degs = json::array();
  for (const auto& dr : r.degrees)
    degs.push_back({{"lhs", dr.lhs}, {"rhs", dr.rhs}, {"bijective", dr.bijective}});
  d["degrees"] = degs;
  if (!r.message.empty()) d["message"] = r.message;
  return d;
}

std::string theorem_status(const TheoremReport& r) {
  if (!r.applicable && !r.pass) return r.message.empty() ? "fail" : "unsupported";
  return r.pass ? "pass" : "fail";
}

const HopfAlgebra& arg_hopf(const InstanceFile& f, const Task& t, const char* key = "hopf") {
  const std::string name = t.args.at(key).get<std::string>();
  auto it = f.hopf_algebras.find(name);
  if (it == f.hopf_algebras.end())
    throw std::invalid_argument("unresolved hopf algebra '" + name + "'");
  return it->second;
}

const Algebra& arg_algebra(const InstanceFile& f, const Task& t,
                           const char* key = "algebra") {
  const std::string name = t.args.at(key).get<std::string>();
  if (auto it = f.algebras.find(name); it != f.algebras.end()) return it->second;
  if (auto it = f.hopf_algebras.find(name); it != f.hopf_algebras.end())
    return it->second.alg;
  if (auto it = f.comodule_algebras.find(name); it != f.comodule_algebras.end())
    return it->second.alg;
  throw std::invalid_argument("unresolved algebra '" + name + "'");
}

const ComoduleAlgebra& arg_ext(const InstanceFile& f, const Task& t,
                               const char* key = "extension") {
  const std::string name = t.args.at(key).get<std::string>();
  auto it = f.comodule_algebras.find(name);
  if (it == f.comodule_algebras.end())
    throw std::invalid_argument("unresolved comodule algebra '" + name + "'");
  return it->second;
}

const FiniteGroup& arg_group(const InstanceFile& f, const Task& t,
                             const char* key = "group") {
  const std::string name = t.args.at(key).get<std::string>();
  auto it = f.groups.find(name);
  if (it == f.groups.end()) throw std::invalid_argument("unresolved group '" + name + "'");
  return it->second;
}

HopfBimodule arg_bimodule(const InstanceFile& f, const Task& t, const ComoduleAlgebra& e,
                          const std::string& ext_name) {
  const std::string spec = t.args.value("bimodule", "canonical");
  if (spec == "canonical") return HopfBimodule::canonical(e);
  if (spec == "tensor_square") return tensor_square_bimodule(e);
  auto it = f.bimodules.find(spec);
  if (it == f.bimodules.end())
    throw std::invalid_argument("unresolved hopf bimodule '" + spec + "'");
  if (it->second.over != ext_name)
    throw std::invalid_argument("bimodule '" + spec + "' is not over '" + ext_name + "'");
  return it->second.m;
}

LeftComodule arg_v(const Task& t, const TraceCoalgebra& ch, const Matrix& hopf_unit) {
  const std::string spec = t.args.value("V", "trivial");
  if (spec == "trivial")
    return LeftComodule::trivial(ch.coa, ch.pi * hopf_unit, 1);
  if (spec == "regular") return LeftComodule::regular(ch.coa);
  throw std::invalid_argument("V must be \"trivial\" or \"regular\"");
}

using Handler = std::function<TaskResult(const InstanceFile&, const Task&)>;

TaskResult make_result(const std::string& status, json details) {
  TaskResult r;
  r.status = status;
  r.details = std::move(details);
  return r;
}

TaskResult boolean_result(bool ok, json details) {
  return make_result(ok ? "pass" : "fail", std::move(details));
}

const std::map<std::string, std::pair<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::pair<std::string, Handler>> table = {
      // ---- hopf-core --------------------------------------------------
      {"validate_hopf",
       {"check all Hopf algebra axioms, reporting the first failing basis tuple",
        [](const InstanceFile& f, const Task& t) {
          auto rep = validate_hopf(arg_hopf(f, t));
          json d;
          json checks = json::array();
          for (const auto& c : rep.checks) {
            json jc = {{"axiom", c.axiom}, {"pass", c.pass}};
            if (!c.pass) jc["counterexample"] = c.counterexample;
            checks.push_back(jc);
          }
          d["checks"] = checks;
          return boolean_result(rep.ok(), d);
        }}},
      {"compute_R_H",
       {"subalgebra of cocommutative elements with R_H+",
        [](const InstanceFile& f, const Task& t) {
          auto r = compute_R_H(arg_hopf(f, t));
          json d = {{"dim", r.space.dim()},
                    {"plus_dim", r.plus_part.dim()},
                    {"semisimple", is_semisimple(r.sub.alg)}};
          return make_result("pass", d);
        }}},
      {"compute_C_H",
       {"trace quotient coalgebra C_H = H/[H,H]",
        [](const InstanceFile& f, const Task& t) {
          const auto& h = arg_hopf(f, t);
          auto c = compute_C_H(h);
          bool trace_ok = (c.pi * (h.mult() - h.mult() * flip(h.dim(), h.dim()))).is_zero();
          json d = {{"dim", c.quotient.dim()},
                    {"cosemisimple", is_cosemisimple(c.coa)},
                    {"trace_property", trace_ok}};
          return boolean_result(trace_ok, d);
        }}},
      {"has_enough_cocommutative_elements",
       {"R_H+ · H = H+ as subspaces",
        [](const InstanceFile& f, const Task& t) {
          bool ok = has_enough_cocommutative_elements(arg_hopf(f, t));
          return boolean_result(ok, {{"holds", ok}});
        }}},
      {"is_semisimple",
       {"Jacobson radical is zero (trace-form criterion)",
        [](const InstanceFile& f, const Task& t) {
          bool ok = is_semisimple(arg_algebra(f, t));
          bool expected = t.args.value("expected", ok);
          return boolean_result(ok == expected, {{"semisimple", ok}});
        }}},
      {"is_cosemisimple",
       {"dual algebra of the coalgebra is semisimple",
        [](const InstanceFile& f, const Task& t) {
          bool ok = is_cosemisimple(arg_hopf(f, t).coa);
          bool expected = t.args.value("expected", ok);
          return boolean_result(ok == expected, {{"cosemisimple", ok}});
        }}},
      {"dual_hopf",
       {"transpose-dual Hopf algebra",
        [](const InstanceFile& f, const Task& t) {
          auto d = dual_hopf(arg_hopf(f, t));
          auto rep = validate_hopf(d);
          auto dd = dual_hopf(d);
          const auto& h = arg_hopf(f, t);
          bool involutive = dd.mult() == h.mult() && dd.comult() == h.comult() &&
                            dd.antipode == h.antipode;
          return boolean_result(rep.ok() && involutive,
                                {{"dim", d.dim()},
                                 {"valid", rep.ok()},
                                 {"double_dual_identical", involutive}});
        }}},
      {"is_involutive_antipode",
       {"S² = id and the twisted counit identity",
        [](const InstanceFile& f, const Task& t) {
          auto r = is_involutive_antipode(arg_hopf(f, t));
          return boolean_result(r.s_squared_is_id == r.twisted_counit_identity,
                                {{"s_squared_is_id", r.s_squared_is_id},
                                 {"twisted_counit_identity", r.twisted_counit_identity}});
        }}},
      {"trace_maps",
       {"trace maps on an algebra; equals R_{H*}",
        [](const InstanceFile& f, const Task& t) {
          const Algebra& a = arg_algebra(f, t);
          Subspace tm = trace_maps(a);
          json d = {{"dim", tm.dim()}};
          if (auto it = f.hopf_algebras.find(t.args.at("algebra").get<std::string>());
              it != f.hopf_algebras.end()) {
            auto rdual = compute_R_H(dual_hopf(it->second));
            d["equals_R_of_dual"] = (tm == rdual.space);
          }
          return make_result("pass", d);
        }}},
      // ---- rep ---------------------------------------------------------
      {"coinvariants",
       {"coinvariant subalgebra of a comodule algebra",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          return make_result("pass", {{"dim", e.coinv.dim()}});
        }}},
      {"invariants",
       {"X^R for X an algebra as bimodule over itself",
        [](const InstanceFile& f, const Task& t) {
          const Algebra& a = arg_algebra(f, t);
          Bimodule x = Bimodule::regular(a);
          const std::string rspec = t.args.value("r", "full");
          Subspace r = rspec == "center" ? center(a) : Subspace::full(a.dim);
          Subspace inv = invariants(x.left, x.right, x.dim, r);
          return make_result("pass", {{"dim", inv.dim()}});
        }}},
      {"commutator_quotient",
       {"X_R = X/[R,X] for X an algebra over itself",
        [](const InstanceFile& f, const Task& t) {
          const Algebra& a = arg_algebra(f, t);
          Bimodule x = Bimodule::regular(a);
          Quotient q = commutator_quotient(x.left, x.right, x.dim, Subspace::full(a.dim));
          return make_result("pass", {{"dim", q.dim()}});
        }}},
      {"relative_tensor",
       {"A ⊗_B A of a comodule algebra",
        [](const InstanceFile& f, const Task& t) {
          GaloisExtension g = GaloisExtension::make(arg_ext(f, t));
          return make_result("pass", {{"dim", g.aba.dim()}});
        }}},
      {"cotensor",
       {"M □_{C_H} V", [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          TraceCoalgebra ch = compute_C_H(e.hopf);
          LeftComodule v = arg_v(t, ch, e.hopf.unit());
          Matrix mc = kron(Matrix::identity(m.dim), ch.pi) * m.coaction;
          Subspace w = cotensor(mc, m.dim, v.coaction, v.dim, ch.quotient.dim());
          return make_result("pass", {{"dim", w.dim()}});
        }}},
      {"tensor_cotensor_commute_check",
       {"(X ⊗_R M) □ V ≅ X ⊗_R (M □ V) for R = R_H, M = H",
        [](const InstanceFile& f, const Task& t) {
          const auto& h = arg_hopf(f, t);
          TraceCoalgebra ch = compute_C_H(h);
          CocommutativeSubalgebra rh = compute_R_H(h);
          RModComodule m;
          m.r = rh.sub.alg;
          m.c = ch.coa;
          m.dim = h.dim();
          for (std::size_t i = 0; i < rh.space.dim(); ++i)
            m.act.push_back(h.alg.left_mult(rh.space.basis_columns().col(i)));
          m.coaction =
              adjoint_coaction_space(scalar_comodule_algebra(h), ch, rh).coaction;
          const std::string xs = t.args.value("X", "K");
          RightModule x = xs == "R"
                              ? RightModule{rh.sub.alg, rh.sub.alg.dim, [&] {
                                  std::vector<Matrix> acts;
                                  for (std::size_t i = 0; i < rh.sub.alg.dim; ++i)
                                    acts.push_back(rh.sub.alg.right_mult(
                                        rh.sub.alg.basis_vector(i)));
                                  return acts;
                                }()}
                              : trivial_right_module(rh.sub, h.counit());
          LeftComodule v = arg_v(t, ch, h.unit());
          auto rep = tensor_cotensor_commute_check(x, m, v);
          json d = {{"lhs_dim", rep.lhs_dim}, {"rhs_dim", rep.rhs_dim}};
          if (!rep.message.empty()) d["message"] = rep.message;
          return boolean_result(rep.ok, d);
        }}},
      // ---- galois -------------------------------------------------------
      {"beta_map",
       {"bijectivity of the canonical Galois map",
        [](const InstanceFile& f, const Task& t) {
          auto rep = beta_report(arg_ext(f, t));
          json d = {{"square", rep.square},
                    {"bijective", rep.bijective},
                    {"rows", rep.rows},
                    {"cols", rep.cols},
                    {"rank", rep.rank}};
          if (!rep.message.empty()) d["message"] = rep.message;
          if (rep.kernel_witness) d["kernel_witness"] = jvec(*rep.kernel_witness);
          return boolean_result(rep.bijective, d);
        }}},
      {"kappa",
       {"translation map: (eq:k), B-centrality, anti-multiplicativity, counit identity",
        [](const InstanceFile& f, const Task& t) {
          GaloisExtension g = GaloisExtension::make(arg_ext(f, t));
          auto k = kappa_checks(g);
          json d = {{"eq_k", k.eq_k},
                    {"b_central", k.b_central},
                    {"anti_multiplicative", k.anti_multiplicative},
                    {"counit_identity", k.counit_identity},
                    {"kappa_unit", k.kappa_unit}};
          if (!k.message.empty()) d["message"] = k.message;
          return boolean_result(k.ok(), d);
        }}},
      {"um_action",
       {"Ulbrich–Miyashita action on M_B",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          GaloisExtension g = GaloisExtension::make(e);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          UMAction u = um_action(g, m); // throws if axioms fail
          return make_result("pass", {{"mb_dim", u.mb.dim()}});
        }}},
      {"rho0",
       {"quotient coaction on M_B and its R_H-linearity",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          GaloisExtension g = GaloisExtension::make(e);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          TraceCoalgebra ch = compute_C_H(e.hopf);
          Rho0 r = rho0(g, m, ch);
          json d = {{"mb_dim", r.mb.dim()},
                    {"r_linearity_checked", r.r_linearity_checked},
                    {"r_linear", r.r_linear}};
          if (!r.r_linearity_checked) d["message"] = "S² ≠ id: R_H-linearity skipped";
          return boolean_result(!r.r_linearity_checked || r.r_linear, d);
        }}},
      {"sayd_check_degree0",
       {"stable anti-Yetter–Drinfeld identity in degree 0",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          GaloisExtension g = GaloisExtension::make(e);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto rep = sayd_check_degree0(g, m);
          json d = {{"holds", rep.ok}, {"skipped", rep.skipped}};
          if (!rep.counterexample.empty()) d["counterexample"] = rep.counterexample;
          return make_result(rep.skipped ? "unsupported" : (rep.ok ? "pass" : "fail"), d);
        }}},
      {"adjoint_coaction_space",
       {"adjoint C_H-coaction on A ⊗ H as an object of _{R_H}M^{C_H}",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          TraceCoalgebra ch = compute_C_H(e.hopf);
          CocommutativeSubalgebra rh = compute_R_H(e.hopf);
          auto adj = adjoint_coaction_space(e, ch, rh);
          return boolean_result(adj.comodule_ok && adj.r_linear,
                                {{"comodule_ok", adj.comodule_ok},
                                 {"r_linear", adj.r_linear}});
        }}},
      {"beta_quotient_iso",
       {"(A⊗A)_B ≅ A ⊗ H as R_H-modules and C_H-comodules",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          GaloisExtension g = GaloisExtension::make(e);
          TraceCoalgebra ch = compute_C_H(e.hopf);
          CocommutativeSubalgebra rh = compute_R_H(e.hopf);
          auto l = beta_quotient_iso(g, ch, rh);
          return boolean_result(l.bijective && l.r_linear && l.colinear,
                                {{"bijective", l.bijective},
                                 {"r_linear", l.r_linear},
                                 {"colinear", l.colinear},
                                 {"dim", l.aab.dim()}});
        }}},
      {"classical_g_galois_check",
       {"G-Galois test with Galois-element certificate",
        [](const InstanceFile& f, const Task& t) {
          const std::string name = t.args.at("action").get<std::string>();
          auto it = f.actions.find(name);
          if (it == f.actions.end())
            throw std::invalid_argument("unresolved group action '" + name + "'");
          const Algebra& a = [&]() -> const Algebra& {
            auto ai = f.algebras.find(it->second.algebra);
            if (ai != f.algebras.end()) return ai->second;
            return f.comodule_algebras.at(it->second.algebra).alg;
          }();
          auto rep = classical_g_galois_check(a, it->second.action);
          json d = {{"action_ok", rep.action_ok},
                    {"galois", rep.galois},
                    {"certificate_verified", rep.certificate_verified}};
          if (rep.galois) d["certificate"] = jcert(rep.certificate);
          if (!rep.message.empty()) d["message"] = rep.message;
          bool expect_galois = t.args.value("expected", true);
          bool ok = rep.action_ok && rep.galois == expect_galois &&
                    (!rep.galois || rep.certificate_verified);
          return boolean_result(ok, d);
        }}},
      {"centrally_galois_check",
       {"center subcomodule + Galois test on Z' ⊆ Z",
        [](const InstanceFile& f, const Task& t) {
          auto rep = centrally_galois_check(arg_ext(f, t));
          json d = {{"h_commutative", rep.h_commutative},
                    {"z_subcomodule", rep.z_subcomodule},
                    {"z_dim", rep.z_dim},
                    {"z_prime_dim", rep.z_prime_dim},
                    {"beta_z_square", rep.beta_z_square},
                    {"beta_z_bijective", rep.beta_z_bijective},
                    {"centrally_galois", rep.centrally_galois},
                    {"beta_a_hits_certificates", rep.beta_a_hits_certificates}};
          if (!rep.message.empty()) d["message"] = rep.message;
          bool expected = t.args.value("expected", true);
          return boolean_result(rep.centrally_galois == expected, d);
        }}},
      // ---- homology ------------------------------------------------------
      {"hochschild_complex",
       {"HH dims of an algebra with regular coefficients",
        [](const InstanceFile& f, const Task& t) {
          const Algebra& a = arg_algebra(f, t);
          auto c = hochschild_complex(a, Bimodule::regular(a), t.truncation + 1);
          auto hom = homology(c);
          json d = {{"dims", jdims(hom.dims())}};
          if (t.args.contains("expected")) {
            auto exp = t.args.at("expected").get<std::vector<std::size_t>>();
            auto got = hom.dims();
            got.resize(exp.size());
            return boolean_result(got == exp, d);
          }
          return make_result("pass", d);
        }}},
      {"homology",
       {"homology of the Hochschild complex (alias of hochschild_complex)",
        [](const InstanceFile& f, const Task& t) {
          const Algebra& a = arg_algebra(f, t);
          auto c = hochschild_complex(a, Bimodule::regular(a), t.truncation + 1);
          return make_result("pass", {{"dims", jdims(homology(c).dims())}});
        }}},
      {"induced_coaction_on_HH_B",
       {"descended coactions and Z₀-action on HH(B,M)",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto s = induced_coaction_on_HH_B(e, m, t.truncation + 1);
          return make_result("pass", {{"dims", jdims(s.hom.dims())},
                                      {"z0_dim", s.z0.dim()}});
        }}},
      {"induced_um_action_on_HH_B",
       {"certificate-realized H-action on HH(B,M), centrally Galois only",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto s = induced_um_action_on_HH_B(e, m, t.truncation + 1);
          if (!s.supported) return make_result("unsupported", {{"message", s.message}});
          return boolean_result(s.degree0_matches_um,
                                {{"dims", jdims(s.hom.dims())},
                                 {"degree0_matches_um", s.degree0_matches_um}});
        }}},
      {"central_chain_action",
       {"chain-map property of the certificate operators (alias of induced_um_action_on_HH_B)",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto s = induced_um_action_on_HH_B(e, m, t.truncation + 1);
          if (!s.supported) return make_result("unsupported", {{"message", s.message}});
          return boolean_result(s.degree0_matches_um, {{"dims", jdims(s.hom.dims())}});
        }}},
      {"coaction_on_HH_A",
       {"descended C_H-coaction and Z₀-action on HH(A,M)",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto s = coaction_on_HH_A(e, m, t.truncation + 1);
          return make_result("pass", {{"dims", jdims(s.hom.dims())},
                                      {"z0_dim", s.z0.dim()}});
        }}},
      {"tor",
       {"Tor^{R_H}(K, H) through the truncated bar resolution",
        [](const InstanceFile& f, const Task& t) {
          const auto& h = arg_hopf(f, t);
          CocommutativeSubalgebra rh = compute_R_H(h);
          RightModule x = trivial_right_module(rh.sub, h.counit());
          LeftModule y;
          y.over = rh.sub.alg;
          y.dim = h.dim();
          for (std::size_t i = 0; i < rh.space.dim(); ++i)
            y.act.push_back(h.alg.left_mult(rh.space.basis_columns().col(i)));
          auto r = tor(x, y, t.truncation + 1);
          bool vanish = true;
          for (std::size_t p = 1; p < r.dims.size(); ++p)
            if (r.dims[p] != 0) vanish = false;
          return make_result("pass", {{"dims", jdims(r.dims)},
                                      {"higher_vanish", vanish}});
        }}},
      {"tor_coaction_check",
       {"C_H-coaction on Tor^{R_H}(K, H)",
        [](const InstanceFile& f, const Task& t) {
          const auto& h = arg_hopf(f, t);
          CocommutativeSubalgebra rh = compute_R_H(h);
          TraceCoalgebra ch = compute_C_H(h);
          RModComodule m;
          m.r = rh.sub.alg;
          m.c = ch.coa;
          m.dim = h.dim();
          for (std::size_t i = 0; i < rh.space.dim(); ++i)
            m.act.push_back(h.alg.left_mult(rh.space.basis_columns().col(i)));
          m.coaction =
              adjoint_coaction_space(scalar_comodule_algebra(h), ch, rh).coaction;
          RightModule x = trivial_right_module(rh.sub, h.counit());
          auto rep = tor_coaction_check(x, m, t.truncation + 1);
          json d = {{"dims", jdims(rep.dims)}};
          if (!rep.message.empty()) d["message"] = rep.message;
          return boolean_result(rep.ok, d);
        }}},
      {"edge_map",
       {"φ(M): K ⊗_{R_H} (M_B □ V) → M_A □ V",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          GaloisExtension g = GaloisExtension::make(e);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          TraceCoalgebra ch = compute_C_H(e.hopf);
          LeftComodule v = arg_v(t, ch, e.hopf.unit());
          auto rep = edge_map(g, m, v);
          json d = {{"well_defined", rep.well_defined},
                    {"bijective", rep.bijective},
                    {"domain_dim", rep.domain_dim},
                    {"codomain_dim", rep.codomain_dim}};
          if (!rep.message.empty()) d["message"] = rep.message;
          bool expect_bij = t.args.value("expect_bijective", true);
          return boolean_result(rep.well_defined && rep.bijective == expect_bij, d);
        }}},
      {"verify_edge_collapse",
       {"K ⊗_{R_H} HH(B, M□V) ≅ HH(A,M) □ V",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          TraceCoalgebra ch = compute_C_H(e.hopf);
          LeftComodule v = arg_v(t, ch, e.hopf.unit());
          auto rep = verify_edge_collapse(e, m, v, t.truncation);
          return make_result(theorem_status(rep), jtheorem(rep));
        }}},
      {"verify_group_invariants",
       {"HH(A,M)^G ≅ p₁·HH(B, M^G)",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          const std::string name = t.args.at("action").get<std::string>();
          auto it = f.actions.find(name);
          if (it == f.actions.end())
            throw std::invalid_argument("unresolved group action '" + name + "'");
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto rep = verify_group_invariants(e, it->second.action, m, t.truncation);
          return make_result(theorem_status(rep), jtheorem(rep));
        }}},
      {"verify_cotensor_comparison",
       {"HH(A,M) □ V ≅ HH(B, M□V) for centrally Galois extensions",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          TraceCoalgebra ch = compute_C_H(e.hopf);
          LeftComodule v = arg_v(t, ch, e.hopf.unit());
          auto rep = verify_cotensor_comparison(e, m, v, t.truncation);
          return make_result(theorem_status(rep), jtheorem(rep));
        }}},
      {"verify_center_descent",
       {"HH(A,M) ≅ Z ⊗_{Z'} HH(B, M^coH)",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto rep = verify_center_descent(e, m, t.truncation);
          return make_result(theorem_status(rep), jtheorem(rep));
        }}},
      {"verify_central_action_trivial",
       {"certificate-chain action equals ε(h)·id for Z-symmetric coefficients",
        [](const InstanceFile& f, const Task& t) {
          const auto& e = arg_ext(f, t);
          HopfBimodule m = arg_bimodule(f, t, e, t.args.at("extension").get<std::string>());
          auto rep = verify_central_action_trivial(e, m, t.truncation);
          return make_result(theorem_status(rep), jtheorem(rep));
        }}},
      {"cyclic_complex",
       {"HC dims from the cyclic bicomplex total complex",
        [](const InstanceFile& f, const Task& t) {
          const Algebra& a = arg_algebra(f, t);
          auto r = cyclic_complex(a, t.truncation);
          json d = {{"dims", jdims(r.hc_dims)}};
          if (t.args.contains("expected")) {
            auto exp = t.args.at("expected").get<std::vector<std::size_t>>();
            auto got = r.hc_dims;
            got.resize(exp.size());
            return boolean_result(got == exp, d);
          }
          return make_result("pass", d);
        }}},
      {"verify_cyclic_coinvariants",
       {"HC(A)^coH ≅ HC(B) with chain-level colinearity checks",
        [](const InstanceFile& f, const Task& t) {
          auto rep = verify_cyclic_coinvariants(arg_ext(f, t), t.truncation);
          return make_result(theorem_status(rep), jtheorem(rep));
        }}},
      // ---- constructions -------------------------------------------------
      {"group_algebra",
       {"QG with its Hopf structure",
        [](const InstanceFile& f, const Task& t) {
          auto h = group_algebra(arg_group(f, t));
          auto rep = validate_hopf(h);
          return boolean_result(rep.ok() && h.coa.is_cocommutative(),
                                {{"dim", h.dim()},
                                 {"valid", rep.ok()},
                                 {"cocommutative", h.coa.is_cocommutative()}});
        }}},
      {"dual_group_algebra",
       {"(QG)* with its Hopf structure",
        [](const InstanceFile& f, const Task& t) {
          const FiniteGroup& g = arg_group(f, t);
          auto h = dual_group_algebra(g);
          auto rep = validate_hopf(h);
          auto rh = compute_R_H(h);
          auto conj = conjugacy_classes(g);
          return boolean_result(rep.ok() && rh.space.dim() == conj.classes.size(),
                                {{"dim", h.dim()},
                                 {"valid", rep.ok()},
                                 {"r_h_dim", rh.space.dim()},
                                 {"conjugacy_classes", conj.classes.size()}});
        }}},
      {"conjugacy_classes",
       {"conjugacy classes and the p_σ idempotents",
        [](const InstanceFile& f, const Task& t) {
          const FiniteGroup& g = arg_group(f, t);
          auto conj = conjugacy_classes(g);
          json sizes = json::array();
          for (const auto& c : conj.classes) sizes.push_back(c.size());
          return make_result("pass", {{"count", conj.classes.size()}, {"sizes", sizes}});
        }}},
      {"strongly_graded",
       {"strong-grading test + the induced QG-Galois structure",
        [](const InstanceFile& f, const Task& t) {
          const std::string name = t.args.at("graded").get<std::string>();
          auto it = f.graded.find(name);
          if (it == f.graded.end())
            throw std::invalid_argument("unresolved graded algebra '" + name + "'");
          const GradedAlgebra& gr = it->second;
          json d = {{"strongly_graded", gr.strongly_graded}};
          if (!gr.strongly_graded) {
            d["failing_pair"] = {gr.failing_pair->first, gr.failing_pair->second};
            bool expected = t.args.value("expected", true);
            return boolean_result(!expected, d);
          }
          auto e = strongly_graded(gr);
          auto rep = beta_report(e);
          d["beta_bijective"] = rep.bijective;
          bool expected = t.args.value("expected", true);
          return boolean_result(rep.bijective == expected, d);
        }}},
      {"galois_field_extension_sqrt",
       {"Q(√d)/Q with its (Q[Z/2])*-Galois structure",
        [](const InstanceFile&, const Task& t) {
          auto q = galois_field_extension_sqrt(t.args.at("d").get<long>());
          auto rep = classical_g_galois_check(q.ext.alg, q.action);
          json d = {{"galois", rep.galois},
                    {"certificate_verified", rep.certificate_verified}};
          if (rep.galois) d["certificate"] = jcert(rep.certificate);
          return boolean_result(rep.galois && rep.certificate_verified, d);
        }}},
      {"matrix_algebra",
       {"M_n(Q) structure constants and center",
        [](const InstanceFile&, const Task& t) {
          Algebra a = matrix_algebra(t.args.at("n").get<std::size_t>());
          return make_result("pass", {{"dim", a.dim},
                                      {"center_dim", center(a).dim()},
                                      {"semisimple", is_semisimple(a)}});
        }}},
      {"ore_truncated",
       {"f_k^{(n)} recursion vs direct expansion; ρ_T multiplicative; coinvariants",
        [](const InstanceFile& f, const Task& t) {
          const std::string name = t.args.at("ore").get<std::string>();
          auto it = f.ores.find(name);
          if (it == f.ores.end()) throw std::invalid_argument("unresolved ore '" + name + "'");
          const OreTruncated& o = it->second;
          const std::size_t na = o.base.alg.dim, D = o.truncation;
          // recursion vs n-fold direct application of X·(−)
          bool recursion_ok = true;
          for (std::size_t n = 1; n <= D && recursion_ok; ++n) {
            std::vector<Matrix> direct(n + 1, Matrix(na, na));
            direct[0] = Matrix::identity(na);
            for (std::size_t step = 0; step < n; ++step) {
              std::vector<Matrix> next(n + 1, Matrix(na, na));
              for (std::size_t k = 0; k <= step; ++k) {
                next[k + 1] = next[k + 1] + o.sigma * direct[k];
                next[k] = next[k] + o.delta * direct[k];
              }
              direct = next;
            }
            for (std::size_t k = 0; k <= n; ++k)
              if (!(direct[k] == o.reorder[n][k])) recursion_ok = false;
          }
          // X^n X^m a two ways on retained degrees
          bool composition_ok = true;
          for (std::size_t n = 0; n <= D && composition_ok; ++n)
            for (std::size_t mm = 0; n + mm <= D && composition_ok; ++mm)
              for (std::size_t i = 0; i <= n + mm && composition_ok; ++i) {
                Matrix lhs = o.reorder[n + mm][i];
                Matrix rhs(na, na);
                for (std::size_t j = 0; j <= n; ++j)
                  if (i >= j && i - j <= mm)
                    rhs = rhs + o.reorder[n][j] * o.reorder[mm][i - j];
                if (!(lhs == rhs)) composition_ok = false;
              }
          // ρ_T multiplicative whenever the product is exact
          bool rho_mult = true;
          Matrix rho = o.coaction();
          const std::size_t nh = o.base.hopf.dim(), td = o.dim();
          for (std::size_t i = 0; i < td && rho_mult; ++i)
            for (std::size_t j = 0; j < td && rho_mult; ++j) {
              auto [prod, exact] = o.multiply(Matrix::unit_column(td, i),
                                              Matrix::unit_column(td, j));
              if (!exact) continue;
              Matrix lhs = rho * prod;
              // ρ(f)ρ(g) for basis f, g
              Matrix ri = rho.col(i), rj = rho.col(j);
              Matrix rhs(td * nh, 1);
              for (std::size_t u = 0; u < td; ++u)
                for (std::size_t hu = 0; hu < nh; ++hu) {
                  const Rational& c1 = ri.at(u * nh + hu, 0);
                  if (is_zero(c1)) continue;
                  for (std::size_t v = 0; v < td; ++v)
                    for (std::size_t hv = 0; hv < nh; ++hv) {
                      const Rational& c2 = rj.at(v * nh + hv, 0);
                      if (is_zero(c2)) continue;
                      auto [tp, texact] = o.multiply(Matrix::unit_column(td, u),
                                                     Matrix::unit_column(td, v));
                      if (!texact) continue;
                      Matrix hp = o.base.hopf.alg.multiply(Matrix::unit_column(nh, hu),
                                                           Matrix::unit_column(nh, hv));
                      for (std::size_t w = 0; w < td; ++w)
                        for (std::size_t y = 0; y < nh; ++y)
                          rhs.at(w * nh + y, 0) +=
                              c1 * c2 * tp.at(w, 0) * hp.at(y, 0);
                    }
                }
              if (!(lhs == rhs)) rho_mult = false;
            }
          // coinvariants = B-span of the Xⁿ
          Subspace coinv = o.coinvariant_space();
          Matrix expected_rows(0, td);
          Matrix bcols = o.base.coinv.basis_columns();
          for (std::size_t n = 0; n <= D; ++n)
            for (std::size_t k = 0; k < o.base.coinv.dim(); ++k) {
              Matrix row(1, td);
              for (std::size_t i = 0; i < na; ++i) row.at(0, n * na + i) = bcols.at(i, k);
              expected_rows = expected_rows.vstack(row);
            }
          bool coinv_ok = (coinv == Subspace::from_rows(td, expected_rows));
          json d = {{"recursion_ok", recursion_ok},
                    {"composition_ok", composition_ok},
                    {"coaction_multiplicative", rho_mult},
                    {"coinvariants_are_S", coinv_ok}};
          return boolean_result(recursion_ok && composition_ok && rho_mult && coinv_ok, d);
        }}},
      {"ore_center_slice",
       {"A^σ ∩ A^δ ∩ Z cross-checked against the degree-0 center conditions",
        [](const InstanceFile& f, const Task& t) {
          const std::string name = t.args.at("ore").get<std::string>();
          auto it = f.ores.find(name);
          if (it == f.ores.end()) throw std::invalid_argument("unresolved ore '" + name + "'");
          const OreTruncated& o = it->second;
          Subspace slice = ore_center_slice(o);
          // degree-0 center conditions solved directly
          const std::size_t na = o.base.alg.dim;
          Matrix sys = (o.sigma - Matrix::identity(na)).vstack(o.delta);
          for (std::size_t i = 0; i < na; ++i) {
            Matrix a = o.base.alg.basis_vector(i);
            sys = sys.vstack(o.base.alg.left_mult(a) - o.base.alg.right_mult(a));
          }
          bool cross = (slice == kernel(sys));
          return boolean_result(cross, {{"dim", slice.dim()}, {"cross_check", cross}});
        }}},
      {"verify_ore_centrally_galois",
       {"Ore extension S ⊆ T centrally Galois via the center slice",
        [](const InstanceFile& f, const Task& t) {
          const std::string name = t.args.at("ore").get<std::string>();
          auto it = f.ores.find(name);
          if (it == f.ores.end()) throw std::invalid_argument("unresolved ore '" + name + "'");
          auto rep = verify_ore_centrally_galois(it->second);
          json d = {{"hypotheses_ok", rep.hypotheses_ok},
                    {"z_prime_subcomodule", rep.z_prime_subcomodule},
                    {"coinvariants_match", rep.coinvariants_match},
                    {"beta_bijective", rep.beta_bijective},
                    {"centrally_galois", rep.centrally_galois},
                    {"z_prime_dim", rep.z_prime_dim}};
          if (!rep.message.empty()) d["message"] = rep.message;
          bool expected = t.args.value("expected", true);
          return boolean_result(rep.centrally_galois == expected, d);
        }}},
  };
  return table;
}

} // namespace

const std::vector<OpInfo>& op_registry() {
  static const std::vector<OpInfo> ops = [] {
    std::vector<OpInfo> v;
    for (const auto& [name, h] : handlers()) v.push_back({name, h.first});
    return v;
  }();
  return ops;
}

TaskResult run_task(const InstanceFile& f, const Task& t, std::size_t index) {
  TaskResult r;
  const auto t0 = std::chrono::steady_clock::now();
  auto it = handlers().find(t.op);
  if (it == handlers().end()) {
    r.status = "error";
    r.details = {{"message", "unknown operation '" + t.op + "'"}};
  } else {
    try {
      r = it->second.second(f, t);
    } catch (const std::exception& ex) {
      r.status = "error";
      r.details = {{"message", ex.what()}};
    }
  }
  r.index = index;
  r.op = t.op;
  r.expect_fail = t.expect_fail;
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

Report run_instance(const InstanceFile& f, std::size_t workers) {
  Report rep;
  if (workers > 1 && f.tasks.size() > 1) {
    std::vector<std::future<TaskResult>> futures;
    for (std::size_t i = 0; i < f.tasks.size(); ++i)
      futures.push_back(std::async(std::launch::async,
                                   [&f, i] { return run_task(f, f.tasks[i], i); }));
    for (auto& fut : futures) rep.tasks.push_back(fut.get());
  } else {
    for (std::size_t i = 0; i < f.tasks.size(); ++i)
      rep.tasks.push_back(run_task(f, f.tasks[i], i));
  }
  return rep;
}

} // namespace hh
