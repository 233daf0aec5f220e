#include "hh/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hh/galois.hpp"

namespace hh {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("stanza '" + where + "': " + what);
}

Rational jrat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return rational_from_string(v.get<std::string>());
    } catch (const std::exception& ex) {
      fail(where, ex.what());
    }
  }
  fail(where, "expected a rational string");
}

Matrix jmatrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows * cols)
    fail(where, "expected a row-major array of " + std::to_string(rows * cols) +
                    " rationals");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = jrat(v[i * cols + j], where);
  return m;
}

Matrix jcolumn(const json& v, std::size_t n, const std::string& where) {
  return jmatrix(v, n, 1, where);
}

std::vector<StructureEntry> jentries(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of [i, j, k, value] quadruples");
  std::vector<StructureEntry> out;
  for (const auto& q : v) {
    if (!q.is_array() || q.size() != 4) fail(where, "malformed structure-constant quadruple");
    out.push_back({q[0].get<std::size_t>(), q[1].get<std::size_t>(),
                   q[2].get<std::size_t>(), jrat(q[3], where)});
  }
  return out;
}

/// Coaction from [i, j, k, c] quadruples: ρ(e_i) ∋ c·e_j ⊗ h_k.
Matrix jcoaction(const json& v, std::size_t na, std::size_t nh, const std::string& where) {
  Matrix m(na * nh, na);
  for (const auto& e : jentries(v, where)) {
    if (e.i >= na || e.j >= na || e.k >= nh) fail(where, "coaction index out of range");
    m.at(e.j * nh + e.k, e.i) += e.value;
  }
  return m;
}

template <typename M>
const typename M::mapped_type& look(const M& m, const std::string& name,
                                    const std::string& where) {
  auto it = m.find(name);
  if (it == m.end()) fail(where, "unresolved reference '" + name + "'");
  return it->second;
}

} // namespace

InstanceFile parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& ex) {
    throw std::invalid_argument(std::string("json parse error: ") + ex.what());
  }
  InstanceFile f;
  if (!doc.contains("version") || doc["version"] != "hopfhomology/1")
    throw std::invalid_argument("missing or unsupported version (want \"hopfhomology/1\")");
  f.version = doc["version"];
  if (!doc.contains("field") || doc["field"] != "Q")
    throw std::invalid_argument("scalar field tag must be \"Q\"");

  const json objects = doc.value("objects", json::object());
  // Objects may reference earlier objects; two passes keep the format simple:
  // groups and algebras first, then everything else in declaration order.
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string& name = it.key();
    const json& o = it.value();
    const std::string kind = o.value("kind", "");
    if (kind == "group") {
      const std::string c = o.value("construction", "");
      if (c == "cyclic")
        f.groups.emplace(name, FiniteGroup::cyclic(o.at("n").get<std::size_t>()));
      else if (c == "symmetric")
        f.groups.emplace(name, FiniteGroup::symmetric(o.at("n").get<std::size_t>()));
      else if (c == "trivial")
        f.groups.emplace(name, FiniteGroup::trivial());
      else if (c == "product")
        f.groups.emplace(name,
                         FiniteGroup::product(look(f.groups, o.at("a"), name),
                                              look(f.groups, o.at("b"), name)));
      else if (c.empty()) {
        std::vector<std::vector<std::size_t>> table;
        for (const auto& row : o.at("table"))
          table.push_back(row.get<std::vector<std::size_t>>());
        std::vector<std::string> names;
        if (o.contains("names"))
          names = o.at("names").get<std::vector<std::string>>();
        else
          for (std::size_t i = 0; i < table.size(); ++i) names.push_back("g" + std::to_string(i));
        f.groups.emplace(name, FiniteGroup::make(std::move(names), std::move(table)));
      } else
        fail(name, "unknown group construction '" + c + "'");
    }
  }
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string& name = it.key();
    const json& o = it.value();
    const std::string kind = o.value("kind", "");
    if (kind == "algebra") {
      const std::string c = o.value("construction", "");
      if (c == "matrix_algebra")
        f.algebras.emplace(name, matrix_algebra(o.at("n").get<std::size_t>()));
      else if (c == "biquadratic")
        f.algebras.emplace(name,
                           biquadratic_field(o.at("p").get<long>(), o.at("q").get<long>()));
      else if (c.empty()) {
        auto labels = o.at("basis").get<std::vector<std::string>>();
        const std::size_t n = labels.size();
        f.algebras.emplace(
            name, Algebra::make(labels, jentries(o.at("mult"), name),
                                jcolumn(o.at("unit"), n, name)));
      } else
        fail(name, "unknown algebra construction '" + c + "'");
    }
  }
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string& name = it.key();
    const json& o = it.value();
    const std::string kind = o.value("kind", "");
    if (kind == "group" || kind == "algebra") continue;
    if (kind == "hopf_algebra") {
      const std::string c = o.value("construction", "");
      if (c == "group_algebra")
        f.hopf_algebras.emplace(name, group_algebra(look(f.groups, o.at("group"), name)));
      else if (c == "dual_group_algebra")
        f.hopf_algebras.emplace(name,
                                dual_group_algebra(look(f.groups, o.at("group"), name)));
      else if (c == "scalars")
        f.hopf_algebras.emplace(name, HopfAlgebra::scalars());
      else if (c.empty()) {
        auto labels = o.at("basis").get<std::vector<std::string>>();
        const std::size_t n = labels.size();
        Algebra alg = Algebra::make(labels, jentries(o.at("mult"), name),
                                    jcolumn(o.at("unit"), n, name));
        Coalgebra coa = Coalgebra::make(labels, jentries(o.at("comult"), name),
                                        jmatrix(o.at("counit"), 1, n, name));
        Matrix s = jmatrix(o.at("antipode"), n, n, name);
        f.hopf_algebras.emplace(name, HopfAlgebra::make_unchecked(std::move(alg),
                                                                  std::move(coa), std::move(s)));
      } else
        fail(name, "unknown hopf_algebra construction '" + c + "'");
    } else if (kind == "group_action") {
      const std::string c = o.value("construction", "");
      const std::string alg_name = o.at("algebra");
      const Algebra& a = look(f.algebras, alg_name, name);
      if (c == "inner") {
        Matrix u = jcolumn(o.at("u"), a.dim, name);
        f.actions.emplace(name,
                          ActionEntry{alg_name, inner_action(a, u, o.at("order").get<std::size_t>())});
      } else if (c.empty()) {
        GroupAction act;
        act.group = look(f.groups, o.at("group"), name);
        for (const auto& mj : o.at("matrices"))
          act.act.push_back(jmatrix(mj, a.dim, a.dim, name));
        act.check(a);
        f.actions.emplace(name, ActionEntry{alg_name, std::move(act)});
      } else
        fail(name, "unknown group_action construction '" + c + "'");
    } else if (kind == "graded_algebra") {
      const Algebra& a = look(f.algebras, o.at("algebra"), name);
      const FiniteGroup& g = look(f.groups, o.at("group"), name);
      f.graded.emplace(name,
                       graded_algebra(a, g, o.at("degrees").get<std::vector<std::size_t>>()));
    }
  }
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string& name = it.key();
    const json& o = it.value();
    const std::string kind = o.value("kind", "");
    if (kind == "comodule_algebra") {
      const std::string c = o.value("construction", "");
      if (c == "galois_field_extension_sqrt") {
        QuadraticExtension q = galois_field_extension_sqrt(o.at("d").get<long>());
        f.comodule_algebras.emplace(name, q.ext);
        f.actions.emplace(name + ".action", ActionEntry{name, q.action});
      } else if (c == "strongly_graded") {
        f.comodule_algebras.emplace(name, strongly_graded(look(f.graded, o.at("graded"), name)));
      } else if (c == "group_action") {
        const ActionEntry& ae = look(f.actions, o.at("action"), name);
        f.comodule_algebras.emplace(
            name, action_comodule_algebra(look(f.algebras, ae.algebra, name), ae.action));
      } else if (c.empty()) {
        const Algebra& a = look(f.algebras, o.at("algebra"), name);
        const HopfAlgebra& h = look(f.hopf_algebras, o.at("hopf"), name);
        auto rep = validate_hopf(h);
        if (!rep.ok()) fail(name, "underlying hopf algebra fails validation");
        f.comodule_algebras.emplace(
            name, ComoduleAlgebra::make(a, h, jcoaction(o.at("coaction"), a.dim, h.dim(), name)));
      } else
        fail(name, "unknown comodule_algebra construction '" + c + "'");
    }
  }
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string& name = it.key();
    const json& o = it.value();
    const std::string kind = o.value("kind", "");
    if (kind == "hopf_bimodule") {
      const std::string over = o.at("over");
      const ComoduleAlgebra& e = look(f.comodule_algebras, over, name);
      const std::string c = o.value("construction", "");
      if (c == "canonical")
        f.bimodules.emplace(name, BimoduleEntry{over, HopfBimodule::canonical(e)});
      else if (c == "tensor_square")
        f.bimodules.emplace(name, BimoduleEntry{over, tensor_square_bimodule(e)});
      else if (c.empty()) {
        HopfBimodule m;
        m.dim = o.at("dim").get<std::size_t>();
        for (const auto& mj : o.at("left")) m.left.push_back(jmatrix(mj, m.dim, m.dim, name));
        for (const auto& mj : o.at("right")) m.right.push_back(jmatrix(mj, m.dim, m.dim, name));
        m.coaction = jcoaction(o.at("coaction"), m.dim, e.hopf.dim(), name);
        m.check(e);
        f.bimodules.emplace(name, BimoduleEntry{over, std::move(m)});
      } else
        fail(name, "unknown hopf_bimodule construction '" + c + "'");
    } else if (kind == "ore") {
      const ComoduleAlgebra& base = look(f.comodule_algebras, o.at("base"), name);
      const std::size_t na = base.alg.dim;
      Matrix sigma = o.contains("sigma") ? jmatrix(o.at("sigma"), na, na, name)
                                         : Matrix::identity(na);
      Matrix delta = o.contains("delta") ? jmatrix(o.at("delta"), na, na, name)
                                         : Matrix(na, na);
      f.ores.emplace(name, OreTruncated::make(base, std::move(sigma), std::move(delta),
                                              o.at("truncation").get<std::size_t>()));
    } else if (kind.empty()) {
      fail(name, "missing 'kind'");
    } else if (kind != "group" && kind != "algebra" && kind != "hopf_algebra" &&
               kind != "comodule_algebra" && kind != "group_action" &&
               kind != "graded_algebra") {
      fail(name, "unknown stanza kind '" + kind + "'");
    }
  }
  if (doc.contains("tasks")) {
    for (const auto& t : doc["tasks"]) {
      Task task;
      task.op = t.at("op").get<std::string>();
      task.args = t;
      task.truncation = t.value("N", 3);
      task.expect_fail = t.value("expect", "pass") == std::string("fail");
      f.tasks.push_back(std::move(task));
    }
  }
  return f;
}

InstanceFile parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

} // namespace hh
