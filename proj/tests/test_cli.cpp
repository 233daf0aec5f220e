#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "hh/registry.hpp"

using namespace hh;

namespace {

std::string data(const std::string& name) { return std::string(HH_TEST_DIR) + "/data/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("minimal instance parses and validates") {
  InstanceFile f = parse_instance(data("minimal.json"));
  CHECK(f.version == "hopfhomology/1");
  CHECK(f.hopf_algebras.count("Q") == 1);
  CHECK(f.hopf_algebras.count("H") == 1);
  CHECK(f.tasks.size() == 2);
  Report rep = run_instance(f);
  CHECK(rep.all_ok());
  for (const auto& t : rep.tasks) CHECK(t.status == "pass");
}

TEST_CASE("dual group algebra instance runs downstream tasks") {
  InstanceFile f = parse_instance(data("s3_dual.json"));
  Report rep = run_instance(f);
  REQUIRE(rep.tasks.size() == 4);
  CHECK(rep.all_ok());
  CHECK(rep.tasks[1].op == "compute_R_H");
  CHECK(rep.tasks[1].details.at("dim").get<std::size_t>() == 3);
  CHECK(rep.tasks[3].details.at("count").get<std::size_t>() == 3);
}

TEST_CASE("parse errors carry the offending stanza") {
  CHECK_THROWS_WITH_AS(parse_instance(data("bad_rational.json")),
                       doctest::Contains("'A'"), std::invalid_argument);
  // unknown stanza kind
  std::string text = R"({"version":"hopfhomology/1","field":"Q",
    "objects":{"X":{"kind":"frobnicator"}},"tasks":[]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(text), doctest::Contains("unknown stanza kind"),
                       std::invalid_argument);
  // unresolved reference
  std::string text2 = R"({"version":"hopfhomology/1","field":"Q",
    "objects":{"H":{"kind":"hopf_algebra","construction":"group_algebra","group":"nope"}},
    "tasks":[]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(text2), doctest::Contains("unresolved reference"),
                       std::invalid_argument);
  // wrong scalar tag
  std::string text3 = R"({"version":"hopfhomology/1","field":"R","objects":{},"tasks":[]})";
  CHECK_THROWS_AS(parse_instance_text(text3), std::invalid_argument);
  // wrong version
  std::string text4 = R"({"version":"hopfhomology/2","field":"Q","objects":{},"tasks":[]})";
  CHECK_THROWS_AS(parse_instance_text(text4), std::invalid_argument);
}

TEST_CASE("empty task list gives an empty report") {
  std::string text = R"({"version":"hopfhomology/1","field":"Q","objects":{},"tasks":[]})";
  Report rep = run_instance(parse_instance_text(text));
  CHECK(rep.tasks.empty());
  CHECK(rep.all_ok());
  std::string human = emit_human(rep, false);
  CHECK(human.find("summary: 0 pass") != std::string::npos);
}

TEST_CASE("full suite file runs green, deterministically") {
  InstanceFile f = parse_instance(data("suite.json"));
  Report rep1 = run_instance(f);
  for (const auto& t : rep1.tasks) {
    INFO(t.op, " #", t.index, " -> ", t.status, " ", t.details.dump());
    if (t.expect_fail)
      CHECK(t.status != "pass");
    else
      CHECK(t.status == "pass");
  }
  CHECK(rep1.all_ok());
  // byte-identical JSON across repeated invocations
  Report rep2 = run_instance(parse_instance(data("suite.json")));
  CHECK(emit_json(rep1) == emit_json(rep2));
  CHECK(emit_human(rep1, false) == emit_human(rep2, false));
  // and across worker counts
  Report rep3 = run_instance(f, 4);
  CHECK(emit_json(rep1) == emit_json(rep3));
}

TEST_CASE("expect-fail semantics") {
  std::string text = R"({"version":"hopfhomology/1","field":"Q",
    "objects":{"Q":{"kind":"hopf_algebra","construction":"scalars"}},
    "tasks":[{"op":"validate_hopf","hopf":"Q","expect":"fail"}]})";
  Report rep = run_instance(parse_instance_text(text));
  CHECK(!rep.all_ok()); // passed although failure was expected
  std::string text2 = R"({"version":"hopfhomology/1","field":"Q",
    "objects":{},"tasks":[{"op":"no_such_op"}]})";
  Report rep2 = run_instance(parse_instance_text(text2));
  CHECK(!rep2.all_ok());
  CHECK(rep2.tasks[0].status == "error");
}

TEST_CASE("every spec operation is reachable from a task stanza") {
  const std::set<std::string> required = {
      // hopf-core
      "validate_hopf", "compute_R_H", "compute_C_H", "has_enough_cocommutative_elements",
      "is_semisimple", "is_cosemisimple", "dual_hopf", "is_involutive_antipode",
      "trace_maps",
      // rep
      "coinvariants", "invariants", "commutator_quotient", "relative_tensor", "cotensor",
      "tensor_cotensor_commute_check",
      // galois
      "beta_map", "kappa", "um_action", "rho0", "sayd_check_degree0",
      "adjoint_coaction_space", "beta_quotient_iso", "classical_g_galois_check",
      "centrally_galois_check",
      // homology
      "hochschild_complex", "homology", "induced_coaction_on_HH_B",
      "induced_um_action_on_HH_B", "central_chain_action", "coaction_on_HH_A", "tor",
      "tor_coaction_check", "edge_map", "verify_edge_collapse",
      "verify_group_invariants", "verify_cotensor_comparison", "verify_center_descent",
      "verify_central_action_trivial", "cyclic_complex", "verify_cyclic_coinvariants",
      // constructions
      "group_algebra", "dual_group_algebra", "conjugacy_classes", "strongly_graded",
      "galois_field_extension_sqrt", "matrix_algebra", "ore_truncated",
      "ore_center_slice", "verify_ore_centrally_galois"};
  std::set<std::string> registered;
  for (const auto& op : op_registry()) registered.insert(op.name);
  for (const auto& name : required) {
    INFO("missing op: ", name);
    CHECK(registered.count(name) == 1);
  }
}

TEST_CASE("json report shape") {
  InstanceFile f = parse_instance(data("minimal.json"));
  Report rep = run_instance(f);
  auto doc = nlohmann::ordered_json::parse(emit_json(rep));
  CHECK(doc.at("version") == "hopfhomology/1");
  CHECK(doc.at("tasks").size() == 2);
  CHECK(doc.at("summary").at("pass") == 2);
  CHECK(doc.at("summary").at("ok") == true);
}
