#ifndef HH_INSTANCE_HPP
#define HH_INSTANCE_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/constructions.hpp"
#include "hh/rep.hpp"

namespace hh {

struct Task {
  std::string op;
  nlohmann::ordered_json args;
  std::size_t truncation = 3; // per-task N
  bool expect_fail = false;
};

struct BimoduleEntry {
  std::string over; // comodule algebra name
  HopfBimodule m;
};

struct ActionEntry {
  std::string algebra;
  GroupAction action;
};

/// Parsed and resolved instance file (format "hopfhomology/1").
struct InstanceFile {
  std::string version;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, HopfAlgebra> hopf_algebras;
  std::map<std::string, ComoduleAlgebra> comodule_algebras;
  std::map<std::string, BimoduleEntry> bimodules;
  std::map<std::string, ActionEntry> actions;
  std::map<std::string, GradedAlgebra> graded;
  std::map<std::string, OreTruncated> ores;
  std::vector<Task> tasks;
};

/// Throws std::invalid_argument with the offending stanza on any parse or
/// validation error. Hopf-algebra stanzas are checked through the algebra
/// and coalgebra layers only, so that validate_hopf can report broken
/// bialgebra/antipode axioms as a task.
InstanceFile parse_instance(const std::string& path);
InstanceFile parse_instance_text(const std::string& text);

} // namespace hh

#endif
