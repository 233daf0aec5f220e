#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hh/registry.hpp"

namespace {

std::size_t worker_count() {
  if (const char* env = std::getenv("HOPFHOMOLOGY_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 1) return static_cast<std::size_t>(n);
  }
  return 1;
}

void apply_truncation(hh::InstanceFile& f, long n) {
  if (n < 0) return;
  for (auto& t : f.tasks) t.truncation = static_cast<std::size_t>(n);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hopf-Galois homology toolkit"};
  app.require_subcommand(1);

  std::string path;
  long truncation = -1;
  bool timings = false;
  std::string format = "human";

  auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
  validate->add_option("file", path)->required();

  auto* run = app.add_subcommand("run", "run all tasks and print a human-readable report");
  run->add_option("file", path)->required();
  run->add_option("--truncation", truncation, "override per-task truncation N");
  run->add_flag("--timings", timings, "include per-task timings");

  auto* report = app.add_subcommand("report", "run all tasks and emit a report");
  report->add_option("file", path)->required();
  report->add_option("--format", format, "human | json")->check(CLI::IsMember({"human", "json"}));
  report->add_option("--truncation", truncation);
  report->add_flag("--timings", timings);

  auto* listops = app.add_subcommand("list-ops", "list all task operations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (listops->parsed()) {
      for (const auto& op : hh::op_registry())
        std::cout << op.name << "  —  " << op.summary << "\n";
      return 0;
    }
    if (validate->parsed()) {
      hh::parse_instance(path);
      std::cout << "ok\n";
      return 0;
    }
    hh::InstanceFile f = hh::parse_instance(path);
    apply_truncation(f, truncation);
    hh::Report rep = hh::run_instance(f, worker_count());
    if (report->parsed() && format == "json")
      std::cout << hh::emit_json(rep);
    else
      std::cout << hh::emit_human(rep, timings);
    return rep.all_ok() ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
