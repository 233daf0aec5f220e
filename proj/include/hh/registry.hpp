#ifndef HH_REGISTRY_HPP
#define HH_REGISTRY_HPP

#include <string>
#include <vector>

#include "hh/instance.hpp"
#include "hh/report.hpp"

namespace hh {

struct OpInfo {
  std::string name;
  std::string summary;
};

/// All task operations reachable from an instance file, in stable order.
const std::vector<OpInfo>& op_registry();

TaskResult run_task(const InstanceFile& f, const Task& t, std::size_t index);

/// Executes all tasks (task-level parallelism when workers > 1); the report
/// is ordered by task index regardless of completion order.
Report run_instance(const InstanceFile& f, std::size_t workers = 1);

} // namespace hh

#endif
