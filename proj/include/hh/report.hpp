#ifndef HH_REPORT_HPP
#define HH_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace hh {

struct TaskResult {
  std::size_t index = 0;
  std::string op;
  std::string status; // "pass" | "fail" | "unsupported" | "error"
  bool expect_fail = false;
  nlohmann::ordered_json details; // dims tables, certificates, counterexamples
  double time_ms = 0;
};

struct Report {
  std::vector<TaskResult> tasks;
  /// pass, or a non-pass outcome on a task marked expect-fail.
  bool all_ok() const;
};

/// Aligned, human-readable tables; timings only when requested, so default
/// output stays byte-identical across runs.
std::string emit_human(const Report& r, bool with_timings);
/// Stable-key JSON document, byte-identical across runs for equal inputs.
std::string emit_json(const Report& r);

} // namespace hh

#endif
