#include "hh/report.hpp"

#include <iomanip>
#include <sstream>

namespace hh {

bool Report::all_ok() const {
  for (const auto& t : tasks) {
    if (t.status == "pass" && !t.expect_fail) continue;
    if (t.expect_fail && t.status != "pass" && t.status != "error") continue;
    return false;
  }
  return true;
}

std::string emit_human(const Report& r, bool with_timings) {
  std::ostringstream os;
  std::size_t op_width = 4;
  for (const auto& t : r.tasks) op_width = std::max(op_width, t.op.size());
  os << std::left << std::setw(4) << "#" << std::setw(op_width + 2) << "op"
     << std::setw(19) << "status" << "details\n";
  std::size_t npass = 0, nfail = 0, nother = 0;
  for (const auto& t : r.tasks) {
    std::string status = t.status;
    if (t.expect_fail && t.status != "pass" && t.status != "error")
      status += " (expected)";
    os << std::left << std::setw(4) << t.index << std::setw(op_width + 2) << t.op
       << std::setw(19) << status;
    os << t.details.dump();
    if (with_timings) os << "  [" << std::fixed << std::setprecision(1) << t.time_ms << " ms]";
    os << "\n";
    if (t.status == "pass")
      ++npass;
    else if (t.status == "fail")
      ++nfail;
    else
      ++nother;
  }
  os << "summary: " << npass << " pass, " << nfail << " fail, " << nother
     << " other; overall " << (r.all_ok() ? "OK" : "NOT OK") << "\n";
  return os.str();
}

std::string emit_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["version"] = "hopfhomology/1";
  doc["tasks"] = nlohmann::ordered_json::array();
  std::size_t npass = 0, nfail = 0, nunsup = 0, nerr = 0;
  for (const auto& t : r.tasks) {
    nlohmann::ordered_json jt;
    jt["index"] = t.index;
    jt["op"] = t.op;
    jt["status"] = t.status;
    if (t.expect_fail) jt["expect"] = "fail";
    jt["details"] = t.details;
    doc["tasks"].push_back(jt);
    if (t.status == "pass")
      ++npass;
    else if (t.status == "fail")
      ++nfail;
    else if (t.status == "unsupported")
      ++nunsup;
    else
      ++nerr;
  }
  doc["summary"] = {{"pass", npass}, {"fail", nfail}, {"unsupported", nunsup},
                    {"error", nerr}, {"ok", r.all_ok()}};
  return doc.dump(2) + "\n";
}

} // namespace hh
