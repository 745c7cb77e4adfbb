#pragma once

#include <map>
#include <string>
#include <vector>

namespace qsg {

enum class CaseStatus { pass, fail, window_too_small };

const char* status_name(CaseStatus s);

struct CaseResult {
  std::string id;
  CaseStatus status = CaseStatus::pass;
  std::string witness;  // empty on pass
};

/// Outcome of one verification suite. `params` records everything needed
/// to reproduce the run (seed, window, instance).
struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  std::map<std::string, std::string> params;

  void add_pass(std::string id) {
    cases.push_back({std::move(id), CaseStatus::pass, {}});
  }
  void add_fail(std::string id, std::string witness) {
    cases.push_back({std::move(id), CaseStatus::fail, std::move(witness)});
  }
  void add_window_too_small(std::string id, std::string witness) {
    cases.push_back(
        {std::move(id), CaseStatus::window_too_small, std::move(witness)});
  }
  void add(std::string id, bool ok, std::string witness_on_fail) {
    if (ok)
      add_pass(std::move(id));
    else
      add_fail(std::move(id), std::move(witness_on_fail));
  }

  std::size_t count(CaseStatus s) const {
    std::size_t n = 0;
    for (const auto& c : cases)
      if (c.status == s) ++n;
    return n;
  }
  bool all_pass() const { return count(CaseStatus::fail) == 0; }
};

}  // namespace qsg
