// The acceptance suite: one entry per reproduction criterion, runnable both
// from the dedicated test binary and from the CLI's --all mode.
#pragma once

#include <string>
#include <vector>

namespace cesbohr::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CriterionResult> run_all();
bool all_pass(const std::vector<CriterionResult>& results);
std::string to_json(const std::vector<CriterionResult>& results);

}  // namespace cesbohr::acceptance
