#pragma once

#include "jobs.hpp"

namespace ghl::app {

struct CheckReport {
  std::string suite, name, expected, computed, note;
  bool ok = false;
  double ms = 0;
};

struct VerifyOptions {
  std::string suite = "all";  // paper | properties | all
  unsigned seed = 42;
  unsigned jobs = 1;
  bool mutate_ext_sign = false;
  std::size_t budget = kDefaultBudget;
};

std::vector<CheckReport> run_verify(const VerifyOptions& opt, const ResultCache& cache);
json reports_to_json(const std::vector<CheckReport>& r);

/* Non-asserting tables. */
json experiment_conjecture_cyclic(int max_n, const std::vector<std::string>& modules, std::size_t budget);
json experiment_cores_res_index(std::size_t budget);

}  // namespace ghl::app
