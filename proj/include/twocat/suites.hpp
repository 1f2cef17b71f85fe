#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocat/fin2cat.hpp"
#include "twocat/report.hpp"

namespace twocat {

struct SuiteParams {
  int max_dim = 4;              // truncation for simplicial checks
  int grid_i = 2, grid_j = 2, grid_k = 1;
  int fib_m_max = 3;            // generator sweep bound for fibrancy
  std::string seed_violation;   // "", "compose", "hcomp1", "hcomp2", "identity",
                                // "mark-1", "mark-2", "mark-high"
  std::string mode;             // fibrancy: "", "tdelta" or "scaled"
  int jobs = 1;
};

std::vector<std::string> suite_names();

// Dispatches to the module checks; throws std::invalid_argument on an
// unknown suite name.
VerificationReport run_suite(const std::string& name, const std::vector<Fin2Category>& corpus,
                             const SuiteParams& params);

// A corrupted copy of d for the negative controls, or nullopt when the
// member has no corruptible entry of that kind. what describes the entry.
std::optional<Fin2Category> seed_corruption(const Fin2Category& d, const std::string& kind,
                                            std::string* what);

}  // namespace twocat
