#pragma once

#include <string>
#include <vector>

#include "schurlc/schur.hpp"

namespace schurlc {

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  long ms = 0;
};

/// Runs the verification battery: every reproduction, oracle equivalence,
/// theorem range and sweep the library is expected to satisfy, each as one
/// pass/fail line. `only` filters by suite name (remarks, oracles, hooks,
/// charpoly, kl, invkl, recursions, z, preservation, dims, lr); empty runs
/// everything.
std::vector<CriterionResult> run_verification(
    const std::vector<std::string>& only = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// The reference value the braid-matroid check compares against: the
/// difference (t^1 coefficient)^2 - (t^0)(t^2) of braid_b7_chP, ingested as
/// a 49-term signed table.
SchurVector braid_b7_ilc_difference_reference();

/// The reference (1,2) strong-check witness of the remark example:
/// 16 s(1,1,1,1) + 12 s(2,1,1) + 18 s(2,2) - 2 s(3,1) + 2 s(4).
SchurVector remark_strong_witness_reference();

}  // namespace schurlc
