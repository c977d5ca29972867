#pragma once

#include <string>
#include <vector>

#include "schurlc/logconcave.hpp"

namespace schurlc {

/// A parameter sweep over uniform-matroid cells (m, d). Cells run
/// 0 <= m <= max_m, 1 <= d <= max_d, capped by m + d <= sum_cap(): 12 by
/// default, 15 with extended. q_values, when nonempty, additionally check
/// ordinary log-concavity of the generic-degree dimension polynomials at
/// those integer values of q (q = 1, the plain dimension, is always
/// included in that case).
struct SweepSpec {
  std::string family;    // char | redchar | kl | invkl | z
  std::string property;  // ilc | strong-ilc
  int max_m = 12;
  int max_d = 12;
  bool extended = false;
  std::vector<int> q_values;

  int sum_cap() const { return extended ? 15 : 12; }
  bool valid() const;
};

struct SweepCell {
  int m = 0;
  int d = 1;
  bool pass = true;
  bool dims_log_concave = true;  // only meaningful when q_values are present
  long cells_checked = 0;
  int witness_count = 0;
};

struct SweepResult {
  SweepSpec spec;
  int jobs = 1;
  std::vector<SweepCell> cells;  // sorted by (m, d)
  long total = 0;
  long passed = 0;
  bool all_pass = true;
  long wall_ms = 0;
};

/// The Frobenius-image polynomial a sweep cell checks: the unsigned view for
/// the alternating characteristic families, the honest polynomial otherwise.
SchurPoly family_poly(const std::string& family, int m, int d);

/// Runs the sweep on a worker pool of the given size. The aggregate is
/// deterministic: cells are evaluated independently and reported in (m, d)
/// order regardless of the number of jobs.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

}  // namespace schurlc
