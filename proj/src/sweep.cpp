#include "schurlc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "schurlc/matroid.hpp"

namespace schurlc {

bool SweepSpec::valid() const {
  const bool family_ok = family == "char" || family == "redchar" ||
                         family == "kl" || family == "invkl" || family == "z";
  const bool property_ok = property == "ilc" || property == "strong-ilc";
  bool q_ok = true;
  for (int q : q_values)
    if (q < 2) q_ok = false;
  return family_ok && property_ok && max_m >= 0 && max_d >= 1 && q_ok;
}

SchurPoly family_poly(const std::string& family, int m, int d) {
  if (family == "char") return char_poly(m, d).unsigned_poly();
  if (family == "redchar") return reduced_char_poly(m, d).unsigned_poly();
  if (family == "kl") return kl_poly(m, d);
  if (family == "invkl") return inverse_kl_poly(m, d);
  if (family == "z") return z_poly(m, d);
  throw std::invalid_argument("unknown family: " + family);
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  if (!spec.valid()) throw std::invalid_argument("invalid sweep spec");
  const auto start = std::chrono::steady_clock::now();

  SweepResult result;
  result.spec = spec;
  result.jobs = jobs < 1 ? 1 : jobs;
  for (int m = 0; m <= spec.max_m; ++m)
    for (int d = 1; d <= spec.max_d; ++d)
      if (m + d <= spec.sum_cap()) result.cells.push_back({m, d});

  auto run_cell = [&spec](SweepCell& cell) {
    const SchurPoly poly = family_poly(spec.family, cell.m, cell.d);
    const CheckReport report =
        spec.property == "ilc" ? check_ilc(poly) : check_strong_ilc(poly);
    cell.pass = report.verdict;
    cell.cells_checked = report.cells_checked;
    cell.witness_count = static_cast<int>(report.witnesses.size());
    if (!spec.q_values.empty()) {
      cell.dims_log_concave = is_log_concave(dimension_poly(poly));
      for (int q : spec.q_values)
        cell.dims_log_concave =
            cell.dims_log_concave && is_log_concave(q_dimension_poly(poly, q));
      cell.pass = cell.pass && cell.dims_log_concave;
    }
  };

  if (result.jobs == 1) {
    for (SweepCell& cell : result.cells) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= result.cells.size()) return;
        run_cell(result.cells[idx]);
      }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(result.jobs,
                                static_cast<int>(result.cells.size()));
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  result.total = static_cast<long>(result.cells.size());
  for (const SweepCell& cell : result.cells)
    if (cell.pass) ++result.passed;
  result.all_pass = result.passed == result.total;
  result.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace schurlc
