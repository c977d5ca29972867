#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schurlc/errors.hpp"
#include "schurlc/json_io.hpp"
#include "schurlc/logconcave.hpp"
#include "schurlc/matroid.hpp"
#include "schurlc/product_cache.hpp"
#include "schurlc/sweep.hpp"
#include "schurlc/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerateShape = 3;

using schurlc::Json;

// Shape parsing with the two failure modes the exit codes distinguish:
// malformed text is a usage error, well-formed numbers that do not form a
// valid shape are a degenerate-shape error.
enum class ParseStatus { ok, malformed, degenerate };

ParseStatus parse_parts(std::string_view text, std::vector<int>& out) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "-" || text.empty()) return ParseStatus::ok;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      return ParseStatus::malformed;
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ParseStatus::ok;
}

ParseStatus parse_shape(const std::string& text, std::optional<schurlc::SkewShape>& out) {
  const std::size_t slash = text.find('/');
  std::vector<int> outer_parts, inner_parts;
  ParseStatus st = parse_parts(
      slash == std::string::npos ? std::string_view(text)
                                 : std::string_view(text).substr(0, slash),
      outer_parts);
  if (st != ParseStatus::ok) return st;
  if (slash != std::string::npos) {
    st = parse_parts(std::string_view(text).substr(slash + 1), inner_parts);
    if (st != ParseStatus::ok) return st;
  }
  auto outer = schurlc::Partition::make(std::move(outer_parts));
  auto inner = schurlc::Partition::make(std::move(inner_parts));
  if (!outer || !inner) return ParseStatus::degenerate;
  auto shape = schurlc::SkewShape::make(std::move(*outer), std::move(*inner));
  if (!shape) return ParseStatus::degenerate;
  out = std::move(*shape);
  return ParseStatus::ok;
}

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_expand(const std::string& shape_text, bool text_mode) {
  std::optional<schurlc::SkewShape> shape;
  switch (parse_shape(shape_text, shape)) {
    case ParseStatus::malformed:
      std::cerr << "error: cannot parse shape '" << shape_text << "'\n";
      return kExitUsage;
    case ParseStatus::degenerate:
      std::cerr << "error: degenerate shape '" << shape_text << "'\n";
      return kExitDegenerateShape;
    case ParseStatus::ok:
      break;
  }
  const schurlc::SchurVector v = schurlc::skew_expand(*shape);
  if (text_mode)
    std::cout << v.to_text() << "\n";
  else
    print_json(schurlc::schur_vector_to_json(v));
  return kExitPass;
}

bool family_known(const std::string& family) {
  return family == "char" || family == "redchar" || family == "kl" ||
         family == "invkl" || family == "z";
}

schurlc::SchurPoly signed_family_poly(const std::string& family, int m, int d) {
  if (family == "char") return schurlc::char_poly(m, d).signed_poly();
  if (family == "redchar") return schurlc::reduced_char_poly(m, d).signed_poly();
  return schurlc::family_poly(family, m, d);
}

int cmd_invariant(const std::string& family, int m, int d, bool dims,
                  std::optional<int> qdims, bool text_mode) {
  if (!family_known(family) || m < 0 || d < 1) {
    std::cerr << "error: invalid family or parameters\n";
    return kExitUsage;
  }
  if (qdims && *qdims < 2) {
    std::cerr << "error: --qdims needs q >= 2\n";
    return kExitUsage;
  }
  const schurlc::SchurPoly poly = signed_family_poly(family, m, d);
  Json out;
  out["family"] = family;
  out["m"] = m;
  out["d"] = d;
  std::string text = poly.to_text();
  if (dims || qdims) {
    // Dimensions of the alternating families keep their signs; log-concavity
    // consumers take absolute values.
    const schurlc::IntPoly dp = qdims ? schurlc::q_dimension_poly(poly, *qdims)
                                      : schurlc::dimension_poly(poly);
    const char* key = qdims ? "qdims" : "dims";
    out[key] = schurlc::int_poly_to_json(dp);
    if (qdims) out["q"] = *qdims;
    text = dp.to_string();
  } else {
    out["poly"] = schurlc::schur_poly_to_json(poly);
  }
  if (text_mode)
    std::cout << text << "\n";
  else
    print_json(out);
  return kExitPass;
}

int cmd_check(const std::string& property, const std::string& family, int m,
              int d, const std::string& data_file, bool text_mode) {
  if (property != "ilc" && property != "strong-ilc") {
    std::cerr << "error: property must be ilc or strong-ilc\n";
    return kExitUsage;
  }
  schurlc::SchurPoly poly;
  if (!data_file.empty()) {
    std::ifstream in(data_file);
    if (!in) {
      std::cerr << "error: cannot open " << data_file << "\n";
      return kExitUsage;
    }
    Json doc = Json::parse(in, nullptr, false);
    auto parsed = doc.is_discarded()
                      ? std::nullopt
                      : schurlc::schur_poly_from_data_json(doc);
    if (!parsed) {
      std::cerr << "error: malformed data file " << data_file << "\n";
      return kExitUsage;
    }
    poly = std::move(*parsed);
  } else {
    if (!family_known(family) || m < 0 || d < 1) {
      std::cerr << "error: need a valid family with m, d or --data FILE\n";
      return kExitUsage;
    }
    poly = schurlc::family_poly(family, m, d);
  }
  schurlc::CheckReport report;
  try {
    report = property == "ilc" ? schurlc::check_ilc(poly)
                               : schurlc::check_strong_ilc(poly);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (text_mode) {
    std::cout << "verdict: " << (report.verdict ? "true" : "false")
              << " (cells checked: " << report.cells_checked << ")\n";
    for (const schurlc::Witness& w : report.witnesses)
      std::cout << "witness (" << w.i << "," << w.j
                << "): " << w.difference.to_text() << "\n";
  } else {
    print_json(schurlc::check_report_to_json(report));
  }
  return report.verdict ? kExitPass : kExitPropertyFalse;
}

Json sweep_to_json(const schurlc::SweepResult& r) {
  Json cells = Json::array();
  for (const schurlc::SweepCell& cell : r.cells) {
    Json c;
    c["m"] = cell.m;
    c["d"] = cell.d;
    c["pass"] = cell.pass;
    c["cells_checked"] = cell.cells_checked;
    c["witnesses"] = cell.witness_count;
    if (!r.spec.q_values.empty()) c["dims_log_concave"] = cell.dims_log_concave;
    cells.push_back(std::move(c));
  }
  Json out;
  out["spec"] = {{"family", r.spec.family},
                 {"property", r.spec.property},
                 {"max_m", r.spec.max_m},
                 {"max_d", r.spec.max_d},
                 {"sum_cap", r.spec.sum_cap()},
                 {"q_values", r.spec.q_values}};
  out["jobs"] = r.jobs;
  out["cells"] = std::move(cells);
  out["counts"] = {{"total", r.total},
                   {"passed", r.passed},
                   {"failed", r.total - r.passed}};
  out["all_pass"] = r.all_pass;
  out["wall_ms"] = r.wall_ms;  // informational; not part of the deterministic payload
  return out;
}

int cmd_sweep(const schurlc::SweepSpec& spec, int jobs, bool text_mode) {
  if (!spec.valid()) {
    std::cerr << "error: invalid sweep spec\n";
    return kExitUsage;
  }
  const schurlc::SweepResult result = schurlc::run_sweep(spec, jobs);
  if (text_mode) {
    for (const schurlc::SweepCell& cell : result.cells)
      if (!cell.pass)
        std::cout << "FAIL (m,d)=(" << cell.m << "," << cell.d << ")\n";
    std::cout << (result.all_pass ? "all pass" : "failures present") << ": "
              << result.passed << "/" << result.total << " cells, "
              << result.wall_ms << " ms\n";
  } else {
    print_json(sweep_to_json(result));
  }
  return result.all_pass ? kExitPass : kExitPropertyFalse;
}

int cmd_verify(const std::vector<std::string>& only, bool text_mode) {
  const std::vector<schurlc::CriterionResult> results =
      schurlc::run_verification(only);
  if (results.empty()) {
    std::cerr << "error: no criteria matched --only filter\n";
    return kExitUsage;
  }
  if (text_mode) {
    for (const schurlc::CriterionResult& r : results)
      std::printf("%s %2d %-32s %6ld ms  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.ms, r.detail.c_str());
  } else {
    Json arr = Json::array();
    for (const schurlc::CriterionResult& r : results)
      arr.push_back({{"id", r.id},
                     {"suite", r.suite},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"ms", r.ms}});
    print_json(arr);
  }
  return schurlc::all_passed(results) ? kExitPass : kExitPropertyFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schur-function arithmetic and induced log-concavity "
               "checks for uniform-matroid invariants"};
  app.require_subcommand(1);
  bool text_mode = false;
  bool json_mode = false;
  app.add_flag("--text", text_mode, "human-readable output");
  app.add_flag("--json", json_mode, "canonical JSON output (default)");

  auto* expand = app.add_subcommand("expand", "Schur expansion of a skew shape");
  std::string shape_text;
  expand->add_option("shape", shape_text, "skew shape, e.g. 6,5,4/3,2 or 3/-")
      ->required();

  auto* invariant =
      app.add_subcommand("invariant", "closed-form matroid invariant");
  std::string inv_family;
  int inv_m = 0, inv_d = 1;
  bool inv_dims = false;
  int inv_qdims = 0;
  invariant->add_option("family", inv_family, "char|redchar|kl|invkl|z")
      ->required();
  invariant->add_option("m", inv_m)->required();
  invariant->add_option("d", inv_d)->required();
  invariant->add_flag("--dims", inv_dims, "emit the dimension polynomial");
  invariant->add_option("--qdims", inv_qdims,
                        "emit generic-degree dimensions at integer q");

  auto* check = app.add_subcommand("check", "induced log-concavity check");
  std::string chk_property, chk_family, chk_data;
  int chk_m = 0, chk_d = 1;
  check->add_option("property", chk_property, "ilc|strong-ilc")->required();
  check->add_option("family", chk_family, "char|redchar|kl|invkl|z");
  check->add_option("m", chk_m);
  check->add_option("d", chk_d);
  check->add_option("--data", chk_data, "SchurPoly JSON file to check");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep over (m,d) cells");
  schurlc::SweepSpec spec;
  int jobs = 1;
  sweep->add_option("property", spec.property, "ilc|strong-ilc")->required();
  sweep->add_option("family", spec.family, "char|redchar|kl|invkl|z")
      ->required();
  sweep->add_option("--max-m", spec.max_m, "largest m (default 12)");
  sweep->add_option("--max-d", spec.max_d, "largest d (default 12)");
  sweep->add_flag("--extended", spec.extended,
                  "raise the m+d cap from 12 to 15");
  sweep->add_option("--q", spec.q_values,
                    "also require log-concave generic-degree dimensions at "
                    "these q values");
  sweep->add_option("--jobs", jobs, "worker pool size");

  auto* verify =
      app.add_subcommand("verify", "run the full verification battery");
  std::vector<std::string> only;
  verify->add_option(
      "--only", only,
      "restrict to suites: remarks oracles hooks charpoly kl invkl "
      "recursions z preservation dims lr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (text_mode && json_mode) {
    std::cerr << "error: --text and --json are mutually exclusive\n";
    return kExitUsage;
  }

  const char* cache_path = std::getenv("SCHURLC_CACHE");
  if (cache_path && *cache_path)
    schurlc::ProductCache::instance().load_file(cache_path);

  int rc = kExitUsage;
  try {
    if (expand->parsed())
      rc = cmd_expand(shape_text, text_mode);
    else if (invariant->parsed())
      rc = cmd_invariant(inv_family, inv_m, inv_d, inv_dims,
                         invariant->count("--qdims") ? std::optional<int>(inv_qdims)
                                                     : std::nullopt,
                         text_mode);
    else if (check->parsed())
      rc = cmd_check(chk_property, chk_family, chk_m, chk_d, chk_data,
                     text_mode);
    else if (sweep->parsed())
      rc = cmd_sweep(spec, jobs, text_mode);
    else if (verify->parsed())
      rc = cmd_verify(only, text_mode);
  } catch (const schurlc::degenerate_shape_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = kExitDegenerateShape;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = kExitUsage;
  }

  if (cache_path && *cache_path)
    schurlc::ProductCache::instance().save_file(cache_path);
  return rc;
}
