#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "schurlc/json_io.hpp"
#include "schurlc/matroid.hpp"
#include "schurlc/sweep.hpp"

using namespace schurlc;

namespace {

SchurVector sample_vector() {
  SchurVector v;
  v.add_term(Partition({2, 2}), 18);
  v.add_term(Partition({4}), 2);
  v.add_term(Partition({3, 1}), -2);
  v.add_term(Partition({1, 1, 1, 1}), 16);
  v.add_term(Partition({2, 1, 1}), 12);
  return v;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI named by SCHURLC_CLI and captures stdout.
RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SCHURLC_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SCHURLC_CLI must point at the cli binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("canonical SchurVector JSON") {
  const Json j = schur_vector_to_json(sample_vector());
  CHECK(j.dump() ==
        R"([{"lambda":[4],"c":2},{"lambda":[3,1],"c":-2},{"lambda":[2,2],"c":18},)"
        R"({"lambda":[2,1,1],"c":12},{"lambda":[1,1,1,1],"c":16}])");
  CHECK(*schur_vector_from_json(j) == sample_vector());
  CHECK(schur_vector_to_json(SchurVector()).dump() == "[]");
}

TEST_CASE("SchurPoly JSON round trip") {
  const SchurPoly p = kl_poly(2, 5);
  CHECK(*schur_poly_from_json(schur_poly_to_json(p)) == p);
}

TEST_CASE("the unit vector round trips through JSON") {
  const SchurVector unit = SchurVector::unit();
  const Json j = schur_vector_to_json(unit);
  CHECK(j.dump() == R"([{"lambda":[],"c":1}])");
  CHECK(*schur_vector_from_json(j) == unit);
}

TEST_CASE("big coefficients travel as strings") {
  SchurVector v;
  v.add_term(Partition({1}), Int("123456789012345678901234567890"));
  const Json j = schur_vector_to_json(v);
  CHECK(j[0]["c"].is_string());
  CHECK(*schur_vector_from_json(j) == v);
}

TEST_CASE("data files carry verified checksums") {
  const SchurPoly p = remark_example_poly();
  Json doc = data_file_to_json("test", p);
  CHECK(schur_poly_from_data_json(doc).has_value());
  CHECK(*schur_poly_from_data_json(doc) == p);
  doc["poly"][0][0]["c"] = 5;  // tamper
  CHECK_FALSE(schur_poly_from_data_json(doc).has_value());
}

TEST_CASE("shipped data files match the built-in constants") {
  const char* root = std::getenv("SCHURLC_SOURCE_DIR");
  REQUIRE_MESSAGE(root != nullptr, "SCHURLC_SOURCE_DIR must be set");
  {
    std::ifstream in(std::string(root) + "/data/braid_b7.json");
    REQUIRE(in.good());
    const Json doc = Json::parse(in);
    auto p = schur_poly_from_data_json(doc);
    REQUIRE(p.has_value());
    CHECK(*p == braid_b7_chP());
    CHECK(doc.contains("source"));
  }
  {
    std::ifstream in(std::string(root) + "/data/remark.json");
    REQUIRE(in.good());
    auto p = schur_poly_from_data_json(Json::parse(in));
    REQUIRE(p.has_value());
    CHECK(*p == remark_example_poly());
  }
}

TEST_CASE("check report JSON layout") {
  CheckReport r;
  r.cells_checked = 6;
  r.verdict = false;
  r.witnesses.push_back({1, 2, sample_vector()});
  const Json j = check_report_to_json(r);
  CHECK(j["verdict"] == false);
  CHECK(j["cells_checked"] == 6);
  CHECK(j["witnesses"][0]["i"] == 1);
  CHECK(j["witnesses"][0]["j"] == 2);
  CHECK(j.dump().rfind(R"({"verdict":false,"witnesses":[{"i":1,"j":2,)", 0) == 0);
}

TEST_CASE("cli expand") {
  CHECK(run_cli("expand 4,4/2").output == "[{\"lambda\":[4,2],\"c\":1}]\n");
  CHECK(run_cli("expand 3/-").output == "[{\"lambda\":[3],\"c\":1}]\n");
  CHECK(run_cli("expand 6,5,4/3,2").output == run_cli("expand 6,4,3/2,1").output);
  CHECK(run_cli("expand 7,9").exit_code == 3);
  CHECK(run_cli("expand 3/4").exit_code == 3);
  CHECK(run_cli("expand nonsense").exit_code == 2);
  CHECK(run_cli("expand 4,4/2").exit_code == 0);
}

TEST_CASE("cli invariant") {
  CHECK(run_cli("--text invariant kl 1 3 --dims").output == "1 + 2t\n");
  CHECK(run_cli("--text invariant z 0 2 --dims").output == "1 + 2t + t^2\n");
  const RunResult kl = run_cli("invariant kl 1 3");
  CHECK(kl.exit_code == 0);
  CHECK(kl.output.find("\"poly\":[[{\"lambda\":[4],\"c\":1}],[{\"lambda\":[2,2],\"c\":1}]]") !=
        std::string::npos);
  CHECK(run_cli("invariant kl 1 3 --qdims 2").output.find("\"coeffs\":[\"1\",\"20\"]") !=
        std::string::npos);
  CHECK(run_cli("invariant bogus 1 1").exit_code == 2);
  CHECK(run_cli("invariant kl -2 1").exit_code == 2);
}

TEST_CASE("cli check") {
  CHECK(run_cli("check ilc kl 1 5").exit_code == 0);
  const char* root = std::getenv("SCHURLC_SOURCE_DIR");
  REQUIRE(root != nullptr);
  const RunResult remark =
      run_cli("check strong-ilc --data " + std::string(root) + "/data/remark.json");
  CHECK(remark.exit_code == 1);
  CHECK(remark.output.find("\"i\":1,\"j\":2") != std::string::npos);
  CHECK(run_cli("check ilc --data " + std::string(root) + "/data/braid_b7.json")
            .exit_code == 1);
  CHECK(run_cli("check ilc").exit_code == 2);
}

TEST_CASE("cli sweep is deterministic across job counts") {
  const std::string args = "sweep strong-ilc kl --max-m 5 --max-d 5";
  Json a = Json::parse(run_cli(args + " --jobs 1").output);
  Json b = Json::parse(run_cli(args + " --jobs 4").output);
  CHECK(a["all_pass"] == true);
  a.erase("wall_ms");
  b.erase("wall_ms");
  a.erase("jobs");
  b.erase("jobs");
  CHECK(a == b);
}

TEST_CASE("cli verify filters suites") {
  const RunResult r = run_cli("--text verify --only remarks");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("remark-example") != std::string::npos);
  CHECK(r.output.find("oracle-equivalence") == std::string::npos);
}

TEST_CASE("sweep library API determinism") {
  SweepSpec spec;
  spec.family = "invkl";
  spec.property = "ilc";
  spec.max_m = 4;
  spec.max_d = 4;
  const SweepResult one = run_sweep(spec, 1);
  const SweepResult four = run_sweep(spec, 4);
  REQUIRE(one.cells.size() == four.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(one.cells[i].m == four.cells[i].m);
    CHECK(one.cells[i].d == four.cells[i].d);
    CHECK(one.cells[i].pass == four.cells[i].pass);
    CHECK(one.cells[i].cells_checked == four.cells[i].cells_checked);
  }
  CHECK(one.all_pass);
}
