#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chaincode/cli.hpp"

using namespace chaincode;
using cli::Json;

namespace {

struct Result {
  int status = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "chaincode");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Result r;
  r.status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("weights for the ternary [1053, 6, 702] code, as JSON") {
  const auto r = run({"weights", "--set", "d3", "--p", "3", "--m", "3", "--nprime", "2", "--format", "json"});
  REQUIRE(r.status == cli::kExitOk);
  const auto j = r.json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "weights");
  CHECK(j["parameters"] == Json::parse(R"({"set":"d3","p":3,"m":3,"k":2,"nprime":2})"));
  CHECK(j["code"]["gray_length"] == 1053);
  CHECK(j["code"]["dimension"] == 6);
  CHECK(j["code"]["min_distance"] == 702);
  CHECK(j["enumerated"] == Json::parse(R"([{"weight":702,"frequency":702},{"weight":729,"frequency":26}])"));
  CHECK(j["match"] == true);
  CHECK(j["status"] == "match");
  CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("timing only on request") {
  const auto r = run({"weights", "--set", "d2", "--p", "2", "--m", "2", "--format", "json", "--timing"});
  REQUIRE(r.status == 0);
  CHECK(r.json().contains("timing_ms"));
}

TEST_CASE("table and csv output") {
  const auto t = run({"weights", "--set", "d2", "--p", "2", "--m", "2"});
  CHECK(t.status == 0);
  CHECK(t.out.find("[24, 4, 12]") != std::string::npos);
  CHECK(t.out.find("status: match") != std::string::npos);
  const auto c = run({"weights", "--set", "d2", "--p", "2", "--m", "2", "--format", "csv"});
  CHECK(c.status == 0);
  CHECK(c.out == "weight,frequency,source\n12,12,enumerated\n16,3,enumerated\n12,12,predicted\n16,3,predicted\n");
  CHECK(run({"check", "gauss", "--p", "3", "--m", "2", "--format", "csv"}).status == cli::kExitUsage);
}

TEST_CASE("bounds-only case passes when the bounds hold") {
  const auto r = run({"weights", "--set", "d3", "--p", "3", "--m", "4", "--nprime", "8", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = r.json();
  CHECK(j["status"] == "bounds_hold");
  CHECK(j["prediction"]["kind"] == "bounds_only");
}

TEST_CASE("exit statuses") {
  CHECK(run({"weights", "--set", "d1", "--p", "5", "--m", "1"}).status == cli::kExitNoTheorem);
  const auto na = run({"weights", "--set", "d1", "--p", "5", "--m", "1"});
  CHECK(na.err.find("no theorem applies") != std::string::npos);
  CHECK(run({"weights", "--set", "d3", "--p", "5", "--m", "2", "--nprime", "6"}).status == cli::kExitMismatch);
  CHECK(run({"check", "minimal", "--set", "d2", "--p", "3", "--m", "3", "--k", "3"}).status == cli::kExitBudget);
  CHECK(run({"check", "dual", "--set", "d1", "--p", "7", "--m", "2"}).status == cli::kExitBudget);
  CHECK(run({"weights", "--set", "d1", "--p", "2", "--m", "2"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d3", "--p", "3", "--m", "2", "--nprime", "3"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d3", "--p", "3", "--m", "2"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d2", "--p", "4", "--m", "2"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d2", "--p", "3", "--m", "2", "--k", "1"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d2", "--p", "3", "--m", "2", "--nprime", "2"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d5", "--p", "3", "--m", "2"}).status == cli::kExitUsage);
  CHECK(run({"nonsense"}).status == cli::kExitUsage);
  CHECK(run({}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d2", "--p", "3", "--m", "30"}).status == cli::kExitUsage);
}

TEST_CASE("invalid CHAINCODE_THREADS is a usage error") {
  setenv("CHAINCODE_THREADS", "lots", 1);
  CHECK(run({"weights", "--set", "d2", "--p", "2", "--m", "2"}).status == cli::kExitUsage);
  CHECK(run({"weights", "--set", "d2", "--p", "2", "--m", "2", "--threads", "2"}).status == cli::kExitOk);
  setenv("CHAINCODE_THREADS", "3", 1);
  CHECK(cli::default_threads() == 3);
  unsetenv("CHAINCODE_THREADS");
  CHECK(cli::default_threads() == 0);
}

TEST_CASE("check subcommands") {
  auto j = run({"check", "optimal", "--set", "d2", "--p", "2", "--m", "2", "--format", "json"}).json();
  CHECK(j["command"] == "check optimal");
  CHECK(j["ok"] == true);
  CHECK(j["computed"] == true);
  CHECK(j["griesmer"]["sum_d"] == 23);

  j = run({"check", "dual", "--set", "d2", "--p", "2", "--m", "2", "--format", "json"}).json();
  CHECK(j["claimed"] == 2);
  CHECK(j["computed"] == 2);
  CHECK(j["support1_found"] == false);
  CHECK(j["exact"] == true);
  CHECK(j["ok"] == true);

  j = run({"check", "minimal", "--set", "d3", "--p", "3", "--m", "4", "--nprime", "4", "--format", "json"}).json();
  CHECK(j["ab_verdict"] == "inconclusive");

  j = run({"check", "gauss", "--p", "3", "--m", "4", "--nprime", "4", "--format", "json"}).json();
  CHECK(j["ok"] == true);
  CHECK(j["zero_counts"]["mismatches"] == 0);
  CHECK(j["zero_counts"]["checked"] == 80);

  const auto a = run({"check", "action", "--set", "d1", "--p", "3", "--m", "2", "--trials", "4", "--format", "json"});
  CHECK(a.status == 0);
  CHECK(a.json()["trials"] == 4);
  CHECK(run({"check", "action", "--set", "d3", "--p", "3", "--m", "2", "--nprime", "2"}).status == cli::kExitUsage);
}

TEST_CASE("dumps") {
  const auto dir = std::filesystem::temp_directory_path() / "chaincode_cli_test";
  std::filesystem::create_directories(dir);
  const auto prefix = (dir / "d2").string();
  REQUIRE(run({"dump", "--set", "d2", "--p", "2", "--m", "2", "--output", prefix, "--threads", "1"}).status == 0);
  const auto ring = slurp(prefix + ".ring"), gray = slurp(prefix + ".gray");
  CHECK(std::count(ring.begin(), ring.end(), '\n') == 16);
  CHECK(std::count(gray.begin(), gray.end(), '\n') == 16);
  REQUIRE(run({"dump", "--set", "d2", "--p", "2", "--m", "2", "--output", prefix, "--threads", "8"}).status == 0);
  CHECK(slurp(prefix + ".ring") == ring);
  const auto r = run({"dump", "--set", "d2", "--p", "2", "--m", "2", "--form", "gray"});
  CHECK(r.out == gray);
  CHECK(run({"dump", "--set", "d2", "--p", "2", "--m", "2"}).status == cli::kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "chaincode_cli_out.json";
  REQUIRE(run({"weights", "--set", "d2", "--p", "2", "--m", "2", "--format", "json", "--output", path.string()}).status == 0);
  CHECK(Json::parse(slurp(path))["code"]["gray_length"] == 24);
  std::filesystem::remove(path);
}
