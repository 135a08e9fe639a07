// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanglekit_cli/commands.hpp"

using namespace tanglekit;
using namespace tanglekit::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"tanglekit"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "tanglekit_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(0.942809041582) == "0.942809041582");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(1e-20) == "1e-20");
  CHECK(format_real(2.0 / 3.0) == "0.666666666667");
  CHECK(relative_delta(1.5, 1.0) == 0.5);
  CHECK(relative_delta(1e-3, 0.0) == 1e-3);
}

TEST_CASE("measure prints a JSON report") {
  const auto r = invoke({"measure", "--family", "w", "--n", "3"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["family"] == "w");
  CHECK(j["n"] == 3);
  CHECK(j["method"] == "numeric");
  CHECK(j["one_tangles"].size() == 3);
  CHECK(j["two_tangles"].size() == 3);
  CHECK(j["two_tangles"][0]["i"] == 1);
  CHECK(j["two_tangles"][0]["k"] == 2);
  CHECK(std::abs(j["pi_tangle"].get<double>() - 0.5493635455554623) <= 1e-13);
  CHECK(j["ckw_satisfied"] == json::array({true, true, true}));
  for (const char* key : {"pi_values", "total_bipartition_negativity", "total_one_tangle_squares"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j.contains("normalized"));
}

TEST_CASE("measure closed, both and normalize") {
  const auto closed = invoke({"measure", "--family", "w", "--n", "400", "--method", "closed"});
  REQUIRE(closed.code == kExitOk);
  CHECK(json::parse(closed.out)["method"] == "closed_form");
  // Full reports list every pair, so they stop at the label width.
  CHECK(invoke({"measure", "--family", "w", "--n", "1000", "--method", "closed"}).code == kExitResourceCap);

  const auto both = invoke({"measure", "--family", "xi", "--n", "6", "--method", "both"});
  REQUIRE(both.code == kExitOk);
  const json j = json::parse(both.out);
  CHECK(j["method"] == "both");
  CHECK(j["deltas"]["max"].get<double>() <= kBothDeltaTolerance);
  CHECK(j.contains("numeric"));
  CHECK(j.contains("closed_form"));

  const auto norm = invoke({"measure", "--family", "w", "--n", "4", "--normalize"});
  REQUIRE(norm.code == kExitOk);
  const json n = json::parse(norm.out)["normalized"];
  CHECK(std::abs(n["total_one_tangle_squares"].get<double>() - 0.75) <= 1e-12);

  const auto table = invoke({"measure", "--family", "ghz", "--n", "3", "--table"});
  REQUIRE(table.code == kExitOk);
  CHECK(table.out.find("pi_tangle") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"measure", "--family", "xi", "--n", "3", "--method", "closed"}).code == kExitValidity);
  CHECK(invoke({"measure", "--family", "ghz", "--n", "5", "--method", "both"}).code == kExitValidity);
  CHECK(invoke({"measure", "--family", "w", "--n", "12", "--dense"}).code == kExitResourceCap);
  CHECK(invoke({"measure", "--family", "w", "--n", "3", "--dense-cap", "20"}).code == kExitUsage);
  CHECK(invoke({"measure", "--family", "cluster", "--n", "3"}).code == kExitUsage);
  CHECK(invoke({"measure", "--family", "w", "--n", "1"}).code == kExitUsage);
  CHECK(invoke({"measure", "--family", "w", "--n", "1000"}).code == kExitResourceCap);
  CHECK(invoke({"measure", "--family", "custom"}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--family", "w", "--n-min", "2", "--n-max", "3", "--measures", "spin"}).code ==
        kExitUsage);
  CHECK(invoke({"sweep", "--family", "w", "--n-min", "2", "--n-max", "3", "--measures", "pi", "--out",
                "/nonexistent/dir/out.csv"})
            .code == kExitUsage);
  CHECK(invoke({"sweep", "--family", "xi", "--n-min", "600", "--n-max", "600", "--measures", "one_tangle,pi"})
            .code == kExitOk);
  CHECK(invoke({"sweep", "--family", "ghz", "--n-min", "600", "--n-max", "600", "--measures", "pi"}).code ==
        kExitValidity);
}

TEST_CASE("dense cap can come from the environment") {
  ::setenv("TANGLEKIT_DENSE_CAP", "12", 1);
  const auto r = invoke({"measure", "--family", "w", "--n", "11", "--dense"});
  ::unsetenv("TANGLEKIT_DENSE_CAP");
  CHECK(r.code == kExitOk);
  CHECK(invoke({"measure", "--family", "w", "--n", "11", "--dense"}).code == kExitResourceCap);
}

TEST_CASE("sweep CSV") {
  const auto r = invoke({"sweep", "--family", "w", "--n-min", "2", "--n-max", "5", "--measures", "pi,total_sq"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "family,n,measure,value,method");
  std::getline(lines, line);
  CHECK(line == "w,2,pi,0,numeric");
  std::getline(lines, line);
  CHECK(line == "w,2,total_sq,2,numeric");
  std::getline(lines, line);
  CHECK(line == "w,3,pi,0.549363545555,numeric");
  int rows = 3;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 8);

  const auto capped = invoke({"sweep", "--family", "w", "--n-min", "4", "--n-max", "5", "--measures", "one_tangle",
                              "--numeric-cap", "4"});
  CHECK(capped.out == "family,n,measure,value,method\nw,4,one_tangle,0.866025403784,numeric\n"
                      "w,5,one_tangle,0.8,closed_form\n");
}

TEST_CASE("sweep output files are byte-stable") {
  const auto a = (scratch_dir() / "a.csv").string();
  const auto b = (scratch_dir() / "b.csv").string();
  for (const auto& path : {a, b}) {
    const auto r = invoke({"sweep", "--family", "xi", "--n-min", "2", "--n-max", "30", "--measures",
                           "one_tangle,two_tangle,pi,total_neg,total_sq", "--out", path.c_str()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
  }
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("family,n,measure,value,method\nxi,2,one_tangle,", 0) == 0);
}

TEST_CASE("check subcommand") {
  const auto w = invoke({"check", "--family", "w", "--n", "6"});
  CHECK(w.code == kExitOk);
  CHECK(w.out.find("FAIL") == std::string::npos);
  CHECK(w.out.find("PASS  w_transpose_spectrum") != std::string::npos);

  const auto bell = write_file("bell.txt", "# Bell pair\n10 1\n01 1\n");
  const auto c = invoke({"check", "--family", "custom", "--state-file", bell.c_str()});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("PASS  two_qubit_pi_zero") != std::string::npos);
  CHECK(c.out.find("INFO  ckw_monogamy") != std::string::npos);
  CHECK(c.err.find("input norm 1.41421356237") != std::string::npos);

  const auto big = invoke({"check", "--family", "xi", "--n", "12"});
  CHECK(big.code == kExitOk);
  CHECK(big.out.find("INFO  dense_vs_structured") != std::string::npos);
}

TEST_CASE("run_checks flags every built-in family as consistent") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& psi : {make_w(n), make_ghz(n), make_xi(n)}) {
      for (const auto& r : run_checks(psi, kDefaultDenseCap)) CHECK_MESSAGE(r.passed, r.name << " n=" << n);
    }
  }
}

TEST_CASE("custom states through measure") {
  const auto path = write_file("ghz3.txt", "000 1\n111 1\n");
  const auto r = invoke({"measure", "--family", "custom", "--state-file", path.c_str()});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["family"] == "custom");
  CHECK(std::abs(j["pi_tangle"].get<double>() - 1.0) <= 1e-12);
  CHECK(invoke({"measure", "--family", "custom", "--state-file", path.c_str(), "--method", "closed"}).code ==
        kExitValidity);
  const auto bad = write_file("bad.txt", "10 1\n10 1\n");
  CHECK(invoke({"measure", "--family", "custom", "--state-file", bad.c_str()}).code == kExitUsage);
  CHECK(invoke({"measure", "--family", "w", "--n", "3", "--state-file", path.c_str()}).code == kExitUsage);
}

TEST_CASE("spectrum subcommand") {
  const auto r = invoke({"spectrum", "--family", "w", "--n", "3"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out ==
        "# family=w n=3 qubit=1 support=6\n"
        "-0.471404520791\n0\n0\n0.333333333333\n0.471404520791\n0.666666666667\n"
        "negativity 0.942809041582\n");
  CHECK(invoke({"spectrum", "--family", "w", "--n", "3", "--qubit", "4"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--family", "w", "--n", "40", "--support-cap", "16"}).code == kExitResourceCap);
}
