// Copyright 2026 The reachcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "reach/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = reach::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(nlohmann::json::parse(line));
  return rows;
}

double field(const std::string& records, const char* key) {
  return json_lines(records).at(0).at(key).get<double>();
}

}  // namespace

TEST(Cli, LambertW) {
  auto r = cli({"lambertw", "-0.36787944117144233", "--branch", "lower", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "value"), -1.0);
  r = cli({"lambertw", "0", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "value"), 0.0);
  EXPECT_EQ(json_lines(r.out)[0]["branch"], "principal");
}

TEST(Cli, LambertWCurve) {
  const auto r = cli({"lambertw", "--curve", "-0.36787944117144233", "4", "100", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = reach::io::parse_csv(r.out);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "principal", "lower"}));
  double prev_p = -2.0;
  double prev_l = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double p = std::stod(rows[i][1]);
    EXPECT_GT(p, prev_p);
    prev_p = p;
    if (!rows[i][2].empty()) {
      const double l = std::stod(rows[i][2]);
      if (i > 1) {
        EXPECT_LT(l, prev_l);
      }
      prev_l = l;
    }
  }
  EXPECT_NEAR(std::stod(rows[1][1]), -1.0, 1e-6);
  EXPECT_NEAR(std::stod(rows[1][2]), -1.0, 1e-6);
}

TEST(Cli, Reach) {
  auto r = cli({"reach", "0.5", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "reachability"), 0.25, 1e-11);
  r = cli({"reach", "0.5307378454230431", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "reachability"), std::exp(-1.0), 1e-9);
  r = cli({"reach", "--energy", "1.4354904822601327e-21", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "reachability"), 0.25, 1e-11);
  r = cli({"reach", "0.6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("DomainError"), std::string::npos);
  r = cli({"reach", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, ReachCurve) {
  const auto r = cli({"reach", "--curve", "0", "0.5307378454230431", "200", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = reach::io::parse_csv(r.out);
  ASSERT_EQ(rows.size(), 201u);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_GT(std::stod(rows[i][1]), std::stod(rows[i - 1][1]));
  EXPECT_NEAR(std::stod(rows.back()[1]), std::exp(-1.0), 1e-9);
}

TEST(Cli, Solve) {
  auto r = cli({"solve", ""});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("k_hat            2"), std::string::npos) << r.out;
  r = cli({"solve", "0"});
  EXPECT_NE(r.out.find("k_hat            4"), std::string::npos) << r.out;
  r = cli({"solve", "01010101", "--format", "records"});
  ASSERT_EQ(r.code, 0);
  const auto rows = json_lines(r.out);
  EXPECT_EQ(rows.front()["program"], "0001101011");
  EXPECT_EQ(rows.front()["length"], 10);
  r = cli({"solve", "01010101", "--max-len", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("none"), std::string::npos);
}

TEST(Cli, SolveFromInputFile) {
  const auto path = std::filesystem::temp_directory_path() / "reachcalc_cli_target.txt";
  std::ofstream(path) << "0101 0101\n";
  const auto r = cli({"solve", "--input", path.string(), "--format", "csv"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(reach::io::parse_csv(r.out)[1][0], "0001101011");
  EXPECT_EQ(cli({"solve", "--input", "/nonexistent/file"}).code, 1);
}

TEST(Cli, Report) {
  auto r = cli({"report", "0", "--max-len", "6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = reach::io::parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], "100011");
  EXPECT_NEAR(std::stod(rows[1][2]), 0.2, 1e-12);
  EXPECT_NEAR(std::stod(rows[1][4]), 0.2, 1e-11);
  EXPECT_EQ(rows[2][0], "0011");
  EXPECT_NEAR(std::stod(rows[2][2]), 0.8, 1e-12);

  r = cli({"report", "", "--max-len", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  rows = reach::io::parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(std::stod(rows[1][4]), 0.0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, Search) {
  auto r = cli({"search", "0", "--policy", "descending", "--max-len", "6", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto s = json_lines(r.out).at(0);
  EXPECT_EQ(s["best_found"], "0011");
  EXPECT_EQ(s["bits_reduced"], 2);
  EXPECT_NEAR(s["energy_charged"].get<double>(), 2 * 1.38065e-23 * 300 * std::log(2.0), 1e-32);

  r = cli({"search", "01010101", "--policy", "greedy", "--steps", "all", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(reach::io::parse_csv(r.out).size(), 1u + 5u);

  r = cli({"search", "0", "--policy", "random"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("InvalidPolicy"), std::string::npos);
}

TEST(Cli, Loss) {
  auto r = cli({"loss", "1", "0", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "divergence"), 0.5671432904097838, 1e-11);
  r = cli({"loss", "0.3", "0.3", "--format", "records"});
  EXPECT_EQ(field(r.out, "divergence"), 0.0);
  r = cli({"loss", "--convexity-grid", "--format", "records"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_lines(r.out)[0]["passed"], true);
}

TEST(Cli, Entropy) {
  const auto r = cli({"entropy", "0.8", "0.2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = reach::io::parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(std::stod(rows[2][2]), 0.464385618977, 1e-12);
  EXPECT_EQ(cli({"entropy", "0.5", "0.6"}).code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 3);
  EXPECT_EQ(cli({"frobnicate"}).code, 3);
  EXPECT_EQ(cli({"solve"}).code, 3);
  EXPECT_EQ(cli({"solve", "0", "--max-len", "26"}).code, 2);
  EXPECT_EQ(cli({"lambertw", "-1"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
  const auto r = cli({"solve", "012"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("DomainError"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* fmt : {"records", "csv"}) {
    const std::vector<std::string> args{"report", "0110", "--format", fmt};
    const auto a = cli(args);
    const auto b = cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const std::vector<std::string> sargs{"search", "0110", "--policy", "greedy", "--steps", "all", "--format", fmt};
    EXPECT_EQ(cli(sargs).out, cli(sargs).out);
  }
}
