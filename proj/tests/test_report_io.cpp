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
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracles.hpp"
#include "reach/io.hpp"
#include "reach/report.hpp"

using reach::Problem;

TEST(Report, ZeroTargetWorkedExample) {
  const auto rep = reach::reachability_report(Problem("0"), 6);
  ASSERT_EQ(rep.records.size(), 2u);
  // Sorted by descending P: the 6-bit program (p = 0.2, P = 0.2) comes first.
  EXPECT_EQ(rep.records[0].program_id, "100011");
  EXPECT_NEAR(rep.records[0].p_i, 0.2, 1e-15);
  EXPECT_NEAR(rep.records[0].variation, 0.46438561897747244, 1e-12);
  EXPECT_NEAR(rep.records[0].reachability, 0.2, 1e-12);
  EXPECT_EQ(rep.records[1].program_id, "0011");
  EXPECT_NEAR(rep.records[1].p_i, 0.8, 1e-15);
  EXPECT_NEAR(rep.records[1].variation, 0.2575424759098898, 1e-12);
  EXPECT_NEAR(rep.records[1].reachability, reach::oracle::plogp_root(0.2575424759098898, true), 1e-12);
  EXPECT_NEAR(rep.records[0].normalized + rep.records[1].normalized, 1.0, 1e-12);
  EXPECT_EQ(rep.kolmogorov->bits, 4);
  EXPECT_FALSE(rep.degenerate());
  for (const auto& r : rep.records) {
    const double e = 1.38065e-23 * 300.0 * std::log(2.0) * r.variation;
    EXPECT_NEAR(r.energy, e, 1e-12 * e);
  }
}

TEST(Report, EmptyTargetIsDegenerateAtTwoBits) {
  const auto rep = reach::reachability_report(Problem(""), 2);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].variation, 0.0);
  EXPECT_EQ(rep.records[0].reachability, 0.0);
  EXPECT_TRUE(rep.degenerate());
  EXPECT_EQ(rep.records[0].normalized, 1.0);
  EXPECT_EQ(reach::reachability_report(Problem(""), 4).records.size(), 2u);
}

TEST(Report, UniformSchemeGivesEqualReachabilityForEqualMass) {
  const auto rep = reach::reachability_report(Problem("01010101"), 14, reach::WeightScheme::Uniform);
  ASSERT_GT(rep.records.size(), 2u);
  for (const auto& r : rep.records) EXPECT_EQ(r.reachability, rep.records[0].reachability);
}

TEST(Report, NoSolutionIsAnEmptySetError) {
  EXPECT_THROW(reach::reachability_report(Problem("01010101"), 8), reach::EmptySetError);
}

TEST(Io, NumberFormatHasTwelveSignificantDigits) {
  EXPECT_EQ(reach::io::format_number(0.25), "0.25");
  EXPECT_EQ(reach::io::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(reach::io::format_number(2.8709809645202655e-21), "2.87098096452e-21");
}

TEST(Io, RecordsAreJsonLinesInFixedKeyOrder) {
  const auto rep = reach::reachability_report(Problem("0"), 6);
  std::ostringstream os;
  reach::io::write_records(os, reach::io::records_table(rep.records));
  std::istringstream in(os.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"program", "length", "p", "variation", "reachability",
                                              "energy", "normalized"}));
    EXPECT_EQ(j["program"].get<std::string>(), rep.records[n].program_id);
    EXPECT_NEAR(j["reachability"].get<double>(), rep.records[n].reachability, 1e-11);
    ++n;
  }
  EXPECT_EQ(n, rep.records.size());
}

TEST(Io, CsvRoundTrip) {
  const auto rep = reach::reachability_report(Problem("0101"), 16);
  std::ostringstream os;
  reach::io::write_csv(os, reach::io::records_table(rep.records));
  const auto rows = reach::io::parse_csv(os.str());
  ASSERT_EQ(rows.size(), rep.records.size() + 1);
  EXPECT_EQ(rows[0][0], "program");
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rows[i + 1];
    ASSERT_EQ(r.size(), 7u);
    EXPECT_EQ(r[0], rep.records[i].program_id);
    EXPECT_EQ(std::stoul(r[1]), rep.records[i].program_id.size());
    EXPECT_NEAR(std::stod(r[2]), rep.records[i].p_i, 1e-11 * rep.records[i].p_i);
    EXPECT_NEAR(std::stod(r[4]), rep.records[i].reachability, 1e-11 * rep.records[i].reachability);
  }
}

TEST(Io, CsvQuoting) {
  reach::io::Table t{{"a", "b"}, {{reach::io::Cell::str("x,y"), reach::io::Cell::str("say \"hi\"")},
                                  {reach::io::Cell::missing(), reach::io::Cell::number(1.5)}}};
  std::ostringstream os;
  reach::io::write_csv(os, t);
  const auto rows = reach::io::parse_csv(os.str());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"x,y", "say \"hi\""}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"", "1.5"}));
}
