// Copyright 2026 The compind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compind/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "compind/catalog.hpp"
#include "compind/error.hpp"
#include "compind/indicator.hpp"
#include "generators.hpp"

namespace compind {
namespace {

namespace fs = std::filesystem;

template <typename F>
ParseError expect_parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError("", 0, "", "");
}

// --- events -----------------------------------------------------------------

TEST(EventsFormatTest, ParsesCells) {
  const auto model = parse_events("t,a,b\n1,1,2\n2,3,4\n3,5,6\n");
  ASSERT_EQ(model.t_max(), 3u);
  EXPECT_EQ(model.channel_labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(model.events(), Matrix(3, 2, std::vector<double>{1, 2, 3, 4, 5, 6}));
}

TEST(EventsFormatTest, WriteThenReadReproducesCells) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = testing::random_series(rng, 1 + rng() % 20, 1 + rng() % 6, -1e6, 1e6);
    s.values(0, 0) = 0.1 + 0.2;  // not representable in short decimal form
    const EnterpriseModel model(s.values, s.channel_labels);
    EXPECT_EQ(parse_events(format_events(model)), model);
  }
}

TEST(EventsFormatTest, AcceptsRowsOutOfOrderAndComments) {
  const auto model = parse_events("# ledger\r\nt,a\r\n2,20\r\n\r\n1,10\r\n");
  EXPECT_EQ(model.value(1, 0), 10.0);
  EXPECT_EQ(model.value(2, 0), 20.0);
}

TEST(EventsFormatTest, HeaderOnlyIsAnError) {
  const auto e = expect_parse_error([] { parse_events("t,a,b\n", "x.csv"); });
  EXPECT_EQ(e.source(), "x.csv");
  EXPECT_NE(std::string(e.what()).find("t_max = 0"), std::string::npos);
}

TEST(EventsFormatTest, MissingPeriodIsNamed) {
  const auto e = expect_parse_error([] { parse_events("t,a\n1,1\n2,2\n4,4\n"); });
  EXPECT_NE(std::string(e.what()).find("missing period 3"), std::string::npos);
  EXPECT_EQ(e.line(), 4u);
}

TEST(EventsFormatTest, RejectsMalformedRows) {
  EXPECT_EQ(expect_parse_error([] { parse_events("t,a\n1,1\n1,2\n"); }).line(), 3u);
  EXPECT_EQ(expect_parse_error([] { parse_events("t,a,b\n1,1\n"); }).field(), "row");
  const auto e = expect_parse_error([] { parse_events("t,a,b\n1,1,abc\n"); });
  EXPECT_EQ(e.field(), "b");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(expect_parse_error([] { parse_events("t,a\n0,1\n"); }).field(), "t");
  EXPECT_EQ(expect_parse_error([] { parse_events("t,a\nx,1\n"); }).field(), "t");
  expect_parse_error([] { parse_events("t,a\n1,nan\n"); });
  expect_parse_error([] { parse_events("t,a\n1,inf\n"); });
  expect_parse_error([] { parse_events("period,a\n1,1\n"); });
  expect_parse_error([] { parse_events("t,a,a\n1,1,2\n"); });
  expect_parse_error([] { parse_events(""); });
}

// --- mapping ----------------------------------------------------------------

const std::vector<std::string> kLabels{"logging_1", "logging_2", "production_1"};

TEST(MappingFormatTest, ParsesHeaderBlockAndFlags) {
  const auto m = parse_mapping(
      "budget,5669650\ncost,1.1,28208\ncost,2.3,100\n"
      "competency_id,channel_label,flag\n1.1,logging_1,1\n2.3,production_1,1\n2.3,logging_2,0\n",
      kLabels, &bundled_catalog());
  EXPECT_EQ(m.competency_ids, (std::vector<std::string>{"1.1", "2.3"}));
  EXPECT_EQ(m.costs, (std::vector<double>{28208, 100}));
  EXPECT_EQ(m.budget, 5669650.0);
  EXPECT_EQ(m.flags, (std::vector<std::uint8_t>{1, 0, 0, 0, 0, 1}));
}

TEST(MappingFormatTest, FormatRoundTrips) {
  std::mt19937_64 rng(42);
  const auto& entries = bundled_catalog().entries();
  for (int trial = 0; trial < 30; ++trial) {
    CompetencyMapping m;
    m.channels = kLabels.size();
    const std::size_t count = 1 + rng() % 5;
    for (std::size_t i = 0; i < count; ++i) {
      m.competency_ids.push_back(entries[(trial + i) % entries.size()].skill_id);
      m.costs.push_back(static_cast<double>(rng() % 100000) / 7.0);
      for (std::size_t c = 0; c < m.channels; ++c) m.flags.push_back(rng() % 2);
    }
    m.budget = 1e6 / 3.0;
    const auto back = parse_mapping(format_mapping(m, kLabels), kLabels, &bundled_catalog());
    EXPECT_EQ(back.competency_ids, m.competency_ids);
    EXPECT_EQ(back.costs, m.costs);
    EXPECT_EQ(back.flags, m.flags);
    EXPECT_EQ(back.budget, m.budget);
  }
}

TEST(MappingFormatTest, RejectsBadInput) {
  const std::string head = "budget,10\ncost,1.1,1\ncompetency_id,channel_label,flag\n";
  EXPECT_EQ(expect_parse_error([&] { parse_mapping(head + "1.1,nope,1\n", kLabels, nullptr); }).field(),
            "channel_label");
  EXPECT_EQ(expect_parse_error([&] { parse_mapping(head + "2.2,logging_1,1\n", kLabels, nullptr); }).field(),
            "competency_id");
  EXPECT_EQ(expect_parse_error([&] { parse_mapping(head + "1.1,logging_1,2\n", kLabels, nullptr); }).field(),
            "flag");
  EXPECT_EQ(expect_parse_error([&] {
              parse_mapping(head + "1.1,logging_1,1\n1.1,logging_1,0\n", kLabels, nullptr);
            }).line(),
            5u);
  expect_parse_error([] { parse_mapping("cost,1.1,1\ncompetency_id,channel_label,flag\n", kLabels, nullptr); });
  expect_parse_error([] { parse_mapping("budget,1\ncost,1.1,1\n", kLabels, nullptr); });
  expect_parse_error([] { parse_mapping("budget,1\nbudget,2\n", kLabels, nullptr); });
  expect_parse_error([] { parse_mapping("limit,1\n", kLabels, nullptr); });
  EXPECT_THROW(parse_mapping("budget,1\ncost,1.1,-5\ncompetency_id,channel_label,flag\n", kLabels, nullptr),
               ValidationError);
  EXPECT_THROW(parse_mapping("budget,1\ncost,7.7,1\ncompetency_id,channel_label,flag\n", kLabels,
                             &bundled_catalog()),
               ValidationError);
}

// --- scenario ---------------------------------------------------------------

TEST(ScenarioFormatTest, ParsesAndRoundTrips) {
  const auto config = parse_scenario(R"({
    "seed": 18446744073709551615,
    "periods": 57,
    "processes": [
      {"name": "logging", "channels": 2, "base_level": 120.5, "amplitude": 30, "period_length": 12, "noise_scale": 5},
      {"name": "production", "channels": 1, "period_length": 4}
    ],
    "intervention_period": 7,
    "intervention_cost_per_period": 2.5
  })");
  EXPECT_EQ(config.seed, 18446744073709551615ULL);
  EXPECT_EQ(config.periods, 57u);
  ASSERT_EQ(config.processes.size(), 2u);
  EXPECT_EQ(config.processes[0].base_level, 120.5);
  EXPECT_EQ(config.processes[1].noise_scale, 0.0);
  EXPECT_EQ(config.intervention_period, 7u);
  EXPECT_EQ(config.intervention_cost_per_period, 2.5);

  const auto again = parse_scenario(format_scenario(config));
  EXPECT_EQ(generate_series(again), generate_series(config));
  EXPECT_EQ(format_scenario(again), format_scenario(config));
}

TEST(ScenarioFormatTest, InterventionIsOptional) {
  const auto config =
      parse_scenario(R"({"seed": 1, "periods": 3, "processes": [{"name": "p", "channels": 1, "period_length": 1}],
                         "intervention_period": null})");
  EXPECT_FALSE(config.intervention_period);
}

TEST(ScenarioFormatTest, Errors) {
  EXPECT_EQ(expect_parse_error([] { parse_scenario("{\n\"seed\": 1,\n]"); }).line(), 3u);
  EXPECT_EQ(expect_parse_error([] { parse_scenario(R"({"periods": 3, "processes": []})"); }).field(), "seed");
  EXPECT_EQ(expect_parse_error([] { parse_scenario(R"({"seed": -1, "periods": 3, "processes": []})"); }).field(),
            "seed");
  EXPECT_EQ(expect_parse_error([] {
              parse_scenario(R"({"seed": 1, "periods": 3, "processes": [{"name": "p", "period_length": 1}]})");
            }).field(),
            "processes[0].channels");
  EXPECT_THROW(parse_scenario(R"({"seed": 1, "periods": 3, "processes": []})"), ValidationError);
}

// --- regime and indicator tables ----------------------------------------------

TEST(RegimeTableTest, RoundTripsComparison) {
  RegimeComparison c;
  c.rows = {{13, 1.0 / 3.0, 0.5, 0.5 - 1.0 / 3.0}, {14, 2.0, 2.0, 0.0}};
  c.basic_total = 1.0 / 3.0 + 2.0;
  c.treated_total = 2.5;
  c.delta_total = c.treated_total - c.basic_total;
  EXPECT_EQ(parse_regime_table(format_regime_table(c)), to_table(c));
}

TEST(RegimeTableTest, RejectsDisorder) {
  expect_parse_error([] { parse_regime_table("t,v_basic,v_ddescr,dv\n2,1,1,0\n1,1,1,0\n"); });
  expect_parse_error([] { parse_regime_table("t,v_basic,v_ddescr,dv\ntotal,1,1,0\n1,1,1,0\n"); });
  expect_parse_error([] { parse_regime_table("t,basic,treated,dv\n1,1,1,0\n"); });
}

TEST(IndicatorTableTest, ColumnRoundTrips) {
  std::mt19937_64 rng(43);
  const auto series = indicator_series(testing::random_series(rng, 30, 4), 5, NormalizationMode::kRaw);
  const auto text = format_indicator_table(series);
  EXPECT_TRUE(looks_like_indicator_table(text));
  EXPECT_FALSE(looks_like_indicator_table("t,a,b\n1,2,3\n"));
  const auto col = parse_indicator_column(text);
  EXPECT_EQ(col.first_period, 6u);
  EXPECT_EQ(col.values, series.period_sums);
}

TEST(AtomicWriteTest, ReplacesContentsWithoutLeftovers) {
  const auto dir = fs::temp_directory_path() / "compind_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto path = dir / "out.csv";
  write_text_file_atomic(path, "first\n");
  write_text_file_atomic(path, "second\n");
  EXPECT_EQ(read_text_file(path), "second\n");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  EXPECT_THROW(write_text_file_atomic(dir / "missing" / "x.csv", "x"), IoError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace compind
