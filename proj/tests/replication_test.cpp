#include "netent/replication.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace {

using netent::replication_report;
using netent::scenario_row;

const replication_report& report() {
  static const replication_report r = netent::run_all();
  return r;
}

TEST(ReplicationTest, EveryGatedScenarioPasses) {
  EXPECT_TRUE(report().all_pass);
  for (const scenario_row& row : report().rows)
    if (!row.informational)
      EXPECT_TRUE(row.pass()) << row.id << " computed " << row.computed
                              << " expected " << row.expected;
}

TEST(ReplicationTest, ReportIsDeterministic) {
  const std::string first = netent::to_text(netent::run_all());
  const std::string second = netent::to_text(netent::run_all());
  EXPECT_EQ(first, second);
}

TEST(ReplicationTest, RowsAreOrderedAndUnique) {
  std::vector<std::string> ids;
  for (const scenario_row& row : report().rows) ids.push_back(row.id);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(ReplicationTest, CoversTheExpectedScenarios) {
  const std::set<std::string> expected = {
      "01-brain-modern",        "02-brain-early",
      "03-neural-growth-rate",  "04-neural-dating-linear",
      "05-neural-dating-exponential", "06-speakers-1989",
      "07-speakers-1657",       "08-lexicon-1989",
      "09-lexicon-1657",        "10-lexical-multiplier",
      "11-lexical-growth-rate", "12-basal-lexical-rate",
      "13-divergence-adjusted", "14-divergence-per-daughter",
      "15-basal-vs-divergence", "16-language-origin",
      "17-thesaurus-entropy",   "18-network-value-delta",
      "19-single-node"};
  std::set<std::string> actual;
  for (const scenario_row& row : report().rows) actual.insert(row.id);
  EXPECT_EQ(actual, expected);
}

TEST(ReplicationTest, OnlyTheAlternateDatingRowIsInformational) {
  for (const scenario_row& row : report().rows)
    EXPECT_EQ(row.informational, row.id == "05-neural-dating-exponential") << row.id;
}

TEST(ReplicationTest, SpotCheckComputedValues) {
  auto find = [&](const std::string& id) -> const scenario_row& {
    for (const scenario_row& row : report().rows)
      if (row.id == id) return row;
    ADD_FAILURE() << "missing row " << id;
    static const scenario_row none{};
    return none;
  };
  EXPECT_NEAR(find("01-brain-modern").computed, 14.714815, 1e-6);
  EXPECT_NEAR(find("03-neural-growth-rate").computed, 0.0147812, 1e-7);
  EXPECT_NEAR(find("10-lexical-multiplier").computed, 60.9339, 1e-4);
  EXPECT_NEAR(find("16-language-origin").computed, 154181.0, 1.0);
  EXPECT_EQ(find("19-single-node").computed, 0.0);
}

TEST(ScenarioRowTest, AbsoluteAndRelativeTolerance) {
  scenario_row absolute{"x", "", "", 10.05, 10.0, 0.1, false, false};
  EXPECT_TRUE(absolute.pass());
  EXPECT_NEAR(absolute.delta(), 0.05, 1e-12);
  absolute.computed = 10.2;
  EXPECT_FALSE(absolute.pass());

  scenario_row relative{"y", "", "", 102.0, 100.0, 0.05, true, false};
  EXPECT_TRUE(relative.pass());  // 2% off with 5% headroom
  relative.computed = 107.0;
  EXPECT_FALSE(relative.pass());
}

TEST(ReplicationTextTest, TableListsEveryScenarioAndVerdict) {
  const std::string text = netent::to_text(report());
  EXPECT_NE(text.find("01-brain-modern"), std::string::npos);
  EXPECT_NE(text.find("19-single-node"), std::string::npos);
  EXPECT_NE(text.find("info"), std::string::npos);
  EXPECT_NE(text.find("result: all scenarios pass"), std::string::npos);
  // header + rule + 19 scenario rows + verdict
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 22);
}

}  // namespace
