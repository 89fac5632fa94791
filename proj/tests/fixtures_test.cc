// Copyright 2026 The Ramsey Witness Authors
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

#include "ramsey/fixtures.h"

#include <set>

#include "gtest/gtest.h"
#include "ramsey/codec.h"
#include "ramsey/errors.h"

namespace ramsey {
namespace {

TEST(FixturesTest, SuiteVerifiesEveryRecord) {
  const FixtureReport report = RunFixtureSuite();
  EXPECT_EQ(report.results.size(), 20u);
  EXPECT_EQ(report.num_passed(), 20);
  EXPECT_TRUE(report.all_passed());
  for (const FixtureResult& r : report.results) {
    EXPECT_TRUE(r.passed) << r.id << ": " << r.message;
  }
}

TEST(FixturesTest, IdsAreUniqueAndClaimsMatchOrders) {
  std::set<std::string> ids;
  for (const FixtureRecord& r : AllFixtures()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    const std::string suffix = ">= " + std::to_string(r.order + 1);
    EXPECT_NE(r.claim.find(suffix), std::string::npos) << r.id << " " << r.claim;
  }
  EXPECT_EQ(ids.size(), 20u);
}

TEST(FixturesTest, DataDirectoryMatchesEmbeddedRegistry) {
  const std::vector<FixtureRecord> loaded = LoadFixtureDirectory(RAMSEY_FIXTURE_DIR);
  const std::vector<FixtureRecord>& embedded = AllFixtures();
  ASSERT_EQ(loaded.size(), embedded.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(loaded[i].id, embedded[i].id);
    EXPECT_EQ(loaded[i].problem, embedded[i].problem) << loaded[i].id;
    EXPECT_EQ(loaded[i].order, embedded[i].order) << loaded[i].id;
    EXPECT_EQ(loaded[i].format, embedded[i].format) << loaded[i].id;
    EXPECT_EQ(loaded[i].claim, embedded[i].claim) << loaded[i].id;
    if (loaded[i].format == FixtureRecord::Format::kGraph6) {
      EXPECT_EQ(DecodeGraph6(loaded[i].payload),
                DecodeGraph6(embedded[i].payload)) << loaded[i].id;
    } else {
      EXPECT_EQ(ParseColorMatrix(loaded[i].payload),
                ParseColorMatrix(embedded[i].payload)) << loaded[i].id;
    }
  }
}

TEST(FixturesTest, TamperedRecordFails) {
  FixtureRecord r = AllFixtures().front();
  r.payload = EncodeGraph6(CompleteGraph(r.order));
  EXPECT_FALSE(CheckFixture(r).passed);

  FixtureRecord wrong_order = AllFixtures().front();
  wrong_order.order += 1;
  EXPECT_FALSE(CheckFixture(wrong_order).passed);

  FixtureRecord garbage = AllFixtures().front();
  garbage.payload = "not graph6 {";
  const FixtureResult result = CheckFixture(garbage);
  EXPECT_FALSE(result.passed);
  EXPECT_FALSE(result.message.empty());
}

TEST(FixturesTest, MissingDirectoryIsAnInputError) {
  EXPECT_THROW(LoadFixtureDirectory("/nonexistent/fixtures"), InputError);
}

}  // namespace
}  // namespace ramsey
