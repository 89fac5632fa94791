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

// Published lower-bound witnesses. The same records are shipped as files
// under data/fixtures/ with a manifest.tsv index.

#ifndef RAMSEY_FIXTURES_H_
#define RAMSEY_FIXTURES_H_

#include <filesystem>
#include <string>
#include <vector>

namespace ramsey {

struct FixtureRecord {
  enum class Format { kGraph6, kMatrix };

  std::string id;       // e.g. "RW5W7-14"
  std::string problem;  // ParseProblem syntax
  int order = 0;
  Format format = Format::kGraph6;
  std::string payload;  // graph6 line or color matrix block
  std::string claim;    // e.g. "R(W5,W7) >= 15"
};

const std::vector<FixtureRecord>& AllFixtures();

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::string message;
};

// Decodes, checks the order and verifies one record. Never throws; failures
// are reported in the result.
FixtureResult CheckFixture(const FixtureRecord& record);

struct FixtureReport {
  std::vector<FixtureResult> results;
  bool all_passed() const;
  int num_passed() const;
};

FixtureReport RunFixtureSuite();

// Reads manifest.tsv and the payload files it names from `dir`.
std::vector<FixtureRecord> LoadFixtureDirectory(const std::filesystem::path& dir);

}  // namespace ramsey

#endif  // RAMSEY_FIXTURES_H_
