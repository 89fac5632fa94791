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

#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>
#include <sstream>

#include "ramsey/codec.h"
#include "ramsey/errors.h"
#include "ramsey/problem.h"
#include "ramsey/verify.h"

namespace ramsey {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Strip(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

FixtureResult CheckFixture(const FixtureRecord& record) {
  FixtureResult result{record.id, false, ""};
  try {
    const ProblemSpec spec = ParseProblem(record.problem);
    Verdict verdict;
    int order = 0;
    if (record.format == FixtureRecord::Format::kGraph6) {
      const Graph g = DecodeGraph6(record.payload);
      order = g.order();
      if (!spec.is_two_color()) throw InputError("graph6 needs a two-color problem");
      verdict = Verify(g, spec.two_color());
    } else {
      const MultiColoring mc = ParseColorMatrix(record.payload);
      order = mc.order();
      verdict = VerifyColoring(mc, spec);
    }
    if (order != record.order) {
      result.message = "decoded order " + std::to_string(order) +
                       ", expected " + std::to_string(record.order);
      return result;
    }
    if (!verdict.valid) {
      result.message = "violation: " + verdict.violation->Describe();
      return result;
    }
    result.passed = true;
    result.message = record.claim;
  } catch (const std::exception& e) {
    result.message = e.what();
  }
  return result;
}

bool FixtureReport::all_passed() const {
  return num_passed() == static_cast<int>(results.size());
}

int FixtureReport::num_passed() const {
  return static_cast<int>(std::count_if(
      results.begin(), results.end(),
      [](const FixtureResult& r) { return r.passed; }));
}

FixtureReport RunFixtureSuite() {
  FixtureReport report;
  for (const FixtureRecord& record : AllFixtures()) {
    report.results.push_back(CheckFixture(record));
  }
  return report;
}

std::vector<FixtureRecord> LoadFixtureDirectory(
    const std::filesystem::path& dir) {
  std::vector<FixtureRecord> records;
  std::istringstream manifest(ReadFile(dir / "manifest.tsv"));
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, '\t')) fields.push_back(field);
    if (fields.size() != 6) {
      throw MalformedInputError("manifest: expected 6 fields in '" + line + "'");
    }
    FixtureRecord r;
    r.id = fields[0];
    r.problem = fields[1];
    r.order = std::stoi(fields[2]);
    if (fields[3] == "graph6") {
      r.format = FixtureRecord::Format::kGraph6;
    } else if (fields[3] == "matrix") {
      r.format = FixtureRecord::Format::kMatrix;
    } else {
      throw MalformedInputError("manifest: unknown format '" + fields[3] + "'");
    }
    r.payload = Strip(ReadFile(dir / fields[4]));
    r.claim = fields[5];
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace ramsey
