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

// Command-line front end.
//
// Exit codes: 0 ok, 1 some input is not a witness (or a fixture failed),
// 2 bad flags or unparsable input, 3 a step/time/candidate budget ran out,
// 4 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey/codec.h"
#include "ramsey/counting.h"
#include "ramsey/errors.h"
#include "ramsey/fixtures.h"
#include "ramsey/generation.h"
#include "ramsey/polycirculant.h"
#include "ramsey/problem.h"
#include "ramsey/tabu.h"
#include "ramsey/verify.h"

namespace {

using namespace ramsey;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;

std::string ReadInput(const std::string& name) {
  if (name == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(name, std::ios::binary);
  if (!in) throw InputError("cannot open " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Everything the verify and count commands read, labeled for reporting.
struct Item {
  std::string label;
  std::optional<Graph> graph;
  std::optional<MultiColoring> coloring;
};

std::vector<Item> LoadItems(const std::vector<std::string>& inputs,
                            const std::string& format, bool complement) {
  std::vector<Item> items;
  for (const std::string& name : inputs) {
    const std::string text = ReadInput(name);
    if (format == "graph6") {
      const std::vector<Graph> graphs = DecodeGraph6Lines(text);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        Item item;
        item.label = name + ":" + std::to_string(i + 1);
        item.graph = complement ? Complement(graphs[i]) : graphs[i];
        items.push_back(std::move(item));
      }
    } else {
      const std::vector<MultiColoring> colorings = ParseColorMatrices(text);
      for (std::size_t i = 0; i < colorings.size(); ++i) {
        Item item;
        item.label = name + "#" + std::to_string(i + 1);
        item.coloring = colorings[i];
        items.push_back(std::move(item));
      }
    }
  }
  return items;
}

void WriteOutput(const std::optional<std::string>& path,
                 const std::string& text) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw InputError("cannot write " + *path);
  out << text;
}

int RunVerify(const std::string& problem, const std::string& format,
              bool complement, std::vector<std::string> inputs) {
  const ProblemSpec spec = ParseProblem(problem);
  if (complement && format != "graph6") {
    throw InputError("--complement applies to graph6 input only");
  }
  if (inputs.empty()) inputs.push_back("-");
  const std::vector<Item> items = LoadItems(inputs, format, complement);
  if (items.empty()) throw MalformedInputError("no input objects");
  bool all_valid = true;
  for (const Item& item : items) {
    Verdict verdict;
    if (item.graph) {
      if (!spec.is_two_color()) {
        throw InputError("graph6 input needs a two-color problem; use --format matrix");
      }
      verdict = Verify(*item.graph, spec.two_color());
    } else {
      verdict = VerifyColoring(*item.coloring, spec);
    }
    if (verdict.valid) {
      std::cout << item.label << ": valid\n";
    } else {
      all_valid = false;
      std::cout << item.label << ": INVALID " << verdict.violation->Describe()
                << "\n";
    }
  }
  return all_valid ? kExitOk : kExitInvalid;
}

int RunCount(const std::string& problem, const std::string& format,
             std::vector<std::string> inputs) {
  const ProblemSpec spec = ParseProblem(problem);
  if (inputs.empty()) inputs.push_back("-");
  const std::vector<Item> items = LoadItems(inputs, format, false);
  if (items.empty()) throw MalformedInputError("no input objects");
  for (const Item& item : items) {
    if (spec.is_two_color()) {
      const TwoColorProblem& p = spec.two_color();
      Graph g;
      if (item.graph) {
        g = *item.graph;
      } else {
        if (item.coloring->num_colors() > 2) {
          throw InputError(item.label + ": two-color problem needs at most 2 colors");
        }
        g = item.coloring->ColorClass(1);
      }
      const Score left = CountShape(g, p.left);
      const Score right = CountShape(Complement(g), p.right);
      std::cout << item.label << ": " << p.left.ToString() << "=" << left.ToString()
                << " " << p.right.ToString() << "(complement)=" << right.ToString()
                << " score=" << (left + right).ToString() << "\n";
    } else {
      if (!item.coloring) {
        throw InputError("generalized problems need --format matrix");
      }
      const GeneralizedProblem& p = spec.generalized();
      if (item.coloring->num_colors() > p.r) {
        throw InputError(item.label + ": coloring uses more than " +
                         std::to_string(p.r) + " colors");
      }
      std::cout << item.label << ": score="
                << GrScore(*item.coloring, p.s, p.t).ToString() << "\n";
    }
  }
  return kExitOk;
}

struct SearchFlags {
  std::string problem;
  int n = 0;
  int workers = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_steps;
  std::optional<double> max_seconds;
  bool deterministic = false;
  bool progress = false;
  std::optional<std::string> output;
};

int RunSearchCommand(const SearchFlags& f) {
  const ProblemSpec spec = ParseProblem(f.problem);
  if (f.deterministic && !f.seed) {
    throw InputError("--deterministic requires --seed");
  }
  if (f.workers < 1) throw InputError("--workers must be positive");
  if (f.n < 2 || f.n > kMaxVertices) throw InputError("-n must be in 2..64");
  const std::uint64_t base = f.seed ? *f.seed : std::random_device{}();
  std::vector<std::uint64_t> seeds;
  for (int w = 0; w < f.workers; ++w) seeds.push_back(base + w);

  SearchLimits limits;
  limits.max_steps = f.max_steps;
  limits.max_seconds = f.max_seconds;
  ProgressFn progress;
  if (f.progress) {
    progress = [](const Progress& p) {
      std::cerr << "worker " << p.worker << " step " << p.steps << " score "
                << p.score.ToString() << " best " << p.best_score.ToString()
                << " tabu " << p.tabu_size << "\n";
    };
  }
  const ParallelOutcome outcome =
      RunParallel(spec, f.n, seeds, limits, progress);
  for (std::size_t w = 0; w < outcome.workers.size(); ++w) {
    const SearchOutcome& o = outcome.workers[w];
    std::cerr << "worker " << w << " seed " << seeds[w] << ": "
              << ToString(o.reason) << " steps " << o.stats.steps << " best "
              << o.stats.best_score.ToString() << " final "
              << o.stats.final_score.ToString() << " tabu " << o.stats.tabu_size
              << " " << o.stats.elapsed_seconds << "s\n";
  }
  if (!outcome.witness) return kExitLimit;
  const std::string text = spec.is_two_color()
                               ? EncodeGraph6(outcome.witness->ColorClass(1)) + "\n"
                               : EmitColorMatrix(*outcome.witness);
  WriteOutput(f.output, text);
  return kExitOk;
}

int RunGenerate(const std::string& problem, int max_n,
                const std::optional<std::string>& dump,
                std::optional<double> max_seconds, int threads) {
  const ProblemSpec spec = ParseProblem(problem);
  GenerationOptions options;
  options.max_n = max_n;
  options.max_seconds = max_seconds;
  options.threads = threads;
  options.keep_levels = dump.has_value();
  const GenerationResult result = GenerateLevels(spec, options);
  std::cout << "# " << spec.ToString() << "\n";
  for (std::size_t i = 0; i < result.counts.size(); ++i) {
    std::cout << i + 1 << " " << result.counts[i] << "\n";
  }
  if (dump) {
    std::filesystem::create_directories(*dump);
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
      const bool two = spec.is_two_color();
      std::string text;
      for (const CanonicalForm& key : result.levels[i]) {
        text += two ? EncodeGraph6(GraphFromKey(key)) + "\n"
                    : EmitColorMatrix(ColoringFromKey(key)) + "\n";
      }
      WriteOutput(*dump + "/n" + std::to_string(i + 1) + (two ? ".g6" : ".txt"),
                  text);
    }
  }
  if (result.truncated) {
    std::cerr << "truncated: " << result.truncation_reason << "\n";
    return kExitLimit;
  }
  return kExitOk;
}

struct PolycircFlags {
  std::string problem;
  int k = 0;
  int m = 0;
  std::string filter = "none";
  bool no_prune = false;
  int threads = 0;
  std::optional<std::uint64_t> max_candidates;
  std::optional<double> max_seconds;
  std::optional<int> lemma;
  std::optional<std::string> output;
};

std::string CensusText(const CensusResult& r) {
  std::string text;
  for (const CanonicalForm& key : r.witnesses) {
    text += EncodeGraph6(GraphFromKey(key)) + "\n";
  }
  return text;
}

void PrintCensusSummary(const CensusResult& r) {
  std::cerr << "k=" << r.k << " m=" << r.m << " problem=" << r.problem
            << " count=" << r.count() << " candidates=" << r.candidates
            << (r.truncated ? " truncated" : "") << "\n";
}

int RunPolycirc(const PolycircFlags& f) {
  if (f.lemma) {
    const LemmaWitnessResult w = LemmaWitness(*f.lemma);
    std::cerr << w.spec.ToString()
              << (w.from_ansatz ? " (complement ansatz)" : "") << "\n";
    WriteOutput(f.output, EncodeGraph6(w.graph) + "\n");
    return kExitOk;
  }
  if (f.problem.empty() || f.k == 0 || f.m == 0) {
    throw InputError("polycirc needs --problem, -k and -m (or --lemma)");
  }
  const ProblemSpec spec = ParseProblem(f.problem);
  CensusOptions options;
  options.prune = !f.no_prune;
  options.filter = f.filter == "complement-blocks"
                       ? CensusFilter::kComplementBlocks
                       : CensusFilter::kNone;
  options.threads = f.threads;
  options.max_candidates = f.max_candidates;
  options.max_seconds = f.max_seconds;
  try {
    const CensusResult r = EnumerateCensus(f.k, f.m, spec, options);
    WriteOutput(f.output, CensusText(r));
    PrintCensusSummary(r);
    return kExitOk;
  } catch (const CensusTruncatedError& e) {
    WriteOutput(f.output, CensusText(e.partial()));
    PrintCensusSummary(e.partial());
    std::cerr << e.what() << "\n";
    return kExitLimit;
  }
}

int RunFixtures(const std::optional<std::string>& dir) {
  std::vector<FixtureResult> results;
  if (dir) {
    for (const FixtureRecord& r : LoadFixtureDirectory(*dir)) {
      results.push_back(CheckFixture(r));
    }
  } else {
    results = RunFixtureSuite().results;
  }
  int passed = 0;
  for (const FixtureResult& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.message
              << "\n";
    passed += r.passed;
  }
  std::cout << passed << "/" << results.size() << " fixtures verified\n";
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey witness construction, search and verification"};
  app.require_subcommand(1);
  int code = kExitOk;

  const std::vector<std::string> formats = {"graph6", "matrix"};

  // verify
  std::string v_problem;
  std::string v_format = "graph6";
  bool v_complement = false;
  std::vector<std::string> v_inputs;
  auto* verify = app.add_subcommand("verify", "Check inputs against a problem");
  verify->add_option("--problem", v_problem, "e.g. B2,B8 or GR:3,K4,2")->required();
  verify->add_option("--format", v_format)->check(CLI::IsMember(formats));
  verify->add_flag("--complement", v_complement,
                   "verify the complement of each graph6 input");
  verify->add_option("inputs", v_inputs, "files, '-' for stdin (default)");

  // count
  std::string c_problem;
  std::string c_format = "graph6";
  std::vector<std::string> c_inputs;
  auto* count = app.add_subcommand("count", "Count forbidden copies (the score)");
  count->add_option("--problem", c_problem)->required();
  count->add_option("--format", c_format)->check(CLI::IsMember(formats));
  count->add_option("inputs", c_inputs);

  // search
  SearchFlags s;
  auto* search = app.add_subcommand("search", "Tabu search for a witness");
  search->add_option("--problem", s.problem)->required();
  search->add_option("-n", s.n, "number of vertices")->required();
  search->add_option("--workers", s.workers, "independent parallel runs");
  search->add_option("--seed", s.seed, "seed of worker 0; worker w uses seed + w");
  search->add_option("--max-steps", s.max_steps);
  search->add_option("--max-seconds", s.max_seconds);
  search->add_flag("--deterministic", s.deterministic, "require an explicit seed");
  search->add_flag("--progress", s.progress, "progress lines on stderr");
  search->add_option("-o,--output", s.output, "witness file (default stdout)");

  // generate
  std::string g_problem;
  int g_max_n = 0;
  std::optional<std::string> g_dump;
  std::optional<double> g_max_seconds;
  int g_threads = 0;
  auto* generate = app.add_subcommand("generate", "Count all witnesses per order");
  generate->add_option("--problem", g_problem)->required();
  generate->add_option("--max-n", g_max_n)->required()->check(CLI::PositiveNumber);
  generate->add_option("--dump", g_dump, "write every level into this directory");
  generate->add_option("--max-seconds", g_max_seconds);
  generate->add_option("--threads", g_threads);

  // polycirc
  PolycircFlags p;
  auto* polycirc = app.add_subcommand("polycirc", "Polycirculant census");
  polycirc->add_option("--problem", p.problem);
  polycirc->add_option("-k", p.k, "number of orbits");
  polycirc->add_option("-m", p.m, "orbit size");
  polycirc->add_option("--filter", p.filter)
      ->check(CLI::IsMember({"none", "complement-blocks"}));
  polycirc->add_flag("--no-prune", p.no_prune);
  polycirc->add_option("--threads", p.threads);
  polycirc->add_option("--max-candidates", p.max_candidates);
  polycirc->add_option("--max-seconds", p.max_seconds);
  polycirc->add_option("--lemma", p.lemma,
                       "witness for R(B_{N-1}, B_N) >= 4N - 1 instead of a census");
  polycirc->add_option("-o,--output", p.output);

  // fixtures
  std::optional<std::string> f_dir;
  auto* fixtures = app.add_subcommand("fixtures", "Verify the bundled witnesses");
  fixtures->add_option("--dir", f_dir, "load a manifest.tsv directory instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*verify) {
      code = RunVerify(v_problem, v_format, v_complement, v_inputs);
    } else if (*count) {
      code = RunCount(c_problem, c_format, c_inputs);
    } else if (*search) {
      code = RunSearchCommand(s);
    } else if (*generate) {
      code = RunGenerate(g_problem, g_max_n, g_dump, g_max_seconds, g_threads);
    } else if (*polycirc) {
      code = RunPolycirc(p);
    } else if (*fixtures) {
      code = RunFixtures(f_dir);
    }
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return code;
}
