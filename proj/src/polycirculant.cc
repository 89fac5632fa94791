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

#include "ramsey/polycirculant.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "ramsey/counting.h"
#include "ramsey/verify.h"

namespace ramsey {

int PolycirculantSpec::OffIndex(int a, int b) const {
  return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

namespace {

void AppendSet(std::ostringstream& out, const std::vector<int>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << ',';
    out << set[i];
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int ParseInt(std::string_view token, std::string_view context) {
  token = Trim(token);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("polycirculant spec: bad integer '" + std::string(token) +
                     "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> ParseSet(std::string_view text, std::string_view context) {
  std::vector<int> out;
  text = Trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(ParseInt(text.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MaskToSet(std::uint64_t mask) {
  std::vector<int> out;
  ForEachBit(mask, [&](int v) { out.push_back(v); });
  return out;
}

Graph Circulant(int m, std::uint32_t class_mask) {
  PolycirculantSpec spec;
  spec.k = 1;
  spec.m = m;
  spec.diag = {DiagonalSet(m, class_mask)};
  return Build(spec);
}

// Depth-first walk over the sets S_00, ..., S_{k-1,k-1}, S_01, ... with two
// partial graphs: pairs already decided to be edges and pairs already
// decided to be non-edges. Both are rho-invariant at every depth.
class Enumerator {
 public:
  using LeafFn =
      std::function<bool(const std::vector<std::uint32_t>&, const Graph&)>;

  Enumerator(int k, int m, const TwoColorProblem& p, bool prune,
             CensusFilter filter, bool complement_ansatz)
      : k_(k),
        m_(m),
        p_(p),
        prune_(prune),
        filter_(filter),
        ansatz_(complement_ansatz),
        num_classes_(static_cast<int>(SymmetricClasses(m).size())) {
    for (int a = 0; a < k; ++a) slots_.push_back({a, a});
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) slots_.push_back({a, b});
    }
    if (filter_ == CensusFilter::kComplementBlocks) {
      if (k < 2) throw InputError("complement-blocks filter needs k >= 2");
      for (std::uint32_t c = 0; c < NumChoices(0); ++c) {
        circulant_keys_.push_back(CanonicalKey(Circulant(m, c)));
      }
    }
  }

  // Number of leading slots whose combined choice index decides the shard.
  int prefix_slots() const { return std::min(k_, 2); }

  std::uint32_t NumChoices(int slot) const {
    const auto [a, b] = slots_[slot];
    return a == b ? (std::uint32_t{1} << num_classes_)
                  : static_cast<std::uint32_t>(std::uint64_t{1} << m_);
  }

  PolycirculantSpec SpecOf(const std::vector<std::uint32_t>& choices) const {
    PolycirculantSpec spec;
    spec.k = k_;
    spec.m = m_;
    for (int a = 0; a < k_; ++a) spec.diag.push_back(DiagonalSet(m_, choices[a]));
    for (std::size_t s = k_; s < slots_.size(); ++s) {
      spec.off.push_back(MaskToSet(choices[s]));
    }
    return spec;
  }

  // Visits the leaves whose prefix index is congruent to `shard` mod
  // `shards`. on_leaf returns false to stop.
  void Run(std::uint64_t shard, std::uint64_t shards,
           const std::atomic<bool>& stop, const LeafFn& on_leaf) {
    shard_ = shard;
    shards_ = shards;
    stop_ = &stop;
    on_leaf_ = &on_leaf;
    halted_ = false;
    choices_.assign(slots_.size(), 0);
    Descend(0, Graph(k_ * m_), Graph(k_ * m_), 0);
  }

 private:
  void Apply(int slot, std::uint32_t choice, Graph& present,
             Graph& absent) const {
    const auto [a, b] = slots_[slot];
    if (a == b) {
      std::vector<bool> in(m_, false);
      for (int s : DiagonalSet(m_, choice)) in[s] = true;
      for (int i = 0; i < m_; ++i) {
        for (int s = 1; s < m_; ++s) {
          const int u = a * m_ + i;
          const int v = a * m_ + (i + s) % m_;
          (in[s] ? present : absent).AddEdge(u, v);
        }
      }
    } else {
      for (int i = 0; i < m_; ++i) {
        for (int d = 0; d < m_; ++d) {
          const int u = a * m_ + i;
          const int v = b * m_ + (i + d) % m_;
          (((choice >> d) & 1) ? present : absent).AddEdge(u, v);
        }
      }
    }
  }

  bool Forbidden(const Graph& present, const Graph& absent) const {
    return ContainsShape(present, p_.left) || ContainsShape(absent, p_.right);
  }

  void Descend(int slot, const Graph& present, const Graph& absent,
               std::uint64_t prefix_index) {
    if (slot == static_cast<int>(slots_.size())) {
      if (!(*on_leaf_)(choices_, present)) halted_ = true;
      return;
    }
    const bool last = slot + 1 == static_cast<int>(slots_.size());
    const std::uint32_t n = NumChoices(slot);
    for (std::uint32_t c = 0; c < n; ++c) {
      if (halted_ || stop_->load(std::memory_order_relaxed)) return;
      const std::uint32_t all_classes = (std::uint32_t{1} << num_classes_) - 1;
      if (ansatz_ && slot == 1 && c != (all_classes ^ choices_[0])) continue;
      if (filter_ == CensusFilter::kComplementBlocks && slot == 1 &&
          circulant_keys_[choices_[0]] !=
              circulant_keys_[all_classes ^ c]) {
        continue;
      }
      std::uint64_t index = prefix_index;
      if (slot < prefix_slots()) {
        index = index * n + c;
        if (slot + 1 == prefix_slots() && index % shards_ != shard_) continue;
      }
      choices_[slot] = c;
      Graph next_present = present;
      Graph next_absent = absent;
      Apply(slot, c, next_present, next_absent);
      if ((prune_ || last) && Forbidden(next_present, next_absent)) {
        if (last) (*on_leaf_)(choices_, Graph());  // counted, rejected
        continue;
      }
      Descend(slot + 1, next_present, next_absent, index);
    }
  }

  int k_;
  int m_;
  TwoColorProblem p_;
  bool prune_;
  CensusFilter filter_;
  bool ansatz_;
  int num_classes_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<CanonicalForm> circulant_keys_;

  std::uint64_t shard_ = 0;
  std::uint64_t shards_ = 1;
  const std::atomic<bool>* stop_ = nullptr;
  const LeafFn* on_leaf_ = nullptr;
  bool halted_ = false;
  std::vector<std::uint32_t> choices_;
};

void CheckFamily(int k, int m) {
  if (k < 1 || k > 3) throw CapabilityError("polycirculant census supports k = 1, 2, 3");
  if (m < 2) throw InputError("orbit size m must be at least 2");
  if (k * m > kMaxCanonicalOrder) {
    throw CapabilityError("k * m = " + std::to_string(k * m) +
                          " exceeds the canonical form limit of " +
                          std::to_string(kMaxCanonicalOrder));
  }
}

}  // namespace

std::string PolycirculantSpec::ToString() const {
  std::ostringstream out;
  out << "k=" << k << ";m=" << m;
  for (int a = 0; a < static_cast<int>(diag.size()); ++a) {
    out << ";S" << a + 1 << a + 1 << '=';
    AppendSet(out, diag[a]);
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const int idx = OffIndex(a, b);
      if (idx >= static_cast<int>(off.size())) continue;
      out << ";S" << a + 1 << b + 1 << '=';
      AppendSet(out, off[idx]);
    }
  }
  return out.str();
}

PolycirculantSpec ParsePolycirculantSpec(std::string_view text) {
  std::optional<int> k;
  std::optional<int> m;
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> sets;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view token =
        Trim(text.substr(start, semi == std::string_view::npos
                                    ? std::string_view::npos
                                    : semi - start));
    if (!token.empty()) {
      const std::size_t eq = token.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("polycirculant spec: expected key=value, got '" +
                         std::string(token) + "'");
      }
      const std::string_view key = Trim(token.substr(0, eq));
      const std::string_view value = token.substr(eq + 1);
      if (key == "k") {
        k = ParseInt(value, token);
      } else if (key == "m") {
        m = ParseInt(value, token);
      } else if (key.size() == 3 && key[0] == 'S' &&
                 std::isdigit(static_cast<unsigned char>(key[1])) &&
                 std::isdigit(static_cast<unsigned char>(key[2]))) {
        sets.push_back({{key[1] - '1', key[2] - '1'}, ParseSet(value, token)});
      } else {
        throw ParseError("polycirculant spec: unknown key '" + std::string(key) +
                         "'");
      }
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (!k || !m) throw ParseError("polycirculant spec: k and m are required");
  if (*k < 1 || *k > 9) throw ParseError("polycirculant spec: k must be 1..9");
  PolycirculantSpec spec;
  spec.k = *k;
  spec.m = *m;
  spec.diag.assign(*k, {});
  spec.off.assign(*k * (*k - 1) / 2, {});
  std::set<std::pair<int, int>> seen;
  for (auto& [ab, set] : sets) {
    auto [a, b] = ab;
    if (a > b) std::swap(a, b);
    const std::string name = "S" + std::to_string(a + 1) + std::to_string(b + 1);
    if (a < 0 || b >= *k) {
      throw ParseError("polycirculant spec: block " + name +
                       " out of range for k=" + std::to_string(*k));
    }
    if (!seen.insert({a, b}).second) {
      throw ParseError("polycirculant spec: block " + name + " given twice");
    }
    (a == b ? spec.diag[a] : spec.off[spec.OffIndex(a, b)]) = std::move(set);
  }
  return spec;
}

void Validate(const PolycirculantSpec& spec) {
  if (spec.k < 1) throw InputError("polycirculant: k must be positive");
  if (spec.m < 1) throw InputError("polycirculant: m must be positive");
  if (spec.order() > kMaxVertices) {
    throw CapabilityError("polycirculant: order " +
                          std::to_string(spec.order()) + " exceeds 64");
  }
  if (static_cast<int>(spec.diag.size()) != spec.k ||
      static_cast<int>(spec.off.size()) != spec.k * (spec.k - 1) / 2) {
    throw InputError("polycirculant: wrong number of connection sets");
  }
  const auto check = [&](const std::vector<int>& set, int lo,
                         const std::string& name) {
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("polycirculant: repeated element in " + name);
    }
    for (int s : set) {
      if (s < lo || s >= spec.m) {
        throw InputError("polycirculant: element " + std::to_string(s) +
                         " of " + name + " outside " + std::to_string(lo) +
                         ".." + std::to_string(spec.m - 1));
      }
    }
  };
  for (int a = 0; a < spec.k; ++a) {
    const std::string name = "S" + std::to_string(a + 1) + std::to_string(a + 1);
    check(spec.diag[a], 1, name);
    for (int s : spec.diag[a]) {
      if (std::find(spec.diag[a].begin(), spec.diag[a].end(), spec.m - s) ==
          spec.diag[a].end()) {
        throw InputError("polycirculant: " + name + " is not symmetric (" +
                         std::to_string(s) + " without " +
                         std::to_string(spec.m - s) + ")");
      }
    }
  }
  for (int a = 0; a < spec.k; ++a) {
    for (int b = a + 1; b < spec.k; ++b) {
      check(spec.off[spec.OffIndex(a, b)], 0,
            "S" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
}

Graph Build(const PolycirculantSpec& spec) {
  Validate(spec);
  const int m = spec.m;
  Graph g(spec.order());
  for (int a = 0; a < spec.k; ++a) {
    for (int s : spec.diag[a]) {
      for (int i = 0; i < m; ++i) g.AddEdge(a * m + i, a * m + (i + s) % m);
    }
    for (int b = a + 1; b < spec.k; ++b) {
      for (int d : spec.off[spec.OffIndex(a, b)]) {
        for (int i = 0; i < m; ++i) g.AddEdge(a * m + i, b * m + (i + d) % m);
      }
    }
  }
  return g;
}

std::vector<int> RotationPermutation(int k, int m) {
  std::vector<int> perm(k * m);
  for (int a = 0; a < k; ++a) {
    for (int i = 0; i < m; ++i) perm[a * m + i] = a * m + (i + 1) % m;
  }
  return perm;
}

bool HasRotationAutomorphism(const Graph& g, int k, int m) {
  if (g.order() != k * m) return false;
  return Relabel(g, RotationPermutation(k, m)) == g;
}

std::vector<std::vector<int>> SymmetricClasses(int m) {
  std::vector<std::vector<int>> classes;
  for (int s = 1; 2 * s <= m; ++s) {
    if (2 * s == m) {
      classes.push_back({s});
    } else {
      classes.push_back({s, m - s});
    }
  }
  return classes;
}

std::vector<int> DiagonalSet(int m, std::uint32_t mask) {
  std::vector<int> out;
  const auto classes = SymmetricClasses(m);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if ((mask >> i) & 1) out.insert(out.end(), classes[i].begin(), classes[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CensusResult EnumerateCensus(int k, int m, const ProblemSpec& spec,
                             const CensusOptions& options) {
  CheckFamily(k, m);
  if (!spec.is_two_color()) {
    throw InputError("polycirculant census needs a two-color problem");
  }
  const TwoColorProblem& p = spec.two_color();
  const int threads =
      options.threads > 0
          ? options.threads
          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> candidates{0};
  std::atomic<bool> over_count{false};
  std::atomic<bool> over_time{false};
  std::vector<std::unordered_set<CanonicalForm>> found(threads);
  std::exception_ptr failure;
  std::mutex failure_mu;

  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          Enumerator e(k, m, p, options.prune, options.filter, false);
          std::uint64_t local = 0;
          const Enumerator::LeafFn on_leaf =
              [&](const std::vector<std::uint32_t>& choices, const Graph& g) {
                const std::uint64_t seen =
                    candidates.fetch_add(1, std::memory_order_relaxed) + 1;
                if (options.max_candidates && seen > *options.max_candidates) {
                  over_count.store(true);
                  stop.store(true);
                  return false;
                }
                if (options.max_seconds && (++local & 1023) == 0 &&
                    std::chrono::duration<double>(Clock::now() - start)
                            .count() >= *options.max_seconds) {
                  over_time.store(true);
                  stop.store(true);
                  return false;
                }
                if (g.order() == 0) return true;  // rejected at the last set
                // The walk and Build must agree on every accepted spec.
                if (!(Build(e.SpecOf(choices)) == g) ||
                    !Verify(g, p).valid) {
                  throw InvariantError("polycirculant: accepted spec " +
                                       e.SpecOf(choices).ToString() +
                                       " does not rebuild to a witness");
                }
                found[w].insert(CanonicalKey(g));
                return true;
              };
          e.Run(w, threads, stop, on_leaf);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          stop.store(true);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  CensusResult result;
  result.k = k;
  result.m = m;
  result.problem = spec.ToString();
  std::unordered_set<CanonicalForm> merged;
  for (auto& part : found) merged.merge(part);
  result.witnesses.assign(merged.begin(), merged.end());
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.candidates = std::min<std::uint64_t>(
      candidates.load(), options.max_candidates.value_or(~std::uint64_t{0}));
  if (over_count || over_time) {
    result.truncated = true;
    result.truncation_reason =
        over_count ? "candidate budget of " +
                         std::to_string(*options.max_candidates) + " exhausted"
                   : "time budget exhausted";
    throw CensusTruncatedError("polycirculant census truncated: " +
                                   result.truncation_reason,
                               std::move(result));
  }
  return result;
}

LemmaWitnessResult LemmaWitness(int n) {
  if (n < 2) throw InputError("lemma witness needs n >= 2");
  const int m = 2 * n - 1;
  CheckFamily(2, m);
  const TwoColorProblem p{Shape::Book(n - 1), Shape::Book(n)};
  const std::atomic<bool> never{false};
  for (bool ansatz : {true, false}) {
    Enumerator e(2, m, p, /*prune=*/true, CensusFilter::kNone, ansatz);
    std::optional<LemmaWitnessResult> hit;
    e.Run(0, 1, never,
          [&](const std::vector<std::uint32_t>& choices, const Graph& g) {
            if (g.order() == 0) return true;
            hit = LemmaWitnessResult{e.SpecOf(choices), g, ansatz};
            return false;
          });
    if (hit) {
      if (!(Build(hit->spec) == hit->graph) || !Verify(hit->graph, p).valid) {
        throw InvariantError("lemma witness failed re-verification");
      }
      return *hit;
    }
  }
  throw NotFoundError("no 2-polycirculant witness for R(B" +
                      std::to_string(n - 1) + ",B" + std::to_string(n) +
                      ") on " + std::to_string(4 * n - 2) + " vertices");
}

}  // namespace ramsey
