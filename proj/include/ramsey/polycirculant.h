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

// k-polycirculant graphs: k orbits ("blocks") of size m under the rotation
// rho that adds 1 mod m inside every block. Vertex (a, i) of block a and
// index i is labeled a * m + i (both zero based).
//
// (a, i) ~ (a, j)  iff  (j - i mod m) is in S_aa
// (a, i) ~ (b, j)  iff  (j - i mod m) is in S_ab   for a < b
//
// Diagonal sets live in {1..m-1} and must be closed under s -> m - s.
// Off-diagonal sets live in {0..m-1} and are stored in the order
// (0,1), (0,2), ..., (0,k-1), (1,2), ..., (k-2,k-1).

#ifndef RAMSEY_POLYCIRCULANT_H_
#define RAMSEY_POLYCIRCULANT_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/canonical.h"
#include "ramsey/errors.h"
#include "ramsey/graph.h"
#include "ramsey/problem.h"

namespace ramsey {

struct PolycirculantSpec {
  int k = 1;
  int m = 1;
  std::vector<std::vector<int>> diag;
  std::vector<std::vector<int>> off;

  int order() const { return k * m; }
  // Position of S_ab (a < b) in `off`.
  int OffIndex(int a, int b) const;

  // "k=2;m=10;S11=1,9;S22=2,8;S12=0,3,4" (block numbers are one based in
  // the text form).
  std::string ToString() const;

  friend bool operator==(const PolycirculantSpec&,
                         const PolycirculantSpec&) = default;
};

// Inverse of ToString. Missing sets are empty. Throws ParseError.
PolycirculantSpec ParsePolycirculantSpec(std::string_view text);

// Throws InputError on wrong set counts, out-of-range or duplicate elements,
// or an asymmetric diagonal set.
void Validate(const PolycirculantSpec& spec);

Graph Build(const PolycirculantSpec& spec);

// The rotation rho as a permutation (perm[v] = image of v).
std::vector<int> RotationPermutation(int k, int m);

// Exact check that rho maps g onto itself.
bool HasRotationAutomorphism(const Graph& g, int k, int m);

// Symmetric classes {s, m - s} of {1..m-1}, the self-paired m/2 included as
// a singleton when m is even. ceil((m - 1) / 2) classes.
std::vector<std::vector<int>> SymmetricClasses(int m);

// Union of the classes selected by `mask` (bit i = class i), sorted.
std::vector<int> DiagonalSet(int m, std::uint32_t mask);

enum class CensusFilter {
  kNone,
  // Block 0 is isomorphic to the complement of block 1 (needs k >= 2).
  kComplementBlocks,
};

struct CensusOptions {
  // Abandon a partial assignment once the pairs it already decides force
  // a forbidden shape in the graph or in the complement.
  bool prune = true;
  CensusFilter filter = CensusFilter::kNone;
  // 0 selects std::thread::hardware_concurrency().
  int threads = 0;
  // Budgets on complete specs examined and on wall-clock time.
  std::optional<std::uint64_t> max_candidates;
  std::optional<double> max_seconds;
};

struct CensusResult {
  int k = 0;
  int m = 0;
  std::string problem;
  // Sorted, pairwise distinct canonical forms of the witnesses.
  std::vector<CanonicalForm> witnesses;
  // Complete specs that were built and checked.
  std::uint64_t candidates = 0;
  bool truncated = false;
  std::string truncation_reason;

  std::size_t count() const { return witnesses.size(); }
};

// Thrown when a census exhausts its budget; carries what was found so far.
class CensusTruncatedError : public CapabilityError {
 public:
  CensusTruncatedError(const std::string& what, CensusResult partial)
      : CapabilityError(what), partial_(std::move(partial)) {}
  const CensusResult& partial() const { return partial_; }

 private:
  CensusResult partial_;
};

// All k-polycirculant witnesses of a two-color problem on k * m vertices, up
// to isomorphism. k must be 1, 2 or 3 and k * m at most kMaxCanonicalOrder.
CensusResult EnumerateCensus(int k, int m, const ProblemSpec& spec,
                             const CensusOptions& options = {});

// Witness that no search found although one should exist.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LemmaWitnessResult {
  PolycirculantSpec spec;
  Graph graph;
  // Found with S_22 fixed to the complement of S_11.
  bool from_ansatz = false;
};

// A 2-polycirculant graph on 4n - 2 vertices (m = 2n - 1) with no B_{n-1}
// whose complement has no B_n, so R(B_{n-1}, B_n) >= 4n - 1. The complement
// ansatz S_22 = {1..m-1} \ S_11 is tried before the full space. n >= 2.
// Throws NotFoundError if neither space holds a witness.
LemmaWitnessResult LemmaWitness(int n);

}  // namespace ramsey

#endif  // RAMSEY_POLYCIRCULANT_H_
