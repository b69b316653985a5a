//  Copyright 2026 The mucofix Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef MUCOFIX_VERIFIER_HPP_
#define MUCOFIX_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mucofix/solvers.hpp"

namespace mucofix {

// Deterministic generator: mt19937_64 output is fixed by the standard, and
// below() avoids the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
// Seed of instance `index` under master seed `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

enum class Family { Chains, Powersets, Products, RandomClosed, Corpus, Mixed };
enum class FunctionClass { Monotone, Continuous, Arbitrary };

std::string to_string(Family f);
std::string to_string(FunctionClass c);
Family parse_family(const std::string& s);
FunctionClass parse_function_class(const std::string& s);

struct InstanceGenSpec {
  std::uint64_t seed = 1;
  std::size_t min_size = 2;  // lattice sizes (element counts)
  std::size_t max_size = 8;
  Family family = Family::Mixed;
  std::optional<FunctionClass> function_class;  // unset: the lemma's premise
  std::size_t count = 200;
  ContinuityMode mode;

  // Throws InputError on an empty or out-of-cap size range or count 0.
  void validate() const;
};

FiniteLattice gen_lattice(const InstanceGenSpec& spec, Rng& rng);
// Uses spec.seed directly.
FiniteLattice gen_lattice(const InstanceGenSpec& spec);

// Random monotone table: scans a linear extension of `from` and draws each
// image from the up-set of the join of the images already forced below it.
std::vector<Element> gen_monotone_map(Rng& rng, const FiniteLattice& from,
                                      const FiniteLattice& to);
std::vector<Element> gen_arbitrary_map(Rng& rng, const FiniteLattice& from,
                                       const FiniteLattice& to);

MutualPair gen_monotone_pair(Rng& rng, const FiniteLattice& o,
                             const FiniteLattice& p);

struct GeneratedPair {
  std::optional<MutualPair> pair;  // empty when generation was exhausted
  std::size_t rejections = 0;
  std::size_t fallbacks = 0;  // sides filled from the curated family
};

// Rejection sampling over monotone tables, one side at a time, falling back
// to curated continuous maps (identity on equal lattices, constants outside
// with-empty mode) after `retry_cap` rejections.
GeneratedPair gen_continuous_pair(Rng& rng, const FiniteLattice& o,
                                  const FiniteLattice& p, ContinuityMode mode,
                                  std::size_t retry_cap = 64);

// One-line dump of a pair: both lattices and both tables.
std::string serialize(const MutualPair& mp);

// ------------------------------------------------------------ lemmas

enum class LemmaId { L1, L2, L3, L4, L5, L6, L7, SFP };

std::string to_string(LemmaId id);
LemmaId parse_lemma(const std::string& s);  // throws InputError
const std::vector<LemmaId>& all_lemmas();
// Short statement of what the executable form checks.
std::string lemma_anchor(LemmaId id);
FunctionClass premise_class(LemmaId id);

struct LemmaFailure {
  std::size_t index;
  std::string instance;
  std::string witness;
};

struct LemmaReport {
  LemmaId id;
  ContinuityMode mode;
  Family family;
  FunctionClass function_class;
  bool deliberate_premise_violation = false;
  std::size_t instances_tried = 0;
  std::size_t premise_not_met = 0;
  std::size_t generation_exhausted = 0;
  std::size_t rejections = 0;
  std::size_t fallbacks = 0;
  std::vector<LemmaFailure> failures;

  bool passed() const { return failures.empty(); }
};

LemmaReport check_lemma(LemmaId id, const InstanceGenSpec& spec);

// Runs the executable form of one lemma on one instance. Returns nullopt on
// success, the witness otherwise. Throws std::invalid_argument when the
// instance does not satisfy the lemma's premise.
std::optional<std::string> check_lemma_instance(LemmaId id,
                                                const MutualPair& mp,
                                                ContinuityMode mode);
bool premise_holds(LemmaId id, const MutualPair& mp, ContinuityMode mode);

std::string format_report(const LemmaReport& r);

// ------------------------------------------------------------- miner

enum class Question { Q1, Q2, Q3 };
std::string to_string(Question q);
Question parse_question(const std::string& s);  // throws InputError
std::string question_text(Question q);

struct MineSpec {
  std::size_t budget = 1000000;  // instances examined
  std::size_t max_size = 5;
  std::uint64_t seed = 1;
  ContinuityMode mode;
};

struct MineFinding {
  std::string instance;
  std::string witness;
  std::optional<MutualPair> pair;
};

struct MineReport {
  Question question;
  std::size_t instances_tried = 0;
  std::size_t exhaustive_up_to = 0;  // largest size class fully searched
  bool exhaustive_complete = false;
  std::size_t random_instances = 0;
  std::optional<MineFinding> finding;  // re-validated before emission
  std::string summary;
};

// Every lattice up to isomorphism with exactly n elements, n <= 7.
inline constexpr std::size_t kCatalogMax = 7;
std::vector<FiniteLattice> enumerate_lattices(std::size_t n);

// Calls visit(table) for every monotone table from -> to, in a fixed order.
// Stops and returns false when visit returns false.
bool for_each_monotone_map(const FiniteLattice& from, const FiniteLattice& to,
                           const std::function<bool(const std::vector<Element>&)>& visit);

// Detects the question's property on one monotone instance.
std::optional<std::string> detect(Question q, const MutualPair& mp,
                                  ContinuityMode mode);
// Recomputes the finding from the raw pair enumeration alone.
bool revalidate(Question q, const MutualPair& mp, ContinuityMode mode);

MineReport mine_counterexample(Question q, const MineSpec& spec);
std::string format_report(const MineReport& r);

}  // namespace mucofix

#endif  // MUCOFIX_VERIFIER_HPP_
