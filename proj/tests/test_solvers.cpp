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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mucofix/solvers.hpp"
#include "mucofix/verifier.hpp"
#include "oracles.hpp"

namespace mucofix {
namespace {

using testpairs::id2;
using testpairs::k1;
using testpairs::swap_d4;

TEST(Solvers, DirectExamples) {
  EXPECT_EQ(*lsfp_direct(id2()).least, (PairPoint{0, 0}));
  EXPECT_EQ(*lsfp_direct(k1()).least, (PairPoint{1, 1}));
  const auto sw = swap_d4();
  EXPECT_EQ(*lsfp_direct(sw).least, (PairPoint{0, 0}));
  EXPECT_EQ(*gsfp_direct(id2()).greatest, (PairPoint{1, 1}));
  EXPECT_EQ(*gsfp_direct(k1()).greatest, (PairPoint{1, 1}));
  EXPECT_EQ(*gsfp_direct(sw).greatest, (PairPoint{3, 3}));
}

TEST(Solvers, ProductTraceOnK1) {
  for (Engine engine : {Engine::Explicit, Engine::Implicit}) {
    const auto r = lsfp_product(k1(), engine);
    EXPECT_EQ(r.trace, (std::vector<PairPoint>{{0, 0}, {1, 0}, {1, 1}}));
    EXPECT_EQ(r.iterations, 3u);
    EXPECT_EQ(r.mu_f(), 1u);
    EXPECT_EQ(r.mu_g(), 1u);
  }
}

TEST(Solvers, ProductImmediateFixpoints) {
  const auto r = lsfp_product(id2());
  EXPECT_EQ(*r.least, (PairPoint{0, 0}));
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(*gsfp_product(id2()).greatest, (PairPoint{1, 1}));
  EXPECT_EQ(*gsfp_product(k1()).greatest, (PairPoint{1, 1}));
  EXPECT_EQ(*lsfp_product(swap_d4()).least, (PairPoint{0, 0}));
  EXPECT_EQ(*gsfp_product(swap_d4()).greatest, (PairPoint{3, 3}));
}

TEST(Solvers, TarskiExamples) {
  EXPECT_EQ(lsfp_tarski_oracle(id2()), (PairPoint{0, 0}));
  EXPECT_EQ(lsfp_tarski_oracle(k1()), (PairPoint{1, 1}));
  EXPECT_EQ(gsfp_tarski_oracle(k1()), (PairPoint{1, 1}));
}

TEST(Solvers, NonMonotoneInputIsRejected) {
  const MutualPair bad(fixtures::c2(), fixtures::c2(), {1, 0}, {0, 1});
  try {
    lsfp_direct(bad);
    FAIL() << "expected NotMonotone";
  } catch (const NotMonotone& e) {
    EXPECT_EQ(e.which(), "F");
    EXPECT_EQ(e.lower(), "0");
    EXPECT_EQ(e.upper(), "1");
  }
  EXPECT_THROW(lsfp_product(bad), NotMonotone);
  EXPECT_THROW(gsfp_tarski_oracle(bad), NotMonotone);
}

TEST(Solvers, TinyBudgetRaisesNonTermination) {
  EXPECT_THROW(lsfp_product(k1(), Engine::Explicit, 2), NonTermination);
  EXPECT_THROW(lsfp_product(k1(), Engine::Implicit, 2), NonTermination);
  EXPECT_NO_THROW(lsfp_product(k1(), Engine::Explicit, 3));
}

TEST(Solvers, InductionVerdicts) {
  EXPECT_EQ(check_mutual_induction(id2(), {1, 1}), Verdict::Pass);
  EXPECT_EQ(check_mutual_induction(k1(), {1, 1}), Verdict::Pass);
  EXPECT_EQ(check_mutual_induction(k1(), {0, 1}), Verdict::NotApplicable);
  EXPECT_EQ(check_mutual_coinduction(k1(), {0, 0}), Verdict::Pass);
  EXPECT_EQ(check_mutual_coinduction(k1(), {1, 0}), Verdict::Pass);
  EXPECT_EQ(check_mutual_coinduction(id2(), {1, 0}), Verdict::NotApplicable);
}

TEST(Solvers, StandardEmbeddingExamples) {
  const auto c2 = fixtures::c2();
  EXPECT_EQ(lsfp_direct(standard_embed(c2, EndoFn::identity(c2))).mu_f(), 0u);
  EXPECT_EQ(lsfp_direct(standard_embed(c2, EndoFn(c2, {1, 1}))).mu_f(), 1u);
  const auto c3 = fixtures::c3();
  const EndoFn f(c3, {1, 1, 2});
  EXPECT_EQ(oracle::standard_lfp(c3, f.table()), 1u);
  EXPECT_EQ(lsfp_direct(standard_embed(c3, f)).mu_f(), 1u);
  EXPECT_THROW(standard_embed(c2, f), InputError);
}

TEST(Solvers, SolveDispatch) {
  EXPECT_EQ(solve(k1(), Strategy::Tarski, Direction::Least).point(),
            (PairPoint{1, 1}));
  EXPECT_EQ(solve(k1(), Strategy::Product, Direction::Greatest).point(),
            (PairPoint{1, 1}));
  EXPECT_EQ(to_string(Strategy::Product), "product");
  EXPECT_EQ(to_string(Verdict::NotApplicable), "NotApplicable");
}

// Every strategy lands on the least (greatest) fixed pair found by a scan
// over all candidate pairs.
TEST(Solvers, StrategiesMatchFixedPairScan) {
  Rng rng(31);
  InstanceGenSpec spec;
  spec.min_size = 2;
  spec.max_size = 8;
  for (int i = 0; i < 300; ++i) {
    const auto o = gen_lattice(spec, rng);
    const auto p = gen_lattice(spec, rng);
    const auto mp = gen_monotone_pair(rng, o, p);
    const auto mu = oracle::extreme_fixed_pair(mp, true);
    const auto nu = oracle::extreme_fixed_pair(mp, false);
    ASSERT_TRUE(mu && nu) << serialize(mp);
    EXPECT_EQ(*lsfp_direct(mp).least, *mu) << serialize(mp);
    EXPECT_EQ(*lsfp_product(mp).least, *mu);
    EXPECT_EQ(*lsfp_product(mp, Engine::Implicit).least, *mu);
    EXPECT_EQ(lsfp_tarski_oracle(mp), *mu);
    EXPECT_EQ(*gsfp_direct(mp).greatest, *nu);
    EXPECT_EQ(*gsfp_product(mp).greatest, *nu);
    EXPECT_EQ(*gsfp_product(mp, Engine::Implicit).greatest, *nu);
    EXPECT_EQ(gsfp_tarski_oracle(mp), *nu);
  }
}

TEST(Solvers, KleeneOnEmptyPowersetIsImmediate) {
  const auto il = implicit_powerset(0);
  const auto r = kleene_implicit<ElementSet>(
      il, [](const ElementSet& s) { return s; }, Direction::Least);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.trace_length, 1u);
}

TEST(Solvers, KleeneClosureStepFromSeed) {
  // Ground set {1, 2} as bits 0 and 1: whenever 1 is present, add 2.
  const auto il = implicit_powerset(2);
  auto step = [](const ElementSet& s) {
    ElementSet out = s;
    if (s.test(0)) out.set(1);
    return out;
  };
  const auto from_empty = kleene_implicit<ElementSet>(il, step, Direction::Least);
  EXPECT_TRUE(from_empty.limit.none());
  ElementSet seed(2);
  seed.set(0);
  const auto seeded =
      kleene_implicit<ElementSet>(il, step, Direction::Least, 100, seed);
  EXPECT_TRUE(seeded.limit.all());
  EXPECT_EQ(seeded.recent,
            (std::deque<std::string>{"{0}", "{0,1}"}));
}

TEST(Solvers, KleeneTraceRingIsBounded) {
  const auto il = implicit_view(chain(200));
  const auto r = kleene_implicit<Element>(
      il, [](const Element& x) { return x + 1 < 200 ? x + 1 : x; },
      Direction::Least, 1000);
  EXPECT_EQ(r.limit, 199u);
  EXPECT_EQ(r.trace_length, 200u);
  EXPECT_EQ(r.recent.size(), kTraceRing);
  EXPECT_EQ(r.recent.back(), "199");
}

TEST(Solvers, ImplicitLatticeLawsHold) {
  EXPECT_FALSE(check_lattice_laws(implicit_view(fixtures::n5()),
                                  std::vector<Element>{0, 1, 2, 3, 4}));
  std::vector<ElementSet> sample;
  for (unsigned m = 0; m < 8; ++m) sample.emplace_back(3, m);
  EXPECT_FALSE(check_lattice_laws(implicit_powerset(3), sample));
  // A broken join is caught.
  auto broken = implicit_view(fixtures::c3());
  broken.join = [](const Element& a, const Element&) { return a; };
  EXPECT_TRUE(check_lattice_laws(broken, std::vector<Element>{0, 1, 2}));
}

}  // namespace
}  // namespace mucofix
