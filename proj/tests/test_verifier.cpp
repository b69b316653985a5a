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

#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mucofix/verifier.hpp"

namespace mucofix {
namespace {

TEST(Generators, ChainAndPowersetFamilies) {
  InstanceGenSpec spec;
  spec.family = Family::Chains;
  spec.min_size = spec.max_size = 3;
  EXPECT_TRUE(find_isomorphism(gen_lattice(spec), fixtures::c3()).has_value());
  spec.family = Family::Powersets;
  spec.min_size = spec.max_size = 4;
  const auto p = gen_lattice(spec);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(find_isomorphism(p, fixtures::diamond()).has_value());
}

TEST(Generators, EveryFamilyStaysInRange) {
  for (auto fam : {Family::Chains, Family::Powersets, Family::Products,
                   Family::RandomClosed, Family::Corpus, Family::Mixed}) {
    InstanceGenSpec spec;
    spec.family = fam;
    spec.min_size = 2;
    spec.max_size = 8;
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
      const auto lat = gen_lattice(spec, rng);
      EXPECT_GE(lat.size(), 2u) << to_string(fam);
      EXPECT_LE(lat.size(), 8u) << to_string(fam);
    }
  }
}

TEST(Generators, RandomClosedIsDeterministic) {
  InstanceGenSpec spec;
  spec.seed = 42;
  spec.family = Family::RandomClosed;
  EXPECT_EQ(serialize(gen_lattice(spec)), serialize(gen_lattice(spec)));
}

TEST(Generators, GeneratorSettingsValidation) {
  InstanceGenSpec spec;
  spec.min_size = 5;
  spec.max_size = 4;
  EXPECT_THROW(spec.validate(), InputError);
  spec = InstanceGenSpec{};
  spec.count = 0;
  EXPECT_THROW(spec.validate(), InputError);
  EXPECT_THROW(parse_family("trees"), InputError);
  EXPECT_EQ(parse_family("random-closed"), Family::RandomClosed);
  EXPECT_EQ(parse_function_class("arbitrary"), FunctionClass::Arbitrary);
}

TEST(Generators, MonotonePairsOnTwoChainCoverExactlyTheMonotoneTables) {
  const auto c2 = fixtures::c2();
  std::set<std::pair<std::vector<Element>, std::vector<Element>>> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const auto mp = gen_monotone_pair(rng, c2, c2);
    seen.emplace(mp.f_table(), mp.g_table());
  }
  // Of the 4 x 4 table pairs over C2, the 3 x 3 with monotone sides.
  EXPECT_EQ(seen.size(), 9u);
  std::size_t monotone = 0;
  for (Element f0 = 0; f0 < 2; ++f0) {
    for (Element f1 = 0; f1 < 2; ++f1) {
      for (Element g0 = 0; g0 < 2; ++g0) {
        for (Element g1 = 0; g1 < 2; ++g1) {
          if (f0 <= f1 && g0 <= g1) ++monotone;
        }
      }
    }
  }
  EXPECT_EQ(monotone, 9u);
}

TEST(Generators, MonotonePairIsDeterministic) {
  Rng a(7), b(7);
  const auto lat = fixtures::n5();
  EXPECT_EQ(serialize(gen_monotone_pair(a, lat, lat)),
            serialize(gen_monotone_pair(b, lat, lat)));
}

TEST(Generators, ContinuousPairsAdmitKnownExamples) {
  const auto mode = ContinuityMode::binary();
  EXPECT_TRUE(is_continuous_pair(testpairs::id2(), mode));
  EXPECT_TRUE(is_continuous_pair(testpairs::swap_d4(), mode));
  Rng rng(3);
  const auto m3 = fixtures::m3();
  std::size_t rejections = 0;
  for (int i = 0; i < 20; ++i) {
    auto gp = gen_continuous_pair(rng, m3, m3, mode);
    ASSERT_TRUE(gp.pair.has_value());
    EXPECT_TRUE(is_continuous_pair(*gp.pair, mode));
    rejections += gp.rejections;
  }
  EXPECT_GT(rejections, 0u);
}

TEST(Generators, StrictModeCanExhaustGeneration) {
  // With zero retries between distinct lattices, with-empty mode has no
  // curated fallback and reports exhaustion.
  Rng rng(1);
  auto gp = gen_continuous_pair(rng, fixtures::c3(), fixtures::c2(),
                                ContinuityMode::with_empty(), 0);
  EXPECT_FALSE(gp.pair.has_value());
  EXPECT_EQ(gp.fallbacks, 2u);
}

TEST(Lemmas, NamesAndPremises) {
  EXPECT_EQ(all_lemmas().size(), 8u);
  EXPECT_EQ(parse_lemma("L4"), LemmaId::L4);
  EXPECT_THROW(parse_lemma("L8"), InputError);
  EXPECT_EQ(premise_class(LemmaId::L5), FunctionClass::Continuous);
  EXPECT_EQ(premise_class(LemmaId::L7), FunctionClass::Monotone);
  EXPECT_EQ(premise_class(LemmaId::SFP), FunctionClass::Monotone);
}

TEST(Lemmas, InstanceCheckRejectsUnmetPremise) {
  const auto d4 = fixtures::diamond();
  const auto c2 = fixtures::c2();
  // Monotone but not meet-continuous.
  const MutualPair mp(d4, c2, {0, 1, 1, 1}, {0, 3});
  EXPECT_FALSE(premise_holds(LemmaId::L5, mp, ContinuityMode::binary()));
  EXPECT_THROW(check_lemma_instance(LemmaId::L5, mp, ContinuityMode::binary()),
               std::invalid_argument);
  EXPECT_FALSE(check_lemma_instance(LemmaId::SFP, mp, ContinuityMode::binary()));
}

TEST(Lemmas, ContinuousLemmasOnCorpus) {
  for (LemmaId id : {LemmaId::L1, LemmaId::L4, LemmaId::L5, LemmaId::L6}) {
    InstanceGenSpec spec;
    spec.family = Family::Corpus;
    spec.count = 100;
    spec.max_size = 8;
    const auto r = check_lemma(id, spec);
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_EQ(r.premise_not_met, 0u);
    EXPECT_EQ(r.instances_tried, 100u);
  }
}

TEST(Lemmas, SfpOnMonotonePairs) {
  InstanceGenSpec spec;
  spec.count = 100;
  const auto r = check_lemma(LemmaId::SFP, spec);
  EXPECT_TRUE(r.passed()) << format_report(r);
}

TEST(Lemmas, DeliberatePremiseViolationIsNotAFailure) {
  InstanceGenSpec spec;
  spec.count = 200;
  spec.function_class = FunctionClass::Monotone;
  const auto r = check_lemma(LemmaId::L4, spec);
  EXPECT_TRUE(r.deliberate_premise_violation);
  EXPECT_GT(r.premise_not_met, 0u);
  EXPECT_TRUE(r.passed());
  const auto text = format_report(r);
  EXPECT_NE(text.find("deliberate premise violation"), std::string::npos);
}

TEST(Lemmas, ArbitraryMapsNeverCountAgainstMonotoneLemmas) {
  InstanceGenSpec spec;
  spec.count = 100;
  spec.function_class = FunctionClass::Arbitrary;
  const auto r = check_lemma(LemmaId::L7, spec);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.premise_not_met, 0u);
}

TEST(Lemmas, ReportsAreDeterministic) {
  InstanceGenSpec spec;
  spec.seed = 99;
  spec.count = 30;
  EXPECT_EQ(format_report(check_lemma(LemmaId::L6, spec)),
            format_report(check_lemma(LemmaId::L6, spec)));
}

TEST(Miner, QuestionNames) {
  EXPECT_EQ(parse_question("Q3"), Question::Q3);
  EXPECT_THROW(parse_question("Q4"), InputError);
}

TEST(Miner, MonotoneMapEnumerationCounts) {
  std::size_t n = 0;
  for_each_monotone_map(fixtures::c2(), fixtures::c2(), [&](const auto&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 3u);
  n = 0;
  // Monotone self-maps of C3 are the 10 nondecreasing sequences.
  for_each_monotone_map(fixtures::c3(), fixtures::c3(), [&](const auto&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 10u);
}

TEST(Miner, ZeroBudget) {
  MineSpec spec;
  spec.budget = 0;
  for (auto q : {Question::Q1, Question::Q2, Question::Q3}) {
    const auto r = mine_counterexample(q, spec);
    EXPECT_EQ(r.summary, "none found, 0 instances tried");
    EXPECT_EQ(r.instances_tried, 0u);
  }
}

TEST(Miner, Q2OverTwoChainFindsNothing) {
  MineSpec spec;
  spec.max_size = 2;
  const auto r = mine_counterexample(Question::Q2, spec);
  EXPECT_FALSE(r.finding.has_value());
  EXPECT_EQ(r.summary, "none found (exhaustive up to size 2)");
}

TEST(Miner, Q1OverTwoChainPairsFindsNothing) {
  MineSpec spec;
  spec.max_size = 2;
  EXPECT_FALSE(mine_counterexample(Question::Q1, spec).finding.has_value());
}

TEST(Miner, FindingsRevalidate) {
  for (auto q : {Question::Q1, Question::Q3}) {
    MineSpec spec;
    const auto r = mine_counterexample(q, spec);
    ASSERT_TRUE(r.finding.has_value()) << to_string(q);
    EXPECT_NE(format_report(r).find("revalidated: yes"), std::string::npos);
  }
}

TEST(Miner, DetectorsOnHandBuiltInstances) {
  // A non-continuous pair whose fiber of 0 is {bot, a, b}, missing a v b.
  const auto c2 = fixtures::c2();
  const auto d4 = fixtures::diamond();
  const MutualPair q1(c2, d4, {0, 3}, {0, 0, 0, 1});
  EXPECT_TRUE(detect(Question::Q1, q1, ContinuityMode::binary()));
  EXPECT_TRUE(revalidate(Question::Q1, q1, ContinuityMode::binary()));
  // The swap pair is continuous: nothing to report.
  EXPECT_FALSE(
      detect(Question::Q1, testpairs::swap_d4(), ContinuityMode::binary()));
  EXPECT_FALSE(detect(Question::Q3, testpairs::k1(), ContinuityMode::binary()));
}

}  // namespace
}  // namespace mucofix
