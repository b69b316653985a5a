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

#include <cstdlib>

#include <gtest/gtest.h>

#include "mucofix/lattice.hpp"
#include "mucofix/verifier.hpp"
#include "oracles.hpp"

namespace mucofix {
namespace {

using fixtures::diamond;

Element id(const FiniteLattice& lat, const std::string& name) {
  return lat.find(name).value();
}

TEST(Lattice, LeqOnFixtures) {
  const auto c2 = fixtures::c2();
  EXPECT_TRUE(c2.leq(0, 1));
  EXPECT_FALSE(c2.leq(1, 0));
  const auto d4 = diamond();
  EXPECT_FALSE(d4.leq(id(d4, "a"), id(d4, "b")));
  for (const auto& named : fixtures::corpus()) {
    for (Element x = 0; x < named.lattice.size(); ++x) {
      EXPECT_TRUE(named.lattice.leq(x, x)) << named.name;
    }
  }
}

TEST(Lattice, LeqRejectsOutOfRange) {
  EXPECT_THROW(fixtures::c2().leq(0, 7), InputError);
}

TEST(Lattice, MeetAndJoinSetExamples) {
  const auto d4 = diamond();
  const auto ab = d4.make_set({id(d4, "a"), id(d4, "b")});
  EXPECT_EQ(d4.meet_set(ab), id(d4, "bot"));
  EXPECT_EQ(d4.join_set(ab), id(d4, "top"));
  EXPECT_EQ(d4.meet_set(d4.empty_set()), d4.top());
  EXPECT_EQ(d4.join_set(d4.empty_set()), d4.bottom());
  const auto c3 = fixtures::c3();
  EXPECT_EQ(c3.meet_set(c3.make_set({1, 2})), 1u);
  EXPECT_EQ(c3.join_set(c3.make_set({0, 1})), 1u);
}

TEST(Lattice, MeetSetRejectsForeignSubset) {
  EXPECT_THROW(diamond().meet_set(ElementSet(3)), InputError);
}

TEST(Lattice, SetBoundsMatchSearchOracleOnCorpus) {
  for (const auto& named : fixtures::corpus()) {
    const auto& lat = named.lattice;
    if (lat.size() > 8) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << lat.size());
         ++mask) {
      ElementSet s(lat.size());
      std::vector<Element> elems;
      for (Element e = 0; e < lat.size(); ++e) {
        if (mask & (std::uint64_t{1} << e)) {
          s.set(e);
          elems.push_back(e);
        }
      }
      EXPECT_EQ(lat.meet_set(s), oracle::glb(lat, elems).value()) << named.name;
      EXPECT_EQ(lat.join_set(s), oracle::lub(lat, elems).value()) << named.name;
    }
  }
}

TEST(Lattice, DualSwapsMeetAndJoin) {
  for (const auto& named : fixtures::corpus()) {
    const auto& lat = named.lattice;
    const auto dual = lat.dual();
    for (Element a = 0; a < lat.size(); ++a) {
      for (Element b = 0; b < lat.size(); ++b) {
        EXPECT_EQ(lat.meet(a, b), dual.join(a, b)) << named.name;
        EXPECT_EQ(lat.join(a, b), dual.meet(a, b)) << named.name;
      }
    }
    EXPECT_EQ(lat.meet_set(lat.full_set()), dual.join_set(dual.full_set()));
  }
}

TEST(Lattice, AntichainIsNotALattice) {
  FinitePoset anti({"a", "b"}, {{true, false}, {false, true}});
  auto r = check_lattice(anti);
  ASSERT_TRUE(std::holds_alternative<LatticeDiagnostic>(r));
  const auto& d = std::get<LatticeDiagnostic>(r);
  EXPECT_EQ(d.kind, LatticeDiagnostic::Kind::NoLub);
  EXPECT_EQ(d.message, "NotALattice: {a,b} lacks lub");
  EXPECT_THROW(validate_lattice(anti), NotALattice);
}

TEST(Lattice, EmptyPosetIsNotALattice) {
  auto r = check_lattice(FinitePoset({}, {}));
  ASSERT_TRUE(std::holds_alternative<LatticeDiagnostic>(r));
  EXPECT_EQ(std::get<LatticeDiagnostic>(r).kind, LatticeDiagnostic::Kind::Empty);
}

TEST(Lattice, ValidateC2AndDiamond) {
  const auto c2 = validate_lattice(FinitePoset::from_edges({"0", "1"}, {{0, 1}}));
  EXPECT_EQ(c2.bottom(), 0u);
  EXPECT_EQ(c2.top(), 1u);
  const auto d4 = validate_lattice(FinitePoset::from_edges(
      {"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(d4.meet(1, 2), 0u);
  EXPECT_EQ(d4.join(1, 2), 3u);
}

TEST(Lattice, PosetAxiomsAreChecked) {
  EXPECT_THROW(FinitePoset({"a"}, {{false}}), NotAPoset);
  EXPECT_THROW(FinitePoset({"a", "b"}, {{true, true}, {true, true}}),
               NotAPoset);
  // a <= b <= c without a <= c.
  EXPECT_THROW(FinitePoset({"a", "b", "c"}, {{true, true, false},
                                             {false, true, true},
                                             {false, false, true}}),
               NotAPoset);
  EXPECT_THROW(FinitePoset::from_edges({"a", "b"}, {{0, 1}, {1, 0}}),
               NotAPoset);
  EXPECT_THROW(FinitePoset({"a", "a"}, {{true, false}, {false, true}}),
               InputError);
}

// Posets on 3 and 4 elements: validate_lattice agrees with a bound search.
TEST(Lattice, ValidatorMatchesBoundOracleOnAllSmallOrders) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<Element, Element>> slots;
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (i != j) slots.emplace_back(i, j);
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
         ++mask) {
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask & (std::uint64_t{1} << s)) {
          leq[slots[s].first][slots[s].second] = true;
        }
      }
      std::optional<FinitePoset> poset;
      try {
        poset.emplace(labels, leq);
      } catch (const NotAPoset&) {
        continue;
      }
      bool bounded = true;
      for (Element a = 0; a < n && bounded; ++a) {
        for (Element b = 0; b < n && bounded; ++b) {
          // Bound search over the raw relation.
          std::vector<Element> lower, upper;
          for (Element x = 0; x < n; ++x) {
            if (leq[x][a] && leq[x][b]) lower.push_back(x);
            if (leq[a][x] && leq[b][x]) upper.push_back(x);
          }
          auto has_extreme = [&](const std::vector<Element>& v, bool greatest) {
            for (Element x : v) {
              bool ok = true;
              for (Element y : v) ok = ok && (greatest ? leq[y][x] : leq[x][y]);
              if (ok) return true;
            }
            return false;
          };
          bounded = has_extreme(lower, true) && has_extreme(upper, false);
        }
      }
      const bool accepted =
          std::holds_alternative<FiniteLattice>(check_lattice(*poset));
      EXPECT_EQ(accepted, bounded) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Lattice, ProductOfTwoChainsIsDiamond) {
  const auto sq = product(fixtures::c2(), fixtures::c2());
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_TRUE(find_isomorphism(sq, diamond()).has_value());
  EXPECT_FALSE(find_isomorphism(sq, fixtures::c4()).has_value());
  EXPECT_EQ(sq.label(1), "(0,1)");
}

TEST(Lattice, ProductOperationsAreComponentwise) {
  const std::vector<FiniteLattice> bases = {fixtures::c2(), fixtures::c3(),
                                            diamond(), fixtures::m3(),
                                            fixtures::n5()};
  for (const auto& a : bases) {
    for (const auto& b : bases) {
      if (a.size() * b.size() > 64) continue;
      const auto ab = product(a, b);
      const auto nb = static_cast<Element>(b.size());
      for (Element x = 0; x < ab.size(); ++x) {
        for (Element y = 0; y < ab.size(); ++y) {
          EXPECT_EQ(ab.meet(x, y),
                    a.meet(x / nb, y / nb) * nb + b.meet(x % nb, y % nb));
          EXPECT_EQ(ab.join(x, y),
                    a.join(x / nb, y / nb) * nb + b.join(x % nb, y % nb));
        }
      }
    }
  }
}

TEST(Lattice, ProductRespectsCapOverride) {
  ::setenv("MUCOFIX_CAP", "8", 1);
  EXPECT_THROW(product(fixtures::c3(), fixtures::c3()), CapacityError);
  ::unsetenv("MUCOFIX_CAP");
  EXPECT_EQ(product(fixtures::c3(), fixtures::c3()).size(), 9u);
}

TEST(Lattice, PowersetExamples) {
  EXPECT_EQ(powerset_lattice(0).size(), 1u);
  EXPECT_TRUE(find_isomorphism(powerset_lattice(1), fixtures::c2()).has_value());
  const auto p2 = powerset_lattice(2);
  EXPECT_EQ(p2.size(), 4u);
  EXPECT_EQ(p2.top(), 3u);
  EXPECT_EQ(p2.label(p2.top()), "{0,1}");
  EXPECT_THROW(powerset_lattice(kExplicitPowersetCap + 1), CapacityError);
}

TEST(Lattice, CompleteSublatticeExamples) {
  const auto d4 = diamond();
  EXPECT_TRUE(is_complete_sublattice(d4, d4.make_set({d4.bottom(), d4.top()})));
  EXPECT_FALSE(
      is_complete_sublattice(d4, d4.make_set({id(d4, "a"), id(d4, "b")})));
  EXPECT_FALSE(is_complete_sublattice(d4, d4.empty_set()));
  for (const auto& named : fixtures::corpus()) {
    EXPECT_TRUE(is_complete_sublattice(named.lattice, named.lattice.full_set()));
  }
}

TEST(Lattice, SublatticeChecksAgreeWithSubsetOracle) {
  for (const auto& named : fixtures::corpus()) {
    const auto& lat = named.lattice;
    if (lat.size() > 6) continue;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << lat.size());
         ++mask) {
      ElementSet s(lat.size());
      std::vector<Element> elems;
      for (Element e = 0; e < lat.size(); ++e) {
        if (mask & (std::uint64_t{1} << e)) {
          s.set(e);
          elems.push_back(e);
        }
      }
      const bool expected = oracle::sublattice_by_subsets(lat, elems);
      EXPECT_EQ(is_complete_sublattice(lat, s), expected) << named.name;
      EXPECT_EQ(is_complete_sublattice_exhaustive(lat, s), expected);
    }
  }
}

TEST(Lattice, IsomorphismDistinguishesFiveElementLattices) {
  EXPECT_FALSE(find_isomorphism(fixtures::m3(), fixtures::n5()).has_value());
  EXPECT_TRUE(find_isomorphism(fixtures::n5(), fixtures::n5()).has_value());
  const auto iso = find_isomorphism(product(fixtures::c2(), fixtures::c3()),
                                    product(fixtures::c3(), fixtures::c2()));
  EXPECT_TRUE(iso.has_value());
}

TEST(Lattice, SerializeAndDescribe) {
  EXPECT_EQ(serialize(fixtures::c2()), "{0 1|0<1}");
  EXPECT_EQ(describe(fixtures::c2()),
            "elements: 0 1\nbottom: 0\ntop: 1\n0 < 1\n");
  const auto d4 = diamond();
  EXPECT_EQ(format_set(d4, d4.make_set({1, 2})), "{a,b}");
}

TEST(Lattice, CatalogCountsMatchKnownSequence) {
  // Lattices with n elements up to isomorphism: 1, 1, 1, 2, 5, 15, 53.
  const std::size_t expected[] = {0, 1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= kCatalogMax; ++n) {
    EXPECT_EQ(enumerate_lattices(n).size(), expected[n]) << "n=" << n;
  }
}

}  // namespace
}  // namespace mucofix
