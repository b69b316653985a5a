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

#ifndef MUCOFIX_SIMPOINTS_HPP_
#define MUCOFIX_SIMPOINTS_HPP_

#include <compare>
#include <vector>

#include "mucofix/genfun.hpp"

namespace mucofix {

// A candidate (o, p) with o in O and p in P.
struct PairPoint {
  Element o = 0;
  Element p = 0;
  auto operator<=>(const PairPoint&) const = default;
};

bool is_sim_prefixed(const MutualPair& mp, PairPoint pt);
bool is_sim_postfixed(const MutualPair& mp, PairPoint pt);
bool is_sim_fixed(const MutualPair& mp, PairPoint pt);

enum class Side { O, P };
enum class FiberKind { Pre, Post };

/// Partners of `anchor` in the opposite lattice. For side O the fiber lives
/// in P and holds every p with (anchor, p) pre- (post-) fixed; for side P it
/// lives in O. An empty fiber is an ordinary value.
struct FiberSet {
  Element anchor;
  Side side;
  FiberKind kind;
  ElementSet fiber;
  bool empty() const { return fiber.none(); }
};

FiberSet prefp_fiber(const MutualPair& mp, Element anchor, Side side);
FiberSet postfp_fiber(const MutualPair& mp, Element anchor, Side side);

/// Projections of all simultaneous pre-fixed pairs (c on O, d on P) and
/// post-fixed pairs (e on O, fset on P).
struct ComponentSets {
  ElementSet c, d, e, fset;
};

// Pair scans above this many candidates throw CapacityError.
inline constexpr std::size_t kPairScanCap = std::size_t{1} << 22;

ComponentSets component_sets(const MutualPair& mp);

// All pre- (post-) fixed pairs in lexicographic (o, p) order.
std::vector<PairPoint> enumerate_sim_prefixed(const MutualPair& mp);
std::vector<PairPoint> enumerate_sim_postfixed(const MutualPair& mp);

/// Every simultaneous fixed pair in lexicographic order. Throws
/// std::logic_error if some element pairs with two partners, which would
/// contradict F and G being functions.
std::vector<PairPoint> enumerate_sim_fixed(const MutualPair& mp);

std::string format_point(const MutualPair& mp, PairPoint pt);

}  // namespace mucofix

#endif  // MUCOFIX_SIMPOINTS_HPP_
