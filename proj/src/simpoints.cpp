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

#include "mucofix/simpoints.hpp"

#include <stdexcept>

namespace mucofix {

bool is_sim_prefixed(const MutualPair& mp, PairPoint pt) {
  return mp.dom_p().leq(mp.apply_f(pt.o), pt.p) &&
         mp.dom_o().leq(mp.apply_g(pt.p), pt.o);
}

bool is_sim_postfixed(const MutualPair& mp, PairPoint pt) {
  return mp.dom_p().leq(pt.p, mp.apply_f(pt.o)) &&
         mp.dom_o().leq(pt.o, mp.apply_g(pt.p));
}

bool is_sim_fixed(const MutualPair& mp, PairPoint pt) {
  return mp.apply_f(pt.o) == pt.p && mp.apply_g(pt.p) == pt.o;
}

namespace {

void check_scan(const MutualPair& mp) {
  if (mp.dom_o().size() * mp.dom_p().size() > kPairScanCap) {
    throw CapacityError("pair scan of " + std::to_string(mp.dom_o().size()) +
                        " x " + std::to_string(mp.dom_p().size()) +
                        " exceeds scan cap");
  }
}

template <class Pred>
FiberSet fiber(const MutualPair& mp, Element anchor, Side side, FiberKind kind,
               Pred&& pred) {
  const auto& other = side == Side::O ? mp.dom_p() : mp.dom_o();
  const auto& own = side == Side::O ? mp.dom_o() : mp.dom_p();
  if (anchor >= own.size()) throw InputError("fiber anchor out of range");
  FiberSet out{anchor, side, kind, ElementSet(other.size())};
  for (Element x = 0; x < other.size(); ++x) {
    PairPoint pt = side == Side::O ? PairPoint{anchor, x} : PairPoint{x, anchor};
    if (pred(mp, pt)) out.fiber.set(x);
  }
  return out;
}

template <class Pred>
std::vector<PairPoint> scan(const MutualPair& mp, Pred&& pred) {
  check_scan(mp);
  std::vector<PairPoint> out;
  for (Element o = 0; o < mp.dom_o().size(); ++o) {
    for (Element p = 0; p < mp.dom_p().size(); ++p) {
      if (pred(mp, PairPoint{o, p})) out.push_back({o, p});
    }
  }
  return out;
}

}  // namespace

FiberSet prefp_fiber(const MutualPair& mp, Element anchor, Side side) {
  return fiber(mp, anchor, side, FiberKind::Pre, is_sim_prefixed);
}

FiberSet postfp_fiber(const MutualPair& mp, Element anchor, Side side) {
  return fiber(mp, anchor, side, FiberKind::Post, is_sim_postfixed);
}

ComponentSets component_sets(const MutualPair& mp) {
  check_scan(mp);
  const auto no = mp.dom_o().size(), np = mp.dom_p().size();
  ComponentSets cs{ElementSet(no), ElementSet(np), ElementSet(no),
                   ElementSet(np)};
  for (Element o = 0; o < no; ++o) {
    for (Element p = 0; p < np; ++p) {
      if (is_sim_prefixed(mp, {o, p})) {
        cs.c.set(o);
        cs.d.set(p);
      }
      if (is_sim_postfixed(mp, {o, p})) {
        cs.e.set(o);
        cs.fset.set(p);
      }
    }
  }
  return cs;
}

std::vector<PairPoint> enumerate_sim_prefixed(const MutualPair& mp) {
  return scan(mp, is_sim_prefixed);
}

std::vector<PairPoint> enumerate_sim_postfixed(const MutualPair& mp) {
  return scan(mp, is_sim_postfixed);
}

std::vector<PairPoint> enumerate_sim_fixed(const MutualPair& mp) {
  auto out = scan(mp, is_sim_fixed);
  ElementSet seen_o(mp.dom_o().size()), seen_p(mp.dom_p().size());
  for (auto pt : out) {
    if (seen_o.test(pt.o) || seen_p.test(pt.p)) {
      throw std::logic_error("simultaneous fixed point pairing is not unique");
    }
    seen_o.set(pt.o);
    seen_p.set(pt.p);
  }
  return out;
}

std::string format_point(const MutualPair& mp, PairPoint pt) {
  return "(" + mp.dom_o().label(pt.o) + "," + mp.dom_p().label(pt.p) + ")";
}

}  // namespace mucofix
