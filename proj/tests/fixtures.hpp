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

// Named generator pairs shared by the test suites.

#ifndef MUCOFIX_TESTS_FIXTURES_HPP_
#define MUCOFIX_TESTS_FIXTURES_HPP_

#include "mucofix/genfun.hpp"

namespace testpairs {

using mucofix::MutualPair;
namespace fx = mucofix::fixtures;

// O = P = C2 with F = G = identity.
inline MutualPair id2() { return MutualPair(fx::c2(), fx::c2(), {0, 1}, {0, 1}); }

// O = P = C2 with F = identity and G constantly 1.
inline MutualPair k1() { return MutualPair(fx::c2(), fx::c2(), {0, 1}, {1, 1}); }

// O = P = diamond (bot, a, b, top) with F = G exchanging a and b.
inline MutualPair swap_d4() {
  return MutualPair(fx::diamond(), fx::diamond(), {0, 2, 1, 3}, {0, 2, 1, 3});
}

}  // namespace testpairs

#endif  // MUCOFIX_TESTS_FIXTURES_HPP_
