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

#ifndef MUCOFIX_SOLVERS_HPP_
#define MUCOFIX_SOLVERS_HPP_

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mucofix/simpoints.hpp"

namespace mucofix {

enum class Strategy { Direct, Product, Tarski };
enum class Direction { Least, Greatest };
enum class Engine { Explicit, Implicit };

std::string to_string(Strategy s);
std::string to_string(Direction d);

/// Outcome of one least or greatest solve. Exactly one of `least` /
/// `greatest` is set. `trace` lists the distinct iterates of an iterative
/// strategy, starting point first; `iterations` counts step applications
/// (including the one that confirmed stability). Non-iterative strategies
/// leave both empty / zero.
struct SolveResult {
  Strategy strategy = Strategy::Direct;
  std::optional<PairPoint> least;
  std::optional<PairPoint> greatest;
  std::vector<PairPoint> trace;
  std::size_t iterations = 0;

  Element mu_f() const { return least.value().o; }
  Element mu_g() const { return least.value().p; }
  Element nu_f() const { return greatest.value().o; }
  Element nu_g() const { return greatest.value().p; }
  PairPoint point() const { return least ? *least : greatest.value(); }
};

// Throws NotMonotone naming the first offending generator and pair.
void require_monotone(const MutualPair& mp);

// glb of the pre-fixed components (and lub of the post-fixed ones).
SolveResult lsfp_direct(const MutualPair& mp);
SolveResult gsfp_direct(const MutualPair& mp);

// Kleene iteration of H(o, p) = (G(p), F(o)) on the product order, from the
// bottom pair (least) or top pair (greatest). Explicit engine iterates the
// tables; implicit engine runs kleene_implicit over an ImplicitLattice.
SolveResult lsfp_product(const MutualPair& mp,
                         Engine engine = Engine::Explicit,
                         std::size_t budget = 10000);
SolveResult gsfp_product(const MutualPair& mp,
                         Engine engine = Engine::Explicit,
                         std::size_t budget = 10000);

// Materializes the product lattice, enumerates every pre- (post-) fixed
// point of H there and takes its glb (lub).
PairPoint lsfp_tarski_oracle(const MutualPair& mp);
PairPoint gsfp_tarski_oracle(const MutualPair& mp);

SolveResult solve(const MutualPair& mp, Strategy strategy, Direction dir);

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

// Pass iff the point, when simultaneously pre-fixed, lies above the least
// simultaneous fixed point.
Verdict check_mutual_induction(const MutualPair& mp, PairPoint pt);
// Pass iff the point, when simultaneously post-fixed, lies below the
// greatest simultaneous fixed point.
Verdict check_mutual_coinduction(const MutualPair& mp, PairPoint pt);

// O = P = lat, F = f, G = identity.
MutualPair standard_embed(const FiniteLattice& lat, const EndoFn& f);

// ---------------------------------------------------------------------
// Implicit lattices

/// Lattice operations supplied as callables, for element spaces too large
/// to tabulate (powersets of relations). The operators are expected to obey
/// the lattice laws on every reachable element; check_lattice_laws spot
/// checks that on sampled elements.
template <class T>
struct ImplicitLattice {
  std::function<T()> bottom;
  std::function<T()> top;
  std::function<T(const T&, const T&)> meet;
  std::function<T(const T&, const T&)> join;
  std::function<bool(const T&, const T&)> equal;
  std::function<std::string(const T&)> serialize;
};

template <class T>
struct KleeneResult {
  T limit;
  std::size_t iterations = 0;  // step applications
  std::size_t trace_length = 0;  // distinct iterates, start included
  std::deque<std::string> recent;  // serialized tail of the trace
};

inline constexpr std::size_t kDefaultBudget = 10000;
inline constexpr std::size_t kTraceRing = 64;

/// Iterates `step` from bottom (Least) or top (Greatest), or from `seed`
/// when given, until an iterate equals its image. `step` must be monotone
/// on the reachable elements; this is a contract, not checked. Throws
/// NonTermination after `budget` step applications without stabilizing.
/// `observe`, when set, sees every distinct iterate in order.
template <class T, class Step>
KleeneResult<T> kleene_implicit(
    const ImplicitLattice<T>& il, Step&& step, Direction dir,
    std::size_t budget = kDefaultBudget, std::optional<T> seed = std::nullopt,
    const std::function<void(const T&)>& observe = {}) {
  T cur = seed ? std::move(*seed)
               : (dir == Direction::Least ? il.bottom() : il.top());
  KleeneResult<T> out{cur, 0, 0, {}};
  auto record = [&](const T& x) {
    ++out.trace_length;
    out.recent.push_back(il.serialize(x));
    if (out.recent.size() > kTraceRing) out.recent.pop_front();
    if (observe) observe(x);
  };
  record(cur);
  while (out.iterations < budget) {
    T next = step(cur);
    ++out.iterations;
    if (il.equal(next, cur)) {
      out.limit = std::move(cur);
      return out;
    }
    cur = std::move(next);
    record(cur);
  }
  throw NonTermination(budget);
}

/// Spot check of idempotence, commutativity, associativity and absorption
/// over all triples drawn from `sample`. Returns a description of the first
/// violated law, or nullopt.
template <class T>
std::optional<std::string> check_lattice_laws(const ImplicitLattice<T>& il,
                                              const std::vector<T>& sample) {
  const auto& eq = il.equal;
  for (const T& a : sample) {
    if (!eq(il.meet(a, a), a) || !eq(il.join(a, a), a)) {
      return "idempotence fails at " + il.serialize(a);
    }
    if (!eq(il.meet(a, il.bottom()), il.bottom()) ||
        !eq(il.join(a, il.top()), il.top())) {
      return "bounds fail at " + il.serialize(a);
    }
    for (const T& b : sample) {
      if (!eq(il.meet(a, b), il.meet(b, a)) ||
          !eq(il.join(a, b), il.join(b, a))) {
        return "commutativity fails at " + il.serialize(a) + ", " +
               il.serialize(b);
      }
      if (!eq(il.meet(a, il.join(a, b)), a) ||
          !eq(il.join(a, il.meet(a, b)), a)) {
        return "absorption fails at " + il.serialize(a) + ", " +
               il.serialize(b);
      }
      for (const T& c : sample) {
        if (!eq(il.meet(il.meet(a, b), c), il.meet(a, il.meet(b, c))) ||
            !eq(il.join(il.join(a, b), c), il.join(a, il.join(b, c)))) {
          return "associativity fails at " + il.serialize(a) + ", " +
                 il.serialize(b) + ", " + il.serialize(c);
        }
      }
    }
  }
  return std::nullopt;
}

// Implicit view of an explicit lattice, and of the product of two.
ImplicitLattice<Element> implicit_view(const FiniteLattice& lat);
ImplicitLattice<PairPoint> implicit_product(const FiniteLattice& o,
                                            const FiniteLattice& p);

// Powerset of {0..n-1} over bitsets; n may exceed the explicit caps.
ImplicitLattice<ElementSet> implicit_powerset(std::size_t n);

}  // namespace mucofix

#endif  // MUCOFIX_SOLVERS_HPP_
