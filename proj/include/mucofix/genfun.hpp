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

#ifndef MUCOFIX_GENFUN_HPP_
#define MUCOFIX_GENFUN_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mucofix/lattice.hpp"

namespace mucofix {

// A total table from one lattice into another. Non-owning.
struct MapView {
  const FiniteLattice& from;
  const FiniteLattice& to;
  std::span<const Element> table;

  Element operator()(Element x) const { return table[x]; }
};

// Total self-map over one lattice.
class EndoFn {
 public:
  EndoFn(FiniteLattice dom, std::vector<Element> table);
  static EndoFn identity(FiniteLattice dom);

  const FiniteLattice& dom() const { return dom_; }
  const std::vector<Element>& table() const { return table_; }
  Element operator()(Element x) const;
  MapView view() const { return {dom_, dom_, table_}; }

 private:
  FiniteLattice dom_;
  std::vector<Element> table_;
};

/// Mutual generators F: O -> P and G: P -> O as total tables. Construction
/// checks totality and range.
class MutualPair {
 public:
  MutualPair(FiniteLattice o, FiniteLattice p, std::vector<Element> f,
             std::vector<Element> g);

  const FiniteLattice& dom_o() const { return o_; }
  const FiniteLattice& dom_p() const { return p_; }
  const std::vector<Element>& f_table() const { return f_; }
  const std::vector<Element>& g_table() const { return g_; }

  Element apply_f(Element o) const;
  Element apply_g(Element p) const;

  MapView f() const { return {o_, p_, f_}; }
  MapView g() const { return {p_, o_, g_}; }

 private:
  FiniteLattice o_;
  FiniteLattice p_;
  std::vector<Element> f_;
  std::vector<Element> g_;
};

EndoFn compose_gf(const MutualPair& mp);
EndoFn compose_fg(const MutualPair& mp);

struct MonotonicityCheck {
  bool holds = true;
  // A pair x <= y whose images are not ordered.
  std::optional<std::pair<Element, Element>> witness;
  explicit operator bool() const { return holds; }
};

MonotonicityCheck is_monotone(const MapView& fn);

/// Which subsets a continuity check quantifies over.
///   BinaryReduction: all nonempty subsets (binary meets/joins suffice).
///   WithEmpty: additionally the empty subset, i.e. top and bottom must be
///     preserved.
///   ExhaustiveCapped: every nonempty subset with at most `cap` members,
///     enumerated explicitly.
struct ContinuityMode {
  enum class Kind { BinaryReduction, WithEmpty, ExhaustiveCapped };
  Kind kind = Kind::BinaryReduction;
  std::size_t cap = 0;

  static ContinuityMode binary() { return {}; }
  static ContinuityMode with_empty() { return {Kind::WithEmpty, 0}; }
  // Throws InputError when cap < 2.
  static ContinuityMode exhaustive(std::size_t cap);
  // "binary", "with-empty" or "capped:N".
  static ContinuityMode parse(const std::string& text);

  bool operator==(const ContinuityMode&) const = default;
};

std::string to_string(const ContinuityMode& mode);

struct ContinuityCheck {
  bool holds = true;
  // Minimal-cardinality, then lexicographically least, failing subset.
  std::optional<ElementSet> witness;
  explicit operator bool() const { return holds; }
};

ContinuityCheck is_meet_continuous(const MapView& fn, ContinuityMode mode);
ContinuityCheck is_join_continuous(const MapView& fn, ContinuityMode mode);

struct PairContinuity {
  ContinuityCheck f_meet, f_join, g_meet, g_join;
  bool holds() const { return f_meet && f_join && g_meet && g_join; }
  explicit operator bool() const { return holds(); }
};

PairContinuity is_continuous_pair(const MutualPair& mp, ContinuityMode mode);

// Calls visit(subset) for every subset of an n-element universe with
// min_size <= |S| <= max_size, by cardinality then lexicographically.
// Stops early when visit returns false; returns false in that case.
template <class Visit>
bool for_each_subset_by_size(std::size_t n, std::size_t min_size,
                             std::size_t max_size, Visit&& visit) {
  max_size = std::min(max_size, n);
  for (std::size_t k = min_size; k <= max_size; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ElementSet s(n);
      for (auto i : idx) s.set(i);
      if (!visit(s)) return false;
      // next combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return true;
}

}  // namespace mucofix

#endif  // MUCOFIX_GENFUN_HPP_
