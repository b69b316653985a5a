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

#ifndef MUCOFIX_LATTICE_HPP_
#define MUCOFIX_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mucofix/errors.hpp"

namespace mucofix {

// Dense element id inside one finite poset.
using Element = std::uint32_t;

// Subset of a poset's elements, one bit per element id.
using ElementSet = boost::dynamic_bitset<>;

// Explicit-table lattices larger than this are rejected. Defaults to 4096;
// the MUCOFIX_CAP environment variable overrides it.
std::size_t explicit_cap();

std::vector<Element> members(const ElementSet& s);

class NotAPoset : public InputError {
 public:
  enum class Axiom { Reflexive, Antisymmetric, Transitive };

  NotAPoset(Axiom axiom, Element i, Element j, Element k, std::string message)
      : InputError(std::move(message)), axiom_(axiom), i_(i), j_(j), k_(k) {}

  Axiom axiom() const { return axiom_; }
  // Witness triple; unused slots repeat the last relevant element.
  Element i() const { return i_; }
  Element j() const { return j_; }
  Element k() const { return k_; }

 private:
  Axiom axiom_;
  Element i_, j_, k_;
};

// Why a poset failed to be a lattice. `a`/`b` name the lowest-indexed pair
// lacking the bound; an empty poset reports kind Empty.
struct LatticeDiagnostic {
  enum class Kind { Empty, NoLub, NoGlb };
  Kind kind;
  Element a = 0;
  Element b = 0;
  std::string message;
};

class NotALattice : public InputError {
 public:
  explicit NotALattice(LatticeDiagnostic d)
      : InputError(d.message), diagnostic_(std::move(d)) {}
  const LatticeDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  LatticeDiagnostic diagnostic_;
};

/// A finite partial order over dense ids with per-element up-set and
/// down-set bitsets. Construction verifies reflexivity, antisymmetry and
/// transitivity and throws NotAPoset naming the lowest failing witness.
class FinitePoset {
 public:
  // leq[i][j] means element i <= element j.
  FinitePoset(std::vector<std::string> labels,
              const std::vector<std::vector<bool>>& leq);

  // Builds the reflexive-transitive closure of the given (lower, upper)
  // edges before verification; only antisymmetry can then fail.
  static FinitePoset from_edges(
      std::vector<std::string> labels,
      const std::vector<std::pair<Element, Element>>& edges);

  std::size_t size() const { return labels_.size(); }
  bool leq(Element a, Element b) const;
  const std::string& label(Element e) const;
  const std::vector<std::string>& labels() const { return labels_; }
  // Element ids with e <= x, resp. x <= e.
  const ElementSet& up_set(Element e) const;
  const ElementSet& down_set(Element e) const;
  std::optional<Element> find(const std::string& label) const;

  FinitePoset dual() const;

  bool operator==(const FinitePoset& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

 private:
  FinitePoset() = default;
  void check_id(Element e) const;

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// A finite (hence complete) lattice with precomputed binary meet/join
/// tables. Immutable after construction; obtain one from validate_lattice or
/// the constructions below.
class FiniteLattice {
 public:
  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(Element e) const { return poset_.label(e); }
  std::optional<Element> find(const std::string& label) const {
    return poset_.find(label);
  }

  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  // glb / lub of an arbitrary subset; meet_set(empty) is top and
  // join_set(empty) is bottom.
  Element meet_set(const ElementSet& s) const;
  Element join_set(const ElementSet& s) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const;
  ElementSet make_set(std::initializer_list<Element> elems) const;

  // Same elements with the order reversed (meets and joins swap).
  FiniteLattice dual() const;

  bool operator==(const FiniteLattice& other) const {
    return poset_ == other.poset_;
  }

 private:
  friend std::variant<FiniteLattice, LatticeDiagnostic> check_lattice(
      const FinitePoset& p);
  friend FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

  FiniteLattice(FinitePoset p, std::vector<Element> meet,
                std::vector<Element> join, Element bottom, Element top)
      : poset_(std::move(p)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        bottom_(bottom),
        top_(top) {}

  void check_set(const ElementSet& s) const;

  FinitePoset poset_;
  std::vector<Element> meet_;  // row-major size x size
  std::vector<Element> join_;
  Element bottom_;
  Element top_;
};

// Fills meet/join tables iff every pair has a glb and a lub.
std::variant<FiniteLattice, LatticeDiagnostic> check_lattice(
    const FinitePoset& p);

// As check_lattice, but throws NotALattice on failure.
FiniteLattice validate_lattice(const FinitePoset& p);

// Component-wise product; element (i, j) gets id i * |b| + j and label
// "(la,lb)". Throws CapacityError beyond explicit_cap().
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

FiniteLattice chain(std::size_t n);

// Subsets of an n-element ground set under inclusion. Element id is the
// subset's bitmask. Explicit tables are limited to n <= 5.
FiniteLattice powerset_lattice(unsigned n);
inline constexpr unsigned kExplicitPowersetCap = 5;

// True iff s is nonempty and closed under binary meets and joins of the
// parent (which for finite s gives closure under meets and joins of all
// nonempty subsets).
bool is_complete_sublattice(const FiniteLattice& lat, const ElementSet& s);

// Same question answered by enumerating every nonempty subset of s; used as
// an independent cross-check. Throws CapacityError when |s| > 20.
bool is_complete_sublattice_exhaustive(const FiniteLattice& lat,
                                       const ElementSet& s);

// Order isomorphism test by backtracking; returns the mapping a -> b.
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b);

// Plain-text adjacency dump: one "x < y" line per covering pair.
std::string describe(const FiniteLattice& lat);

// Compact one-line form "{labels|covers}" used in reports.
std::string serialize(const FiniteLattice& lat);

std::string format_set(const FiniteLattice& lat, const ElementSet& s);

namespace fixtures {

FiniteLattice c2();
FiniteLattice c3();
FiniteLattice c4();
// bot < a, b < top with a, b incomparable.
FiniteLattice diamond();
// bot < a, b, c < top: the non-distributive five element lattice.
FiniteLattice m3();
// bot < a < b < top, bot < c < top: the non-modular five element lattice.
FiniteLattice n5();

struct Named {
  std::string name;
  FiniteLattice lattice;
};

// Chains, diamond, M3, N5, powersets 1..4 and a few products.
std::vector<Named> corpus();

}  // namespace fixtures

}  // namespace mucofix

#endif  // MUCOFIX_LATTICE_HPP_
