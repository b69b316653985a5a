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

#ifndef MUCOFIX_DEMOS_HPP_
#define MUCOFIX_DEMOS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mucofix/solvers.hpp"

namespace mucofix {

// ------------------------------------------------- nominal subtyping

struct ClassDecl {
  std::string name;
  bool generic = false;
  std::string super;  // empty only for Object
};

/// Class table with the distinguished classes Object (top) and Null
/// (bottom). Both are added when absent. Construction checks that names are
/// unique, superclasses exist, Object has no superclass and the superclass
/// edges are acyclic. Throws InputError otherwise.
class ClassTable {
 public:
  static constexpr const char* kObject = "Object";
  static constexpr const char* kNull = "Null";

  explicit ClassTable(std::vector<ClassDecl> decls = {});

  std::size_t size() const { return decls_.size(); }
  const ClassDecl& decl(std::size_t c) const { return decls_[c]; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t object() const { return object_; }
  std::size_t null() const { return null_; }

  // Reflexive-transitive superclass reachability.
  bool inherits(std::size_t a, std::size_t b) const { return inherits_[a][b]; }
  // Inheritance plus the Null/Object special cases.
  bool is_subclass(std::size_t a, std::size_t b) const;

 private:
  std::vector<ClassDecl> decls_;
  std::vector<std::vector<bool>> inherits_;
  std::size_t object_ = 0;
  std::size_t null_ = 0;
};

struct GroundType {
  std::size_t cls;
  std::optional<std::size_t> arg;  // interval index, present iff generic
};

struct IntervalType {
  std::size_t lower;  // ground type indices
  std::size_t upper;
};

inline constexpr std::size_t kUniverseCap = 40;

/// Depth-bounded universe. T_0 holds the non-generic classes; I_j pairs
/// every lower and upper bound drawn from T_j; T_{j+1} adds C<i> for each
/// generic C and i in I_j. Holds T_k and I_k. Indices are stable across
/// depths, so every generic argument indexes into `intervals`.
struct Universe {
  std::vector<GroundType> types;
  std::vector<IntervalType> intervals;
  std::vector<std::string> type_names;
  std::vector<std::string> interval_names;

  std::optional<std::size_t> find_type(const std::string& name) const;
  std::optional<std::size_t> find_interval(const std::string& name) const;
};

// Throws CapacityError when T_k exceeds `cap` types.
Universe build_universe(const ClassTable& ct, std::size_t k,
                        std::size_t cap = kUniverseCap);

// A relation over n items as an n*n bitset, pair (a, b) at a*n+b.
struct RelationPair {
  ElementSet subtypes;
  ElementSet containments;
  bool operator==(const RelationPair&) const = default;
};

/// The two relation generators of the mutually recursive definition.
/// F turns a subtype relation into the containment it induces (covariant
/// upper bound, contravariant lower bound); G turns a containment relation
/// into the subtype relation it induces.
class SubtypeGenerators {
 public:
  SubtypeGenerators(const ClassTable& ct, const Universe& u) : ct_(ct), u_(u) {}
  ElementSet f(const ElementSet& subtypes) const;
  ElementSet g(const ElementSet& containments) const;

 private:
  const ClassTable& ct_;
  const Universe& u_;
};

struct SubtypingState {
  Universe universe;
  Direction direction = Direction::Least;
  RelationPair relations;
  std::size_t iterations = 0;
  bool reflexive = false;
  bool transitive = false;

  bool is_subtype(std::size_t t1, std::size_t t2) const;
  bool is_contained(std::size_t i1, std::size_t i2) const;
  // Lookups by printed name; throw InputError outside the universe.
  bool is_subtype(const std::string& t1, const std::string& t2) const;
  bool is_contained(const std::string& i1, const std::string& i2) const;
};

SubtypingState solve_subtyping(const ClassTable& ct, std::size_t k,
                               Direction dir,
                               std::size_t budget = kDefaultBudget);

// Multi-line report: universe sizes, relation sizes, preorder checks and
// every subtype fact.
std::string format_subtyping(const SubtypingState& s);

// ---------------------------------------------------- F/G/H trio

using BigInt = boost::multiprecision::cpp_int;

struct Trio {
  BigInt x, y, z;
  bool operator==(const Trio&) const = default;
};

enum class TrioLabel { F, G, H };

struct TrioResult {
  Trio value;
  std::size_t steps = 0;  // function entries, the initial one included
};

/// Evaluates the three mutually tail-recursive functions
///   F(x,y,z) = G(x+1,y,z)
///   G(x,y,z) = if y<z then F(x,y,z) else H(x,x+y,z)
///   H(x,y,z) = if z>0 then F(x,y,z-x) else (x,y,z)
/// starting at `entry`. Throws StepBudgetExceeded after `budget` entries.
TrioResult paulson_trio(Trio in, TrioLabel entry = TrioLabel::F,
                        std::size_t budget = 1'000'000);

std::string format_trio(const Trio& t);

}  // namespace mucofix

#endif  // MUCOFIX_DEMOS_HPP_
