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

#ifndef MUCOFIX_IO_HPP_
#define MUCOFIX_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mucofix/demos.hpp"
#include "mucofix/genfun.hpp"

namespace mucofix {

// Reads and parses a JSON file. Throws InputError naming the file and the
// parser's line and column on failure.
nlohmann::json read_json_file(const std::string& path);
nlohmann::json parse_json(const std::string& text, const std::string& origin);

// {"elements": [names], "leq": [[lo, hi], ...]} before any order checks.
// Throws InputError on schema violations: unknown keys, unknown names,
// duplicate names, wrong types.
struct LatticeDoc {
  std::vector<std::string> elements;
  std::vector<std::pair<Element, Element>> edges;
};
LatticeDoc parse_lattice_doc(const nlohmann::json& j);

// Reflexive-transitive closure of the edges. May throw NotAPoset.
FinitePoset to_poset(const LatticeDoc& doc);
// May additionally throw NotALattice.
FiniteLattice load_lattice(const nlohmann::json& j);

// {"O": lattice, "P": lattice, "F": {name: name}, "G": {name: name}}.
// F and G must be total.
MutualPair load_pair(const nlohmann::json& j);
bool is_pair_document(const nlohmann::json& j);

// [{"name": ..., "generic": bool, "super": name}, ...]; "generic" defaults
// to false and "super" to Object.
ClassTable load_class_table(const nlohmann::json& j);

}  // namespace mucofix

#endif  // MUCOFIX_IO_HPP_
