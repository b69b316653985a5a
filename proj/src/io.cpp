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

#include "mucofix/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mucofix {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace {

void only_keys(const json& j, std::initializer_list<const char*> keys,
               const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw InputError(what + ": unknown key '" + k + "'");
  }
  for (const char* key : keys) {
    if (!j.contains(key)) throw InputError(what + ": missing key '" + key + "'");
  }
}

std::string as_name(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

Element lookup(const FiniteLattice& lat, const std::string& name,
               const std::string& what) {
  if (auto e = lat.find(name)) return *e;
  throw InputError(what + ": unknown element '" + name + "'");
}

std::vector<Element> load_map(const json& j, const FiniteLattice& from,
                              const FiniteLattice& to,
                              const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be an object");
  std::vector<Element> table(from.size());
  std::vector<bool> seen(from.size());
  for (const auto& [k, v] : j.items()) {
    const Element x = lookup(from, k, what);
    table[x] = lookup(to, as_name(v, what + " image"), what);
    seen[x] = true;
  }
  for (Element x = 0; x < from.size(); ++x) {
    if (!seen[x]) {
      throw InputError(what + " is not total: no image for '" + from.label(x) +
                       "'");
    }
  }
  return table;
}

}  // namespace

LatticeDoc parse_lattice_doc(const json& j) {
  only_keys(j, {"elements", "leq"}, "lattice");
  if (!j["elements"].is_array()) {
    throw InputError("lattice: 'elements' must be an array");
  }
  if (!j["leq"].is_array()) throw InputError("lattice: 'leq' must be an array");
  LatticeDoc doc;
  std::map<std::string, Element> index;
  for (const auto& e : j["elements"]) {
    auto name = as_name(e, "lattice element");
    if (!index.emplace(name, static_cast<Element>(doc.elements.size())).second) {
      throw InputError("lattice: duplicate element '" + name + "'");
    }
    doc.elements.push_back(std::move(name));
  }
  std::set<std::pair<Element, Element>> seen;
  for (const auto& edge : j["leq"]) {
    if (!edge.is_array() || edge.size() != 2) {
      throw InputError("lattice: each 'leq' entry must be a [lo, hi] pair");
    }
    Element ends[2];
    for (int side = 0; side < 2; ++side) {
      auto name = as_name(edge[side], "lattice leq endpoint");
      auto it = index.find(name);
      if (it == index.end()) {
        throw InputError("lattice: unknown element '" + name + "' in leq");
      }
      ends[side] = it->second;
    }
    if (seen.emplace(ends[0], ends[1]).second) {
      doc.edges.emplace_back(ends[0], ends[1]);
    }
  }
  return doc;
}

FinitePoset to_poset(const LatticeDoc& doc) {
  return FinitePoset::from_edges(doc.elements, doc.edges);
}

FiniteLattice load_lattice(const json& j) {
  return validate_lattice(to_poset(parse_lattice_doc(j)));
}

bool is_pair_document(const json& j) {
  return j.is_object() && (j.contains("O") || j.contains("F"));
}

MutualPair load_pair(const json& j) {
  only_keys(j, {"O", "P", "F", "G"}, "pair");
  FiniteLattice o = load_lattice(j["O"]);
  FiniteLattice p = load_lattice(j["P"]);
  auto f = load_map(j["F"], o, p, "F");
  auto g = load_map(j["G"], p, o, "G");
  return MutualPair(std::move(o), std::move(p), std::move(f), std::move(g));
}

ClassTable load_class_table(const json& j) {
  if (!j.is_array()) throw InputError("class table must be an array");
  std::vector<ClassDecl> decls;
  for (const auto& rec : j) {
    if (!rec.is_object()) throw InputError("class record must be an object");
    for (const auto& [k, v] : rec.items()) {
      if (k != "name" && k != "generic" && k != "super") {
        throw InputError("class record: unknown key '" + k + "'");
      }
    }
    if (!rec.contains("name")) throw InputError("class record: missing name");
    ClassDecl d;
    d.name = as_name(rec["name"], "class name");
    if (rec.contains("generic")) {
      if (!rec["generic"].is_boolean()) {
        throw InputError("class record: 'generic' must be a boolean");
      }
      d.generic = rec["generic"].get<bool>();
    }
    if (rec.contains("super")) {
      d.super = rec["super"].is_null() ? ""
                                       : as_name(rec["super"], "superclass");
    } else if (d.name != ClassTable::kObject) {
      d.super = ClassTable::kObject;
    }
    decls.push_back(std::move(d));
  }
  return ClassTable(std::move(decls));
}

}  // namespace mucofix
