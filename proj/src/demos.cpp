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

#include "mucofix/demos.hpp"

#include <sstream>

namespace mucofix {

ClassTable::ClassTable(std::vector<ClassDecl> decls) {
  auto has = [&](const char* n) {
    for (const auto& d : decls) {
      if (d.name == n) return true;
    }
    return false;
  };
  if (!has(kObject)) decls.insert(decls.begin(), {kObject, false, ""});
  if (!has(kNull)) decls.push_back({kNull, false, kObject});
  decls_ = std::move(decls);

  std::map<std::string, std::size_t> index;
  for (std::size_t c = 0; c < decls_.size(); ++c) {
    if (decls_[c].name.empty()) throw InputError("class with empty name");
    if (!index.emplace(decls_[c].name, c).second) {
      throw InputError("duplicate class '" + decls_[c].name + "'");
    }
  }
  object_ = index.at(kObject);
  null_ = index.at(kNull);
  if (!decls_[object_].super.empty()) {
    throw InputError("Object must not have a superclass");
  }
  if (decls_[null_].super.empty()) decls_[null_].super = kObject;
  if (decls_[object_].generic || decls_[null_].generic) {
    throw InputError("Object and Null cannot be generic");
  }

  const std::size_t n = decls_.size();
  std::vector<std::size_t> parent(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == object_) continue;
    const auto& s = decls_[c].super;
    if (s.empty()) {
      throw InputError("class '" + decls_[c].name + "' has no superclass");
    }
    auto it = index.find(s);
    if (it == index.end()) {
      throw InputError("class '" + decls_[c].name + "' extends unknown '" + s +
                       "'");
    }
    parent[c] = it->second;
  }
  inherits_.assign(n, std::vector<bool>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t cur = c;
    for (std::size_t steps = 0; cur != n; ++steps) {
      if (steps > n) {
        throw InputError("superclass cycle through '" + decls_[c].name + "'");
      }
      inherits_[c][cur] = true;
      cur = parent[cur];
    }
  }
}

std::optional<std::size_t> ClassTable::find(const std::string& name) const {
  for (std::size_t c = 0; c < decls_.size(); ++c) {
    if (decls_[c].name == name) return c;
  }
  return std::nullopt;
}

bool ClassTable::is_subclass(std::size_t a, std::size_t b) const {
  return a == null_ || b == object_ || inherits(a, b);
}

std::optional<std::size_t> Universe::find_type(const std::string& name) const {
  for (std::size_t t = 0; t < type_names.size(); ++t) {
    if (type_names[t] == name) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> Universe::find_interval(
    const std::string& name) const {
  for (std::size_t i = 0; i < interval_names.size(); ++i) {
    if (interval_names[i] == name) return i;
  }
  return std::nullopt;
}

Universe build_universe(const ClassTable& ct, std::size_t k, std::size_t cap) {
  Universe u;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> type_index;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> interval_index;
  constexpr std::size_t kNoArg = static_cast<std::size_t>(-1);

  auto add_type = [&](std::size_t cls, std::optional<std::size_t> arg) {
    const auto key = std::make_pair(cls, arg.value_or(kNoArg));
    if (type_index.count(key)) return;
    if (u.types.size() == cap) {
      throw CapacityError("type universe exceeds cap of " +
                          std::to_string(cap) + " types");
    }
    type_index.emplace(key, u.types.size());
    u.types.push_back({cls, arg});
    std::string name = ct.decl(cls).name;
    if (arg) name += "<" + u.interval_names[*arg] + ">";
    u.type_names.push_back(std::move(name));
  };
  auto add_intervals = [&] {
    const std::size_t nt = u.types.size();
    for (std::size_t lo = 0; lo < nt; ++lo) {
      for (std::size_t hi = 0; hi < nt; ++hi) {
        if (!interval_index.emplace(std::make_pair(lo, hi), u.intervals.size())
                 .second) {
          continue;
        }
        u.intervals.push_back({lo, hi});
        u.interval_names.push_back("[" + u.type_names[lo] + "," +
                                   u.type_names[hi] + "]");
      }
    }
  };

  for (std::size_t c = 0; c < ct.size(); ++c) {
    if (!ct.decl(c).generic) add_type(c, std::nullopt);
  }
  add_intervals();
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t ni = u.intervals.size();
    for (std::size_t c = 0; c < ct.size(); ++c) {
      if (!ct.decl(c).generic) continue;
      for (std::size_t i = 0; i < ni; ++i) add_type(c, i);
    }
    add_intervals();
  }
  return u;
}

ElementSet SubtypeGenerators::f(const ElementSet& s) const {
  const std::size_t nt = u_.types.size(), ni = u_.intervals.size();
  ElementSet out(ni * ni);
  for (std::size_t a = 0; a < ni; ++a) {
    const auto& i1 = u_.intervals[a];
    for (std::size_t b = 0; b < ni; ++b) {
      const auto& i2 = u_.intervals[b];
      if (s.test(i1.upper * nt + i2.upper) && s.test(i2.lower * nt + i1.lower)) {
        out.set(a * ni + b);
      }
    }
  }
  return out;
}

ElementSet SubtypeGenerators::g(const ElementSet& r) const {
  const std::size_t nt = u_.types.size(), ni = u_.intervals.size();
  ElementSet out(nt * nt);
  for (std::size_t a = 0; a < nt; ++a) {
    const auto& t1 = u_.types[a];
    for (std::size_t b = 0; b < nt; ++b) {
      const auto& t2 = u_.types[b];
      bool rel;
      if (t1.cls == ct_.null() || t2.cls == ct_.object()) {
        rel = true;
      } else if (!t1.arg && !t2.arg) {
        rel = ct_.is_subclass(t1.cls, t2.cls);
      } else if (t1.arg && t2.arg) {
        rel = ct_.is_subclass(t1.cls, t2.cls) && r.test(*t1.arg * ni + *t2.arg);
      } else {
        rel = false;  // mixed arity: only the special cases above apply
      }
      if (rel) out.set(a * nt + b);
    }
  }
  return out;
}

namespace {

bool relation_reflexive(const ElementSet& rel, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel.test(a * n + a)) return false;
  }
  return true;
}

bool relation_transitive(const ElementSet& rel, std::size_t n) {
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rel.test(a * n + b)) rows[a].set(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a].test(b) && !rows[b].is_subset_of(rows[a])) return false;
    }
  }
  return true;
}

std::size_t type_id(const Universe& u, const std::string& name) {
  if (auto t = u.find_type(name)) return *t;
  throw InputError("type '" + name + "' is outside the universe");
}

std::size_t interval_id(const Universe& u, const std::string& name) {
  if (auto i = u.find_interval(name)) return *i;
  throw InputError("interval '" + name + "' is outside the universe");
}

}  // namespace

bool SubtypingState::is_subtype(std::size_t t1, std::size_t t2) const {
  const std::size_t nt = universe.types.size();
  if (t1 >= nt || t2 >= nt) throw InputError("type index outside the universe");
  return relations.subtypes.test(t1 * nt + t2);
}

bool SubtypingState::is_contained(std::size_t i1, std::size_t i2) const {
  const std::size_t ni = universe.intervals.size();
  if (i1 >= ni || i2 >= ni) {
    throw InputError("interval index outside the universe");
  }
  return relations.containments.test(i1 * ni + i2);
}

bool SubtypingState::is_subtype(const std::string& t1,
                                const std::string& t2) const {
  return is_subtype(type_id(universe, t1), type_id(universe, t2));
}

bool SubtypingState::is_contained(const std::string& i1,
                                  const std::string& i2) const {
  return is_contained(interval_id(universe, i1), interval_id(universe, i2));
}

SubtypingState solve_subtyping(const ClassTable& ct, std::size_t k,
                               Direction dir, std::size_t budget) {
  SubtypingState st;
  st.universe = build_universe(ct, k);
  st.direction = dir;
  const std::size_t nt = st.universe.types.size();
  const std::size_t ni = st.universe.intervals.size();
  const SubtypeGenerators gen(ct, st.universe);

  auto full = [](std::size_t n) {
    ElementSet s(n);
    s.set();
    return s;
  };
  ImplicitLattice<RelationPair> il{
      [&] { return RelationPair{ElementSet(nt * nt), ElementSet(ni * ni)}; },
      [&] { return RelationPair{full(nt * nt), full(ni * ni)}; },
      [](const RelationPair& a, const RelationPair& b) {
        return RelationPair{a.subtypes & b.subtypes,
                            a.containments & b.containments};
      },
      [](const RelationPair& a, const RelationPair& b) {
        return RelationPair{a.subtypes | b.subtypes,
                            a.containments | b.containments};
      },
      [](const RelationPair& a, const RelationPair& b) { return a == b; },
      [](const RelationPair& a) {
        return "|S|=" + std::to_string(a.subtypes.count()) +
               " |R|=" + std::to_string(a.containments.count());
      },
  };
  auto step = [&](const RelationPair& x) {
    return RelationPair{gen.g(x.containments), gen.f(x.subtypes)};
  };
  auto res = kleene_implicit<RelationPair>(il, step, dir, budget);
  st.relations = std::move(res.limit);
  st.iterations = res.iterations;
  st.reflexive = relation_reflexive(st.relations.subtypes, nt) &&
                 relation_reflexive(st.relations.containments, ni);
  st.transitive = relation_transitive(st.relations.subtypes, nt) &&
                  relation_transitive(st.relations.containments, ni);
  return st;
}

std::string format_subtyping(const SubtypingState& s) {
  const auto& u = s.universe;
  const std::size_t nt = u.types.size();
  std::ostringstream os;
  os << "direction: " << (s.direction == Direction::Least ? "lfp" : "gfp")
     << '\n'
     << "types: " << nt << '\n'
     << "intervals: " << u.intervals.size() << '\n'
     << "subtype pairs: " << s.relations.subtypes.count() << '\n'
     << "containment pairs: " << s.relations.containments.count() << '\n'
     << "iterations: " << s.iterations << '\n'
     << "reflexive: " << (s.reflexive ? "yes" : "no") << '\n'
     << "transitive: " << (s.transitive ? "yes" : "no") << '\n'
     << "mixed arity: related only through Null and Object\n";
  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = 0; b < nt; ++b) {
      if (s.relations.subtypes.test(a * nt + b)) {
        os << u.type_names[a] << " <: " << u.type_names[b] << '\n';
      }
    }
  }
  return os.str();
}

TrioResult paulson_trio(Trio in, TrioLabel entry, std::size_t budget) {
  TrioResult r;
  Trio& v = in;
  TrioLabel at = entry;
  while (true) {
    if (r.steps == budget) throw StepBudgetExceeded(budget);
    ++r.steps;
    switch (at) {
      case TrioLabel::F:
        v.x += 1;
        at = TrioLabel::G;
        break;
      case TrioLabel::G:
        if (v.y < v.z) {
          at = TrioLabel::F;
        } else {
          v.y = v.x + v.y;
          at = TrioLabel::H;
        }
        break;
      case TrioLabel::H:
        if (v.z > 0) {
          v.z -= v.x;
          at = TrioLabel::F;
        } else {
          r.value = std::move(v);
          return r;
        }
        break;
    }
  }
}

std::string format_trio(const Trio& t) {
  return "(" + t.x.str() + "," + t.y.str() + "," + t.z.str() + ")";
}

}  // namespace mucofix
