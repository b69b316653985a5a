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

#include "mucofix/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mucofix {

std::size_t explicit_cap() {
  if (const char* env = std::getenv("MUCOFIX_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::vector<Element> members(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

// ---------------------------------------------------------------- poset

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::vector<bool>>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (leq.size() != n) throw InputError("order matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw InputError("order matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) {
        throw InputError("duplicate element label '" + labels_[i] + "'");
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    if (!leq[i][i]) {
      throw NotAPoset(NotAPoset::Axiom::Reflexive, i, i, i,
                      "NotAPoset: reflexivity fails at " + labels_[i]);
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (leq[i][j] && leq[j][i]) {
        throw NotAPoset(NotAPoset::Axiom::Antisymmetric, i, j, j,
                        "NotAPoset: antisymmetry fails for " + labels_[i] +
                            " and " + labels_[j]);
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      for (Element k = 0; k < n; ++k) {
        if (leq[j][k] && !leq[i][k]) {
          throw NotAPoset(NotAPoset::Axiom::Transitive, i, j, k,
                          "NotAPoset: transitivity fails for " + labels_[i] +
                              " <= " + labels_[j] + " <= " + labels_[k]);
        }
      }
    }
  }
  up_.assign(n, ElementSet(n));
  down_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq[i][j]) {
        up_[i].set(j);
        down_[j].set(i);
      }
    }
  }
}

FinitePoset FinitePoset::from_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<Element, Element>>& edges) {
  const std::size_t n = labels.size();
  std::vector<ElementSet> reach(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) reach[i].set(i);
  for (auto [lo, hi] : edges) {
    if (lo >= n || hi >= n) throw InputError("edge refers to unknown element");
    reach[lo].set(hi);
  }
  // Warshall over rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i].test(k)) reach[i] |= reach[k];
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = reach[i].test(j);
  }
  return FinitePoset(std::move(labels), leq);
}

void FinitePoset::check_id(Element e) const {
  if (e >= size()) {
    throw InputError("element id " + std::to_string(e) +
                     " out of range (size " + std::to_string(size()) + ")");
  }
}

bool FinitePoset::leq(Element a, Element b) const {
  check_id(a);
  check_id(b);
  return up_[a].test(b);
}

const std::string& FinitePoset::label(Element e) const {
  check_id(e);
  return labels_[e];
}

const ElementSet& FinitePoset::up_set(Element e) const {
  check_id(e);
  return up_[e];
}

const ElementSet& FinitePoset::down_set(Element e) const {
  check_id(e);
  return down_[e];
}

std::optional<Element> FinitePoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

FinitePoset FinitePoset::dual() const {
  FinitePoset d;
  d.labels_ = labels_;
  d.up_ = down_;
  d.down_ = up_;
  return d;
}

// -------------------------------------------------------------- lattice

namespace {

// The unique greatest element of `lower` that is above all of `lower`, if
// one exists: the glb when `lower` is the set of common lower bounds.
std::optional<Element> greatest_of(const ElementSet& lower,
                                   const std::vector<ElementSet>& down) {
  for (auto g = lower.find_first(); g != ElementSet::npos;
       g = lower.find_next(g)) {
    if (lower.is_subset_of(down[g])) return static_cast<Element>(g);
  }
  return std::nullopt;
}

}  // namespace

std::variant<FiniteLattice, LatticeDiagnostic> check_lattice(
    const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) {
    return LatticeDiagnostic{LatticeDiagnostic::Kind::Empty, 0, 0,
                             "NotALattice: the empty poset has no top"};
  }
  if (n > explicit_cap()) {
    throw CapacityError("poset of size " + std::to_string(n) +
                        " exceeds explicit cap " +
                        std::to_string(explicit_cap()));
  }
  std::vector<ElementSet> up(n), down(n);
  for (Element i = 0; i < n; ++i) {
    up[i] = p.up_set(i);
    down[i] = p.down_set(i);
  }
  std::vector<Element> meet(n * n), join(n * n);
  for (Element i = 0; i < n; ++i) {
    meet[i * n + i] = i;
    join[i * n + i] = i;
    for (Element j = i + 1; j < n; ++j) {
      auto lub = greatest_of(up[i] & up[j], up);
      if (!lub) {
        return LatticeDiagnostic{
            LatticeDiagnostic::Kind::NoLub, i, j,
            "NotALattice: {" + p.label(i) + "," + p.label(j) + "} lacks lub"};
      }
      auto glb = greatest_of(down[i] & down[j], down);
      if (!glb) {
        return LatticeDiagnostic{
            LatticeDiagnostic::Kind::NoGlb, i, j,
            "NotALattice: {" + p.label(i) + "," + p.label(j) + "} lacks glb"};
      }
      meet[i * n + j] = meet[j * n + i] = *glb;
      join[i * n + j] = join[j * n + i] = *lub;
    }
  }
  Element bottom = 0, top = 0;
  for (Element i = 1; i < n; ++i) {
    bottom = meet[bottom * n + i];
    top = join[top * n + i];
  }
  return FiniteLattice(p, std::move(meet), std::move(join), bottom, top);
}

FiniteLattice validate_lattice(const FinitePoset& p) {
  auto r = check_lattice(p);
  if (auto* d = std::get_if<LatticeDiagnostic>(&r)) throw NotALattice(*d);
  return std::get<FiniteLattice>(std::move(r));
}

Element FiniteLattice::meet(Element a, Element b) const {
  const auto n = size();
  if (a >= n || b >= n) poset_.leq(a, b);  // throws
  return meet_[a * n + b];
}

Element FiniteLattice::join(Element a, Element b) const {
  const auto n = size();
  if (a >= n || b >= n) poset_.leq(a, b);
  return join_[a * n + b];
}

void FiniteLattice::check_set(const ElementSet& s) const {
  if (s.size() != size()) {
    throw InputError("subset handle of size " + std::to_string(s.size()) +
                     " used with lattice of size " + std::to_string(size()));
  }
}

Element FiniteLattice::meet_set(const ElementSet& s) const {
  check_set(s);
  Element acc = top_;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    acc = meet_[acc * size() + i];
  }
  return acc;
}

Element FiniteLattice::join_set(const ElementSet& s) const {
  check_set(s);
  Element acc = bottom_;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    acc = join_[acc * size() + i];
  }
  return acc;
}

ElementSet FiniteLattice::full_set() const {
  ElementSet s(size());
  s.set();
  return s;
}

ElementSet FiniteLattice::make_set(std::initializer_list<Element> elems) const {
  ElementSet s(size());
  for (Element e : elems) {
    if (e >= size()) poset_.leq(e, e);
    s.set(e);
  }
  return s;
}

FiniteLattice FiniteLattice::dual() const {
  return FiniteLattice(poset_.dual(), join_, meet_, top_, bottom_);
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > explicit_cap()) {
    throw CapacityError("product of sizes " + std::to_string(na) + " and " +
                        std::to_string(nb) + " exceeds explicit cap " +
                        std::to_string(explicit_cap()));
  }
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<Element> meet(n * n), join(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = x / nb, xb = x % nb;
    labels[x] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (Element y = 0; y < n; ++y) {
      const Element ya = y / nb, yb = y % nb;
      leq[x][y] = a.leq(xa, ya) && b.leq(xb, yb);
      meet[x * n + y] = a.meet(xa, ya) * nb + b.meet(xb, yb);
      join[x * n + y] = a.join(xa, ya) * nb + b.join(xb, yb);
    }
  }
  // Pair labels may collide when component labels contain separators.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) labels[i] += "#" + std::to_string(i);
    }
  }
  return FiniteLattice(FinitePoset(std::move(labels), leq), std::move(meet),
                       std::move(join), a.bottom() * nb + b.bottom(),
                       a.top() * nb + b.top());
}

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw InputError("a chain needs at least one element");
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return validate_lattice(FinitePoset::from_edges(std::move(labels), edges));
}

FiniteLattice powerset_lattice(unsigned n) {
  if (n > kExplicitPowersetCap) {
    throw CapacityError("explicit powerset lattices are limited to " +
                        std::to_string(kExplicitPowersetCap) +
                        " ground elements");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels(size);
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
  for (std::size_t m = 0; m < size; ++m) {
    std::string l = "{";
    for (unsigned b = 0; b < n; ++b) {
      if (m & (1u << b)) {
        if (l.size() > 1) l += ",";
        l += std::to_string(b);
      }
    }
    labels[m] = l + "}";
    for (std::size_t k = 0; k < size; ++k) leq[m][k] = (m & ~k) == 0;
  }
  return validate_lattice(FinitePoset(std::move(labels), leq));
}

bool is_complete_sublattice(const FiniteLattice& lat, const ElementSet& s) {
  if (s.size() != lat.size()) throw InputError("subset size mismatch");
  if (s.none()) return false;
  const auto elems = members(s);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!s.test(lat.meet(elems[i], elems[j])) ||
          !s.test(lat.join(elems[i], elems[j]))) {
        return false;
      }
    }
  }
  return true;
}

bool is_complete_sublattice_exhaustive(const FiniteLattice& lat,
                                       const ElementSet& s) {
  if (s.size() != lat.size()) throw InputError("subset size mismatch");
  if (s.none()) return false;
  const auto elems = members(s);
  if (elems.size() > 20) {
    throw CapacityError("exhaustive sublattice check limited to 20 members");
  }
  const std::uint64_t limit = std::uint64_t{1} << elems.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ElementSet sub(lat.size());
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) sub.set(elems[b]);
    }
    if (!s.test(lat.meet_set(sub)) || !s.test(lat.join_set(sub))) return false;
  }
  return true;
}

namespace {

bool extend_iso(const FiniteLattice& a, const FiniteLattice& b,
                std::vector<Element>& map, std::vector<bool>& used,
                Element next) {
  if (next == a.size()) return true;
  for (Element cand = 0; cand < b.size(); ++cand) {
    if (used[cand]) continue;
    if (a.poset().up_set(next).count() != b.poset().up_set(cand).count() ||
        a.poset().down_set(next).count() != b.poset().down_set(cand).count()) {
      continue;
    }
    bool ok = true;
    for (Element prev = 0; prev < next && ok; ++prev) {
      ok = a.leq(prev, next) == b.leq(map[prev], cand) &&
           a.leq(next, prev) == b.leq(cand, map[prev]);
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Element> map(a.size());
  std::vector<bool> used(b.size());
  if (extend_iso(a, b, map, used, 0)) return map;
  return std::nullopt;
}

namespace {

std::vector<std::pair<Element, Element>> covers(const FiniteLattice& lat) {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(lat.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !lat.leq(x, y)) continue;
      bool direct = true;
      for (Element z = 0; z < n && direct; ++z) {
        direct = z == x || z == y || !(lat.leq(x, z) && lat.leq(z, y));
      }
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

std::string describe(const FiniteLattice& lat) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& l : lat.poset().labels()) os << ' ' << l;
  os << "\nbottom: " << lat.label(lat.bottom()) << "\ntop: "
     << lat.label(lat.top()) << '\n';
  for (auto [x, y] : covers(lat)) {
    os << lat.label(x) << " < " << lat.label(y) << '\n';
  }
  return os.str();
}

std::string serialize(const FiniteLattice& lat) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (i) os << ' ';
    os << lat.label(static_cast<Element>(i));
  }
  os << '|';
  bool first = true;
  for (auto [x, y] : covers(lat)) {
    if (!first) os << ' ';
    first = false;
    os << x << '<' << y;
  }
  os << '}';
  return os.str();
}

std::string format_set(const FiniteLattice& lat, const ElementSet& s) {
  std::string out = "{";
  for (Element e : members(s)) {
    if (out.size() > 1) out += ",";
    out += lat.label(e);
  }
  return out + "}";
}

namespace fixtures {

namespace {

FiniteLattice build(std::vector<std::string> labels,
                    std::vector<std::pair<Element, Element>> edges) {
  return validate_lattice(FinitePoset::from_edges(std::move(labels), edges));
}

}  // namespace

FiniteLattice c2() { return chain(2); }
FiniteLattice c3() { return chain(3); }
FiniteLattice c4() { return chain(4); }

FiniteLattice diamond() {
  return build({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FiniteLattice m3() {
  return build({"bot", "a", "b", "c", "top"},
               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice n5() {
  return build({"bot", "a", "b", "c", "top"},
               {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

std::vector<Named> corpus() {
  std::vector<Named> out;
  out.push_back({"C1", chain(1)});
  out.push_back({"C2", c2()});
  out.push_back({"C3", c3()});
  out.push_back({"C4", c4()});
  out.push_back({"D4", diamond()});
  out.push_back({"M3", m3()});
  out.push_back({"N5", n5()});
  for (unsigned n = 1; n <= 4; ++n) {
    out.push_back({"P" + std::to_string(n), powerset_lattice(n)});
  }
  out.push_back({"C2xC3", product(c2(), c3())});
  out.push_back({"C3xC2", product(c3(), c2())});
  out.push_back({"C2xD4", product(c2(), diamond())});
  out.push_back({"C2xN5", product(c2(), n5())});
  out.push_back({"M3xC2", product(m3(), c2())});
  return out;
}

}  // namespace fixtures

}  // namespace mucofix
