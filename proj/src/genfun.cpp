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

#include "mucofix/genfun.hpp"

namespace mucofix {

namespace {

void check_table(const FiniteLattice& from, const FiniteLattice& to,
                 const std::vector<Element>& table, const char* name) {
  if (table.size() != from.size()) {
    throw InputError(std::string(name) + " table has " +
                     std::to_string(table.size()) + " entries, domain has " +
                     std::to_string(from.size()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= to.size()) {
      throw InputError(std::string(name) + " maps " +
                       from.label(static_cast<Element>(i)) +
                       " outside its codomain");
    }
  }
}

}  // namespace

EndoFn::EndoFn(FiniteLattice dom, std::vector<Element> table)
    : dom_(std::move(dom)), table_(std::move(table)) {
  check_table(dom_, dom_, table_, "endofunction");
}

EndoFn EndoFn::identity(FiniteLattice dom) {
  std::vector<Element> t(dom.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<Element>(i);
  return EndoFn(std::move(dom), std::move(t));
}

Element EndoFn::operator()(Element x) const {
  if (x >= table_.size()) throw InputError("element id out of range");
  return table_[x];
}

MutualPair::MutualPair(FiniteLattice o, FiniteLattice p,
                       std::vector<Element> f, std::vector<Element> g)
    : o_(std::move(o)), p_(std::move(p)), f_(std::move(f)), g_(std::move(g)) {
  check_table(o_, p_, f_, "F");
  check_table(p_, o_, g_, "G");
}

Element MutualPair::apply_f(Element o) const {
  if (o >= f_.size()) throw InputError("F applied to out-of-range element");
  return f_[o];
}

Element MutualPair::apply_g(Element p) const {
  if (p >= g_.size()) throw InputError("G applied to out-of-range element");
  return g_[p];
}

EndoFn compose_gf(const MutualPair& mp) {
  std::vector<Element> t(mp.dom_o().size());
  for (Element o = 0; o < t.size(); ++o) t[o] = mp.apply_g(mp.apply_f(o));
  return EndoFn(mp.dom_o(), std::move(t));
}

EndoFn compose_fg(const MutualPair& mp) {
  std::vector<Element> t(mp.dom_p().size());
  for (Element p = 0; p < t.size(); ++p) t[p] = mp.apply_f(mp.apply_g(p));
  return EndoFn(mp.dom_p(), std::move(t));
}

MonotonicityCheck is_monotone(const MapView& fn) {
  const auto n = static_cast<Element>(fn.from.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y && fn.from.leq(x, y) && !fn.to.leq(fn(x), fn(y))) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {};
}

ContinuityMode ContinuityMode::exhaustive(std::size_t cap) {
  if (cap < 2) throw InputError("capped continuity mode needs cap >= 2");
  return {Kind::ExhaustiveCapped, cap};
}

ContinuityMode ContinuityMode::parse(const std::string& text) {
  if (text == "binary") return binary();
  if (text == "with-empty") return with_empty();
  const std::string prefix = "capped:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string num = text.substr(prefix.size());
    if (num.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad continuity cap in '" + text + "'");
    }
    return exhaustive(std::stoull(num));
  }
  throw InputError("unknown continuity mode '" + text + "'");
}

std::string to_string(const ContinuityMode& mode) {
  switch (mode.kind) {
    case ContinuityMode::Kind::BinaryReduction:
      return "binary";
    case ContinuityMode::Kind::WithEmpty:
      return "with-empty";
    case ContinuityMode::Kind::ExhaustiveCapped:
      return "capped:" + std::to_string(mode.cap);
  }
  return "?";
}

namespace {

// Shared driver: `preserves(s)` decides the equation for one subset.
template <class Preserves>
ContinuityCheck check_continuity(const MapView& fn, ContinuityMode mode,
                                 Preserves&& preserves) {
  const std::size_t n = fn.from.size();
  ContinuityCheck out;
  auto visit = [&](const ElementSet& s) {
    if (preserves(s)) return true;
    out.holds = false;
    out.witness = s;
    return false;
  };
  switch (mode.kind) {
    case ContinuityMode::Kind::WithEmpty:
      if (!visit(ElementSet(n))) return out;
      [[fallthrough]];
    case ContinuityMode::Kind::BinaryReduction:
      // Singletons always hold; the pairs decide every nonempty subset.
      for_each_subset_by_size(n, 2, 2, visit);
      return out;
    case ContinuityMode::Kind::ExhaustiveCapped:
      for_each_subset_by_size(n, 1, mode.cap, visit);
      return out;
  }
  return out;
}

ElementSet image(const MapView& fn, const ElementSet& s) {
  ElementSet img(fn.to.size());
  for (Element e : members(s)) img.set(fn(e));
  return img;
}

}  // namespace

ContinuityCheck is_meet_continuous(const MapView& fn, ContinuityMode mode) {
  return check_continuity(fn, mode, [&](const ElementSet& s) {
    return fn(fn.from.meet_set(s)) == fn.to.meet_set(image(fn, s));
  });
}

ContinuityCheck is_join_continuous(const MapView& fn, ContinuityMode mode) {
  return check_continuity(fn, mode, [&](const ElementSet& s) {
    return fn(fn.from.join_set(s)) == fn.to.join_set(image(fn, s));
  });
}

PairContinuity is_continuous_pair(const MutualPair& mp, ContinuityMode mode) {
  return {is_meet_continuous(mp.f(), mode), is_join_continuous(mp.f(), mode),
          is_meet_continuous(mp.g(), mode), is_join_continuous(mp.g(), mode)};
}

}  // namespace mucofix
