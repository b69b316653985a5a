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

#include "mucofix/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mucofix {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Chains:
      return "chains";
    case Family::Powersets:
      return "powersets";
    case Family::Products:
      return "products";
    case Family::RandomClosed:
      return "random-closed";
    case Family::Corpus:
      return "corpus";
    case Family::Mixed:
      return "mixed";
  }
  return "?";
}

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Monotone:
      return "monotone";
    case FunctionClass::Continuous:
      return "continuous";
    case FunctionClass::Arbitrary:
      return "arbitrary";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (auto f : {Family::Chains, Family::Powersets, Family::Products,
                 Family::RandomClosed, Family::Corpus, Family::Mixed}) {
    if (to_string(f) == s) return f;
  }
  throw InputError("unknown lattice family '" + s + "'");
}

FunctionClass parse_function_class(const std::string& s) {
  for (auto c : {FunctionClass::Monotone, FunctionClass::Continuous,
                 FunctionClass::Arbitrary}) {
    if (to_string(c) == s) return c;
  }
  throw InputError("unknown function class '" + s + "'");
}

void InstanceGenSpec::validate() const {
  if (count == 0) throw InputError("instance count must be at least 1");
  if (min_size == 0 || min_size > max_size) {
    throw InputError("empty lattice size range");
  }
  if (max_size > 64) throw InputError("lattice size range exceeds cap 64");
}

// ------------------------------------------------------------ lattices

namespace {

std::optional<FiniteLattice> gen_chain(const InstanceGenSpec& s, Rng& rng) {
  return chain(s.min_size + rng.below(s.max_size - s.min_size + 1));
}

std::optional<FiniteLattice> gen_powerset(const InstanceGenSpec& s, Rng& rng) {
  std::vector<unsigned> grounds;
  for (unsigned g = 0; g <= kExplicitPowersetCap; ++g) {
    const std::size_t n = std::size_t{1} << g;
    if (n >= s.min_size && n <= s.max_size) grounds.push_back(g);
  }
  if (grounds.empty()) return std::nullopt;
  return powerset_lattice(grounds[rng.below(grounds.size())]);
}

std::optional<FiniteLattice> gen_product(const InstanceGenSpec& s, Rng& rng) {
  const std::vector<FiniteLattice> bases = {chain(2),           chain(3),
                                            chain(4),           fixtures::diamond(),
                                            fixtures::m3(),     fixtures::n5()};
  std::vector<std::pair<std::size_t, std::size_t>> fits;
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = 0; b < bases.size(); ++b) {
      const auto n = bases[a].size() * bases[b].size();
      if (n >= s.min_size && n <= s.max_size) fits.emplace_back(a, b);
    }
  }
  if (fits.empty()) return std::nullopt;
  auto [a, b] = fits[rng.below(fits.size())];
  return product(bases[a], bases[b]);
}

FiniteLattice lattice_of_masks(std::vector<unsigned> masks) {
  std::sort(masks.begin(), masks.end());
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(masks.size(),
                                     std::vector<bool>(masks.size()));
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::string l = "{";
    for (unsigned b = 0; b < 32; ++b) {
      if (masks[i] & (1u << b)) {
        if (l.size() > 1) l += ",";
        l += std::to_string(b);
      }
    }
    labels.push_back(l + "}");
    for (std::size_t j = 0; j < masks.size(); ++j) {
      leq[i][j] = (masks[i] & ~masks[j]) == 0;
    }
  }
  return validate_lattice(FinitePoset(std::move(labels), leq));
}

// Random subset of powerset(4) closed under union and intersection.
std::optional<FiniteLattice> gen_random_closed(const InstanceGenSpec& s,
                                               Rng& rng) {
  constexpr unsigned kGround = 4;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<bool> in(1u << kGround);
    const auto gens = 1 + rng.below(4);
    for (std::uint64_t k = 0; k < gens; ++k) in[rng.below(1u << kGround)] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned a = 0; a < in.size(); ++a) {
        for (unsigned b = 0; b < in.size(); ++b) {
          if (!in[a] || !in[b]) continue;
          for (unsigned c : {a & b, a | b}) {
            if (!in[c]) in[c] = grew = true;
          }
        }
      }
    }
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < in.size(); ++m) {
      if (in[m]) masks.push_back(m);
    }
    if (masks.size() >= s.min_size && masks.size() <= s.max_size) {
      return lattice_of_masks(std::move(masks));
    }
  }
  return std::nullopt;
}

std::optional<FiniteLattice> gen_corpus(const InstanceGenSpec& s, Rng& rng) {
  std::vector<FiniteLattice> fits;
  for (auto& named : fixtures::corpus()) {
    const auto n = named.lattice.size();
    if (n >= s.min_size && n <= s.max_size) fits.push_back(named.lattice);
  }
  if (fits.empty()) return std::nullopt;
  return fits[rng.below(fits.size())];
}

std::optional<FiniteLattice> gen_family(Family f, const InstanceGenSpec& s,
                                        Rng& rng) {
  switch (f) {
    case Family::Chains:
      return gen_chain(s, rng);
    case Family::Powersets:
      return gen_powerset(s, rng);
    case Family::Products:
      return gen_product(s, rng);
    case Family::RandomClosed:
      return gen_random_closed(s, rng);
    case Family::Corpus:
      return gen_corpus(s, rng);
    case Family::Mixed: {
      static constexpr Family kinds[] = {Family::Chains, Family::Powersets,
                                         Family::Products, Family::RandomClosed,
                                         Family::Corpus};
      return gen_family(kinds[rng.below(std::size(kinds))], s, rng);
    }
  }
  return std::nullopt;
}

// Ids sorted so that x < y in the order implies x comes first.
std::vector<Element> linear_extension(const FiniteLattice& lat) {
  std::vector<Element> order(lat.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return lat.poset().down_set(a).count() < lat.poset().down_set(b).count();
  });
  return order;
}

// Join of the images of everything strictly below x.
Element forced_lower_bound(const FiniteLattice& from, const FiniteLattice& to,
                           const std::vector<Element>& table, Element x) {
  Element lb = to.bottom();
  for (Element y : members(from.poset().down_set(x))) {
    if (y != x) lb = to.join(lb, table[y]);
  }
  return lb;
}

}  // namespace

FiniteLattice gen_lattice(const InstanceGenSpec& spec, Rng& rng) {
  spec.validate();
  if (auto lat = gen_family(spec.family, spec, rng)) return *lat;
  // Families that cannot hit the size range fall back to a chain.
  return *gen_chain(spec, rng);
}

FiniteLattice gen_lattice(const InstanceGenSpec& spec) {
  Rng rng(spec.seed);
  return gen_lattice(spec, rng);
}

std::vector<Element> gen_monotone_map(Rng& rng, const FiniteLattice& from,
                                      const FiniteLattice& to) {
  std::vector<Element> table(from.size());
  for (Element x : linear_extension(from)) {
    const Element lb = forced_lower_bound(from, to, table, x);
    const auto choices = members(to.poset().up_set(lb));
    table[x] = choices[rng.below(choices.size())];
  }
  return table;
}

std::vector<Element> gen_arbitrary_map(Rng& rng, const FiniteLattice& from,
                                       const FiniteLattice& to) {
  std::vector<Element> table(from.size());
  for (auto& t : table) t = static_cast<Element>(rng.below(to.size()));
  return table;
}

MutualPair gen_monotone_pair(Rng& rng, const FiniteLattice& o,
                             const FiniteLattice& p) {
  auto f = gen_monotone_map(rng, o, p);
  auto g = gen_monotone_map(rng, p, o);
  MutualPair mp(o, p, std::move(f), std::move(g));
  if (!is_monotone(mp.f()) || !is_monotone(mp.g())) {
    throw std::logic_error("monotone generator produced a non-monotone map");
  }
  return mp;
}

namespace {

std::optional<std::vector<Element>> gen_continuous_map(
    Rng& rng, const FiniteLattice& from, const FiniteLattice& to,
    ContinuityMode mode, std::size_t retry_cap, GeneratedPair& stats) {
  for (std::size_t attempt = 0; attempt < retry_cap; ++attempt) {
    auto t = gen_monotone_map(rng, from, to);
    MapView v{from, to, t};
    if (is_meet_continuous(v, mode) && is_join_continuous(v, mode)) return t;
    ++stats.rejections;
  }
  ++stats.fallbacks;
  if (from == to) {
    std::vector<Element> id(from.size());
    std::iota(id.begin(), id.end(), Element{0});
    return id;
  }
  if (mode.kind != ContinuityMode::Kind::WithEmpty) {
    // Constant maps preserve every nonempty meet and join.
    const auto c = static_cast<Element>(rng.below(to.size()));
    return std::vector<Element>(from.size(), c);
  }
  return std::nullopt;
}

}  // namespace

GeneratedPair gen_continuous_pair(Rng& rng, const FiniteLattice& o,
                                  const FiniteLattice& p, ContinuityMode mode,
                                  std::size_t retry_cap) {
  GeneratedPair out;
  auto f = gen_continuous_map(rng, o, p, mode, retry_cap, out);
  auto g = gen_continuous_map(rng, p, o, mode, retry_cap, out);
  if (f && g) out.pair.emplace(o, p, std::move(*f), std::move(*g));
  return out;
}

std::string serialize(const MutualPair& mp) {
  std::ostringstream os;
  os << "O=" << serialize(mp.dom_o()) << " P=" << serialize(mp.dom_p())
     << " F=[";
  for (std::size_t i = 0; i < mp.f_table().size(); ++i) {
    os << (i ? " " : "") << mp.dom_p().label(mp.f_table()[i]);
  }
  os << "] G=[";
  for (std::size_t i = 0; i < mp.g_table().size(); ++i) {
    os << (i ? " " : "") << mp.dom_o().label(mp.g_table()[i]);
  }
  os << "]";
  return os.str();
}

// -------------------------------------------------------------- lemmas

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1:
      return "L1";
    case LemmaId::L2:
      return "L2";
    case LemmaId::L3:
      return "L3";
    case LemmaId::L4:
      return "L4";
    case LemmaId::L5:
      return "L5";
    case LemmaId::L6:
      return "L6";
    case LemmaId::L7:
      return "L7";
    case LemmaId::SFP:
      return "SFP";
  }
  return "?";
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = {LemmaId::L1, LemmaId::L2, LemmaId::L3,
                                           LemmaId::L4, LemmaId::L5, LemmaId::L6,
                                           LemmaId::L7, LemmaId::SFP};
  return ids;
}

LemmaId parse_lemma(const std::string& s) {
  for (auto id : all_lemmas()) {
    if (to_string(id) == s) return id;
  }
  throw InputError("unknown lemma id '" + s + "'");
}

std::string lemma_anchor(LemmaId id) {
  switch (id) {
    case LemmaId::L1:
      return "continuous generators are monotone";
    case LemmaId::L2:
      return "G.F and F.G inherit monotonicity and continuity";
    case LemmaId::L3:
      return "components of simultaneous pre/post/fixed points are "
             "pre/post/fixed points of the compositions";
    case LemmaId::L4:
      return "continuous maps send complete sublattices to complete "
             "sublattices";
    case LemmaId::L5:
      return "nonempty PreFP/PostFP fibers are complete sublattices with the "
             "image as extreme element";
    case LemmaId::L6:
      return "component sets C, D (E, F) are complete sublattices holding "
             "top (bottom)";
    case LemmaId::L7:
      return "meets of pre-fixed pairs are pre-fixed; joins of post-fixed "
             "pairs are post-fixed";
    case LemmaId::SFP:
      return "least/greatest simultaneous fixed points exist and all "
             "strategies agree";
  }
  return "?";
}

FunctionClass premise_class(LemmaId id) {
  switch (id) {
    case LemmaId::L1:
    case LemmaId::L2:
    case LemmaId::L4:
    case LemmaId::L5:
    case LemmaId::L6:
      return FunctionClass::Continuous;
    default:
      return FunctionClass::Monotone;
  }
}

bool premise_holds(LemmaId id, const MutualPair& mp, ContinuityMode mode) {
  switch (premise_class(id)) {
    case FunctionClass::Continuous:
      return is_continuous_pair(mp, mode).holds();
    case FunctionClass::Monotone:
      return is_monotone(mp.f()) && is_monotone(mp.g());
    case FunctionClass::Arbitrary:
      return true;
  }
  return false;
}

namespace {

using Witness = std::optional<std::string>;

std::string pt_str(const MutualPair& mp, PairPoint pt) {
  return format_point(mp, pt);
}

Witness check_l1(const MutualPair& mp) {
  if (auto m = is_monotone(mp.f()); !m) {
    return "F not monotone on " + mp.dom_o().label(m.witness->first) + " <= " +
           mp.dom_o().label(m.witness->second);
  }
  if (auto m = is_monotone(mp.g()); !m) {
    return "G not monotone on " + mp.dom_p().label(m.witness->first) + " <= " +
           mp.dom_p().label(m.witness->second);
  }
  return std::nullopt;
}

Witness check_l2(const MutualPair& mp, ContinuityMode mode) {
  const EndoFn gf = compose_gf(mp), fg = compose_fg(mp);
  if (!is_monotone(gf.view())) return std::string("G.F not monotone");
  if (!is_monotone(fg.view())) return std::string("F.G not monotone");
  if (is_continuous_pair(mp, mode)) {
    for (const auto* c : {&gf, &fg}) {
      const char* name = c == &gf ? "G.F" : "F.G";
      if (auto m = is_meet_continuous(c->view(), mode); !m) {
        return std::string(name) + " not meet-continuous at " +
               format_set(c->dom(), *m.witness);
      }
      if (auto m = is_join_continuous(c->view(), mode); !m) {
        return std::string(name) + " not join-continuous at " +
               format_set(c->dom(), *m.witness);
      }
    }
  }
  return std::nullopt;
}

Witness check_l3(const MutualPair& mp) {
  const EndoFn gf = compose_gf(mp), fg = compose_fg(mp);
  const auto& o = mp.dom_o();
  const auto& p = mp.dom_p();
  for (auto pt : enumerate_sim_prefixed(mp)) {
    if (!o.leq(gf(pt.o), pt.o) || !p.leq(fg(pt.p), pt.p)) {
      return "pre-fixed pair " + pt_str(mp, pt) +
             " has a component that is not pre-fixed for the composition";
    }
  }
  for (auto pt : enumerate_sim_postfixed(mp)) {
    if (!o.leq(pt.o, gf(pt.o)) || !p.leq(pt.p, fg(pt.p))) {
      return "post-fixed pair " + pt_str(mp, pt) +
             " has a component that is not post-fixed for the composition";
    }
  }
  for (auto pt : enumerate_sim_fixed(mp)) {
    if (gf(pt.o) != pt.o || fg(pt.p) != pt.p) {
      return "fixed pair " + pt_str(mp, pt) +
             " has a component that is not fixed by the composition";
    }
  }
  return std::nullopt;
}

ElementSet close_sublattice(const FiniteLattice& lat, ElementSet s) {
  bool grew = true;
  while (grew) {
    grew = false;
    const auto elems = members(s);
    for (auto a : elems) {
      for (auto b : elems) {
        for (Element c : {lat.meet(a, b), lat.join(a, b)}) {
          if (!s.test(c)) {
            s.set(c);
            grew = true;
          }
        }
      }
    }
  }
  return s;
}

// Complete sublattices of lat: all of them for small lattices, otherwise
// closures of a fixed pseudo-random sample of generator sets.
std::vector<ElementSet> sublattices(const FiniteLattice& lat) {
  std::vector<ElementSet> out;
  const std::size_t n = lat.size();
  if (n <= 12) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s(n);
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::uint64_t{1} << b)) s.set(b);
      }
      if (is_complete_sublattice(lat, s)) out.push_back(std::move(s));
    }
    return out;
  }
  Rng rng(0x5eed);
  for (int i = 0; i < 256; ++i) {
    ElementSet s(n);
    const auto k = 1 + rng.below(3);
    for (std::uint64_t j = 0; j < k; ++j) s.set(rng.below(n));
    out.push_back(close_sublattice(lat, std::move(s)));
  }
  return out;
}

ElementSet image_of(const MapView& fn, const ElementSet& s) {
  ElementSet img(fn.to.size());
  for (Element e : members(s)) img.set(fn(e));
  return img;
}

Witness check_l4(const MutualPair& mp) {
  for (int which = 0; which < 2; ++which) {
    const MapView fn = which == 0 ? mp.f() : mp.g();
    for (const auto& m : sublattices(fn.from)) {
      const auto img = image_of(fn, m);
      if (!is_complete_sublattice(fn.to, img)) {
        return std::string(which == 0 ? "F" : "G") + " image of sublattice " +
               format_set(fn.from, m) + " is " + format_set(fn.to, img) +
               ", not a complete sublattice";
      }
    }
  }
  return std::nullopt;
}

Witness check_l5(const MutualPair& mp) {
  for (Side side : {Side::O, Side::P}) {
    const auto& own = side == Side::O ? mp.dom_o() : mp.dom_p();
    const auto& other = side == Side::O ? mp.dom_p() : mp.dom_o();
    for (Element a = 0; a < own.size(); ++a) {
      const Element img = side == Side::O ? mp.apply_f(a) : mp.apply_g(a);
      const std::string where =
          std::string(side == Side::O ? "O" : "P") + " anchor " + own.label(a);
      const auto pre = prefp_fiber(mp, a, side);
      if (!pre.empty()) {
        if (!is_complete_sublattice(other, pre.fiber)) {
          return "pre fiber of " + where + " = " +
                 format_set(other, pre.fiber) + " is not a complete sublattice";
        }
        if (other.meet_set(pre.fiber) != img || !pre.fiber.test(img)) {
          return "pre fiber of " + where + " has glb " +
                 other.label(other.meet_set(pre.fiber)) + ", image is " +
                 other.label(img);
        }
      }
      const auto post = postfp_fiber(mp, a, side);
      if (!post.empty()) {
        if (!is_complete_sublattice(other, post.fiber)) {
          return "post fiber of " + where + " = " +
                 format_set(other, post.fiber) +
                 " is not a complete sublattice";
        }
        if (other.join_set(post.fiber) != img || !post.fiber.test(img)) {
          return "post fiber of " + where + " has lub " +
                 other.label(other.join_set(post.fiber)) + ", image is " +
                 other.label(img);
        }
      }
    }
  }
  return std::nullopt;
}

Witness check_l6(const MutualPair& mp) {
  const auto cs = component_sets(mp);
  const auto& o = mp.dom_o();
  const auto& p = mp.dom_p();
  struct Item {
    const char* name;
    const FiniteLattice* lat;
    const ElementSet* set;
    Element extreme;
  };
  const Item items[] = {{"C", &o, &cs.c, o.top()},
                        {"D", &p, &cs.d, p.top()},
                        {"E", &o, &cs.e, o.bottom()},
                        {"F", &p, &cs.fset, p.bottom()}};
  for (const auto& it : items) {
    if (!is_complete_sublattice(*it.lat, *it.set)) {
      return std::string(it.name) + " = " + format_set(*it.lat, *it.set) +
             " is not a complete sublattice";
    }
    if (!it.set->test(it.extreme)) {
      return std::string(it.name) + " misses " + it.lat->label(it.extreme);
    }
  }
  return std::nullopt;
}

Witness check_l7(const MutualPair& mp) {
  const auto& o = mp.dom_o();
  const auto& p = mp.dom_p();
  const auto pre = enumerate_sim_prefixed(mp);
  for (auto a : pre) {
    for (auto b : pre) {
      PairPoint m{o.meet(a.o, b.o), p.meet(a.p, b.p)};
      if (!is_sim_prefixed(mp, m)) {
        return "meet of pre-fixed " + pt_str(mp, a) + " and " + pt_str(mp, b) +
               " is " + pt_str(mp, m) + ", not pre-fixed";
      }
    }
  }
  const auto post = enumerate_sim_postfixed(mp);
  for (auto a : post) {
    for (auto b : post) {
      PairPoint j{o.join(a.o, b.o), p.join(a.p, b.p)};
      if (!is_sim_postfixed(mp, j)) {
        return "join of post-fixed " + pt_str(mp, a) + " and " +
               pt_str(mp, b) + " is " + pt_str(mp, j) + ", not post-fixed";
      }
    }
  }
  return std::nullopt;
}

// Elements on a longest chain of lat.
std::size_t height(const FiniteLattice& lat) {
  std::vector<std::size_t> len(lat.size(), 1);
  std::size_t best = 0;
  for (Element x : linear_extension(lat)) {
    for (Element y : members(lat.poset().down_set(x))) {
      if (y != x) len[x] = std::max(len[x], len[y] + 1);
    }
    best = std::max(best, len[x]);
  }
  return best;
}

Witness check_trace(const MutualPair& mp, const SolveResult& r, bool up) {
  const auto& o = mp.dom_o();
  const auto& p = mp.dom_p();
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    const auto a = r.trace[i - 1], b = r.trace[i];
    const bool ok = up ? o.leq(a.o, b.o) && p.leq(a.p, b.p)
                       : o.leq(b.o, a.o) && p.leq(b.p, a.p);
    if (!ok) return "Kleene trace is not a chain at step " + std::to_string(i);
  }
  // Chain length in O x P is bounded by the product height.
  if (r.trace.size() > height(o) + height(p) - 1) {
    return "Kleene trace longer than the product height";
  }
  return std::nullopt;
}

Witness check_sfp(const MutualPair& mp) {
  const auto& o = mp.dom_o();
  const auto& p = mp.dom_p();
  const auto mu = lsfp_direct(mp).least.value();
  const auto nu = gsfp_direct(mp).greatest.value();
  const auto mu_prod = lsfp_product(mp, Engine::Explicit);
  const auto nu_prod = gsfp_product(mp, Engine::Explicit);
  const auto mu_impl = lsfp_product(mp, Engine::Implicit).least.value();
  const auto nu_impl = gsfp_product(mp, Engine::Implicit).greatest.value();
  const auto mu_t = lsfp_tarski_oracle(mp);
  const auto nu_t = gsfp_tarski_oracle(mp);
  if (!(mu == *mu_prod.least && mu == mu_impl && mu == mu_t)) {
    return "least strategies disagree: direct " + pt_str(mp, mu) +
           ", product " + pt_str(mp, *mu_prod.least) + ", implicit " +
           pt_str(mp, mu_impl) + ", tarski " + pt_str(mp, mu_t);
  }
  if (!(nu == *nu_prod.greatest && nu == nu_impl && nu == nu_t)) {
    return "greatest strategies disagree: direct " + pt_str(mp, nu) +
           ", product " + pt_str(mp, *nu_prod.greatest) + ", implicit " +
           pt_str(mp, nu_impl) + ", tarski " + pt_str(mp, nu_t);
  }
  if (mp.apply_f(mu.o) != mu.p || mp.apply_g(mu.p) != mu.o) {
    return "mu " + pt_str(mp, mu) + " is not simultaneously fixed";
  }
  if (mp.apply_f(nu.o) != nu.p || mp.apply_g(nu.p) != nu.o) {
    return "nu " + pt_str(mp, nu) + " is not simultaneously fixed";
  }
  for (auto pt : enumerate_sim_prefixed(mp)) {
    if (!o.leq(mu.o, pt.o) || !p.leq(mu.p, pt.p)) {
      return "mu not below pre-fixed " + pt_str(mp, pt);
    }
  }
  for (auto pt : enumerate_sim_postfixed(mp)) {
    if (!o.leq(pt.o, nu.o) || !p.leq(pt.p, nu.p)) {
      return "nu not above post-fixed " + pt_str(mp, pt);
    }
  }
  if (!o.leq(mu.o, nu.o) || !p.leq(mu.p, nu.p)) {
    return "mu " + pt_str(mp, mu) + " not below nu " + pt_str(mp, nu);
  }
  // G(muG) bounds C from below before the glb is taken; dually for D.
  const auto cs = component_sets(mp);
  for (Element c : members(cs.c)) {
    if (!o.leq(mp.apply_g(mu.p), c)) {
      return "G(muG) not below component " + o.label(c);
    }
  }
  for (Element d : members(cs.d)) {
    if (!p.leq(mp.apply_f(mu.o), d)) {
      return "F(muF) not below component " + p.label(d);
    }
  }
  if (auto w = check_trace(mp, mu_prod, true)) return w;
  if (auto w = check_trace(mp, nu_prod, false)) return w;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_lemma_instance(LemmaId id,
                                                const MutualPair& mp,
                                                ContinuityMode mode) {
  if (!premise_holds(id, mp, mode)) {
    throw std::invalid_argument("instance does not meet the premise of " +
                                to_string(id));
  }
  switch (id) {
    case LemmaId::L1:
      return check_l1(mp);
    case LemmaId::L2:
      return check_l2(mp, mode);
    case LemmaId::L3:
      return check_l3(mp);
    case LemmaId::L4:
      return check_l4(mp);
    case LemmaId::L5:
      return check_l5(mp);
    case LemmaId::L6:
      return check_l6(mp);
    case LemmaId::L7:
      return check_l7(mp);
    case LemmaId::SFP:
      return check_sfp(mp);
  }
  return std::nullopt;
}

namespace {

int strength(FunctionClass c) {
  switch (c) {
    case FunctionClass::Arbitrary:
      return 0;
    case FunctionClass::Monotone:
      return 1;
    case FunctionClass::Continuous:
      return 2;
  }
  return 0;
}

}  // namespace

LemmaReport check_lemma(LemmaId id, const InstanceGenSpec& spec) {
  spec.validate();
  LemmaReport r;
  r.id = id;
  r.mode = spec.mode;
  r.family = spec.family;
  r.function_class = spec.function_class.value_or(premise_class(id));
  r.deliberate_premise_violation =
      strength(r.function_class) < strength(premise_class(id));
  for (std::size_t i = 0; i < spec.count; ++i) {
    Rng rng(instance_seed(spec.seed, i));
    const FiniteLattice o = gen_lattice(spec, rng);
    const FiniteLattice p = gen_lattice(spec, rng);
    std::optional<MutualPair> mp;
    switch (r.function_class) {
      case FunctionClass::Monotone:
        mp = gen_monotone_pair(rng, o, p);
        break;
      case FunctionClass::Arbitrary:
        mp.emplace(o, p, gen_arbitrary_map(rng, o, p),
                   gen_arbitrary_map(rng, p, o));
        break;
      case FunctionClass::Continuous: {
        auto gp = gen_continuous_pair(rng, o, p, spec.mode);
        r.rejections += gp.rejections;
        r.fallbacks += gp.fallbacks;
        mp = std::move(gp.pair);
        break;
      }
    }
    ++r.instances_tried;
    if (!mp) {
      ++r.generation_exhausted;
      continue;
    }
    if (!premise_holds(id, *mp, spec.mode)) {
      ++r.premise_not_met;
      continue;
    }
    if (auto w = check_lemma_instance(id, *mp, spec.mode)) {
      r.failures.push_back({i, serialize(*mp), *w});
    }
  }
  return r;
}

std::string format_report(const LemmaReport& r) {
  std::ostringstream os;
  os << "lemma: " << to_string(r.id) << '\n'
     << "anchor: " << lemma_anchor(r.id) << '\n'
     << "mode: " << to_string(r.mode) << '\n'
     << "family: " << to_string(r.family) << '\n'
     << "class: " << to_string(r.function_class)
     << (r.deliberate_premise_violation ? " (deliberate premise violation)"
                                        : "")
     << '\n'
     << "instances: " << r.instances_tried << '\n'
     << "premise not met: " << r.premise_not_met << '\n';
  if (r.function_class == FunctionClass::Continuous) {
    os << "rejections: " << r.rejections << '\n'
       << "fallbacks: " << r.fallbacks << '\n'
       << "generation exhausted: " << r.generation_exhausted << '\n';
  }
  os << "failures: " << r.failures.size() << '\n';
  for (const auto& f : r.failures) {
    os << "failure " << f.index << ": " << f.witness << '\n'
       << "instance " << f.index << ": " << f.instance << '\n';
  }
  os << "verdict: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// --------------------------------------------------------------- miner

std::string to_string(Question q) {
  switch (q) {
    case Question::Q1:
      return "Q1";
    case Question::Q2:
      return "Q2";
    case Question::Q3:
      return "Q3";
  }
  return "?";
}

Question parse_question(const std::string& s) {
  for (auto q : {Question::Q1, Question::Q2, Question::Q3}) {
    if (to_string(q) == s) return q;
  }
  throw InputError("unknown question id '" + s + "'");
}

std::string question_text(Question q) {
  switch (q) {
    case Question::Q1:
      return "monotone, non-continuous pair with a nonempty PreFP fiber that "
             "is not a complete sublattice";
    case Question::Q2:
      return "monotone pair with a pre-fixed point of a composition that is "
             "no component of a simultaneous pre-fixed pair";
    case Question::Q3:
      return "monotone pair whose component set C is not a complete "
             "sublattice";
  }
  return "?";
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t n) {
  if (n == 0) return {};
  if (n > kCatalogMax) {
    throw CapacityError("lattice catalog is limited to size " +
                        std::to_string(kCatalogMax));
  }
  if (n <= 2) return {chain(n)};
  // Bottom is 0, top is n-1; inner elements 1..m are naturally labelled, so
  // only pairs i < j can be related.
  const std::size_t m = n - 2;
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 1; i <= m; ++i) {
    for (Element j = i + 1; j <= m; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::string> labels(n);
  labels[0] = "bot";
  labels[n - 1] = "top";
  for (std::size_t i = 1; i <= m; ++i) labels[i] = "e" + std::to_string(i);
  std::vector<FiniteLattice> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
      leq[0][i] = true;
      leq[i][n - 1] = true;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask & (std::uint64_t{1} << s)) leq[slots[s].first][slots[s].second] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (leq[j][k] && !leq[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;
    auto r = check_lattice(FinitePoset(labels, leq));
    auto* lat = std::get_if<FiniteLattice>(&r);
    if (!lat) continue;
    const bool seen = std::any_of(found.begin(), found.end(), [&](auto& f) {
      return find_isomorphism(f, *lat).has_value();
    });
    if (!seen) found.push_back(std::move(*lat));
  }
  return found;
}

bool for_each_monotone_map(
    const FiniteLattice& from, const FiniteLattice& to,
    const std::function<bool(const std::vector<Element>&)>& visit) {
  const auto order = linear_extension(from);
  std::vector<Element> table(from.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == order.size()) return visit(table);
    const Element x = order[depth];
    const Element lb = forced_lower_bound(from, to, table, x);
    for (Element c : members(to.poset().up_set(lb))) {
      table[x] = c;
      if (!rec(depth + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

namespace {

Witness detect_q1(const MutualPair& mp, ContinuityMode mode) {
  if (is_continuous_pair(mp, mode)) return std::nullopt;
  for (Side side : {Side::O, Side::P}) {
    const auto& own = side == Side::O ? mp.dom_o() : mp.dom_p();
    const auto& other = side == Side::O ? mp.dom_p() : mp.dom_o();
    for (Element a = 0; a < own.size(); ++a) {
      const auto fb = prefp_fiber(mp, a, side);
      if (!fb.empty() && !is_complete_sublattice(other, fb.fiber)) {
        return std::string("PreFP fiber of ") + (side == Side::O ? "O" : "P") +
               " element " + own.label(a) + " is " +
               format_set(other, fb.fiber);
      }
    }
  }
  return std::nullopt;
}

Witness detect_q2(const MutualPair& mp) {
  const auto cs = component_sets(mp);
  const EndoFn gf = compose_gf(mp), fg = compose_fg(mp);
  for (Element o = 0; o < mp.dom_o().size(); ++o) {
    if (mp.dom_o().leq(gf(o), o) && !cs.c.test(o)) {
      return "O element " + mp.dom_o().label(o) +
             " is pre-fixed for G.F but not in C";
    }
  }
  for (Element p = 0; p < mp.dom_p().size(); ++p) {
    if (mp.dom_p().leq(fg(p), p) && !cs.d.test(p)) {
      return "P element " + mp.dom_p().label(p) +
             " is pre-fixed for F.G but not in D";
    }
  }
  return std::nullopt;
}

Witness detect_q3(const MutualPair& mp) {
  const auto cs = component_sets(mp);
  if (!is_complete_sublattice(mp.dom_o(), cs.c)) {
    return "C = " + format_set(mp.dom_o(), cs.c);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> detect(Question q, const MutualPair& mp,
                                  ContinuityMode mode) {
  switch (q) {
    case Question::Q1:
      return detect_q1(mp, mode);
    case Question::Q2:
      return detect_q2(mp);
    case Question::Q3:
      return detect_q3(mp);
  }
  return std::nullopt;
}

bool revalidate(Question q, const MutualPair& mp, ContinuityMode mode) {
  const auto& o = mp.dom_o();
  const auto& p = mp.dom_p();
  // Monotonicity by direct pair loops.
  for (Element x = 0; x < o.size(); ++x) {
    for (Element y = 0; y < o.size(); ++y) {
      if (o.leq(x, y) && !p.leq(mp.apply_f(x), mp.apply_f(y))) return false;
    }
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) && !o.leq(mp.apply_g(x), mp.apply_g(y))) return false;
    }
  }
  const auto pre = enumerate_sim_prefixed(mp);
  ElementSet c(o.size()), d(p.size());
  for (auto pt : pre) {
    c.set(pt.o);
    d.set(pt.p);
  }
  switch (q) {
    case Question::Q1: {
      if (is_continuous_pair(mp, ContinuityMode::exhaustive(
                                     std::max(o.size(), p.size()) + 1)) &&
          mode.kind != ContinuityMode::Kind::WithEmpty) {
        return false;
      }
      for (Element a = 0; a < o.size(); ++a) {
        ElementSet fb(p.size());
        for (auto pt : pre) {
          if (pt.o == a) fb.set(pt.p);
        }
        if (fb.any() && !is_complete_sublattice_exhaustive(p, fb)) return true;
      }
      for (Element b = 0; b < p.size(); ++b) {
        ElementSet fb(o.size());
        for (auto pt : pre) {
          if (pt.p == b) fb.set(pt.o);
        }
        if (fb.any() && !is_complete_sublattice_exhaustive(o, fb)) return true;
      }
      return false;
    }
    case Question::Q2:
      for (Element x = 0; x < o.size(); ++x) {
        if (o.leq(mp.apply_g(mp.apply_f(x)), x) && !c.test(x)) return true;
      }
      for (Element x = 0; x < p.size(); ++x) {
        if (p.leq(mp.apply_f(mp.apply_g(x)), x) && !d.test(x)) return true;
      }
      return false;
    case Question::Q3:
      return !is_complete_sublattice_exhaustive(o, c);
  }
  return false;
}

MineReport mine_counterexample(Question q, const MineSpec& spec) {
  MineReport r;
  r.question = q;
  const std::size_t catalog_max = std::min(spec.max_size, kCatalogMax);
  std::vector<std::vector<FiniteLattice>> catalog(catalog_max + 1);
  if (spec.budget > 0) {
    for (std::size_t n = 1; n <= catalog_max; ++n) {
      catalog[n] = enumerate_lattices(n);
    }
  }
  auto examine = [&](const MutualPair& mp) {
    ++r.instances_tried;
    if (auto w = detect(q, mp, spec.mode)) {
      if (revalidate(q, mp, spec.mode)) {
        r.finding = MineFinding{serialize(mp), *w, mp};
        return false;
      }
    }
    return true;
  };
  bool budget_left = spec.budget > 0;
  // Exhaustive phase: size classes by the larger lattice, smallest first.
  for (std::size_t k = 1; k <= catalog_max && budget_left && !r.finding; ++k) {
    for (std::size_t so = 1; so <= k && budget_left && !r.finding; ++so) {
      for (std::size_t sp = 1; sp <= k && budget_left && !r.finding; ++sp) {
        if (std::max(so, sp) != k) continue;
        for (const auto& o : catalog[so]) {
          for (const auto& p : catalog[sp]) {
            for_each_monotone_map(o, p, [&](const std::vector<Element>& f) {
              return for_each_monotone_map(
                  p, o, [&](const std::vector<Element>& g) {
                    if (r.instances_tried >= spec.budget) {
                      budget_left = false;
                      return false;
                    }
                    return examine(MutualPair(o, p, f, g));
                  });
            });
            if (!budget_left || r.finding) break;
          }
          if (!budget_left || r.finding) break;
        }
      }
    }
    if (budget_left && !r.finding) r.exhaustive_up_to = k;
  }
  r.exhaustive_complete = r.exhaustive_up_to == catalog_max && budget_left;
  // Randomized phase for sizes beyond the catalog.
  if (!r.finding && r.exhaustive_complete && spec.max_size > kCatalogMax) {
    InstanceGenSpec gs;
    gs.min_size = kCatalogMax + 1;
    gs.max_size = spec.max_size;
    gs.family = Family::Mixed;
    std::size_t i = 0;
    while (r.instances_tried < spec.budget && !r.finding) {
      Rng rng(instance_seed(spec.seed, i++));
      const auto o = gen_lattice(gs, rng);
      const auto p = gen_lattice(gs, rng);
      ++r.random_instances;
      examine(gen_monotone_pair(rng, o, p));
    }
  }
  std::ostringstream s;
  if (r.finding) {
    s << "found: " << r.finding->witness;
  } else if (r.instances_tried == 0) {
    s << "none found, 0 instances tried";
  } else if (r.random_instances > 0) {
    s << "none found (exhaustive up to size " << r.exhaustive_up_to << ", "
      << r.random_instances << " random instances up to size "
      << spec.max_size << ")";
  } else if (r.exhaustive_complete) {
    s << "none found (exhaustive up to size " << r.exhaustive_up_to << ")";
  } else {
    s << "none found within budget (exhaustive up to size "
      << r.exhaustive_up_to << ")";
  }
  r.summary = s.str();
  return r;
}

std::string format_report(const MineReport& r) {
  std::ostringstream os;
  os << "question: " << to_string(r.question) << '\n'
     << "searching for: " << question_text(r.question) << '\n'
     << "instances: " << r.instances_tried << '\n'
     << "exhaustive up to size: " << r.exhaustive_up_to << '\n';
  if (r.random_instances > 0) {
    os << "random instances: " << r.random_instances << '\n';
  }
  if (r.finding) {
    os << "witness: " << r.finding->witness << '\n'
       << "instance: " << r.finding->instance << '\n'
       << "revalidated: yes\n";
  }
  os << "result: " << r.summary << '\n';
  return os.str();
}

}  // namespace mucofix
