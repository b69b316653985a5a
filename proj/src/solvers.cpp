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

#include "mucofix/solvers.hpp"

#include <stdexcept>

namespace mucofix {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Direct:
      return "direct";
    case Strategy::Product:
      return "product";
    case Strategy::Tarski:
      return "tarski";
  }
  return "?";
}

std::string to_string(Direction d) {
  return d == Direction::Least ? "least" : "greatest";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "Pass";
    case Verdict::Fail:
      return "Fail";
    case Verdict::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

void require_monotone(const MutualPair& mp) {
  if (auto m = is_monotone(mp.f()); !m) {
    throw NotMonotone("F", mp.dom_o().label(m.witness->first),
                      mp.dom_o().label(m.witness->second));
  }
  if (auto m = is_monotone(mp.g()); !m) {
    throw NotMonotone("G", mp.dom_p().label(m.witness->first),
                      mp.dom_p().label(m.witness->second));
  }
}

namespace {

void check_postcondition(const MutualPair& mp, PairPoint pt) {
  if (!is_sim_fixed(mp, pt)) {
    throw std::logic_error("solver result " + format_point(mp, pt) +
                           " is not a simultaneous fixed point");
  }
}

}  // namespace

SolveResult lsfp_direct(const MutualPair& mp) {
  require_monotone(mp);
  const auto cs = component_sets(mp);
  PairPoint mu{mp.dom_o().meet_set(cs.c), mp.dom_p().meet_set(cs.d)};
  check_postcondition(mp, mu);
  SolveResult r;
  r.strategy = Strategy::Direct;
  r.least = mu;
  return r;
}

SolveResult gsfp_direct(const MutualPair& mp) {
  require_monotone(mp);
  const auto cs = component_sets(mp);
  PairPoint nu{mp.dom_o().join_set(cs.e), mp.dom_p().join_set(cs.fset)};
  check_postcondition(mp, nu);
  SolveResult r;
  r.strategy = Strategy::Direct;
  r.greatest = nu;
  return r;
}

namespace {

SolveResult product_iteration(const MutualPair& mp, Direction dir,
                              Engine engine, std::size_t budget) {
  require_monotone(mp);
  SolveResult r;
  r.strategy = Strategy::Product;
  auto h = [&mp](const PairPoint& x) {
    return PairPoint{mp.apply_g(x.p), mp.apply_f(x.o)};
  };
  PairPoint limit;
  if (engine == Engine::Implicit) {
    auto il = implicit_product(mp.dom_o(), mp.dom_p());
    auto res = kleene_implicit<PairPoint>(
        il, h, dir, budget, std::nullopt,
        [&r](const PairPoint& x) { r.trace.push_back(x); });
    limit = res.limit;
    r.iterations = res.iterations;
  } else {
    const auto& o = mp.dom_o();
    const auto& p = mp.dom_p();
    PairPoint cur = dir == Direction::Least ? PairPoint{o.bottom(), p.bottom()}
                                            : PairPoint{o.top(), p.top()};
    r.trace.push_back(cur);
    // A strictly monotone chain in O x P has at most |O| * |P| members.
    const std::size_t bound = o.size() * p.size() + 1;
    while (true) {
      if (r.iterations >= std::min(budget, bound)) {
        throw NonTermination(std::min(budget, bound));
      }
      PairPoint next = h(cur);
      ++r.iterations;
      if (next == cur) break;
      cur = next;
      r.trace.push_back(cur);
    }
    limit = cur;
  }
  check_postcondition(mp, limit);
  if (dir == Direction::Least) {
    r.least = limit;
  } else {
    r.greatest = limit;
  }
  return r;
}

}  // namespace

SolveResult lsfp_product(const MutualPair& mp, Engine engine,
                         std::size_t budget) {
  return product_iteration(mp, Direction::Least, engine, budget);
}

SolveResult gsfp_product(const MutualPair& mp, Engine engine,
                         std::size_t budget) {
  return product_iteration(mp, Direction::Greatest, engine, budget);
}

namespace {

// H as an endofunction on the materialized product lattice.
EndoFn encode_h(const MutualPair& mp, const FiniteLattice& op) {
  const auto np = mp.dom_p().size();
  std::vector<Element> table(op.size());
  for (Element x = 0; x < op.size(); ++x) {
    const Element o = x / np, p = x % np;
    table[x] = mp.apply_g(p) * np + mp.apply_f(o);
  }
  return EndoFn(op, std::move(table));
}

PairPoint tarski(const MutualPair& mp, Direction dir) {
  require_monotone(mp);
  const FiniteLattice op = product(mp.dom_o(), mp.dom_p());
  const EndoFn h = encode_h(mp, op);
  ElementSet points(op.size());
  for (Element x = 0; x < op.size(); ++x) {
    const bool pre = op.leq(h(x), x);
    const bool post = op.leq(x, h(x));
    if (dir == Direction::Least ? pre : post) points.set(x);
  }
  const Element x =
      dir == Direction::Least ? op.meet_set(points) : op.join_set(points);
  const auto np = static_cast<Element>(mp.dom_p().size());
  return {x / np, x % np};
}

}  // namespace

PairPoint lsfp_tarski_oracle(const MutualPair& mp) {
  return tarski(mp, Direction::Least);
}

PairPoint gsfp_tarski_oracle(const MutualPair& mp) {
  return tarski(mp, Direction::Greatest);
}

SolveResult solve(const MutualPair& mp, Strategy strategy, Direction dir) {
  const bool least = dir == Direction::Least;
  switch (strategy) {
    case Strategy::Direct:
      return least ? lsfp_direct(mp) : gsfp_direct(mp);
    case Strategy::Product:
      return least ? lsfp_product(mp) : gsfp_product(mp);
    case Strategy::Tarski: {
      SolveResult r;
      r.strategy = Strategy::Tarski;
      if (least) {
        r.least = lsfp_tarski_oracle(mp);
      } else {
        r.greatest = gsfp_tarski_oracle(mp);
      }
      return r;
    }
  }
  throw std::logic_error("unknown strategy");
}

Verdict check_mutual_induction(const MutualPair& mp, PairPoint pt) {
  if (!is_sim_prefixed(mp, pt)) return Verdict::NotApplicable;
  const auto mu = lsfp_direct(mp);
  return mp.dom_o().leq(mu.mu_f(), pt.o) && mp.dom_p().leq(mu.mu_g(), pt.p)
             ? Verdict::Pass
             : Verdict::Fail;
}

Verdict check_mutual_coinduction(const MutualPair& mp, PairPoint pt) {
  if (!is_sim_postfixed(mp, pt)) return Verdict::NotApplicable;
  const auto nu = gsfp_direct(mp);
  return mp.dom_o().leq(pt.o, nu.nu_f()) && mp.dom_p().leq(pt.p, nu.nu_g())
             ? Verdict::Pass
             : Verdict::Fail;
}

MutualPair standard_embed(const FiniteLattice& lat, const EndoFn& f) {
  if (!(f.dom() == lat)) throw InputError("endofunction over another lattice");
  return MutualPair(lat, lat, f.table(), EndoFn::identity(lat).table());
}

ImplicitLattice<Element> implicit_view(const FiniteLattice& lat) {
  // Captures by value: lattices are immutable and cheap at desk scale.
  return {
      [lat] { return lat.bottom(); },
      [lat] { return lat.top(); },
      [lat](const Element& a, const Element& b) { return lat.meet(a, b); },
      [lat](const Element& a, const Element& b) { return lat.join(a, b); },
      [](const Element& a, const Element& b) { return a == b; },
      [lat](const Element& a) { return lat.label(a); },
  };
}

ImplicitLattice<PairPoint> implicit_product(const FiniteLattice& o,
                                            const FiniteLattice& p) {
  return {
      [o, p] { return PairPoint{o.bottom(), p.bottom()}; },
      [o, p] { return PairPoint{o.top(), p.top()}; },
      [o, p](const PairPoint& a, const PairPoint& b) {
        return PairPoint{o.meet(a.o, b.o), p.meet(a.p, b.p)};
      },
      [o, p](const PairPoint& a, const PairPoint& b) {
        return PairPoint{o.join(a.o, b.o), p.join(a.p, b.p)};
      },
      [](const PairPoint& a, const PairPoint& b) { return a == b; },
      [o, p](const PairPoint& a) {
        return "(" + o.label(a.o) + "," + p.label(a.p) + ")";
      },
  };
}

ImplicitLattice<ElementSet> implicit_powerset(std::size_t n) {
  return {
      [n] { return ElementSet(n); },
      [n] {
        ElementSet s(n);
        s.set();
        return s;
      },
      [](const ElementSet& a, const ElementSet& b) { return a & b; },
      [](const ElementSet& a, const ElementSet& b) { return a | b; },
      [](const ElementSet& a, const ElementSet& b) { return a == b; },
      [](const ElementSet& a) {
        std::string out = "{";
        for (Element e : members(a)) {
          if (out.size() > 1) out += ",";
          out += std::to_string(e);
        }
        return out + "}";
      },
  };
}

}  // namespace mucofix
