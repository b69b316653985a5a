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

// mucofix command-line front end. Exit codes: 0 success, 1 check or
// property failure, 2 usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mucofix/demos.hpp"
#include "mucofix/io.hpp"
#include "mucofix/solvers.hpp"
#include "mucofix/verifier.hpp"

namespace {

using namespace mucofix;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::vector<std::string> paths;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::string mode = "binary";
  std::string strategy = "product";
  std::string direction = "least";
  std::size_t depth = 1;
  std::size_t budget = 0;  // 0: command default
  bool trace = false;
  bool require_continuity = false;
  std::vector<std::string> lemmas;
  std::string family = "mixed";
  std::string function_class;
  std::size_t min_size = 2;
  std::size_t max_size = 0;  // 0: command default
  std::string question;
  std::string demo;
  std::string classes;
  std::string args = "0,0,0";
  std::string entry = "F";
};

Direction parse_direction(const std::string& s) {
  if (s == "least" || s == "lfp") return Direction::Least;
  if (s == "greatest" || s == "gfp") return Direction::Greatest;
  throw InputError("unknown direction '" + s + "'");
}

// Lattice verdict lines; returns false when a check failed.
bool report_lattice(const LatticeDoc& doc, const std::string& name,
                    std::optional<FiniteLattice>& out) {
  std::string prefix = name.empty() ? "" : name + " ";
  try {
    FinitePoset poset = to_poset(doc);
    auto r = check_lattice(poset);
    if (auto* d = std::get_if<LatticeDiagnostic>(&r)) {
      std::cout << prefix << "poset: ok, lattice: " << d->message << '\n';
      return false;
    }
    out = std::get<FiniteLattice>(std::move(r));
    std::cout << prefix << "poset: ok, lattice: ok\n";
    return true;
  } catch (const NotAPoset& e) {
    std::cout << prefix << "poset: " << e.what() << '\n';
    return false;
  }
}

int cmd_check(const Options& opt) {
  const auto mode = ContinuityMode::parse(opt.mode);
  bool all_ok = true;
  for (const auto& path : opt.paths) {
    const auto j = read_json_file(path);
    std::cout << "file: " << path << '\n';
    if (!is_pair_document(j)) {
      std::optional<FiniteLattice> lat;
      all_ok &= report_lattice(parse_lattice_doc(j), "", lat);
      if (lat) std::cout << "size: " << lat->size() << '\n';
      continue;
    }
    std::optional<FiniteLattice> o, p;
    const bool lat_ok = report_lattice(parse_lattice_doc(j.at("O")), "O", o) &
                        report_lattice(parse_lattice_doc(j.at("P")), "P", p);
    if (!lat_ok) {
      all_ok = false;
      continue;
    }
    const MutualPair mp = load_pair(j);
    for (int which = 0; which < 2; ++which) {
      const MapView v = which == 0 ? mp.f() : mp.g();
      const char* name = which == 0 ? "F" : "G";
      const auto m = is_monotone(v);
      if (m) {
        std::cout << name << " monotone: yes\n";
      } else {
        all_ok = false;
        std::cout << name << " monotone: no, " << v.from.label(m.witness->first)
                  << " <= " << v.from.label(m.witness->second) << '\n';
      }
      const auto meet = is_meet_continuous(v, mode);
      const auto join = is_join_continuous(v, mode);
      std::cout << name << " meet-continuous (" << to_string(mode)
                << "): " << (meet ? "yes" : "no");
      if (!meet) std::cout << ", " << format_set(v.from, *meet.witness);
      std::cout << '\n'
                << name << " join-continuous (" << to_string(mode)
                << "): " << (join ? "yes" : "no");
      if (!join) std::cout << ", " << format_set(v.from, *join.witness);
      std::cout << '\n';
      if (opt.require_continuity && !(meet && join)) all_ok = false;
    }
  }
  return all_ok ? kOk : kFailure;
}

std::string result_line(const MutualPair& mp, const SolveResult& r) {
  std::ostringstream os;
  if (r.least) {
    os << "muF=" << mp.dom_o().label(r.mu_f())
       << " muG=" << mp.dom_p().label(r.mu_g());
  } else {
    os << "nuF=" << mp.dom_o().label(r.nu_f())
       << " nuG=" << mp.dom_p().label(r.nu_g());
  }
  os << ", " << r.iterations << " iterations";
  return os.str();
}

SolveResult run_strategy(const MutualPair& mp, Strategy s, Direction d,
                         std::size_t budget) {
  if (s == Strategy::Product && budget > 0) {
    return d == Direction::Least ? lsfp_product(mp, Engine::Explicit, budget)
                                 : gsfp_product(mp, Engine::Explicit, budget);
  }
  return solve(mp, s, d);
}

int cmd_solve(const Options& opt) {
  if (opt.paths.size() != 1) throw InputError("solve takes one pair file");
  const MutualPair mp = load_pair(read_json_file(opt.paths[0]));
  const Direction dir = parse_direction(opt.direction);
  std::vector<Strategy> strategies;
  if (opt.strategy == "all") {
    strategies = {Strategy::Direct, Strategy::Product, Strategy::Tarski};
  } else if (opt.strategy == "direct") {
    strategies = {Strategy::Direct};
  } else if (opt.strategy == "product") {
    strategies = {Strategy::Product};
  } else if (opt.strategy == "tarski") {
    strategies = {Strategy::Tarski};
  } else {
    throw InputError("unknown strategy '" + opt.strategy + "'");
  }
  std::vector<SolveResult> results;
  for (Strategy s : strategies) {
    results.push_back(run_strategy(mp, s, dir, opt.budget));
    const auto& r = results.back();
    if (strategies.size() > 1) std::cout << to_string(s) << ": ";
    std::cout << result_line(mp, r) << '\n';
    if (opt.trace) {
      for (std::size_t i = 0; i < r.trace.size(); ++i) {
        std::cout << "trace " << i << ": " << format_point(mp, r.trace[i])
                  << '\n';
      }
    }
  }
  if (strategies.size() > 1) {
    bool agree = true;
    for (const auto& r : results) agree &= r.point() == results[0].point();
    std::cout << (agree ? "AGREE" : "DISAGREE") << '\n';
    if (!agree) return kFailure;
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  InstanceGenSpec spec;
  spec.seed = opt.seed;
  spec.count = opt.count;
  spec.mode = ContinuityMode::parse(opt.mode);
  spec.family = parse_family(opt.family);
  spec.min_size = opt.min_size;
  spec.max_size = opt.max_size == 0 ? 8 : opt.max_size;
  if (!opt.function_class.empty()) {
    spec.function_class = parse_function_class(opt.function_class);
  }
  spec.validate();
  std::vector<LemmaId> ids;
  if (opt.lemmas.empty()) {
    ids = all_lemmas();
  } else {
    for (const auto& l : opt.lemmas) {
      if (l == "all") {
        ids.insert(ids.end(), all_lemmas().begin(), all_lemmas().end());
      } else {
        ids.push_back(parse_lemma(l));
      }
    }
  }
  std::size_t failures = 0;
  std::cout << "seed: " << spec.seed << '\n';
  for (LemmaId id : ids) {
    const auto report = check_lemma(id, spec);
    failures += report.failures.size();
    std::cout << '\n' << format_report(report);
  }
  std::cout << "\nlemmas: " << ids.size() << '\n'
            << "genuine failures: " << failures << '\n';
  return failures == 0 ? kOk : kFailure;
}

int cmd_mine(const Options& opt) {
  MineSpec spec;
  const Question q = parse_question(opt.question);
  if (opt.budget > 0) spec.budget = opt.budget;
  if (opt.max_size > 0) spec.max_size = opt.max_size;
  spec.seed = opt.seed;
  spec.mode = ContinuityMode::parse(opt.mode);
  std::cout << format_report(mine_counterexample(q, spec));
  return kOk;
}

int cmd_demo(const Options& opt) {
  if (opt.demo == "paulson") {
    std::vector<BigInt> vals;
    std::stringstream ss(opt.args);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.emplace_back(item);
      } catch (const std::exception&) {
        throw InputError("bad integer '" + item + "' in --args");
      }
    }
    if (vals.size() != 3) throw InputError("--args expects x,y,z");
    TrioLabel entry;
    if (opt.entry == "F") {
      entry = TrioLabel::F;
    } else if (opt.entry == "G") {
      entry = TrioLabel::G;
    } else if (opt.entry == "H") {
      entry = TrioLabel::H;
    } else {
      throw InputError("unknown entry '" + opt.entry + "'");
    }
    try {
      const auto r = paulson_trio({vals[0], vals[1], vals[2]}, entry,
                                  opt.budget > 0 ? opt.budget : 1'000'000);
      std::cout << format_trio(r.value) << '\n';
    } catch (const StepBudgetExceeded& e) {
      std::cout << e.what() << '\n';
      return kFailure;
    }
    return kOk;
  }
  if (opt.demo == "subtype") {
    const ClassTable ct =
        opt.classes.empty()
            ? ClassTable({{"A", false, "Object"}, {"List", true, "Object"}})
            : load_class_table(read_json_file(opt.classes));
    const auto st = solve_subtyping(ct, opt.depth, parse_direction(opt.direction),
                                    opt.budget > 0 ? opt.budget : kDefaultBudget);
    std::cout << format_subtyping(st);
    return st.reflexive && st.transitive ? kOk : kFailure;
  }
  throw InputError("unknown demo '" + opt.demo + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-lattice engine for mutual induction and coinduction"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Validate lattice or pair files");
  check->add_option("files", opt.paths, "Lattice or pair documents")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--mode", opt.mode, "binary|with-empty|capped:N");
  check->add_flag("--continuity", opt.require_continuity,
                  "Fail unless both generators are continuous");

  auto* solve = app.add_subcommand("solve", "Simultaneous fixed points");
  solve->add_option("file", opt.paths, "Pair document")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--strategy", opt.strategy, "direct|product|tarski|all");
  solve->add_option("--direction", opt.direction, "least|greatest");
  solve->add_option("--budget", opt.budget, "Iteration budget");
  solve->add_flag("--trace", opt.trace, "Print the Kleene trace");

  auto* verify = app.add_subcommand("verify", "Property-check the lemma suite");
  verify->add_option("--lemma", opt.lemmas, "L1..L7, SFP or all");
  verify->add_option("--seed", opt.seed, "Master seed");
  verify->add_option("--count", opt.count, "Instances per lemma");
  verify->add_option("--mode", opt.mode, "binary|with-empty|capped:N");
  verify->add_option("--family", opt.family,
                     "chains|powersets|products|random-closed|corpus|mixed");
  verify->add_option("--class", opt.function_class,
                     "monotone|continuous|arbitrary");
  verify->add_option("--min-size", opt.min_size, "Smallest lattice size");
  verify->add_option("--max-size", opt.max_size, "Largest lattice size");

  auto* mine = app.add_subcommand("mine", "Search for counterexamples");
  mine->add_option("question", opt.question, "Q1|Q2|Q3")->required();
  mine->add_option("--budget", opt.budget, "Instances to examine");
  mine->add_option("--max-size", opt.max_size, "Largest lattice size");
  mine->add_option("--seed", opt.seed, "Seed of the randomized phase");
  mine->add_option("--mode", opt.mode, "binary|with-empty|capped:N");

  auto* demo = app.add_subcommand("demo", "Run an applied instance");
  demo->add_option("name", opt.demo, "subtype|paulson")->required();
  demo->add_option("--classes", opt.classes, "Class table document")
      ->check(CLI::ExistingFile);
  demo->add_option("--depth", opt.depth, "Type nesting depth");
  demo->add_option("--direction", opt.direction, "least|greatest");
  demo->add_option("--args", opt.args, "x,y,z for the trio");
  demo->add_option("--entry", opt.entry, "F|G|H");
  demo->add_option("--budget", opt.budget, "Step budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (mine->parsed()) return cmd_mine(opt);
    if (demo->parsed()) return cmd_demo(opt);
  } catch (const NotMonotone& e) {
    std::cout << e.what() << '\n';
    return kFailure;
  } catch (const NotALattice& e) {
    std::cout << e.what() << '\n';
    return kFailure;
  } catch (const NotAPoset& e) {
    std::cout << "NotAPoset: " << e.what() << '\n';
    return kFailure;
  } catch (const NonTermination& e) {
    std::cout << e.what() << '\n';
    return kFailure;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
