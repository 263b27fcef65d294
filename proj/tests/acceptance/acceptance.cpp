// qsr_acceptance <N|all>: one PASS/FAIL line per acceptance criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsr/aclosure.hpp"
#include "qsr/analyzer.hpp"
#include "qsr/consistency.hpp"
#include "qsr/finite_model.hpp"
#include "qsr/network.hpp"
#include "qsr/registry.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

// Pinned limits.
constexpr double kAnalyzeSeconds = 1.0;
constexpr double kUniversalitySeconds = 60.0;
constexpr std::size_t kUniversalityPerDensity = 1000;
constexpr std::size_t kUniversalityVars = 8;
constexpr std::size_t kSoundnessNetworks = 500;
constexpr std::size_t kSearchNetworks = 200;

using Clock = std::chrono::steady_clock;
using Labels = qsr::RandomNetworkOptions::Labels;
using qsr::Operation;
using qsr::Strength;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = false;
  std::string detail;
};

std::string join(const std::set<std::string> &s) {
  std::string out = "{";
  for (const auto &x : s) out += (out.size() > 1 ? "," : "") + x;
  return out + "}";
}

std::set<std::string> violated(const std::string &name) {
  qsr::AnalyzeOptions opts;
  opts.max_examples = 1000;
  const auto v = qsr::classify(qsr::builtin(name), opts).violated_sides();
  return {v.begin(), v.end()};
}

Result criterion1() {
  std::ostringstream msg;
  bool pass = true;
  for (const char *name : {"pc1", "rcc5", "cycb"}) {
    const auto spec = qsr::builtin(name);
    const auto t0 = Clock::now();
    const auto report = qsr::classify(spec);
    const double dt = seconds_since(t0);
    std::size_t violations = 0;
    for (const auto &r : report.records) violations += r.violations;
    const bool ok = report.classification == qsr::Classification::RA && violations == 0 && dt < kAnalyzeSeconds;
    pass = pass && ok;
    msg << name << "=" << qsr::to_string(report.classification) << "/" << violations << " violations/" << dt
        << "s ";
  }
  return {pass, msg.str()};
}

Result criterion2() {
  const std::set<std::string> want_b1{"R6sub", "R6lsub", "R7sub"};
  const std::set<std::string> want_b2{"WAsub", "SAsub",  "R4sub",  "R4sup",   "R6sup",  "R6lsup",
                                      "R9sub", "R9sup",  "R10sub", "R10sup", "PLright", "PLleft"};
  const auto got_b1 = violated("appendixB1");
  const auto got_b2 = violated("appendixB2");

  auto diff = [](const std::set<std::string> &want, const std::set<std::string> &got) {
    std::set<std::string> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::inserter(missing, missing.end()));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::inserter(extra, extra.end()));
    return "missing " + join(missing) + " extra " + join(extra);
  };

  // The R4 counterexample printed for the second fixture.
  qsr::AnalyzeOptions opts;
  opts.max_examples = 1000;
  const auto r4 = qsr::check_axiom(qsr::builtin("appendixB2"), qsr::Axiom::R4, opts);
  bool triple = false;
  for (const auto *side : {&r4.sub, &r4.sup})
    for (const auto &ex : side->examples)
      if (ex.args == std::vector<std::vector<std::string>>{{"r1"}, {"r3"}, {"r4"}} &&
          ex.lhs == std::vector<std::string>{"r1", "r4"} && ex.rhs == std::vector<std::string>{"r1"})
        triple = true;

  const bool pass = got_b1 == want_b1 && got_b2 == want_b2 && triple;
  std::ostringstream msg;
  msg << "B1 " << diff(want_b1, got_b1) << "; B2 " << diff(want_b2, got_b2)
      << "; R4 (r1,r3,r4) {r1,r4} vs {r1}: " << (triple ? "found" : "absent");
  return {pass, msg.str()};
}

Result criterion3() {
  const auto pc1 = fixture::calc("pc1");
  const auto lt = pc1->relation({"<"});
  const auto le = pc1->relation({"<", "="});

  const auto incomplete = qsr::load_network_file(fixture::data("incomplete.net"), pc1);
  const auto complete = qsr::normalize(pc1, {{"A", lt, "B"}, {"A", lt, "C"}, {"B", le, "C"}}, incomplete.vars());
  const auto a = qsr::a_closure(incomplete);
  const bool ok_a = a.status == qsr::ClosureStatus::closed && a.network == complete;

  const auto chain = qsr::load_network_file(fixture::data("chain4.net"), pc1);
  std::vector<qsr::Edge> all_lt;
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) all_lt.push_back({chain.vars()[i], lt, chain.vars()[j]});
  const auto b = qsr::a_closure(chain);
  const bool ok_b = b.status == qsr::ClosureStatus::closed && b.network == qsr::normalize(pc1, all_lt, chain.vars());

  return {ok_a && ok_b, std::string("incomplete->complete ") + (ok_a ? "match" : "differs") + "; 4-chain " +
                            (ok_b ? "match" : "differs")};
}

Result criterion4() {
  const auto pc1 = fixture::calc("pc1");
  const auto chain = qsr::load_network_file(fixture::data("chain4.net"), pc1);
  const auto closed = qsr::a_closure(chain);
  const bool is_closed = closed.status == qsr::ClosureStatus::closed && !closed.network.has_empty();
  const auto solution = qsr::brute_force_solve(closed.network, qsr::chain_model(pc1, 3));
  return {is_closed && !solution, std::string("closure ") + (is_closed ? "non-empty" : "empty") +
                                      "; 3-element solution " + (solution ? "found" : "none")};
}

bool matches_oracle(const qsr::ConstraintNetwork &net, const std::optional<std::vector<std::vector<oracle::Set>>> &ref,
                    const qsr::ClosureOutcome &out) {
  if (!ref) return out.status == qsr::ClosureStatus::inconsistent;
  if (out.status != qsr::ClosureStatus::closed) return false;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j)
      if (oracle::members(out.network.at(i, j)) != (*ref)[i][j]) return false;
  return true;
}

Result criterion5() {
  const auto t0 = Clock::now();
  std::size_t networks = 0, runs = 0, mismatches = 0;
  std::uint64_t seed = 0;
  for (const char *name : {"pc1", "rcc5", "cycb", "appendixB2"}) {
    const auto calc = fixture::calc(name);
    for (double density : {0.3, 0.6, 1.0})
      for (std::size_t k = 0; k < kUniversalityPerDensity; ++k) {
        const auto net = qsr::random_network(calc, {kUniversalityVars, density, Labels::uniform, ++seed});
        const auto ref = oracle::naive_closure(net);
        ++networks;
        for (auto order : {qsr::QueueOrder::fifo, qsr::QueueOrder::lifo, qsr::QueueOrder::shuffled}) {
          ++runs;
          if (!matches_oracle(net, ref, qsr::a_closure(net, {order, seed}))) ++mismatches;
        }
      }
  }
  const double dt = seconds_since(t0);
  std::ostringstream msg;
  msg << networks << " networks, " << runs << " closures, " << mismatches << " mismatches, " << dt << "s";
  return {mismatches == 0 && dt < kUniversalitySeconds, msg.str()};
}

const qsr::CellStrength *find_cell(const qsr::OperationReport &r, const qsr::CalculusSpec &c, const char *a,
                                   const char *b) {
  for (const auto &x : r.cells)
    if (x.args.size() == 2 && c.symbol(x.args[0]) == a && c.symbol(x.args[1]) == b) return &x;
  return nullptr;
}

Result criterion6() {
  const auto pc1 = fixture::calc("pc1");
  const auto b2 = fixture::calc("appendixB2");
  const auto chain3 = qsr::chain_model(pc1, 3);
  const auto model_b2 = qsr::builtin_model("appendixB2", b2);

  const auto chain_comp = qsr::classify_operation(chain3, Operation::composition);
  const auto chain_conv = qsr::classify_operation(chain3, Operation::converse);
  const auto b2_comp = qsr::classify_operation(model_b2, Operation::composition);
  const auto b2_conv = qsr::classify_operation(model_b2, Operation::converse);

  const auto *lt = find_cell(chain_comp, *pc1, "<", "<");
  const bool ok_lt = lt && lt->is_weak && !lt->is_strong;
  const auto *c34 = find_cell(b2_comp, *b2, "r3", "r4");
  const bool ok_34 = c34 && c34->strength == Strength::abstract_only;

  // Independent recomputation of each cell from the pair sets, plus the
  // strong => weak => abstract chain.
  std::size_t hierarchy_breaks = 0, recompute_breaks = 0;
  for (const auto *rep : {&chain_comp, &chain_conv, &b2_comp, &b2_conv}) {
    const auto &model = rep == &chain_comp || rep == &chain_conv ? chain3 : model_b2;
    const auto &c = model.calculus();
    const std::size_t u = model.universe_size();
    for (const auto &cell : rep->cells) {
      if ((cell.is_strong && !cell.is_weak) || (cell.is_weak && !cell.is_abstract)) ++hierarchy_breaks;
      std::set<std::pair<std::size_t, std::size_t>> dom;
      for (std::size_t x = 0; x < u; ++x)
        for (std::size_t y = 0; y < u; ++y) {
          if (cell.args.size() == 1) {
            if (model.phi(cell.args[0]).contains(y, x)) dom.insert({x, y});
            continue;
          }
          for (std::size_t z = 0; z < u; ++z)
            if (model.phi(cell.args[0]).contains(x, z) && model.phi(cell.args[1]).contains(z, y)) dom.insert({x, y});
        }
      const auto table = cell.args.size() == 1 ? c.converse_of(cell.args[0])
                                                : c.composition_of(cell.args[0], cell.args[1]);
      std::set<std::pair<std::size_t, std::size_t>> image;
      std::set<std::size_t> hull;
      for (std::size_t r = 0; r < c.size(); ++r)
        for (std::size_t x = 0; x < u; ++x)
          for (std::size_t y = 0; y < u; ++y)
            if (model.phi(r).contains(x, y)) {
              if (table.test(r)) image.insert({x, y});
              if (dom.count({x, y})) hull.insert(r);
            }
      const bool strong = image == dom;
      const bool weak = oracle::members(table) == hull;
      const bool abstract = std::includes(image.begin(), image.end(), dom.begin(), dom.end());
      if (strong != cell.is_strong || weak != cell.is_weak || abstract != cell.is_abstract) ++recompute_breaks;
    }
  }

  const bool pass = ok_lt && chain_conv.all_strong() && ok_34 && b2_conv.all_strong() && hierarchy_breaks == 0 &&
                    recompute_breaks == 0;
  std::ostringstream msg;
  msg << "chain3 (<,<) " << (ok_lt ? "weak-not-strong" : "wrong") << ", converse "
      << (chain_conv.all_strong() ? "strong" : "not strong") << "; B2 (r3,r4) "
      << (ok_34 ? "abstract-not-weak" : "wrong") << ", converse " << (b2_conv.all_strong() ? "strong" : "not strong")
      << "; hierarchy breaks " << hierarchy_breaks << ", recomputation mismatches " << recompute_breaks;
  return {pass, msg.str()};
}

Result criterion7() {
  std::ostringstream msg;
  bool pass = true;
  for (const auto &name : qsr::builtin_names()) {
    const auto calc = fixture::calc(name);
    const bool r7 = qsr::check_axiom(*calc, qsr::Axiom::R7).holds();
    const bool strong =
        qsr::classify_operation(qsr::builtin_model(name, calc), Operation::converse).all_strong();
    pass = pass && r7 == strong;
    msg << name << " R7=" << (r7 ? "yes" : "no") << "/strong=" << (strong ? "yes" : "no") << " ";
  }
  return {pass, msg.str()};
}

Result criterion8() {
  const auto pc1 = fixture::calc("pc1");
  const auto cycb = fixture::calc("cycb");
  const std::vector<qsr::FiniteInterpretation> models{qsr::chain_model(pc1, 4), qsr::orientation_model(cycb, 4)};
  std::ostringstream msg;
  bool pass = true;
  std::uint64_t seed = 0;
  for (const auto &model : models) {
    std::size_t solvable = 0, kept = 0, generated = 0;
    while (solvable < kSoundnessNetworks && generated < 100 * kSoundnessNetworks) {
      ++generated;
      const auto net = qsr::random_network(model.calculus_ptr(), {5, 0.6, Labels::uniform, ++seed});
      const auto valuation = qsr::brute_force_solve(net, model);
      if (!valuation) continue;
      ++solvable;
      const auto closed = qsr::a_closure(net);
      if (closed.status == qsr::ClosureStatus::closed && qsr::satisfies(closed.network, *valuation, model)) ++kept;
    }
    pass = pass && solvable == kSoundnessNetworks && kept == solvable;
    msg << model.calculus().name() << "/" << model.universe_size() << "-element: " << kept << "/" << solvable
        << " kept ";
  }
  return {pass, msg.str()};
}

Result criterion9() {
  auto spec = qsr::builtin("pc1");
  const auto probe = std::make_shared<const qsr::CalculusSpec>(spec);
  const auto evidence = qsr::derive_atomic_completeness(qsr::chain_model(probe, 3));
  qsr::set_completeness(spec, evidence.verdict);
  const auto pc1 = std::make_shared<const qsr::CalculusSpec>(std::move(spec));
  const auto chain3 = qsr::chain_model(pc1, 3);

  qsr::SearchOptions opts;
  opts.leaf_oracle = qsr::model_leaf_oracle(chain3);
  std::size_t agree = 0, consistent = 0, unknown = 0;
  for (std::uint64_t seed = 1; seed <= kSearchNetworks; ++seed) {
    const auto net = qsr::random_network(pc1, {5, 0.6, Labels::uniform, 9000 + seed});
    const auto d = qsr::decide(net, opts);
    const bool solvable = qsr::brute_force_solve(net, chain3).has_value();
    if (d.verdict == qsr::Verdict::closed_unknown) ++unknown;
    if (d.verdict == qsr::Verdict::consistent) ++consistent;
    const bool said = d.verdict == qsr::Verdict::consistent;
    if (d.verdict != qsr::Verdict::closed_unknown && said == solvable &&
        (!d.witness || qsr::brute_force_solve(*d.witness, chain3)))
      ++agree;
  }
  std::ostringstream msg;
  msg << "completeness flag " << qsr::to_string(evidence.verdict) << "; " << agree << "/" << kSearchNetworks
      << " agree (" << consistent << " consistent, " << unknown << " undecided)";
  return {agree == kSearchNetworks, msg.str()};
}

} // namespace

int main(int argc, char **argv) {
  const std::vector<std::function<Result()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9};
  const std::string which = argc > 1 ? argv[1] : "all";
  std::vector<std::size_t> run;
  if (which == "all") {
    for (std::size_t i = 1; i <= criteria.size(); ++i) run.push_back(i);
  } else {
    std::size_t n = 0;
    try {
      n = std::stoul(which);
    } catch (const std::exception &) {
    }
    if (n < 1 || n > criteria.size()) {
      std::cerr << "usage: qsr_acceptance <1-" << criteria.size() << "|all>\n";
      return 2;
    }
    run.push_back(n);
  }

  bool all_pass = true;
  for (auto n : run) {
    Result r;
    try {
      r = criteria[n - 1]();
    } catch (const std::exception &e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && r.pass;
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
