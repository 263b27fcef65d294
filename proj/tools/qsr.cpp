// qsr: command-line front end.
//
// Exit codes: 0 success / consistent / closed, 1 inconsistent or no solution,
// 2 usage or parse error, 3 undecided.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsr/aclosure.hpp"
#include "qsr/analyzer.hpp"
#include "qsr/consistency.hpp"
#include "qsr/error.hpp"
#include "qsr/finite_model.hpp"
#include "qsr/registry.hpp"
#include "qsr/report_io.hpp"

namespace {

using nlohmann::json;
using CalcPtr = std::shared_ptr<const qsr::CalculusSpec>;

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 1;
constexpr int exit_usage = 2;
constexpr int exit_undecided = 3;

struct CalcArgs {
  std::string builtin;
  std::string spec;
};

struct Config {
  CalcArgs calc;
  std::string format = "text";
  std::string network;
  std::string model;
  std::string spec_positional;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  double budget = 1e8;
  std::string domain = "base";
  std::size_t samples = 10000;
  std::size_t vars = 8;
  double density = 0.5;
  std::string labels = "uniform";
  std::string name = "random";
  std::string order = "fifo";
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw qsr::ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --spec wins over --builtin; otherwise the `calculus` line of a companion
// file names a builtin.
CalcPtr resolve_calculus(const CalcArgs &args, const std::optional<std::string> &hint = std::nullopt) {
  if (!args.spec.empty()) return std::make_shared<const qsr::CalculusSpec>(qsr::load_spec_file(args.spec));
  if (!args.builtin.empty()) return std::make_shared<const qsr::CalculusSpec>(qsr::builtin(args.builtin));
  if (hint) return std::make_shared<const qsr::CalculusSpec>(qsr::builtin(*hint));
  throw CLI::ValidationError("calculus", "one of --builtin or --spec is required");
}

void add_calc_options(CLI::App *cmd, Config &cfg) {
  auto *b = cmd->add_option("--builtin", cfg.calc.builtin, "builtin calculus name");
  auto *s = cmd->add_option("--spec", cfg.calc.spec, "calculus spec file");
  b->excludes(s);
}

void add_format(CLI::App *cmd, Config &cfg) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

int cmd_analyze(const Config &cfg) {
  CalcArgs args = cfg.calc;
  if (!cfg.spec_positional.empty()) {
    if (!args.spec.empty() || !args.builtin.empty())
      throw CLI::ValidationError("analyze", "give either a spec path or --builtin/--spec");
    args.spec = cfg.spec_positional;
  }
  const auto calc = resolve_calculus(args);
  qsr::AnalyzeOptions opts;
  opts.jobs = cfg.jobs;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  if (cfg.domain == "composite") opts.domain = qsr::AnalyzeOptions::Domain::composite_exhaustive;
  else if (cfg.domain == "sampled") opts.domain = qsr::AnalyzeOptions::Domain::composite_sampled;
  const auto report = qsr::classify(*calc, opts);
  if (cfg.format == "json") {
    std::cout << qsr::to_json(report).dump(2) << "\n";
  } else {
    for (const auto &f : qsr::validate(*calc))
      std::cout << (f.severity == qsr::Finding::Severity::warning ? "warning" : "note") << ": "
                << f.message << "\n";
    std::cout << qsr::to_text(report);
  }
  return exit_ok;
}

std::pair<CalcPtr, qsr::ConstraintNetwork> load_network(const Config &cfg) {
  if (cfg.network.empty()) throw CLI::ValidationError("network", "a network file is required");
  const std::string text = read_file(cfg.network);
  auto calc = resolve_calculus(cfg.calc, qsr::network_calculus_name(text));
  auto net = qsr::parse_network(text, calc);
  return {calc, std::move(net)};
}

std::string pair_name(const qsr::ConstraintNetwork &net, std::pair<std::size_t, std::size_t> p) {
  return "(" + net.vars()[p.first] + "," + net.vars()[p.second] + ")";
}

int cmd_closure(const Config &cfg) {
  auto [calc, net] = load_network(cfg);
  qsr::ClosureOptions opts;
  opts.order = cfg.order == "lifo" ? qsr::QueueOrder::lifo
               : cfg.order == "shuffled" ? qsr::QueueOrder::shuffled
                                         : qsr::QueueOrder::fifo;
  opts.seed = cfg.seed;
  const auto out = qsr::a_closure(net, opts);
  const bool ok = out.status == qsr::ClosureStatus::closed;
  if (cfg.format == "json") {
    json j{{"status", ok ? "closed" : "inconsistent"},
           {"revisions", out.revisions},
           {"queue_pops", out.queue_pops},
           {"full_storage", out.full_storage},
           {"network", qsr::to_json(out.network)}};
    if (out.conflict) j["conflict"] = {net.vars()[out.conflict->first], net.vars()[out.conflict->second]};
    j["at_two_consistency"] = out.at_two_consistency;
    std::cout << j.dump(2) << "\n";
  } else if (ok) {
    std::cout << "status: closed\nrevisions: " << out.revisions << "\nqueue pops: " << out.queue_pops << "\n"
              << qsr::serialize_network(out.network);
  } else if (out.at_two_consistency) {
    std::cout << "status: inconsistent at 2-consistency " << pair_name(net, *out.conflict) << "\n";
  } else {
    std::cout << "status: inconsistent at " << pair_name(net, *out.conflict) << "\n";
  }
  return ok ? exit_ok : exit_inconsistent;
}

int cmd_consistency(const Config &cfg) {
  auto [calc, net] = load_network(cfg);
  qsr::SearchOptions opts;
  std::optional<qsr::FiniteInterpretation> model;
  if (!cfg.model.empty()) {
    model = qsr::load_model_file(cfg.model, calc);
    opts.leaf_oracle = qsr::model_leaf_oracle(*model, {cfg.budget});
  }
  const auto d = qsr::decide(net, opts);
  if (cfg.format == "json") {
    json j{{"verdict", std::string(qsr::to_string(d.verdict))}, {"nodes_explored", d.nodes_explored}};
    if (d.witness) j["witness"] = qsr::to_json(*d.witness);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << qsr::to_string(d.verdict) << "\nnodes explored: " << d.nodes_explored << "\n";
    if (d.witness) std::cout << "witness:\n" << qsr::serialize_network(*d.witness);
  }
  switch (d.verdict) {
  case qsr::Verdict::consistent: return exit_ok;
  case qsr::Verdict::inconsistent: return exit_inconsistent;
  case qsr::Verdict::closed_unknown: return exit_undecided;
  }
  return exit_undecided;
}

std::string pairs_text(const qsr::FiniteInterpretation &m, const std::vector<qsr::ElementPair> &ps) {
  std::string s;
  for (auto [a, b] : ps) s += " (" + m.universe()[a] + "," + m.universe()[b] + ")";
  return s;
}

int cmd_model_check(const Config &cfg) {
  CalcPtr calc;
  std::optional<qsr::FiniteInterpretation> model;
  if (!cfg.model.empty()) {
    const std::string text = read_file(cfg.model);
    calc = resolve_calculus(cfg.calc, qsr::model_calculus_name(text));
    model = qsr::parse_model(text, calc);
  } else {
    calc = resolve_calculus(cfg.calc);
    model = qsr::builtin_model(calc->name(), calc);
  }

  const auto jepd = qsr::check_jepd(*model);
  const auto scheme = qsr::check_partition_scheme(*model);
  const auto conv = qsr::classify_operation(*model, qsr::Operation::converse);
  const auto comp = qsr::classify_operation(*model, qsr::Operation::composition);

  std::optional<qsr::ConstraintNetwork> net;
  std::optional<qsr::Valuation> solution;
  if (!cfg.network.empty()) {
    net = qsr::load_network_file(cfg.network, calc);
    solution = qsr::brute_force_solve(*net, *model, {cfg.budget});
  }

  if (cfg.format == "json") {
    json j{{"model", model->name()},
           {"calculus", calc->name()},
           {"jointly_exhaustive", jepd.jointly_exhaustive},
           {"pairwise_disjoint", jepd.pairwise_disjoint},
           {"injective", jepd.injective},
           {"has_identity", scheme.has_identity},
           {"declared_identity_matches", scheme.declared_identity_matches},
           {"converse_closed", scheme.converse_closed},
           {"converse", conv.summary(*calc)},
           {"composition", comp.summary(*calc)}};
    json cells = json::array();
    for (const auto *rep : {&conv, &comp})
      for (const auto &c : rep->cells) {
        std::vector<std::string> args;
        for (auto a : c.args) args.push_back(calc->symbol(a));
        cells.push_back({{"operation", std::string(qsr::to_string(rep->operation))},
                         {"args", args},
                         {"strength", std::string(qsr::to_string(c.strength))},
                         {"table", calc->names(c.table)},
                         {"hull", calc->names(c.hull)}});
      }
    j["cells"] = cells;
    if (net) {
      if (solution) {
        json v;
        for (std::size_t i = 0; i < net->size(); ++i) v[net->vars()[i]] = model->universe()[(*solution)[i]];
        j["solution"] = v;
      } else {
        j["solution"] = nullptr;
      }
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "model: " << model->name() << " (" << model->universe_size() << " elements)\n";
    std::cout << "jointly exhaustive: " << (jepd.jointly_exhaustive ? "yes" : "no")
              << pairs_text(*model, jepd.uncovered) << "\n";
    std::cout << "pairwise disjoint: " << (jepd.pairwise_disjoint ? "yes" : "no")
              << pairs_text(*model, jepd.overlapping) << "\n";
    std::cout << "identity relation: " << (scheme.has_identity ? "yes" : "no") << "\n";
    std::cout << "declared identity matches: " << (scheme.declared_identity_matches ? "yes" : "no") << "\n";
    std::cout << "converse closed: " << (scheme.converse_closed ? "yes" : "no") << "\n";
    std::cout << conv.summary(*calc) << "\n" << comp.summary(*calc) << "\n";
    if (net) {
      if (solution) {
        std::cout << "solution:";
        for (std::size_t i = 0; i < net->size(); ++i)
          std::cout << " " << net->vars()[i] << "=" << model->universe()[(*solution)[i]];
        std::cout << "\n";
      } else {
        std::cout << "no solution\n";
      }
    }
  }
  return net && !solution ? exit_inconsistent : exit_ok;
}

int cmd_gen(const Config &cfg) {
  const auto calc = resolve_calculus(cfg.calc);
  qsr::RandomNetworkOptions opts;
  opts.n_vars = cfg.vars;
  opts.density = cfg.density;
  opts.seed = cfg.seed;
  opts.labels = cfg.labels == "singletons" ? qsr::RandomNetworkOptions::Labels::singletons
                                           : qsr::RandomNetworkOptions::Labels::uniform;
  auto net = qsr::random_network(calc, opts);
  net.set_name(cfg.name);
  if (cfg.format == "json") std::cout << qsr::to_json(net).dump(2) << "\n";
  else std::cout << qsr::serialize_network(net);
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"qualitative spatial and temporal reasoning toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto *analyze = app.add_subcommand("analyze", "audit a calculus against the axiom battery");
  analyze->add_option("path", cfg.spec_positional, "calculus spec file");
  add_calc_options(analyze, cfg);
  add_format(analyze, cfg);
  analyze->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  analyze->add_option("--domain", cfg.domain, "tuple domain")
      ->check(CLI::IsMember({"base", "composite", "sampled"}));
  analyze->add_option("--samples", cfg.samples, "tuples per axiom for --domain sampled");
  analyze->add_option("--seed", cfg.seed, "sampling seed");

  auto *closure = app.add_subcommand("closure", "algebraic closure of a network");
  closure->add_option("file", cfg.network, "network file");
  closure->add_option("--network", cfg.network, "network file");
  add_calc_options(closure, cfg);
  add_format(closure, cfg);
  closure->add_option("--order", cfg.order, "queue discipline")
      ->check(CLI::IsMember({"fifo", "lifo", "shuffled"}));
  closure->add_option("--seed", cfg.seed, "seed for --order shuffled");

  auto *consistency = app.add_subcommand("consistency", "decide consistency by refinement search");
  consistency->add_option("file", cfg.network, "network file");
  consistency->add_option("--network", cfg.network, "network file");
  consistency->add_option("--model", cfg.model, "decide atomic leaves by brute force in this model");
  consistency->add_option("--budget", cfg.budget, "maximum valuations per leaf");
  add_calc_options(consistency, cfg);
  add_format(consistency, cfg);

  auto *model_check = app.add_subcommand("model-check", "check a calculus against a finite model");
  model_check->add_option("--model", cfg.model, "model file (default: builtin reference model)");
  model_check->add_option("--network", cfg.network, "network to solve by brute force");
  model_check->add_option("--budget", cfg.budget, "maximum valuations");
  add_calc_options(model_check, cfg);
  add_format(model_check, cfg);

  auto *gen = app.add_subcommand("gen", "generate a random network");
  add_calc_options(gen, cfg);
  add_format(gen, cfg);
  gen->add_option("--vars", cfg.vars, "number of variables");
  gen->add_option("--density", cfg.density, "fraction of constrained pairs")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--labels", cfg.labels, "label distribution")->check(CLI::IsMember({"uniform", "singletons"}));
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--name", cfg.name, "network name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (closure->parsed()) return cmd_closure(cfg);
    if (consistency->parsed()) return cmd_consistency(cfg);
    if (model_check->parsed()) return cmd_model_check(cfg);
    if (gen->parsed()) return cmd_gen(cfg);
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const qsr::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
