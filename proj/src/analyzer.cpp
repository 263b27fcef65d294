#include "qsr/analyzer.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <thread>

#include "qsr/error.hpp"

namespace qsr {

namespace {

struct Verdict {
  bool sub_ok;
  bool sup_ok;
  RelationSet lhs;
  RelationSet rhs;
};

Verdict inclusion(RelationSet lhs, RelationSet rhs) {
  const bool sub = lhs.is_subset_of(rhs);
  const bool sup = rhs.is_subset_of(lhs);
  return {sub, sup, std::move(lhs), std::move(rhs)};
}

// One tuple of the battery. `id` is only dereferenced for axioms that need it.
Verdict evaluate(const CalculusSpec &c, Axiom a, const RelationSet *args, const RelationSet *id) {
  const RelationSet one = c.universal();
  const auto &r = args[0];
  switch (a) {
  case Axiom::R1:
    return inclusion(r | args[1], args[1] | r);
  case Axiom::R2:
    return inclusion(r | (args[1] | args[2]), (r | args[1]) | args[2]);
  case Axiom::R3: {
    const auto &s = args[1];
    return inclusion(~(~r | ~s) | ~(~r | s), r);
  }
  case Axiom::R4: {
    const auto &s = args[1];
    const auto &t = args[2];
    return inclusion(c.compose(c.compose(r, s), t), c.compose(r, c.compose(s, t)));
  }
  case Axiom::R5: {
    const auto &s = args[1];
    const auto &t = args[2];
    return inclusion(c.compose(r | s, t), c.compose(r, t) | c.compose(s, t));
  }
  case Axiom::R6:
    return inclusion(c.compose(r, *id), r);
  case Axiom::R6l:
    return inclusion(c.compose(*id, r), r);
  case Axiom::R7:
    return inclusion(c.converse(c.converse(r)), r);
  case Axiom::R8:
    return inclusion(c.converse(r | args[1]), c.converse(r) | c.converse(args[1]));
  case Axiom::R9: {
    const auto &s = args[1];
    return inclusion(c.converse(c.compose(r, s)), c.compose(c.converse(s), c.converse(r)));
  }
  case Axiom::R10: {
    const auto &s = args[1];
    return inclusion(c.compose(c.converse(r), ~c.compose(r, s)) | ~s, ~s);
  }
  case Axiom::WA: {
    const auto base = c.compose(r & *id, one);
    return inclusion(c.compose(base, one), base);
  }
  case Axiom::SA: {
    const auto base = c.compose(r, one);
    return inclusion(c.compose(base, one), base);
  }
  case Axiom::PL: {
    const auto &s = args[1];
    const auto &t = args[2];
    auto lhs = c.compose(r, s) & c.converse(t);
    auto rhs = c.compose(s, t) & c.converse(r);
    const bool right = !lhs.none() || rhs.none();
    const bool left = !rhs.none() || lhs.none();
    return {right, left, std::move(lhs), std::move(rhs)};
  }
  }
  return {true, true, c.empty(), c.empty()};
}

struct Partial {
  std::size_t violations = 0;
  std::size_t sub_violations = 0;
  std::size_t sup_violations = 0;
  std::vector<Counterexample> sub_examples;
  std::vector<Counterexample> sup_examples;
};

Counterexample make_example(const CalculusSpec &c, const std::vector<RelationSet> &args,
                            const Verdict &v) {
  Counterexample ex;
  for (const auto &a : args) ex.args.push_back(c.names(a));
  ex.lhs = c.names(v.lhs);
  ex.rhs = c.names(v.rhs);
  return ex;
}

// Domain of tuple components: either an explicit element list, or explicit
// tuples (sampling).
struct TupleSource {
  std::vector<RelationSet> elements;
  std::vector<std::vector<RelationSet>> tuples;
  std::size_t arity = 1;

  std::size_t size() const {
    if (!tuples.empty()) return tuples.size();
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) n *= elements.size();
    return n;
  }

  void fill(std::size_t index, std::vector<RelationSet> &out) const {
    if (!tuples.empty()) {
      out = tuples[index];
      return;
    }
    const std::size_t n = elements.size();
    for (std::size_t k = arity; k-- > 0;) {
      out[k] = elements[index % n];
      index /= n;
    }
  }
};

TupleSource make_source(const CalculusSpec &c, std::size_t arity, const AnalyzeOptions &opts) {
  TupleSource src;
  src.arity = arity;
  switch (opts.domain) {
  case AnalyzeOptions::Domain::base:
    for (std::size_t i = 0; i < c.size(); ++i) src.elements.push_back(c.atom(i));
    break;
  case AnalyzeOptions::Domain::composite_exhaustive: {
    if (c.size() * arity >= 63 ||
        (std::size_t{1} << (c.size() * arity)) > opts.exhaustive_limit)
      throw Error("composite enumeration over " + std::to_string(c.size()) +
                  " relations exceeds the tuple limit; use sampling");
    const std::size_t subsets = std::size_t{1} << c.size();
    for (std::size_t m = 0; m < subsets; ++m) {
      RelationSet r = c.empty();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (m >> i & 1) r.set(i);
      src.elements.push_back(std::move(r));
    }
    break;
  }
  case AnalyzeOptions::Domain::composite_sampled: {
    std::mt19937_64 rng(opts.seed);
    std::bernoulli_distribution coin(0.5);
    src.tuples.reserve(opts.samples);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      std::vector<RelationSet> tuple;
      for (std::size_t a = 0; a < arity; ++a) {
        RelationSet r = c.empty();
        for (std::size_t i = 0; i < c.size(); ++i)
          if (coin(rng)) r.set(i);
        tuple.push_back(std::move(r));
      }
      src.tuples.push_back(std::move(tuple));
    }
    break;
  }
  }
  return src;
}

Partial run_range(const CalculusSpec &c, Axiom a, const TupleSource &src, const RelationSet *id,
                  std::size_t begin, std::size_t end, std::size_t max_examples) {
  Partial p;
  std::vector<RelationSet> args(src.arity);
  for (std::size_t i = begin; i < end; ++i) {
    src.fill(i, args);
    const Verdict v = evaluate(c, a, args.data(), id);
    if (v.sub_ok && v.sup_ok) continue;
    ++p.violations;
    if (!v.sub_ok) {
      ++p.sub_violations;
      if (p.sub_examples.size() < max_examples) p.sub_examples.push_back(make_example(c, args, v));
    }
    if (!v.sup_ok) {
      ++p.sup_violations;
      if (p.sup_examples.size() < max_examples) p.sup_examples.push_back(make_example(c, args, v));
    }
  }
  return p;
}

std::string side_id(Axiom a, bool first) {
  std::string base(to_string(a));
  if (a == Axiom::PL) return base + (first ? "right" : "left");
  return base + (first ? "sub" : "sup");
}

} // namespace

const std::vector<Axiom> &all_axioms() {
  static const std::vector<Axiom> all{Axiom::R1, Axiom::R2,  Axiom::R3, Axiom::R4, Axiom::R5,
                                      Axiom::R6, Axiom::R6l, Axiom::R7, Axiom::R8, Axiom::R9,
                                      Axiom::R10, Axiom::WA, Axiom::SA, Axiom::PL};
  return all;
}

std::string_view to_string(Axiom a) {
  static constexpr std::array<std::string_view, 14> names{
      "R1", "R2", "R3", "R4", "R5", "R6", "R6l", "R7", "R8", "R9", "R10", "WA", "SA", "PL"};
  return names[static_cast<std::size_t>(a)];
}

std::optional<Axiom> parse_axiom(std::string_view s) {
  for (Axiom a : all_axioms())
    if (to_string(a) == s) return a;
  return std::nullopt;
}

std::size_t arity(Axiom a) {
  switch (a) {
  case Axiom::R6:
  case Axiom::R6l:
  case Axiom::R7:
  case Axiom::WA:
  case Axiom::SA:
    return 1;
  case Axiom::R1:
  case Axiom::R3:
  case Axiom::R8:
  case Axiom::R9:
  case Axiom::R10:
    return 2;
  case Axiom::R2:
  case Axiom::R4:
  case Axiom::R5:
  case Axiom::PL:
    return 3;
  }
  return 1;
}

bool needs_identity(Axiom a) { return a == Axiom::R6 || a == Axiom::R6l || a == Axiom::WA; }

std::string_view to_string(Classification c) {
  switch (c) {
  case Classification::RA: return "RA";
  case Classification::RA_minus_id: return "RA_minus_id";
  case Classification::SA: return "SA";
  case Classification::WA: return "WA";
  case Classification::NA_or_weaker: return "NA_or_weaker";
  }
  return "NA_or_weaker";
}

std::optional<Classification> parse_classification(std::string_view s) {
  for (auto c : {Classification::RA, Classification::RA_minus_id, Classification::SA,
                 Classification::WA, Classification::NA_or_weaker})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

const AxiomRecord &AxiomReport::record(Axiom a) const {
  for (const auto &r : records)
    if (r.axiom == a) return r;
  throw Error("axiom " + std::string(to_string(a)) + " not in report");
}

std::vector<std::string> AxiomReport::violated_sides() const {
  std::vector<std::string> out;
  for (const auto &r : records) {
    if (!r.applicable) continue;
    if (!r.sub.holds()) out.push_back(r.sub.id);
    if (!r.sup.holds()) out.push_back(r.sup.id);
  }
  return out;
}

bool AxiomReport::all_hold() const {
  return std::all_of(records.begin(), records.end(), [](const AxiomRecord &r) { return r.holds(); });
}

AxiomRecord check_axiom(const CalculusSpec &spec, Axiom axiom, const AnalyzeOptions &opts) {
  AxiomRecord rec;
  rec.axiom = axiom;
  rec.sub.id = side_id(axiom, true);
  rec.sup.id = side_id(axiom, false);
  if (needs_identity(axiom) && !spec.identity()) {
    rec.applicable = false;
    return rec;
  }
  const RelationSet *id = spec.identity() ? &*spec.identity() : nullptr;

  const TupleSource src = make_source(spec, arity(axiom), opts);
  const std::size_t total = src.size();
  rec.universe = total;

  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(1, total));
  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    parts[0] = run_range(spec, axiom, src, id, 0, total, opts.max_examples);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = total * j / jobs;
      const std::size_t end = total * (j + 1) / jobs;
      workers.emplace_back([&, j, begin, end] {
        parts[j] = run_range(spec, axiom, src, id, begin, end, opts.max_examples);
      });
    }
    for (auto &w : workers) w.join();
  }

  for (auto &p : parts) {
    rec.violations += p.violations;
    rec.sub.violations += p.sub_violations;
    rec.sup.violations += p.sup_violations;
    for (auto &e : p.sub_examples)
      if (rec.sub.examples.size() < opts.max_examples) rec.sub.examples.push_back(std::move(e));
    for (auto &e : p.sup_examples)
      if (rec.sup.examples.size() < opts.max_examples) rec.sup.examples.push_back(std::move(e));
  }
  return rec;
}

AxiomReport classify(const CalculusSpec &spec, const AnalyzeOptions &opts) {
  AxiomReport report;
  report.calculus = spec.name();
  report.relations = spec.size();
  for (Axiom a : all_axioms()) report.records.push_back(check_axiom(spec, a, opts));

  auto holds = [&](Axiom a) { return report.holds(a); };
  auto all = [&](std::initializer_list<Axiom> as) {
    return std::all_of(as.begin(), as.end(), holds);
  };
  const bool na = all({Axiom::R1, Axiom::R2, Axiom::R3, Axiom::R5, Axiom::R6, Axiom::R7, Axiom::R8,
                       Axiom::R9, Axiom::R10});
  const bool ra_minus_id = all({Axiom::R1, Axiom::R2, Axiom::R3, Axiom::R4, Axiom::R5, Axiom::R7,
                                Axiom::R8, Axiom::R9, Axiom::R10});
  if (na && holds(Axiom::R4)) report.classification = Classification::RA;
  else if (na && holds(Axiom::SA)) report.classification = Classification::SA;
  else if (na && holds(Axiom::WA)) report.classification = Classification::WA;
  else if (ra_minus_id) report.classification = Classification::RA_minus_id;
  else report.classification = Classification::NA_or_weaker;

  // Flags are defined over base relations; composite checks agree for R7 and
  // R9 since both operations distribute over union.
  if (opts.domain == AnalyzeOptions::Domain::base) {
    report.ra7_holds = holds(Axiom::R7) ? Tri::yes : Tri::no;
    report.ra9_holds = holds(Axiom::R9) ? Tri::yes : Tri::no;
  } else {
    report.ra7_holds = check_axiom(spec, Axiom::R7).holds() ? Tri::yes : Tri::no;
    report.ra9_holds = check_axiom(spec, Axiom::R9).holds() ? Tri::yes : Tri::no;
  }
  return report;
}

void compute_flags(CalculusSpec &spec) {
  spec.flags().ra7_holds = check_axiom(spec, Axiom::R7).holds() ? Tri::yes : Tri::no;
  spec.flags().ra9_holds = check_axiom(spec, Axiom::R9).holds() ? Tri::yes : Tri::no;
}

R6Equivalence r6_r6l_equivalence_check(const CalculusSpec &spec) {
  R6Equivalence out;
  if (!spec.identity()) return out;
  if (!check_axiom(spec, Axiom::R7).holds() || !check_axiom(spec, Axiom::R9).holds()) return out;
  out.applicable = true;
  out.r6 = check_axiom(spec, Axiom::R6).holds();
  out.r6l = check_axiom(spec, Axiom::R6l).holds();
  return out;
}

} // namespace qsr
