#include "qsr/finite_model.hpp"

#include <cmath>
#include <map>

#include "qsr/aclosure.hpp"
#include "qsr/error.hpp"

namespace qsr {

JepdReport check_jepd(const FiniteInterpretation &model) {
  JepdReport out;
  const auto u = model.universe_size();
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = 0; b < u; ++b) {
      const auto hits = model.relations_between(a, b).size();
      if (hits == 0) out.uncovered.emplace_back(a, b);
      if (hits > 1) out.overlapping.emplace_back(a, b);
    }
  out.jointly_exhaustive = out.uncovered.empty();
  out.pairwise_disjoint = out.overlapping.empty();
  const auto n = model.calculus().size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      if (model.phi(r) == model.phi(s)) out.injective = false;
  return out;
}

PartitionSchemeReport check_partition_scheme(const FiniteInterpretation &model) {
  PartitionSchemeReport out;
  const auto &c = model.calculus();
  const auto id2 = PairSet::identity(model.universe_size());

  RelationSet inside = c.empty();
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (model.phi(r) == id2) out.has_identity = true;
    if (!model.phi(r).empty() && model.phi(r).is_subset_of(id2)) inside.set(r);
  }
  if (!inside.none() && model.phi(inside) == id2) out.identity_composite = inside;
  out.declared_identity_matches = c.identity() && model.phi(*c.identity()) == id2;

  out.converse_closed = true;
  for (std::size_t r = 0; r < c.size(); ++r) {
    const auto conv = model.phi(r).converse();
    bool found = false;
    for (std::size_t s = 0; s < c.size() && !found; ++s) found = model.phi(s) == conv;
    out.converse_closed = out.converse_closed && found;
  }
  return out;
}

PairSet domain_compose(const FiniteInterpretation &model, std::size_t r, std::size_t s) {
  return model.phi(r).compose(model.phi(s));
}

PairSet domain_converse(const FiniteInterpretation &model, std::size_t r) { return model.phi(r).converse(); }

std::string_view to_string(Strength s) {
  switch (s) {
  case Strength::strong: return "strong";
  case Strength::weak: return "weak";
  case Strength::abstract_only: return "abstract";
  case Strength::unsound: return "unsound";
  }
  return "unsound";
}

std::string_view to_string(Operation o) { return o == Operation::converse ? "converse" : "composition"; }

bool OperationReport::is_calculus() const {
  for (const auto &c : cells)
    if (!c.is_abstract) return false;
  return true;
}

bool OperationReport::all_strong() const {
  for (const auto &c : cells)
    if (!c.is_strong) return false;
  return true;
}

bool OperationReport::all_weak() const {
  for (const auto &c : cells)
    if (!c.is_weak) return false;
  return true;
}

bool OperationReport::all_abstract() const { return is_calculus(); }

std::string OperationReport::summary(const CalculusSpec &spec) const {
  auto at = [&](auto pred) {
    std::string s;
    for (const auto &c : cells) {
      if (!pred(c)) continue;
      s += s.empty() ? " at (" : ", (";
      for (std::size_t i = 0; i < c.args.size(); ++i) s += (i ? "," : "") + spec.symbol(c.args[i]);
      s += ")";
    }
    return s;
  };
  std::string out(to_string(operation));
  if (!is_calculus()) return out + ": unsound" + at([](const CellStrength &c) { return !c.is_abstract; });
  if (all_strong()) return out + ": strong";
  if (all_weak()) return out + ": weak, not strong";
  return out + ": abstract (not weak)" + at([](const CellStrength &c) { return !c.is_weak; });
}

namespace {

CellStrength grade(const FiniteInterpretation &model, std::vector<std::size_t> args, PairSet domain,
                   RelationSet table) {
  const auto &c = model.calculus();
  CellStrength cell{std::move(args), std::move(domain), c.empty(), std::move(table)};
  for (std::size_t t = 0; t < c.size(); ++t)
    if (model.phi(t).intersects(cell.domain)) cell.hull.set(t);
  const auto image = model.phi(cell.table);
  cell.is_strong = image == cell.domain;
  cell.is_weak = cell.table == cell.hull;
  cell.is_abstract = cell.domain.is_subset_of(image);
  if (cell.is_strong) cell.strength = Strength::strong;
  else if (cell.is_weak) cell.strength = Strength::weak;
  else if (cell.is_abstract) cell.strength = Strength::abstract_only;
  else cell.strength = Strength::unsound;
  return cell;
}

} // namespace

OperationReport classify_operation(const FiniteInterpretation &model, Operation which) {
  const auto &c = model.calculus();
  OperationReport out;
  out.operation = which;
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (which == Operation::converse) {
      out.cells.push_back(grade(model, {r}, domain_converse(model, r), c.converse_of(r)));
      continue;
    }
    for (std::size_t s = 0; s < c.size(); ++s)
      out.cells.push_back(grade(model, {r, s}, domain_compose(model, r, s), c.composition_of(r, s)));
  }
  return out;
}

std::optional<Valuation> brute_force_solve(const ConstraintNetwork &net, const FiniteInterpretation &model,
                                           const SolveOptions &opts) {
  if (net.calculus().id() != model.calculus().id()) throw CalculusMismatch();
  const std::size_t n = net.size();
  const std::size_t u = model.universe_size();
  const double space = std::pow(static_cast<double>(u), static_cast<double>(n));
  if (space > opts.budget)
    throw BudgetExceeded("search space " + std::to_string(u) + "^" + std::to_string(n) +
                         " exceeds the budget");

  std::vector<PairSet> allowed;
  allowed.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) allowed.push_back(model.phi(net.at(i, j)));

  Valuation psi(n, 0);
  std::size_t depth = 0;
  std::vector<std::size_t> next(n, 0);
  // Iterative backtracking: next[d] is the next element to try at depth d.
  while (true) {
    if (depth == n) return psi;
    bool placed = false;
    while (next[depth] < u && !placed) {
      const std::size_t e = next[depth]++;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k)
        ok = allowed[k * n + depth].contains(psi[k], e) && allowed[depth * n + k].contains(e, psi[k]);
      if (ok) {
        psi[depth] = e;
        placed = true;
      }
    }
    if (placed) {
      ++depth;
      if (depth < n) next[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
  }
}

CompletenessEvidence derive_atomic_completeness(const FiniteInterpretation &model, std::size_t max_vars) {
  CompletenessEvidence out;
  const auto &calc = model.calculus_ptr();
  const std::size_t n_rel = calc->size();
  constexpr double network_cap = 2e6;
  for (std::size_t k = 2; k <= max_vars; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    if (std::pow(static_cast<double>(n_rel), static_cast<double>(pairs.size())) > network_cap) break;
    std::vector<std::size_t> digits(pairs.size(), 0);
    while (true) {
      ConstraintNetwork net(calc, k);
      for (std::size_t p = 0; p < pairs.size(); ++p)
        net.constrain(pairs[p].first, pairs[p].second, calc->atom(digits[p]));
      ++out.networks_checked;
      const auto closed = a_closure(net);
      if (closed.status == ClosureStatus::closed && closed.network.is_atomic() &&
          !brute_force_solve(closed.network, model)) {
        out.verdict = Tri::no;
        out.counterexample = closed.network;
        return out;
      }
      std::size_t p = 0;
      while (p < digits.size() && ++digits[p] == n_rel) digits[p++] = 0;
      if (p == digits.size()) break;
    }
  }
  return out;
}

LeafOracle model_leaf_oracle(const FiniteInterpretation &model, const SolveOptions &opts) {
  return [model, opts](const ConstraintNetwork &net) -> std::optional<bool> {
    return brute_force_solve(net, model, opts).has_value();
  };
}

FiniteInterpretation chain_model(std::shared_ptr<const CalculusSpec> pc1, std::size_t n) {
  std::vector<std::string> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(std::to_string(i));
  FiniteInterpretation m(pc1, u, "chain" + std::to_string(n));
  const auto lt = *pc1->index_of("<"), eq = *pc1->index_of("="), gt = *pc1->index_of(">");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.phi(a < b ? lt : a == b ? eq : gt).insert(a, b);
  return m;
}

FiniteInterpretation orientation_model(std::shared_ptr<const CalculusSpec> cycb, std::size_t n) {
  std::vector<std::string> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(std::to_string(360 * i / n));
  FiniteInterpretation m(cycb, u, "orientations" + std::to_string(n));
  const auto e = *cycb->index_of("e"), o = *cycb->index_of("o"), l = *cycb->index_of("l"),
             r = *cycb->index_of("r");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // b measured counter-clockwise from a; l when b lies to the left of a.
      const std::size_t d = (b + n - a) % n;
      const std::size_t s = d == 0 ? e : 2 * d == n ? o : 2 * d < n ? l : r;
      m.phi(s).insert(a, b);
    }
  return m;
}

namespace {

FiniteInterpretation from_pairs(std::shared_ptr<const CalculusSpec> calc, std::string name,
                                std::vector<std::string> universe,
                                const std::map<std::string, std::vector<ElementPair>> &phi) {
  FiniteInterpretation m(calc, std::move(universe), std::move(name));
  for (const auto &[sym, pairs] : phi)
    for (auto [a, b] : pairs) m.phi(*calc->index_of(sym)).insert(a, b);
  return m;
}

FiniteInterpretation rcc5_model(std::shared_ptr<const CalculusSpec> calc) {
  // Regions are the non-empty subsets of {1,2,3}, named by their members.
  std::vector<unsigned> masks;
  std::vector<std::string> names;
  for (unsigned m = 1; m < 8; ++m) {
    masks.push_back(m);
    std::string s;
    for (unsigned b = 0; b < 3; ++b)
      if (m >> b & 1) s += std::to_string(b + 1);
    names.push_back(s);
  }
  FiniteInterpretation model(calc, names, "subsets3");
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = 0; b < masks.size(); ++b) {
      const unsigned x = masks[a], y = masks[b];
      std::string_view sym = x == y             ? "EQ"
                             : (x & y) == 0     ? "DC"
                             : (x & y) == x     ? "PP"
                             : (x & y) == y     ? "PPi"
                                                : "PO";
      model.phi(*calc->index_of(sym)).insert(a, b);
    }
  return model;
}

} // namespace

FiniteInterpretation builtin_model(std::string_view name, std::shared_ptr<const CalculusSpec> calculus) {
  if (calculus->name() != name) throw Error("model '" + std::string(name) + "' needs calculus '" +
                                            std::string(name) + "', got '" + calculus->name() + "'");
  if (name == "pc1") return chain_model(calculus, 3);
  if (name == "rcc5") return rcc5_model(calculus);
  if (name == "cycb") return orientation_model(calculus, 4);
  if (name == "appendixB1")
    return from_pairs(calculus, "appendixB1", {"0", "1"},
                      {{"r1", {{0, 0}, {0, 1}}}, {"r2", {{1, 0}, {1, 1}}}});
  if (name == "appendixB2")
    return from_pairs(calculus, "appendixB2", {"0", "1"},
                      {{"r1", {{0, 0}}}, {"r2", {{1, 1}}}, {"r3", {{0, 1}}}, {"r4", {{1, 0}}}});
  if (name == "appendixB-remark")
    return from_pairs(calculus, "appendixB-remark", {"0", "1"},
                      {{"r1", {{0, 0}, {1, 1}}}, {"r2", {{0, 1}, {1, 0}}}});
  throw UnknownCalculus(std::string(name));
}

} // namespace qsr
