#include "qsr/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "qsr/error.hpp"

namespace qsr {

ConstraintNetwork::ConstraintNetwork(std::shared_ptr<const CalculusSpec> calculus,
                                     std::vector<std::string> vars, std::string name)
    : calculus_(std::move(calculus)), name_(std::move(name)), vars_(std::move(vars)) {
  if (!calculus_) throw Error("network needs a calculus");
  const auto n = vars_.size();
  cells_.assign(n * n, calculus_->universal());
  for (std::size_t i = 0; i < n; ++i) cell(i, i) = diagonal();
}

ConstraintNetwork::ConstraintNetwork(std::shared_ptr<const CalculusSpec> calculus, std::size_t n_vars)
    : ConstraintNetwork(std::move(calculus), [n_vars] {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n_vars; ++i) v.push_back("v" + std::to_string(i));
        return v;
      }()) {}

std::optional<std::size_t> ConstraintNetwork::var_index(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

RelationSet ConstraintNetwork::diagonal() const {
  return calculus_->identity() ? *calculus_->identity() : calculus_->universal();
}

RelationSet ConstraintNetwork::at(std::size_t i, std::size_t j) const {
  if (mode_ == StorageMode::triangular && i > j) return calculus_->converse(cell(j, i));
  return cell(i, j);
}

void ConstraintNetwork::set(std::size_t i, std::size_t j, const RelationSet &r) {
  if (mode_ == StorageMode::triangular && i > j) cell(j, i) = calculus_->converse(r);
  else cell(i, j) = r;
}

void ConstraintNetwork::constrain(std::size_t i, std::size_t j, const RelationSet &r) {
  if (mode_ == StorageMode::triangular) {
    set(i, j, at(i, j) & r);
    return;
  }
  cell(i, j) &= r;
  cell(j, i) &= calculus_->converse(r);
}

ConstraintNetwork ConstraintNetwork::to_full() const {
  ConstraintNetwork out = *this;
  if (mode_ == StorageMode::full) return out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j) out.cell(i, j) = at(i, j);
  out.mode_ = StorageMode::full;
  return out;
}

ConstraintNetwork ConstraintNetwork::to_triangular() const {
  ConstraintNetwork out = *this;
  out.mode_ = StorageMode::triangular;
  // Keep the derived half in sync so raw dumps stay readable.
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j) out.cell(i, j) = out.at(i, j);
  return out;
}

bool ConstraintNetwork::is_atomic() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || (mode_ == StorageMode::triangular && i > j)) continue;
      if (!cell(i, j).is_singleton()) return false;
    }
  return true;
}

bool ConstraintNetwork::has_empty() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (mode_ == StorageMode::triangular && i > j) continue;
      if (cell(i, j).none()) return true;
    }
  return false;
}

bool operator==(const ConstraintNetwork &a, const ConstraintNetwork &b) {
  if (a.calculus().id() != b.calculus().id() || a.vars_ != b.vars_) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

ConstraintNetwork normalize(std::shared_ptr<const CalculusSpec> calculus, const std::vector<Edge> &edges,
                            const std::optional<std::vector<std::string>> &declared) {
  std::vector<std::string> vars;
  if (declared) {
    vars = *declared;
  } else {
    for (const auto &e : edges)
      for (const auto *v : {&e.from, &e.to})
        if (std::find(vars.begin(), vars.end(), *v) == vars.end()) vars.push_back(*v);
  }
  ConstraintNetwork net(std::move(calculus), vars);
  for (const auto &e : edges) {
    auto i = net.var_index(e.from);
    auto j = net.var_index(e.to);
    if (!i || !j) throw Error("undeclared variable '" + (i ? e.to : e.from) + "'");
    if (*i == *j) throw Error("constraint relates variable '" + e.from + "' to itself");
    net.constrain(*i, *j, e.rel);
  }
  return net;
}

std::vector<Edge> edges(const ConstraintNetwork &net) {
  const auto &c = net.calculus();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (i == j) continue;
      const auto r = net.at(i, j);
      if (i < j) {
        if (!r.is_universal()) out.push_back({net.vars()[i], r, net.vars()[j]});
      } else if (r != c.converse(net.at(j, i))) {
        out.push_back({net.vars()[i], r, net.vars()[j]});
      }
    }
  return out;
}

ConstraintNetwork random_network(std::shared_ptr<const CalculusSpec> calculus,
                                 const RandomNetworkOptions &opts) {
  if (opts.n_vars < 2) throw Error("random network needs at least two variables");
  if (!(opts.density >= 0.0 && opts.density <= 1.0)) throw Error("density must lie in [0, 1]");
  const std::size_t n_rel = calculus->size();
  if (opts.labels == RandomNetworkOptions::Labels::uniform && n_rel < 2)
    throw Error("calculus has no non-empty proper relation");

  ConstraintNetwork net(calculus, opts.n_vars);
  std::mt19937_64 rng(opts.seed);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < opts.n_vars; ++i)
    for (std::size_t j = i + 1; j < opts.n_vars; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const auto chosen = static_cast<std::size_t>(std::llround(opts.density * static_cast<double>(pairs.size())));
  pairs.resize(std::min(chosen, pairs.size()));
  std::sort(pairs.begin(), pairs.end());

  std::uniform_int_distribution<std::size_t> pick_atom(0, n_rel - 1);
  std::bernoulli_distribution coin(0.5);
  for (auto [i, j] : pairs) {
    RelationSet label = calculus->empty();
    if (opts.labels == RandomNetworkOptions::Labels::singletons) {
      label.set(pick_atom(rng));
    } else {
      // Rejection sampling over all subsets: uniform on non-empty proper ones.
      do {
        label = calculus->empty();
        for (std::size_t r = 0; r < n_rel; ++r)
          if (coin(rng)) label.set(r);
      } while (label.none() || label.is_universal());
    }
    net.cell(i, j) = label;
    net.cell(j, i) = calculus->converse(label);
  }
  return net;
}

} // namespace qsr
