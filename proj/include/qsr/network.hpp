#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsr/calculus.hpp"

namespace qsr {

class FiniteInterpretation;

enum class StorageMode { full, triangular };

/// A qualitative constraint network: variables plus one relation per ordered
/// pair. In triangular mode only cells with i < j are authoritative and the
/// rest are read as converses; in full mode every cell is stored.
///
/// Diagonal cells hold the calculus identity when one is designated and the
/// universal relation otherwise. Unconstrained pairs hold the universal
/// relation.
class ConstraintNetwork {
public:
  ConstraintNetwork(std::shared_ptr<const CalculusSpec> calculus, std::vector<std::string> vars,
                    std::string name = {});
  // Unnamed variables v0, v1, ...
  ConstraintNetwork(std::shared_ptr<const CalculusSpec> calculus, std::size_t n_vars);

  const CalculusSpec &calculus() const noexcept { return *calculus_; }
  const std::shared_ptr<const CalculusSpec> &calculus_ptr() const noexcept { return calculus_; }
  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<std::string> &vars() const noexcept { return vars_; }
  std::optional<std::size_t> var_index(std::string_view name) const;
  StorageMode mode() const noexcept { return mode_; }

  // Effective relation on (i, j), honouring the storage mode.
  RelationSet at(std::size_t i, std::size_t j) const;
  // Store r as the relation on (i, j). In triangular mode a write to i > j
  // stores the converse into (j, i).
  void set(std::size_t i, std::size_t j, const RelationSet &r);
  // Intersect (i, j) with r and (j, i) with r's converse.
  void constrain(std::size_t i, std::size_t j, const RelationSet &r);

  // Raw storage, ignoring the mode.
  const RelationSet &cell(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  RelationSet &cell(std::size_t i, std::size_t j) { return cells_[i * size() + j]; }

  RelationSet diagonal() const;

  ConstraintNetwork to_full() const;
  ConstraintNetwork to_triangular() const;

  // Every authoritative off-diagonal cell is a base relation.
  bool is_atomic() const;
  bool has_empty() const;

  // Same calculus, variables and effective relations.
  friend bool operator==(const ConstraintNetwork &a, const ConstraintNetwork &b);

private:
  std::shared_ptr<const CalculusSpec> calculus_;
  std::string name_;
  std::vector<std::string> vars_;
  std::vector<RelationSet> cells_;
  StorageMode mode_ = StorageMode::full;
};

struct Edge {
  std::string from;
  RelationSet rel;
  std::string to;
};

/// Build the normalized network: every pair intersects all constraints given
/// for it and the converses of constraints given in the opposite direction.
/// Variables are the declared list if supplied (unknown names throw Error),
/// otherwise taken in order of first appearance.
ConstraintNetwork normalize(std::shared_ptr<const CalculusSpec> calculus, const std::vector<Edge> &edges,
                            const std::optional<std::vector<std::string>> &declared = std::nullopt);

/// Edges for every non-universal (i, j) with i < j, plus (i, j) with i > j
/// where the stored cell is not the converse of (j, i).
std::vector<Edge> edges(const ConstraintNetwork &net);

/// Assignment of universe element indices to variables, by variable index.
using Valuation = std::vector<std::size_t>;

struct RandomNetworkOptions {
  enum class Labels { uniform, singletons };
  std::size_t n_vars = 8;
  double density = 0.5;
  Labels labels = Labels::uniform;
  std::uint64_t seed = 0;
};

/// round(density * n(n-1)/2) unordered pairs, chosen uniformly, receive a
/// uniformly drawn non-empty proper relation (or a base relation); all other
/// pairs stay universal. Deterministic in the seed.
ConstraintNetwork random_network(std::shared_ptr<const CalculusSpec> calculus,
                                 const RandomNetworkOptions &opts);

/// Text format:
///
///     network "fig"
///     calculus pc1
///     vars A B C
///     A (<) B
///     B (< =) C
///
/// The calculus line must name the supplied calculus. Throws ParseError.
ConstraintNetwork parse_network(std::string_view text, std::shared_ptr<const CalculusSpec> calculus);
ConstraintNetwork load_network_file(const std::string &path, std::shared_ptr<const CalculusSpec> calculus);
// Value of the `calculus` line, if any; lets callers pick the calculus first.
std::optional<std::string> network_calculus_name(std::string_view text);
std::string serialize_network(const ConstraintNetwork &net);

/// {"name", "calculus", "vars", "matrix": [[[sym...]...]...]} with the full
/// effective matrix.
nlohmann::json to_json(const ConstraintNetwork &net);
ConstraintNetwork network_from_json(const nlohmann::json &j, std::shared_ptr<const CalculusSpec> calculus);

/// True iff every off-diagonal pair (i, j) has ψ(i), ψ(j) related by some
/// base relation of the cell under the model. Throws Error if the valuation
/// is not total.
bool satisfies(const ConstraintNetwork &net, const Valuation &valuation, const FiniteInterpretation &model);

} // namespace qsr
