#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsr/consistency.hpp"
#include "qsr/interpretation.hpp"
#include "qsr/network.hpp"

namespace qsr {

using ElementPair = std::pair<std::size_t, std::size_t>;

struct JepdReport {
  bool jointly_exhaustive = true;
  bool pairwise_disjoint = true;
  bool injective = true;
  std::vector<ElementPair> uncovered;   // in no image
  std::vector<ElementPair> overlapping; // in two or more images

  bool holds() const noexcept { return jointly_exhaustive && pairwise_disjoint; }
};

JepdReport check_jepd(const FiniteInterpretation &model);

struct PartitionSchemeReport {
  // id² is the image of a single base relation.
  bool has_identity = false;
  // id² is the image of some composite relation (the union of base relations
  // inside it), if any.
  std::optional<RelationSet> identity_composite;
  // The calculus designates an identity and its image is id².
  bool declared_identity_matches = false;
  // Every image's converse is again an image.
  bool converse_closed = false;
};

PartitionSchemeReport check_partition_scheme(const FiniteInterpretation &model);

PairSet domain_compose(const FiniteInterpretation &model, std::size_t r, std::size_t s);
PairSet domain_converse(const FiniteInterpretation &model, std::size_t r);

enum class Strength { strong, weak, abstract_only, unsound };
std::string_view to_string(Strength s);

enum class Operation { converse, composition };
std::string_view to_string(Operation o);

struct CellStrength {
  std::vector<std::size_t> args; // one symbol (converse) or two (composition)
  PairSet domain;                // D: domain-level result
  RelationSet hull;              // W: symbols whose image meets D
  RelationSet table;             // T: the table cell
  bool is_strong = false;        // φ(T) = D
  bool is_weak = false;          // T = W
  bool is_abstract = false;      // φ(T) ⊇ D
  Strength strength = Strength::unsound;
};

struct OperationReport {
  Operation operation = Operation::composition;
  std::vector<CellStrength> cells;

  bool is_calculus() const;  // no unsound cell
  bool all_strong() const;
  bool all_weak() const;     // every cell weak (strong cells included when weak)
  bool all_abstract() const; // same as is_calculus
  // "composition: weak, not strong", "converse: strong",
  // "composition: abstract (not weak) at (r3,r4)", ...
  std::string summary(const CalculusSpec &spec) const;
};

OperationReport classify_operation(const FiniteInterpretation &model, Operation which);

struct SolveOptions {
  // Upper bound on |U|^|V|; larger instances throw BudgetExceeded.
  double budget = 1e8;
};

/// Backtracking search for a satisfying valuation, variables in index order
/// and elements in universe order.
std::optional<Valuation> brute_force_solve(const ConstraintNetwork &net, const FiniteInterpretation &model,
                                           const SolveOptions &opts = {});

/// Search atomic networks with up to max_vars variables for one that is
/// a-closed but has no solution in the model. Returns Tri::no with that
/// network if found, otherwise Tri::unknown (a finite search cannot prove
/// completeness).
struct CompletenessEvidence {
  Tri verdict = Tri::unknown;
  std::optional<ConstraintNetwork> counterexample;
  std::size_t networks_checked = 0;
};
CompletenessEvidence derive_atomic_completeness(const FiniteInterpretation &model, std::size_t max_vars = 4);

/// Leaf oracle for decide(): consistency of an atomic network in the model.
LeafOracle model_leaf_oracle(const FiniteInterpretation &model, const SolveOptions &opts = {});

/// Reference models for the builtin calculi: "pc1" (3-element chain),
/// "rcc5" (non-empty subsets of a 3-element set), "cycb" (4 orientations),
/// "appendixB1", "appendixB2", "appendixB-remark" (2 elements each).
FiniteInterpretation builtin_model(std::string_view name, std::shared_ptr<const CalculusSpec> calculus);

// pc1 over the chain 0 < 1 < ... < n-1.
FiniteInterpretation chain_model(std::shared_ptr<const CalculusSpec> pc1, std::size_t n);
// cycb over n evenly spaced orientations (n divisible by 4 gives o).
FiniteInterpretation orientation_model(std::shared_ptr<const CalculusSpec> cycb, std::size_t n);

} // namespace qsr
