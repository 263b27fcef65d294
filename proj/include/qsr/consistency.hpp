#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "qsr/network.hpp"

namespace qsr {

enum class Verdict { consistent, inconsistent, closed_unknown };
std::string_view to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::inconsistent;
  std::optional<ConstraintNetwork> witness; // atomic refinement, iff consistent
  std::size_t nodes_explored = 0;           // a-closure runs
};

/// Decides an a-closed atomic network: true / false, or nullopt to defer to
/// the calculus's acl_decides_atomic flag.
using LeafOracle = std::function<std::optional<bool>(const ConstraintNetwork &)>;

struct SearchOptions {
  LeafOracle leaf_oracle;
};

/// Depth-first refinement search with a-closure at every node. Splits the
/// smallest non-singleton cell (ties to the lowest (i, j)) into base
/// relations in declaration order.
Decision decide(const ConstraintNetwork &net, const SearchOptions &opts = {});

void set_completeness(CalculusSpec &calculus, Tri flag);

} // namespace qsr
