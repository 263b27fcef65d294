#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "qsr/network.hpp"

namespace qsr {

enum class QueueOrder { fifo, lifo, shuffled };

struct ClosureOptions {
  QueueOrder order = QueueOrder::fifo;
  std::uint64_t seed = 0; // for QueueOrder::shuffled
};

enum class ClosureStatus { closed, inconsistent };

struct ClosureOutcome {
  ClosureStatus status = ClosureStatus::closed;
  // Refined network in full storage mode. On inconsistency, the state at the
  // moment the empty relation appeared.
  ConstraintNetwork network;
  std::size_t revisions = 0;
  std::size_t queue_pops = 0;
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
  bool at_two_consistency = false; // emptied by the initial converse step
  bool full_storage = true;        // s: whether the full matrix was kept
};

/// C[i][j] if s or i < j, else converse(C[j][i]).
RelationSet lookup(const ConstraintNetwork &net, std::size_t i, std::size_t j, bool s);

enum class Revision { unchanged, updated, inconsistent };

/// Refine C[i][j] through k. When R9 is not known to hold, or the full matrix
/// is stored, C[j][i] is refined as well and both sides are tightened with
/// each other's converse. `revisions` counts stored cell updates.
Revision revise(ConstraintNetwork &net, std::size_t i, std::size_t j, std::size_t k, bool s,
                std::size_t *revisions = nullptr);

/// Algebraic closure for any binary calculus. Storage is triangular only if
/// the calculus is flagged R7 = yes; the double revision is skipped only if
/// it is flagged R9 = yes.
ClosureOutcome a_closure(const ConstraintNetwork &net, const ClosureOptions &opts = {});

} // namespace qsr
