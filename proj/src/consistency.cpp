#include "qsr/consistency.hpp"

#include "qsr/aclosure.hpp"

namespace qsr {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::consistent: return "consistent";
  case Verdict::inconsistent: return "inconsistent";
  case Verdict::closed_unknown: return "closed_unknown";
  }
  return "inconsistent";
}

void set_completeness(CalculusSpec &calculus, Tri flag) { calculus.flags().acl_decides_atomic = flag; }

namespace {

struct Search {
  const SearchOptions &opts;
  Decision result;
  bool unknown_leaf = false;

  // Cells that carry information: all off-diagonal cells, or only i < j when
  // the converse is strong.
  static std::optional<std::pair<std::size_t, std::size_t>> pick(const ConstraintNetwork &net) {
    const bool upper_only = net.calculus().flags().ra7_holds == Tri::yes;
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = 0; j < net.size(); ++j) {
        if (i == j || (upper_only && i > j)) continue;
        const auto count = net.at(i, j).count();
        if (count > 1 && (!best || count < best_count)) {
          best = {i, j};
          best_count = count;
        }
      }
    return best;
  }

  bool leaf(const ConstraintNetwork &net) {
    std::optional<bool> answer;
    if (opts.leaf_oracle) answer = opts.leaf_oracle(net);
    if (!answer) {
      switch (net.calculus().flags().acl_decides_atomic) {
      case Tri::yes: answer = true; break;
      case Tri::no:
      case Tri::unknown: unknown_leaf = true; return false;
      }
    }
    if (*answer) {
      result.verdict = Verdict::consistent;
      result.witness = net;
    }
    return *answer;
  }

  bool visit(const ConstraintNetwork &net) {
    ++result.nodes_explored;
    const auto closed = a_closure(net);
    if (closed.status == ClosureStatus::inconsistent) return false;
    const auto cell = pick(closed.network);
    if (!cell) return leaf(closed.network);
    const auto [i, j] = *cell;
    const auto label = closed.network.at(i, j);
    for (std::size_t r = label.first(); r < label.width(); r = label.next(r + 1)) {
      ConstraintNetwork child = closed.network;
      child.constrain(i, j, net.calculus().atom(r));
      if (visit(child)) return true;
    }
    return false;
  }
};

} // namespace

Decision decide(const ConstraintNetwork &net, const SearchOptions &opts) {
  Search search{opts, {}};
  if (!search.visit(net))
    search.result.verdict = search.unknown_leaf ? Verdict::closed_unknown : Verdict::inconsistent;
  return std::move(search.result);
}

} // namespace qsr
