#include "qsr/aclosure.hpp"

#include <deque>
#include <random>
#include <vector>

namespace qsr {

namespace {

class WorkQueue {
public:
  WorkQueue(std::size_t n, const ClosureOptions &opts)
      : n_(n), order_(opts.order), rng_(opts.seed), queued_(n * n, false) {}

  void push(std::size_t i, std::size_t j) {
    if (queued_[i * n_ + j]) return;
    queued_[i * n_ + j] = true;
    items_.emplace_back(i, j);
  }

  bool empty() const { return items_.empty(); }

  std::pair<std::size_t, std::size_t> pop() {
    std::pair<std::size_t, std::size_t> out;
    switch (order_) {
    case QueueOrder::fifo:
      out = items_.front();
      items_.pop_front();
      break;
    case QueueOrder::lifo:
      out = items_.back();
      items_.pop_back();
      break;
    case QueueOrder::shuffled: {
      std::uniform_int_distribution<std::size_t> pick(0, items_.size() - 1);
      const auto k = pick(rng_);
      std::swap(items_[k], items_.back());
      out = items_.back();
      items_.pop_back();
      break;
    }
    }
    queued_[out.first * n_ + out.second] = false;
    return out;
  }

private:
  std::size_t n_;
  QueueOrder order_;
  std::mt19937_64 rng_;
  std::vector<bool> queued_;
  std::deque<std::pair<std::size_t, std::size_t>> items_;
};

void store(ConstraintNetwork &net, std::size_t i, std::size_t j, const RelationSet &r, bool s) {
  if (s) net.cell(i, j) = r;
  else net.set(i, j, r);
}

} // namespace

RelationSet lookup(const ConstraintNetwork &net, std::size_t i, std::size_t j, bool s) {
  if (s || i < j) return net.cell(i, j);
  return net.calculus().converse(net.cell(j, i));
}

Revision revise(ConstraintNetwork &net, std::size_t i, std::size_t j, std::size_t k, bool s,
                std::size_t *revisions) {
  const auto &c = net.calculus();
  const RelationSet old_ij = lookup(net, i, j, s);
  RelationSet r = old_ij & c.compose(lookup(net, i, k, s), lookup(net, k, j, s));
  bool updated = false;

  if (c.flags().ra9_holds != Tri::yes || s) {
    const RelationSet old_ji = lookup(net, j, i, s);
    RelationSet r2 = old_ji & c.compose(lookup(net, j, k, s), lookup(net, k, i, s));
    r &= c.converse(r2);
    r2 &= c.converse(r);
    if (r2 != old_ji) {
      store(net, j, i, r2, s);
      updated = true;
      if (revisions) ++*revisions;
      if (r2.none()) return Revision::inconsistent;
    }
  }
  if (r != lookup(net, i, j, s)) {
    store(net, i, j, r, s);
    updated = true;
    if (revisions) ++*revisions;
    if (r.none()) return Revision::inconsistent;
  }
  return updated ? Revision::updated : Revision::unchanged;
}

ClosureOutcome a_closure(const ConstraintNetwork &input, const ClosureOptions &opts) {
  const auto &c = input.calculus();
  const std::size_t n = input.size();
  ClosureOutcome out{ClosureStatus::closed, input.to_full(), 0, 0, std::nullopt, false, true};
  ConstraintNetwork &net = out.network;

  // Strong 2-consistency.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const RelationSet r = net.cell(i, j) & c.converse(net.cell(j, i));
      if (r != net.cell(i, j)) {
        net.cell(i, j) = r;
        ++out.revisions;
      }
      if (r.none()) {
        out.status = ClosureStatus::inconsistent;
        out.conflict = {i, j};
        out.at_two_consistency = true;
        return out;
      }
    }

  const bool s = c.flags().ra7_holds != Tri::yes;
  out.full_storage = s;
  if (!s) net = net.to_triangular();

  WorkQueue queue(n, opts);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (s || i < j)) queue.push(i, j);

  auto enqueue = [&](std::size_t a, std::size_t b) {
    if (s) {
      queue.push(a, b);
      queue.push(b, a);
    } else {
      queue.push(std::min(a, b), std::max(a, b));
    }
  };
  auto fail = [&](std::size_t a, std::size_t b) {
    out.status = ClosureStatus::inconsistent;
    out.conflict = {a, b};
    net = net.to_full();
    return out;
  };

  while (!queue.empty()) {
    const auto [i, j] = queue.pop();
    ++out.queue_pops;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      switch (revise(net, i, k, j, s, &out.revisions)) {
      case Revision::inconsistent: return fail(i, k);
      case Revision::updated: enqueue(i, k); break;
      case Revision::unchanged: break;
      }
      switch (revise(net, k, j, i, s, &out.revisions)) {
      case Revision::inconsistent: return fail(k, j);
      case Revision::updated: enqueue(k, j); break;
      case Revision::unchanged: break;
      }
    }
  }
  net = net.to_full();
  return out;
}

} // namespace qsr
