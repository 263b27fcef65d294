#include <doctest.h>

#include "qsr/aclosure.hpp"
#include "qsr/analyzer.hpp"
#include "qsr/finite_model.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using qsr::ClosureStatus;
using qsr::QueueOrder;

namespace {

using Labels = qsr::RandomNetworkOptions::Labels;

bool matches_oracle(const qsr::ConstraintNetwork &net, const qsr::ClosureOutcome &out) {
  const auto ref = oracle::naive_closure(net);
  if (!ref) return out.status == ClosureStatus::inconsistent;
  if (out.status != ClosureStatus::closed) return false;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j)
      if (oracle::members(out.network.at(i, j)) != (*ref)[i][j]) return false;
  return true;
}

} // namespace

TEST_SUITE("aclosure") {

TEST_CASE("lookup") {
  const auto pc1 = fixture::calc("pc1");
  auto net = qsr::normalize(pc1, {{"A", pc1->relation({"<"}), "B"}});
  CHECK(qsr::lookup(net, 0, 1, false) == pc1->relation({"<"}));
  CHECK(qsr::lookup(net, 1, 0, false) == pc1->relation({">"}));
  net.cell(1, 0) = pc1->relation({">", "="});
  CHECK(qsr::lookup(net, 1, 0, true) == pc1->relation({">", "="}));
  CHECK(qsr::lookup(net, 1, 0, false) == pc1->relation({">"}));
}

TEST_CASE("revise") {
  const auto pc1 = fixture::calc("pc1");
  const auto lt = pc1->relation({"<"});
  auto net = qsr::normalize(pc1, {{"A", lt, "B"}, {"B", lt, "C"}});
  std::size_t revisions = 0;
  CHECK(qsr::revise(net, 0, 2, 1, false, &revisions) == qsr::Revision::updated);
  CHECK(net.at(0, 2) == lt);
  CHECK(revisions == 1);
  CHECK(qsr::revise(net, 0, 2, 1, false, &revisions) == qsr::Revision::unchanged);
  CHECK(revisions == 1);

  const auto rcc5 = fixture::calc("rcc5");
  const auto pp = rcc5->relation({"PP"});
  auto bad = qsr::normalize(rcc5, {{"A", pp, "B"}, {"B", pp, "C"}, {"A", rcc5->relation({"DC"}), "C"}});
  CHECK(qsr::revise(bad, 0, 2, 1, false) == qsr::Revision::inconsistent);
  CHECK(bad.at(0, 2).none());
}

TEST_CASE("double revision when R9 fails") {
  const auto b2 = fixture::calc("appendixB2");
  REQUIRE(b2->flags().ra9_holds == qsr::Tri::no);
  auto net = qsr::ConstraintNetwork(b2, 3);
  net.constrain(0, 1, b2->relation({"r3"}));
  net.constrain(1, 2, b2->relation({"r4"}));
  // Forward: r3;r4 = {r1,r4}. Backward: r4˘;r3˘ = r3;r4 = {r1,r4}, whose
  // converse {r1,r3} cuts the forward result down to {r1}.
  CHECK(qsr::revise(net, 0, 2, 1, true) == qsr::Revision::updated);
  CHECK(net.cell(0, 2) == b2->relation({"r1"}));
  CHECK(net.cell(2, 0) == b2->relation({"r1"}));
}

TEST_CASE("closing the incomplete point network infers A < C") {
  const auto pc1 = fixture::calc("pc1");
  const auto net = qsr::load_network_file(fixture::data("incomplete.net"), pc1);
  const auto out = qsr::a_closure(net);
  REQUIRE(out.status == ClosureStatus::closed);
  auto expected = net;
  expected.constrain(0, 2, pc1->relation({"<"}));
  CHECK(out.network == expected);
  CHECK_FALSE(out.full_storage);
}

TEST_CASE("closing the 4-chain") {
  const auto pc1 = fixture::calc("pc1");
  const auto out = qsr::a_closure(qsr::load_network_file(fixture::data("chain4.net"), pc1));
  REQUIRE(out.status == ClosureStatus::closed);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const char *sym = i < j ? "<" : i == j ? "=" : ">";
      CHECK(out.network.at(i, j) == pc1->relation({sym}));
    }
}

TEST_CASE("contradictory pair fails at 2-consistency") {
  const auto pc1 = fixture::calc("pc1");
  const auto out = qsr::a_closure(qsr::load_network_file(fixture::data("contradiction.net"), pc1));
  CHECK(out.status == ClosureStatus::inconsistent);
  CHECK(out.at_two_consistency);
  REQUIRE(out.conflict);
}

TEST_CASE("unknown R7 takes the full-matrix branch") {
  auto spec = qsr::builtin("pc1");
  spec.flags().ra7_holds = qsr::Tri::unknown;
  spec.flags().ra9_holds = qsr::Tri::unknown;
  const auto c = std::make_shared<const qsr::CalculusSpec>(std::move(spec));
  const auto net = qsr::random_network(c, {6, 0.5, Labels::uniform, 9});
  const auto out = qsr::a_closure(net);
  CHECK(out.full_storage);
  CHECK(matches_oracle(net, out));
}

TEST_CASE("already closed networks need no revisions") {
  for (const auto *name : {"pc1", "rcc5", "cycb", "appendixB2"}) {
    const auto calc = fixture::calc(name);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto net = qsr::random_network(calc, {7, 0.5, Labels::uniform, seed});
      const auto once = qsr::a_closure(net);
      if (once.status != ClosureStatus::closed) continue;
      const auto twice = qsr::a_closure(once.network);
      CHECK(twice.status == ClosureStatus::closed);
      CHECK(twice.revisions == 0);
      CHECK(twice.network == once.network);
      // monotone
      for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = 0; j < net.size(); ++j) CHECK(once.network.at(i, j).is_subset_of(net.at(i, j)));
    }
  }
}

TEST_CASE("agreement with the naive fixpoint under every queue order") {
  std::vector<std::shared_ptr<const qsr::CalculusSpec>> calculi;
  for (const auto *name : {"pc1", "rcc5", "cycb", "appendixB2", "appendixB-remark"}) calculi.push_back(fixture::calc(name));
  // Random tables: permutation converses with arbitrary composition, so R9
  // (and often R4) fail.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto c = oracle::random_calculus(3 + seed % 4, 900 + seed, true);
    qsr::compute_flags(c);
    calculi.push_back(std::make_shared<const qsr::CalculusSpec>(std::move(c)));
  }
  std::size_t mismatches = 0, runs = 0;
  for (const auto &calc : calculi) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const double density = seed % 3 == 0 ? 0.3 : seed % 3 == 1 ? 0.6 : 1.0;
      const auto net = qsr::random_network(calc, {6, density, Labels::uniform, seed});
      for (auto order : {QueueOrder::fifo, QueueOrder::lifo, QueueOrder::shuffled}) {
        ++runs;
        mismatches += !matches_oracle(net, qsr::a_closure(net, {order, seed}));
      }
    }
  }
  CHECK(runs == calculi.size() * 180);
  CHECK(mismatches == 0);
}

TEST_CASE("solutions survive closure") {
  for (const auto *name : {"pc1", "cycb", "appendixB2", "appendixB-remark", "appendixB1"}) {
    const auto calc = fixture::calc(name);
    const auto model = qsr::builtin_model(name, calc);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const auto net = qsr::random_network(calc, {4, 0.6, Labels::uniform, seed});
      const auto sols = oracle::all_solutions(net, model);
      const auto out = qsr::a_closure(net);
      if (out.status == ClosureStatus::inconsistent) {
        CHECK(sols.empty());
        continue;
      }
      for (const auto &v : sols) CHECK(qsr::satisfies(out.network, v, model));
    }
  }
}

} // TEST_SUITE
