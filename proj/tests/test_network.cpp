#include <doctest.h>

#include "qsr/error.hpp"
#include "qsr/finite_model.hpp"
#include "qsr/network.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using qsr::ConstraintNetwork;

TEST_SUITE("qcsp") {

TEST_CASE("normalization intersects both directions") {
  const auto pc1 = fixture::calc("pc1");
  const auto lt = pc1->relation({"<"}), gt = pc1->relation({">"});

  auto net = qsr::normalize(pc1, {{"A", lt, "B"}, {"B", gt, "A"}});
  CHECK(net.at(0, 1) == lt);
  CHECK(net.at(1, 0) == gt);

  net = qsr::normalize(pc1, {{"A", lt, "B"}, {"B", lt, "A"}});
  CHECK(net.at(0, 1).none());
  CHECK(net.has_empty());

  net = qsr::normalize(pc1, {{"A", lt, "B"}, {"B", pc1->relation({"<", "="}), "C"}});
  CHECK(net.vars() == std::vector<std::string>{"A", "B", "C"});
  CHECK(net.at(0, 2) == pc1->universal());
  CHECK(net.at(0, 0) == pc1->relation({"="}));
}

TEST_CASE("normalization is idempotent") {
  for (const auto *name : {"pc1", "rcc5", "cycb", "appendixB2"}) {
    const auto calc = fixture::calc(name);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto net = qsr::random_network(calc, {6, 0.6, qsr::RandomNetworkOptions::Labels::uniform, seed});
      CHECK(qsr::normalize(calc, qsr::edges(net), net.vars()) == net);
    }
  }
}

TEST_CASE("declared variables") {
  const auto pc1 = fixture::calc("pc1");
  const auto lt = pc1->relation({"<"});
  const auto net = qsr::normalize(pc1, {{"A", lt, "B"}}, std::vector<std::string>{"B", "A", "C"});
  CHECK(net.at(1, 0) == lt);
  CHECK(net.size() == 3);
  CHECK_THROWS_AS(qsr::normalize(pc1, {{"A", lt, "D"}}, std::vector<std::string>{"A", "B"}), qsr::Error);
  CHECK_THROWS_AS(qsr::normalize(pc1, {{"A", lt, "A"}}), qsr::Error);
}

TEST_CASE("diagonal without identity is universal") {
  auto spec = qsr::builtin("pc1");
  spec.set_identity(std::nullopt);
  const auto c = std::make_shared<const qsr::CalculusSpec>(std::move(spec));
  const ConstraintNetwork net(c, 3);
  CHECK(net.at(1, 1).is_universal());
}

TEST_CASE("random networks") {
  const auto pc1 = fixture::calc("pc1");
  using Labels = qsr::RandomNetworkOptions::Labels;
  auto net = qsr::random_network(pc1, {5, 0.0, Labels::uniform, 42});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(net.at(i, j).is_universal());

  net = qsr::random_network(pc1, {5, 1.0, Labels::singletons, 42});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(net.at(i, j).is_singleton());

  const auto rcc5 = fixture::calc("rcc5");
  const auto a = qsr::random_network(rcc5, {8, 0.5, Labels::uniform, 7});
  const auto b = qsr::random_network(rcc5, {8, 0.5, Labels::uniform, 7});
  CHECK(a == b);
  std::size_t constrained = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      const auto r = a.at(i, j);
      if (r.is_universal()) continue;
      ++constrained;
      CHECK_FALSE(r.none());
    }
  CHECK(constrained == 14);

  CHECK_THROWS_AS(qsr::random_network(pc1, {1, 0.5, Labels::uniform, 1}), qsr::Error);
  CHECK_THROWS_AS(qsr::random_network(pc1, {4, 1.5, Labels::uniform, 1}), qsr::Error);
  CHECK_THROWS_AS(qsr::random_network(pc1, {4, -0.1, Labels::uniform, 1}), qsr::Error);
}

TEST_CASE("triangular storage round trip under a strong converse") {
  for (const auto *name : {"pc1", "rcc5", "cycb", "appendixB2"}) {
    const auto calc = fixture::calc(name);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto net = qsr::random_network(calc, {6, 0.7, qsr::RandomNetworkOptions::Labels::uniform, seed});
      const auto tri = net.to_triangular();
      CHECK(tri.mode() == qsr::StorageMode::triangular);
      CHECK(tri.to_full() == net);
      CHECK(tri == net);
    }
  }
}

TEST_CASE("triangular writes below the diagonal store the converse") {
  const auto pc1 = fixture::calc("pc1");
  auto net = ConstraintNetwork(pc1, 3).to_triangular();
  net.set(2, 0, pc1->relation({"<"}));
  CHECK(net.cell(0, 2) == pc1->relation({">"}));
  CHECK(net.at(2, 0) == pc1->relation({"<"}));
}

TEST_CASE("text format") {
  const auto pc1 = fixture::calc("pc1");
  const auto net = qsr::load_network_file(fixture::data("incomplete.net"), pc1);
  CHECK(net.name() == "incomplete");
  CHECK(net.vars() == std::vector<std::string>{"A", "B", "C"});
  CHECK(net.at(1, 2) == pc1->relation({"<", "="}));
  CHECK(qsr::parse_network(qsr::serialize_network(net), pc1) == net);
  CHECK(qsr::network_calculus_name(qsr::serialize_network(net)) == "pc1");

  // duplicate pair lines are intersected
  const auto dup = qsr::parse_network("calculus pc1\nvars A B\nA (< =) B\nB (< >) A\n", pc1);
  CHECK(dup.at(0, 1) == pc1->relation({"<"}));

  CHECK_THROWS_AS(qsr::parse_network("calculus rcc5\nvars A B\n", pc1), qsr::ParseError);
  CHECK_THROWS_AS(qsr::parse_network("calculus pc1\nvars A B\nA (<) C\n", pc1), qsr::ParseError);
  CHECK_THROWS_AS(qsr::parse_network("calculus pc1\nvars A B\nA (?) B\n", pc1), qsr::ParseError);
  CHECK_THROWS_AS(qsr::parse_network("calculus pc1\nvars A B\nA (<) B extra\n", pc1), qsr::ParseError);
  CHECK_THROWS_AS(qsr::parse_network("calculus pc1\nvars A A\n", pc1), qsr::ParseError);
  CHECK_THROWS_AS(qsr::load_network_file("/nonexistent/net", pc1), qsr::ParseError);
}

TEST_CASE("JSON export") {
  const auto rcc5 = fixture::calc("rcc5");
  const auto net = qsr::random_network(rcc5, {5, 0.5, qsr::RandomNetworkOptions::Labels::uniform, 3});
  const auto j = qsr::to_json(net);
  CHECK(j["matrix"].size() == 5);
  CHECK(j["matrix"][2][2] == nlohmann::json::array({"EQ"}));
  CHECK(qsr::network_from_json(j, rcc5) == net);
  CHECK_THROWS_AS(qsr::network_from_json(j, fixture::calc("pc1")), qsr::Error);
}

TEST_CASE("satisfaction in a finite model") {
  const auto pc1 = fixture::calc("pc1");
  const auto chain3 = qsr::chain_model(pc1, 3);
  const auto lt = pc1->relation({"<"});
  const auto net = qsr::normalize(pc1, {{"A", lt, "B"}, {"B", lt, "C"}});
  CHECK(qsr::satisfies(net, {0, 1, 2}, chain3));
  CHECK_FALSE(qsr::satisfies(net, {2, 1, 0}, chain3));
  CHECK_THROWS_AS(qsr::satisfies(net, {0, 1}, chain3), qsr::Error);

  const auto chain4 = qsr::load_network_file(fixture::data("chain4.net"), pc1);
  CHECK(oracle::all_solutions(chain4, chain3).empty());
}

TEST_CASE("satisfaction agrees with direct membership") {
  for (const auto *name : {"pc1", "appendixB2", "cycb"}) {
    const auto calc = fixture::calc(name);
    const auto model = qsr::builtin_model(name, calc);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto net = qsr::random_network(calc, {4, 0.5, qsr::RandomNetworkOptions::Labels::uniform, seed});
      const auto sols = oracle::all_solutions(net, model);
      std::size_t count = 0;
      qsr::Valuation v(4, 0);
      while (true) {
        count += qsr::satisfies(net, v, model);
        std::size_t k = 0;
        while (k < 4 && ++v[k] == model.universe_size()) v[k++] = 0;
        if (k == 4) break;
      }
      CHECK(count == sols.size());
    }
  }
}

} // TEST_SUITE
