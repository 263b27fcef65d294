#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsr/aclosure.hpp"
#include "qsr/analyzer.hpp"
#include "qsr/consistency.hpp"
#include "qsr/error.hpp"
#include "qsr/finite_model.hpp"
#include "qsr/network.hpp"
#include "qsr/registry.hpp"
#include "qsr/report_io.hpp"

namespace py = pybind11;
using CalcPtr = std::shared_ptr<const qsr::CalculusSpec>;

namespace {

// Python holds calculi as immutable shared handles, so networks and models
// can keep theirs alive.
struct Calculus {
  CalcPtr spec;
};

Calculus wrap(qsr::CalculusSpec s) { return {std::make_shared<const qsr::CalculusSpec>(std::move(s))}; }

qsr::AnalyzeOptions::Domain parse_domain(const std::string &d) {
  if (d == "base") return qsr::AnalyzeOptions::Domain::base;
  if (d == "composite") return qsr::AnalyzeOptions::Domain::composite_exhaustive;
  if (d == "sampled") return qsr::AnalyzeOptions::Domain::composite_sampled;
  throw py::value_error("domain must be base, composite or sampled");
}

qsr::QueueOrder parse_order(const std::string &o) {
  if (o == "fifo") return qsr::QueueOrder::fifo;
  if (o == "lifo") return qsr::QueueOrder::lifo;
  if (o == "shuffled") return qsr::QueueOrder::shuffled;
  throw py::value_error("order must be fifo, lifo or shuffled");
}

} // namespace

PYBIND11_MODULE(_qsr, m) {
  m.doc() = "Qualitative calculus reasoning: axiom audits, a-closure, consistency, finite models";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<qsr::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qsr::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qsr::UnknownCalculus>(m, "UnknownCalculus", PyExc_KeyError);
  py::register_exception<qsr::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("builtin_names", &qsr::builtin_names);

  py::class_<Calculus>(m, "Calculus")
      .def_static("builtin", [](const std::string &name) { return wrap(qsr::builtin(name)); })
      .def_static("parse", [](const std::string &text) { return wrap(qsr::parse_spec(text)); })
      .def_static("load", [](const std::string &path) { return wrap(qsr::load_spec_file(path)); })
      .def_property_readonly("name", [](const Calculus &c) { return c.spec->name(); })
      .def_property_readonly("symbols", [](const Calculus &c) { return c.spec->symbols(); })
      .def("converse",
           [](const Calculus &c, const std::vector<std::string> &r) {
             return c.spec->names(c.spec->converse(c.spec->relation(r)));
           })
      .def("compose",
           [](const Calculus &c, const std::vector<std::string> &r, const std::vector<std::string> &s) {
             return c.spec->names(c.spec->compose(c.spec->relation(r), c.spec->relation(s)));
           })
      .def("serialize", [](const Calculus &c) { return qsr::serialize_spec(*c.spec); })
      .def("__repr__", [](const Calculus &c) { return "<Calculus " + c.spec->name() + ">"; });

  m.def(
      "analyze_json",
      [](const Calculus &c, const std::string &domain, std::size_t samples, std::uint64_t seed, std::size_t jobs) {
        qsr::AnalyzeOptions opts;
        opts.domain = parse_domain(domain);
        opts.samples = samples;
        opts.seed = seed;
        opts.jobs = jobs;
        py::gil_scoped_release release;
        return qsr::to_json(qsr::classify(*c.spec, opts)).dump();
      },
      py::arg("calculus"), py::arg("domain") = "base", py::arg("samples") = 10000, py::arg("seed") = 1,
      py::arg("jobs") = 1);

  py::class_<qsr::ConstraintNetwork>(m, "Network")
      .def_static("parse", [](const std::string &text, const Calculus &c) { return qsr::parse_network(text, c.spec); })
      .def_static("load",
                  [](const std::string &path, const Calculus &c) { return qsr::load_network_file(path, c.spec); })
      .def_static(
          "random",
          [](const Calculus &c, std::size_t vars, double density, std::uint64_t seed, bool singletons) {
            qsr::RandomNetworkOptions opts;
            opts.n_vars = vars;
            opts.density = density;
            opts.seed = seed;
            opts.labels = singletons ? qsr::RandomNetworkOptions::Labels::singletons
                                     : qsr::RandomNetworkOptions::Labels::uniform;
            return qsr::random_network(c.spec, opts);
          },
          py::arg("calculus"), py::arg("vars") = 8, py::arg("density") = 0.5, py::arg("seed") = 0,
          py::arg("singletons") = false)
      .def_property_readonly("vars", &qsr::ConstraintNetwork::vars)
      .def_property_readonly("calculus", [](const qsr::ConstraintNetwork &n) { return Calculus{n.calculus_ptr()}; })
      .def("__len__", &qsr::ConstraintNetwork::size)
      .def("at",
           [](const qsr::ConstraintNetwork &n, std::size_t i, std::size_t j) {
             if (i >= n.size() || j >= n.size()) throw py::index_error("variable index out of range");
             return n.calculus().names(n.at(i, j));
           })
      .def("is_atomic", &qsr::ConstraintNetwork::is_atomic)
      .def("serialize", [](const qsr::ConstraintNetwork &n) { return qsr::serialize_network(n); })
      .def("__eq__", [](const qsr::ConstraintNetwork &a, const qsr::ConstraintNetwork &b) { return a == b; });

  py::class_<qsr::ClosureOutcome>(m, "ClosureOutcome")
      .def_property_readonly("closed",
                             [](const qsr::ClosureOutcome &o) { return o.status == qsr::ClosureStatus::closed; })
      .def_readonly("network", &qsr::ClosureOutcome::network)
      .def_readonly("revisions", &qsr::ClosureOutcome::revisions)
      .def_readonly("queue_pops", &qsr::ClosureOutcome::queue_pops)
      .def_readonly("conflict", &qsr::ClosureOutcome::conflict);

  m.def(
      "a_closure",
      [](const qsr::ConstraintNetwork &n, const std::string &order, std::uint64_t seed) {
        return qsr::a_closure(n, {parse_order(order), seed});
      },
      py::arg("network"), py::arg("order") = "fifo", py::arg("seed") = 0);

  py::class_<qsr::FiniteInterpretation>(m, "Model")
      .def_static("builtin",
                  [](const std::string &name, const Calculus &c) { return qsr::builtin_model(name, c.spec); })
      .def_static("parse", [](const std::string &text, const Calculus &c) { return qsr::parse_model(text, c.spec); })
      .def_static("load",
                  [](const std::string &path, const Calculus &c) { return qsr::load_model_file(path, c.spec); })
      .def_static("chain", [](const Calculus &c, std::size_t n) { return qsr::chain_model(c.spec, n); })
      .def_static("orientations", [](const Calculus &c, std::size_t n) { return qsr::orientation_model(c.spec, n); })
      .def_property_readonly("universe", &qsr::FiniteInterpretation::universe)
      .def("serialize", [](const qsr::FiniteInterpretation &m) { return qsr::serialize_model(m); })
      .def("is_jepd", [](const qsr::FiniteInterpretation &m) { return qsr::check_jepd(m).holds(); })
      .def("operation_summary",
           [](const qsr::FiniteInterpretation &m, const std::string &op) {
             if (op != "converse" && op != "composition")
               throw py::value_error("operation must be converse or composition");
             const auto which = op == "converse" ? qsr::Operation::converse : qsr::Operation::composition;
             return qsr::classify_operation(m, which).summary(m.calculus());
           })
      .def("satisfies", [](const qsr::FiniteInterpretation &m, const qsr::ConstraintNetwork &n,
                           const qsr::Valuation &v) { return qsr::satisfies(n, v, m); });

  m.def(
      "solve",
      [](const qsr::ConstraintNetwork &n, const qsr::FiniteInterpretation &model, double budget) {
        return qsr::brute_force_solve(n, model, {budget});
      },
      py::arg("network"), py::arg("model"), py::arg("budget") = 1e8);

  m.def(
      "decide",
      [](const qsr::ConstraintNetwork &n, const qsr::FiniteInterpretation *model) {
        qsr::SearchOptions opts;
        if (model) opts.leaf_oracle = qsr::model_leaf_oracle(*model);
        const auto d = qsr::decide(n, opts);
        return py::make_tuple(std::string(qsr::to_string(d.verdict)), d.witness, d.nodes_explored);
      },
      py::arg("network"), py::arg("model") = nullptr);
}
