#include "qsr/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "qsr/error.hpp"

namespace qsr {

namespace {

using nlohmann::json;

json side_json(const SideResult &s) {
  json examples = json::array();
  for (const auto &e : s.examples)
    examples.push_back({{"args", e.args}, {"lhs", e.lhs}, {"rhs", e.rhs}});
  return {{"id", s.id}, {"holds", s.holds()}, {"violations", s.violations}, {"examples", examples}};
}

SideResult side_from(const json &j) {
  SideResult s;
  s.id = j.at("id").get<std::string>();
  s.violations = j.at("violations").get<std::size_t>();
  for (const auto &e : j.at("examples")) {
    Counterexample ex;
    e.at("args").get_to(ex.args);
    e.at("lhs").get_to(ex.lhs);
    e.at("rhs").get_to(ex.rhs);
    s.examples.push_back(std::move(ex));
  }
  return s;
}

std::string braces(const std::vector<std::string> &names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

Tri tri_from(const json &j) {
  auto t = parse_tri(j.get<std::string>());
  if (!t) throw Error("bad tri-state value in report");
  return *t;
}

} // namespace

json to_json(const AxiomReport &report) {
  json axioms = json::array();
  for (const auto &r : report.records) {
    axioms.push_back({{"axiom_id", std::string(to_string(r.axiom))},
                      {"applicable", r.applicable},
                      {"holds", r.holds()},
                      {"violations", r.violations},
                      {"universe", r.universe},
                      {"percentage", r.percentage()},
                      {"sides", json::array({side_json(r.sub), side_json(r.sup)})}});
  }
  return {{"calculus", report.calculus},
          {"relations", report.relations},
          {"classification", std::string(to_string(report.classification))},
          {"ra7_holds", std::string(to_string(report.ra7_holds))},
          {"ra9_holds", std::string(to_string(report.ra9_holds))},
          {"axioms", axioms}};
}

AxiomReport report_from_json(const json &j) {
  AxiomReport report;
  report.calculus = j.at("calculus").get<std::string>();
  report.relations = j.at("relations").get<std::size_t>();
  auto cls = parse_classification(j.at("classification").get<std::string>());
  if (!cls) throw Error("bad classification in report");
  report.classification = *cls;
  report.ra7_holds = tri_from(j.at("ra7_holds"));
  report.ra9_holds = tri_from(j.at("ra9_holds"));
  for (const auto &a : j.at("axioms")) {
    AxiomRecord rec;
    auto ax = parse_axiom(a.at("axiom_id").get<std::string>());
    if (!ax) throw Error("bad axiom id in report");
    rec.axiom = *ax;
    rec.applicable = a.at("applicable").get<bool>();
    rec.violations = a.at("violations").get<std::size_t>();
    rec.universe = a.at("universe").get<std::size_t>();
    const auto &sides = a.at("sides");
    if (sides.size() != 2) throw Error("axiom record needs two sides");
    rec.sub = side_from(sides[0]);
    rec.sup = side_from(sides[1]);
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string to_text(const AxiomReport &report) {
  std::ostringstream out;
  out << "calculus: " << report.calculus << " (" << report.relations << " base relations)\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-5s %-8s %10s %10s %8s  %s\n", "axiom", "holds", "violations",
                "tuples", "percent", "violated sides");
  out << buf;
  for (const auto &r : report.records) {
    if (!r.applicable) {
      std::snprintf(buf, sizeof buf, "%-5s %-8s\n", std::string(to_string(r.axiom)).c_str(), "n/a");
      out << buf;
      continue;
    }
    std::string sides;
    for (const auto *s : {&r.sub, &r.sup})
      if (!s->holds()) sides += (sides.empty() ? "" : " ") + s->id + "(" + std::to_string(s->violations) + ")";
    std::snprintf(buf, sizeof buf, "%-5s %-8s %10zu %10zu %7.2f%%  ",
                  std::string(to_string(r.axiom)).c_str(), r.holds() ? "yes" : "no", r.violations,
                  r.universe, r.percentage());
    out << buf << sides << "\n";
    for (const auto *s : {&r.sub, &r.sup}) {
      for (const auto &e : s->examples) {
        out << "      " << s->id << " (";
        for (std::size_t i = 0; i < e.args.size(); ++i) out << (i ? "," : "") << braces(e.args[i]);
        out << "): " << braces(e.lhs) << " vs " << braces(e.rhs) << "\n";
      }
    }
  }
  out << "classification: " << to_string(report.classification);
  const auto violated = report.violated_sides();
  if (violated.empty()) {
    out << "; all axioms hold";
    for (const auto &r : report.records)
      if (!r.applicable) {
        out << " (id-dependent axioms not applicable)";
        break;
      }
  } else {
    out << "; violated:";
    for (const auto &v : violated) out << " " << v;
  }
  out << "\n";
  return out.str();
}

} // namespace qsr
