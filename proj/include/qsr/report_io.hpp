#pragma once

#include <string>

#include <json.hpp>

#include "qsr/analyzer.hpp"

namespace qsr {

/// JSON schema:
///
///     {"calculus": str, "relations": int, "classification": str,
///      "ra7_holds": "yes"|"no"|"unknown", "ra9_holds": ...,
///      "axioms": [{"axiom_id": str, "applicable": bool, "holds": bool,
///                  "violations": int, "universe": int, "percentage": num,
///                  "sides": [{"id": str, "holds": bool, "violations": int,
///                             "examples": [{"args": [[str]], "lhs": [str], "rhs": [str]}]}]}]}
nlohmann::json to_json(const AxiomReport &report);
AxiomReport report_from_json(const nlohmann::json &j);

/// One row per axiom followed by a classification line, e.g.
/// "classification: RA; all axioms hold".
std::string to_text(const AxiomReport &report);

} // namespace qsr
