#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qsr/calculus.hpp"

namespace qsr {

struct CalculusSource {
  enum class Origin { builtin, file };
  Origin origin = Origin::builtin;
  std::filesystem::path path;
  std::string raw;
};

/// Names of the calculi shipped with the library, in a stable order.
const std::vector<std::string> &builtin_names();

/// Fully populated builtin calculus with ra7/ra9 flags computed by the axiom
/// analyzer and acl_decides_atomic set from the published complexity results.
/// Throws UnknownCalculus.
CalculusSpec builtin(std::string_view name);

/// Parse the line-oriented calculus format:
///
///     calculus "pc1"
///     relations < = >
///     identity =
///     converse
///     < (>)
///     ...
///     composition
///     < < (<)
///     < > (< = >)
///     ...
///     flags ra7=yes ra9=yes acl=yes
///
/// `identity` with no symbols (or no identity line) means no designated
/// identity. Every converse row and every composition pair must be listed;
/// `()` is the empty set. ra7/ra9 are computed unless the flags line sets
/// them. Throws ParseError with line and column.
CalculusSpec parse_spec(std::string_view text);

CalculusSpec load_spec_file(const std::filesystem::path &path);

/// Canonical text form: symbols in declaration order, cells row-major.
std::string serialize_spec(const CalculusSpec &spec);

struct Finding {
  enum class Severity { info, warning };
  Severity severity = Severity::info;
  std::string code;
  std::string message;
};

/// Structural report on a calculus. Never throws; findings are informational
/// since calculi may legitimately violate the identity law.
std::vector<Finding> validate(const CalculusSpec &spec);

} // namespace qsr
