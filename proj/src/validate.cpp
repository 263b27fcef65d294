#include "qsr/registry.hpp"

namespace qsr {

std::vector<Finding> validate(const CalculusSpec &spec) {
  using Severity = Finding::Severity;
  std::vector<Finding> out;

  for (const auto &note : spec.notes()) out.push_back({Severity::info, "table-correction", note});

  if (const auto &id = spec.identity()) {
    for (std::size_t r = 0; r < spec.size(); ++r) {
      const auto a = spec.atom(r);
      const auto right = spec.compose(a, *id);
      if (right != a)
        out.push_back({Severity::info, "identity-law",
                       spec.symbol(r) + ";id = " + spec.format(right) + " != " + spec.format(a) +
                           ": identity law fails"});
      const auto left = spec.compose(*id, a);
      if (left != a)
        out.push_back({Severity::info, "left-identity-law",
                       "id;" + spec.symbol(r) + " = " + spec.format(left) + " != " +
                           spec.format(a) + ": left identity law fails"});
    }
  }

  for (std::size_t r = 0; r < spec.size(); ++r) {
    const auto conv = spec.converse_of(r);
    if (conv.none()) {
      out.push_back({Severity::warning, "empty-converse", "converse of " + spec.symbol(r) + " is empty"});
      continue;
    }
    if (!spec.converse(conv).test(r))
      out.push_back({Severity::warning, "converse-involution",
                     spec.symbol(r) + "~~ = " + spec.format(spec.converse(conv)) +
                         " does not contain " + spec.symbol(r)});
  }

  for (std::size_t r = 0; r < spec.size(); ++r)
    for (std::size_t s = 0; s < spec.size(); ++s)
      if (spec.composition_of(r, s).none())
        out.push_back({Severity::info, "empty-cell",
                       "composition " + spec.symbol(r) + ";" + spec.symbol(s) + " is empty"});
  return out;
}

} // namespace qsr
