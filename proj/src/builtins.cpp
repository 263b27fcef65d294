#include <functional>
#include <map>
#include <utility>

#include "qsr/analyzer.hpp"
#include "qsr/error.hpp"
#include "qsr/registry.hpp"

namespace qsr {

namespace {

using Row = std::vector<std::vector<std::string>>;

struct TableSource {
  std::string name;
  std::vector<std::string> symbols;
  std::vector<std::string> identity;
  std::vector<std::vector<std::string>> converse;
  std::vector<Row> composition;
  Tri acl = Tri::unknown;
  std::vector<std::string> notes;
};

CalculusSpec build(const TableSource &src) {
  CalculusSpec spec(src.name, src.symbols);
  if (!src.identity.empty()) spec.set_identity(spec.relation(src.identity));
  for (std::size_t r = 0; r < spec.size(); ++r) {
    spec.set_converse(r, spec.relation(src.converse.at(r)));
    for (std::size_t s = 0; s < spec.size(); ++s)
      spec.set_composition(r, s, spec.relation(src.composition.at(r).at(s)));
  }
  spec.notes() = src.notes;
  compute_flags(spec);
  spec.flags().acl_decides_atomic = src.acl;
  return spec;
}

TableSource pc1() {
  const std::vector<std::string> all{"<", "=", ">"};
  return {"pc1",
          {"<", "=", ">"},
          {"="},
          {{">"}, {"="}, {"<"}},
          {
              {{"<"}, {"<"}, all},
              {{"<"}, {"="}, {">"}},
              {all, {">"}, {">"}},
          },
          Tri::yes,
          {}};
}

TableSource rcc5() {
  const std::vector<std::string> all{"EQ", "DC", "PO", "PP", "PPi"};
  return {"rcc5",
          {"EQ", "DC", "PO", "PP", "PPi"},
          {"EQ"},
          {{"EQ"}, {"DC"}, {"PO"}, {"PPi"}, {"PP"}},
          {
              {{"EQ"}, {"DC"}, {"PO"}, {"PP"}, {"PPi"}},
              {{"DC"}, all, {"DC", "PO", "PP"}, {"DC", "PO", "PP"}, {"DC"}},
              {{"PO"}, {"DC", "PO", "PPi"}, all, {"PO", "PP"}, {"DC", "PO", "PPi"}},
              {{"PP"}, {"DC"}, {"DC", "PO", "PP"}, {"PP"}, all},
              {{"PPi"}, {"DC", "PO", "PPi"}, {"PO", "PPi"}, {"EQ", "PO", "PP", "PPi"}, {"PPi"}},
          },
          Tri::yes,
          {
              "cell EQ;PP is commonly printed as {PO}, which conflicts with the identity law; "
              "this table uses {PP}",
              "converse PP/PPi is commonly printed as self-converse; this table uses PP~=PPi, "
              "PPi~=PP",
          }};
}

TableSource cycb() {
  return {"cycb",
          {"e", "o", "l", "r"},
          {"e"},
          {{"e"}, {"o"}, {"r"}, {"l"}},
          {
              {{"e"}, {"o"}, {"l"}, {"r"}},
              {{"o"}, {"e"}, {"r"}, {"l"}},
              {{"l"}, {"r"}, {"l", "o", "r"}, {"e", "l", "r"}},
              {{"r"}, {"l"}, {"e", "l", "r"}, {"l", "o", "r"}},
          },
          Tri::unknown,
          {}};
}

// Violates the lower inclusions of the identity laws and of converse
// involution.
TableSource appendix_b1() {
  const std::vector<std::string> all{"r1", "r2"};
  return {"appendixB1",
          {"r1", "r2"},
          {"r1"},
          {all, all},
          {
              {all, {"r1"}},
              {all, {"r2"}},
          },
          Tri::unknown,
          {}};
}

// Violates associativity, involutive distributivity and the Peircean law
// while keeping a strong converse.
TableSource appendix_b2() {
  return {"appendixB2",
          {"r1", "r2", "r3", "r4"},
          {"r1"},
          {{"r1"}, {"r2"}, {"r4"}, {"r3"}},
          {
              {{"r1"}, {}, {"r3"}, {}},
              {{}, {"r2"}, {}, {"r4"}},
              {{}, {"r3"}, {}, {"r1", "r4"}},
              {{"r1", "r4"}, {}, {"r2"}, {}},
          },
          Tri::unknown,
          {"cell r2;r2 is commonly printed as {r3}, which is unsound for the accompanying "
           "two-element model; this table uses {r2}"}};
}

// Identity and diversity over a two-element universe with diversity;diversity
// widened to the universal relation: a relation algebra whose composition is
// only abstract.
TableSource appendix_b_remark() {
  const std::vector<std::string> all{"r1", "r2"};
  return {"appendixB-remark",
          {"r1", "r2"},
          {"r1"},
          {{"r1"}, {"r2"}},
          {
              {{"r1"}, {"r2"}},
              {{"r2"}, all},
          },
          Tri::unknown,
          {}};
}

const std::map<std::string, std::function<TableSource()>, std::less<>> &table_sources() {
  static const std::map<std::string, std::function<TableSource()>, std::less<>> sources{
      {"pc1", pc1},
      {"rcc5", rcc5},
      {"cycb", cycb},
      {"appendixB1", appendix_b1},
      {"appendixB2", appendix_b2},
      {"appendixB-remark", appendix_b_remark},
  };
  return sources;
}

} // namespace

const std::vector<std::string> &builtin_names() {
  static const std::vector<std::string> names{"pc1",        "rcc5",       "cycb",
                                              "appendixB1", "appendixB2", "appendixB-remark"};
  return names;
}

CalculusSpec builtin(std::string_view name) {
  const auto &sources = table_sources();
  auto it = sources.find(name);
  if (it == sources.end()) throw UnknownCalculus(std::string(name));
  return build(it->second());
}

} // namespace qsr
