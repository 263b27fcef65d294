#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qsr/relation_set.hpp"

namespace qsr {

enum class Tri { no, yes, unknown };

std::string_view to_string(Tri t);
std::optional<Tri> parse_tri(std::string_view s);

/// Cached facts about a calculus consumed by the reasoning procedures.
struct CalculusFlags {
  Tri ra7_holds = Tri::unknown;
  Tri ra9_holds = Tri::unknown;
  // Whether a-closure decides consistency of atomic networks.
  Tri acl_decides_atomic = Tri::unknown;

  friend bool operator==(const CalculusFlags &, const CalculusFlags &) = default;
};

/// A binary qualitative calculus: base relation symbols, an optional
/// designated identity, and converse and composition tables over the base
/// relations. Both operations extend to composite relations by union.
///
/// Tables are stored densely as raw words. Memory for the composition table is
/// n * n * ceil(n / 64) * 8 bytes for n base relations (about 3.1 MiB for
/// n = 256, 700 MiB for n = 1772).
///
/// Construction leaves every table cell empty; builders are expected to fill
/// the tables completely (the spec-file parser enforces totality). Once built,
/// an instance is not modified except for its flags, and is safe to share
/// between threads for reading.
class CalculusSpec {
public:
  CalculusSpec(std::string name, std::vector<std::string> symbols);

  CalculusId id() const noexcept { return id_; }
  const std::string &name() const noexcept { return name_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string> &symbols() const noexcept { return symbols_; }
  const std::string &symbol(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(std::string_view symbol) const;

  RelationSet empty() const { return RelationSet::empty(id_, size()); }
  RelationSet universal() const { return RelationSet::universal(id_, size()); }
  RelationSet atom(std::size_t i) const { return RelationSet::atom(id_, size(), i); }
  RelationSet atom(std::string_view symbol) const;
  // Throws Error on an unknown symbol.
  RelationSet relation(std::initializer_list<std::string_view> symbols) const;
  RelationSet relation(const std::vector<std::string> &symbols) const;

  const std::optional<RelationSet> &identity() const noexcept { return identity_; }
  void set_identity(std::optional<RelationSet> id);

  void set_converse(std::size_t r, const RelationSet &value);
  void set_composition(std::size_t r, std::size_t s, const RelationSet &value);
  RelationSet converse_of(std::size_t r) const;
  RelationSet composition_of(std::size_t r, std::size_t s) const;

  RelationSet converse(const RelationSet &R) const;
  RelationSet compose(const RelationSet &R, const RelationSet &S) const;

  CalculusFlags &flags() noexcept { return flags_; }
  const CalculusFlags &flags() const noexcept { return flags_; }

  // Human-readable record of deliberate deviations from a published table.
  std::vector<std::string> &notes() noexcept { return notes_; }
  const std::vector<std::string> &notes() const noexcept { return notes_; }

  // "{<,=}" style rendering in declaration order.
  std::string format(const RelationSet &r) const;
  std::vector<std::string> names(const RelationSet &r) const;

  // Content equality: name, symbols, identity, tables and flags. Ids and notes
  // are ignored.
  bool same_content(const CalculusSpec &other) const;

private:
  void check_owned(const RelationSet &r) const;
  std::size_t words() const noexcept { return words_; }

  CalculusId id_;
  std::string name_;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t words_;
  std::optional<RelationSet> identity_;
  std::vector<RelationSet::Word> converse_;
  std::vector<RelationSet::Word> composition_;
  CalculusFlags flags_;
  std::vector<std::string> notes_;
};

} // namespace qsr
