#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qsr/calculus.hpp"

namespace qsr {

/// A binary domain relation over a universe {0..u-1}, as a u*u bitmap.
class PairSet {
public:
  PairSet() = default;
  explicit PairSet(std::size_t universe) : u_(universe), bits_(universe * universe) {}

  std::size_t universe() const noexcept { return u_; }
  bool contains(std::size_t a, std::size_t b) const { return bits_.test(a * u_ + b); }
  void insert(std::size_t a, std::size_t b) { bits_.set(a * u_ + b); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_subset_of(const PairSet &o) const { return bits_.is_subset_of(o.bits_); }
  bool intersects(const PairSet &o) const { return bits_.intersects(o.bits_); }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  PairSet &operator|=(const PairSet &o) {
    bits_ |= o.bits_;
    return *this;
  }
  PairSet &operator&=(const PairSet &o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend PairSet operator|(PairSet a, const PairSet &b) { return a |= b; }
  friend PairSet operator&(PairSet a, const PairSet &b) { return a &= b; }
  friend bool operator==(const PairSet &a, const PairSet &b) { return a.u_ == b.u_ && a.bits_ == b.bits_; }

  PairSet converse() const;
  PairSet compose(const PairSet &o) const;

  static PairSet identity(std::size_t universe);
  static PairSet all(std::size_t universe);

private:
  std::size_t u_ = 0;
  boost::dynamic_bitset<> bits_;
};

/// A finite universe plus a map from base symbols to domain relations.
/// Symbols absent from a model file map to the empty relation.
class FiniteInterpretation {
public:
  FiniteInterpretation(std::shared_ptr<const CalculusSpec> calculus, std::vector<std::string> universe,
                       std::string name = {});

  const CalculusSpec &calculus() const noexcept { return *calculus_; }
  const std::shared_ptr<const CalculusSpec> &calculus_ptr() const noexcept { return calculus_; }
  const std::string &name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t universe_size() const noexcept { return universe_.size(); }
  const std::vector<std::string> &universe() const noexcept { return universe_; }

  const PairSet &phi(std::size_t symbol) const { return phi_.at(symbol); }
  PairSet &phi(std::size_t symbol) { return phi_.at(symbol); }
  // Union over the members.
  PairSet phi(const RelationSet &r) const;

  // Base relations whose image contains (a, b).
  std::vector<std::size_t> relations_between(std::size_t a, std::size_t b) const;

private:
  std::shared_ptr<const CalculusSpec> calculus_;
  std::string name_;
  std::vector<std::string> universe_;
  std::vector<PairSet> phi_;
};

/// Text format:
///
///     model "chain3"
///     calculus pc1
///     universe 0 1 2
///     <: (0,1) (0,2) (1,2)
///     =: (0,0) (1,1) (2,2)
///
/// Throws ParseError.
FiniteInterpretation parse_model(std::string_view text, std::shared_ptr<const CalculusSpec> calculus);
FiniteInterpretation load_model_file(const std::string &path, std::shared_ptr<const CalculusSpec> calculus);
std::optional<std::string> model_calculus_name(std::string_view text);
std::string serialize_model(const FiniteInterpretation &model);

} // namespace qsr
