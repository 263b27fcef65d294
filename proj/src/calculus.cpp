#include "qsr/calculus.hpp"

#include <algorithm>
#include <atomic>
#include <span>

#include "qsr/error.hpp"

namespace qsr {

namespace {

CalculusId next_id() {
  static std::atomic<CalculusId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

std::string_view to_string(Tri t) {
  switch (t) {
  case Tri::yes: return "yes";
  case Tri::no: return "no";
  case Tri::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Tri> parse_tri(std::string_view s) {
  if (s == "yes") return Tri::yes;
  if (s == "no") return Tri::no;
  if (s == "unknown") return Tri::unknown;
  return std::nullopt;
}

CalculusSpec::CalculusSpec(std::string name, std::vector<std::string> symbols)
    : id_(next_id()), name_(std::move(name)), symbols_(std::move(symbols)),
      words_(RelationSet::words_for(symbols_.size())) {
  if (symbols_.empty()) throw Error("calculus '" + name_ + "' has no relation symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i], i).second)
      throw Error("duplicate relation symbol '" + symbols_[i] + "'");
  }
  converse_.assign(size() * words_, 0);
  composition_.assign(size() * size() * words_, 0);
}

std::optional<std::size_t> CalculusSpec::index_of(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RelationSet CalculusSpec::atom(std::string_view symbol) const {
  auto i = index_of(symbol);
  if (!i) throw Error("unknown relation symbol '" + std::string(symbol) + "' in calculus " + name_);
  return atom(*i);
}

RelationSet CalculusSpec::relation(std::initializer_list<std::string_view> symbols) const {
  RelationSet r = empty();
  for (auto s : symbols) r |= atom(s);
  return r;
}

RelationSet CalculusSpec::relation(const std::vector<std::string> &symbols) const {
  RelationSet r = empty();
  for (const auto &s : symbols) r |= atom(s);
  return r;
}

void CalculusSpec::check_owned(const RelationSet &r) const {
  if (r.calculus_id() != id_ || r.width() != size()) throw CalculusMismatch();
}

void CalculusSpec::set_identity(std::optional<RelationSet> id) {
  if (id) check_owned(*id);
  identity_ = std::move(id);
}

void CalculusSpec::set_converse(std::size_t r, const RelationSet &value) {
  check_owned(value);
  auto w = value.words();
  std::copy(w.begin(), w.end(), converse_.begin() + static_cast<std::ptrdiff_t>(r * words_));
}

void CalculusSpec::set_composition(std::size_t r, std::size_t s, const RelationSet &value) {
  check_owned(value);
  auto w = value.words();
  std::copy(w.begin(), w.end(),
            composition_.begin() + static_cast<std::ptrdiff_t>((r * size() + s) * words_));
}

RelationSet CalculusSpec::converse_of(std::size_t r) const {
  RelationSet out = empty();
  out.or_words(std::span(converse_).subspan(r * words_, words_));
  return out;
}

RelationSet CalculusSpec::composition_of(std::size_t r, std::size_t s) const {
  RelationSet out = empty();
  out.or_words(std::span(composition_).subspan((r * size() + s) * words_, words_));
  return out;
}

RelationSet CalculusSpec::converse(const RelationSet &R) const {
  check_owned(R);
  RelationSet out = empty();
  const std::span table(converse_);
  R.for_each([&](std::size_t r) { out.or_words(table.subspan(r * words_, words_)); });
  return out;
}

RelationSet CalculusSpec::compose(const RelationSet &R, const RelationSet &S) const {
  check_owned(R);
  check_owned(S);
  RelationSet out = empty();
  if (R.none() || S.none()) return out;
  const std::span table(composition_);
  const auto s_members = S.members();
  R.for_each([&](std::size_t r) {
    const auto row = table.subspan(r * size() * words_, size() * words_);
    for (std::size_t s : s_members) out.or_words(row.subspan(s * words_, words_));
  });
  return out;
}

std::vector<std::string> CalculusSpec::names(const RelationSet &r) const {
  check_owned(r);
  std::vector<std::string> out;
  r.for_each([&](std::size_t i) { out.push_back(symbols_[i]); });
  return out;
}

std::string CalculusSpec::format(const RelationSet &r) const {
  std::string out = "{";
  bool first = true;
  for (const auto &n : names(r)) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "}";
}

bool CalculusSpec::same_content(const CalculusSpec &other) const {
  if (name_ != other.name_ || symbols_ != other.symbols_ || flags_ != other.flags_) return false;
  if (identity_.has_value() != other.identity_.has_value()) return false;
  if (identity_ && !std::ranges::equal(identity_->words(), other.identity_->words())) return false;
  return converse_ == other.converse_ && composition_ == other.composition_;
}

} // namespace qsr
