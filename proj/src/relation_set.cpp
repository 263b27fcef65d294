#include "qsr/relation_set.hpp"

#include <algorithm>
#include <cassert>

#include "qsr/error.hpp"

namespace qsr {

RelationSet::RelationSet(CalculusId calculus, std::size_t width)
    : words_(words_for(width), Word{0}), width_(width), calculus_(calculus) {}

RelationSet RelationSet::universal(CalculusId calculus, std::size_t width) {
  RelationSet r(calculus, width);
  std::fill(r.words_.begin(), r.words_.end(), ~Word{0});
  r.clear_tail();
  return r;
}

RelationSet RelationSet::atom(CalculusId calculus, std::size_t width, std::size_t index) {
  assert(index < width);
  RelationSet r(calculus, width);
  r.set(index);
  return r;
}

void RelationSet::clear_tail() {
  const std::size_t rem = width_ % word_bits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void RelationSet::check_same(const RelationSet &other) const {
  if (calculus_ != other.calculus_ || width_ != other.width_) throw CalculusMismatch();
}

bool RelationSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool RelationSet::is_universal() const { return count() == width_; }

std::size_t RelationSet::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t RelationSet::next(std::size_t from) const {
  if (from >= width_) return width_;
  std::size_t w = from / word_bits;
  Word bits = words_[w] & (~Word{0} << (from % word_bits));
  while (true) {
    if (bits) return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return width_;
    bits = words_[w];
  }
}

std::vector<std::size_t> RelationSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool RelationSet::is_subset_of(const RelationSet &other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool RelationSet::intersects(const RelationSet &other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

RelationSet &RelationSet::operator|=(const RelationSet &other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

RelationSet &RelationSet::operator&=(const RelationSet &other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

RelationSet RelationSet::complement() const {
  RelationSet r = *this;
  for (auto &w : r.words_) w = ~w;
  r.clear_tail();
  return r;
}

void RelationSet::or_words(std::span<const Word> words) {
  assert(words.size() == words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= words[w];
}

bool operator<(const RelationSet &a, const RelationSet &b) {
  if (a.calculus_ != b.calculus_) return a.calculus_ < b.calculus_;
  // Walking members in declaration order: the set whose first differing bit is
  // set comes first, so {<} sorts before {=}.
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    const auto diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      const auto low = diff & (~diff + 1);
      return (a.words_[w] & low) != 0;
    }
  }
  return a.width_ < b.width_;
}

} // namespace qsr
