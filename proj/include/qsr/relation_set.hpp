#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace qsr {

using CalculusId = std::uint64_t;

/// A composite relation: a subset of the base relations of one calculus.
///
/// Bit i is set iff the i-th declared base relation belongs to the set. The
/// width is the base-relation count of the owning calculus; bits beyond the
/// width are kept clear so that word-wise comparison is exact. Binary
/// operations require both operands to carry the same calculus id and throw
/// CalculusMismatch otherwise.
class RelationSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  RelationSet() = default;
  RelationSet(CalculusId calculus, std::size_t width);

  static RelationSet empty(CalculusId calculus, std::size_t width) { return {calculus, width}; }
  static RelationSet universal(CalculusId calculus, std::size_t width);
  static RelationSet atom(CalculusId calculus, std::size_t width, std::size_t index);

  static constexpr std::size_t words_for(std::size_t width) {
    return (width + word_bits - 1) / word_bits;
  }

  CalculusId calculus_id() const noexcept { return calculus_; }
  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t i) const {
    return (words_[i / word_bits] >> (i % word_bits)) & Word{1};
  }
  void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }

  bool none() const;
  bool is_universal() const;
  std::size_t count() const;
  bool is_singleton() const { return count() == 1; }

  // Index of the lowest member at or after `from`, or width() if none.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }
  std::vector<std::size_t> members() const;

  bool is_subset_of(const RelationSet &other) const;
  bool intersects(const RelationSet &other) const;

  RelationSet &operator|=(const RelationSet &other);
  RelationSet &operator&=(const RelationSet &other);
  RelationSet complement() const;

  // OR raw words of the same width into this set. Used for table rows.
  void or_words(std::span<const Word> words);

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  friend RelationSet operator|(RelationSet a, const RelationSet &b) { return a |= b; }
  friend RelationSet operator&(RelationSet a, const RelationSet &b) { return a &= b; }
  friend RelationSet operator~(const RelationSet &a) { return a.complement(); }

  friend bool operator==(const RelationSet &a, const RelationSet &b) {
    return a.calculus_ == b.calculus_ && a.width_ == b.width_ && a.words_ == b.words_;
  }

  // Lexicographic by calculus, then by member list in declaration order.
  friend bool operator<(const RelationSet &a, const RelationSet &b);

  // Iteration over member indices.
  template <typename F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

private:
  void check_same(const RelationSet &other) const;
  void clear_tail();

  boost::container::small_vector<Word, 2> words_;
  std::size_t width_ = 0;
  CalculusId calculus_ = 0;
};

} // namespace qsr
