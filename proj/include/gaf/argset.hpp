#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace gaf {

// Subset of an indexed universe {0, ..., universe()-1}, stored as 64-bit words.
// Universes up to 128 elements live inline without heap allocation.
class ArgSet {
 public:
  using Word = std::uint64_t;

  ArgSet() = default;
  explicit ArgSet(std::size_t universe);

  static ArgSet full(std::size_t universe);
  // Low bits of mask become members; requires universe <= 64.
  static ArgSet from_mask(std::size_t universe, std::uint64_t mask);
  static ArgSet of(std::size_t universe, std::initializer_list<std::size_t> members);
  static ArgSet of(std::size_t universe, const std::vector<std::size_t>& members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;
  bool contains(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void insert(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(Word{1} << (i % 64)); }

  bool is_subset_of(const ArgSet& other) const;
  bool is_proper_subset_of(const ArgSet& other) const;
  bool intersects(const ArgSet& other) const;
  // |*this ∩ other| without materializing the intersection.
  std::size_t intersection_count(const ArgSet& other) const;

  ArgSet& operator|=(const ArgSet& other);
  ArgSet& operator&=(const ArgSet& other);
  ArgSet& operator-=(const ArgSet& other);
  friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
  friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
  friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }
  ArgSet complement() const;

  std::vector<std::size_t> members() const;
  // Lowest member, or universe() when empty.
  std::size_t first() const;
  // Next member strictly after i, or universe() when none.
  std::size_t next(std::size_t i) const;
  // Bits as an integer; requires universe <= 64.
  std::uint64_t mask() const;

  std::size_t hash() const;

  friend bool operator==(const ArgSet& a, const ArgSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void trim();

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

// Canonical family order: cardinality first, then lexicographic on the
// ascending member lists (so {a,b} < {a,c} < {b,c}).
struct CanonicalLess {
  bool operator()(const ArgSet& a, const ArgSet& b) const;
};

struct ArgSetHash {
  std::size_t operator()(const ArgSet& s) const { return s.hash(); }
};

// Sorts canonically and removes duplicates.
std::vector<ArgSet> canonicalize(std::vector<ArgSet> sets);

}  // namespace gaf
