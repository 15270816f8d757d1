#include "gaf/argset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "gaf/errors.hpp"

namespace gaf {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

ArgSet::ArgSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ArgSet ArgSet::full(std::size_t universe) {
  ArgSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  s.trim();
  return s;
}

ArgSet ArgSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw PreconditionError("from_mask needs a universe of at most 64");
  ArgSet s(universe);
  if (universe > 0) {
    s.words_[0] = mask;
    s.trim();
  }
  return s;
}

ArgSet ArgSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  return of(universe, std::vector<std::size_t>(members));
}

ArgSet ArgSet::of(std::size_t universe, const std::vector<std::size_t>& members) {
  ArgSet s(universe);
  for (auto i : members) {
    if (i >= universe) throw PreconditionError("member index outside universe");
    s.insert(i);
  }
  return s;
}

void ArgSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << (universe_ % 64)) - 1;
  }
}

std::size_t ArgSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ArgSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool ArgSet::is_subset_of(const ArgSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ArgSet::is_proper_subset_of(const ArgSet& other) const {
  return is_subset_of(other) && !(*this == other);
}

bool ArgSet::intersects(const ArgSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::size_t ArgSet::intersection_count(const ArgSet& other) const {
  assert(universe_ == other.universe_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

ArgSet& ArgSet::operator|=(const ArgSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ArgSet& ArgSet::operator&=(const ArgSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ArgSet& ArgSet::operator-=(const ArgSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ArgSet ArgSet::complement() const {
  ArgSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::vector<std::size_t> ArgSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i < universe_; i = next(i)) out.push_back(i);
  return out;
}

std::size_t ArgSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

std::size_t ArgSet::next(std::size_t i) const {
  std::size_t j = i + 1;
  if (j >= universe_) return universe_;
  std::size_t w = j / 64;
  Word cur = words_[w] & (~Word{0} << (j % 64));
  while (true) {
    if (cur) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w >= words_.size()) return universe_;
    cur = words_[w];
  }
}

std::uint64_t ArgSet::mask() const {
  if (universe_ > 64) throw PreconditionError("mask needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

std::size_t ArgSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool CanonicalLess::operator()(const ArgSet& a, const ArgSet& b) const {
  auto ca = a.count();
  auto cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal size: the set owning the lowest differing element comes first.
  ArgSet diff = (a - b) | (b - a);
  auto d = diff.first();
  if (d == diff.universe()) return false;
  return a.contains(d);
}

std::vector<ArgSet> canonicalize(std::vector<ArgSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

}  // namespace gaf
