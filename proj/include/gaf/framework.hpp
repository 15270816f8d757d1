#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gaf/argset.hpp"

namespace gaf {

using Attack = std::pair<std::size_t, std::size_t>;

// Letters, digits and underscore; nonempty.
bool is_valid_arg_name(std::string_view name);

// The four grades. All must be >= 1.
struct Params {
  int l = 1;
  int m = 1;
  int n = 1;
  int eta = 1;

  void validate() const;
  friend bool operator==(const Params&, const Params&) = default;
};

// Finite framework <A, ->. Immutable; attacker and attacked sets per
// argument are built once at construction.
class Aaf {
 public:
  Aaf(std::vector<std::string> names, std::vector<Attack> attacks);
  static Aaf from_names(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws PreconditionError for unknown names.
  std::size_t index(std::string_view name) const;

  // Sorted, duplicate-free.
  const std::vector<Attack>& attacks() const { return attacks_; }
  bool attacks(std::size_t from, std::size_t to) const { return attackers_[to].contains(from); }
  // a^- and a^+.
  const ArgSet& attackers(std::size_t a) const { return attackers_[a]; }
  const ArgSet& attacked_by(std::size_t a) const { return attacked_[a]; }

  ArgSet none() const { return ArgSet(size()); }
  ArgSet all() const { return ArgSet::full(size()); }
  ArgSet set_of(const std::vector<std::string>& names) const;
  // "a,b,c"; empty text gives the empty set.
  ArgSet parse_set(std::string_view text) const;
  // "{a,b}"
  std::string format(const ArgSet& s) const;
  std::vector<std::string> member_names(const ArgSet& s) const;

  friend bool operator==(const Aaf& a, const Aaf& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Attack> attacks_;
  std::vector<ArgSet> attackers_;
  std::vector<ArgSet> attacked_;
};

// Canonically ordered, duplicate-free collection of subsets of one universe.
class ExtensionFamily {
 public:
  explicit ExtensionFamily(std::size_t universe, std::vector<ArgSet> sets = {});

  std::size_t universe() const { return universe_; }
  const std::vector<ArgSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const ArgSet& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(const ArgSet& s) const;
  // Intersection of all members; the empty family yields the full universe.
  ArgSet intersection() const;
  ArgSet union_all() const;

  friend bool operator==(const ExtensionFamily&, const ExtensionFamily&) = default;

 private:
  std::size_t universe_;
  std::vector<ArgSet> sets_;
};

ExtensionFamily canonicalize(const ExtensionFamily& family);

}  // namespace gaf
