#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaf/framework.hpp"

namespace gaf {

// Finite nonempty set of index tokens.
class IndexSet {
 public:
  explicit IndexSet(std::vector<std::string> tokens);
  // Tokens "1", "2", ..., "k".
  static IndexSet numbered(std::size_t k);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t index(const std::string& token) const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::string> tokens_;
};

// Subsets of an IndexSet are bitsets over token positions.
using IndexSubset = ArgSet;

// On a finite index set every ultrafilter is {S : point ∈ S}.
struct Ultrafilter {
  IndexSet over;
  std::size_t point;

  bool contains(const IndexSubset& s) const { return s.contains(point); }
};

struct IndexedFamily {
  IndexSet over;
  // assign[i] is X_i for token position i; all over one framework.
  std::vector<ArgSet> assign;

  // x̂ = {i : x ∈ X_i}
  IndexSubset hat(std::size_t x) const;
};

struct UltrafilterVerdict {
  bool ok = false;
  std::optional<std::size_t> point;
  // "U1".."U4" when !ok.
  std::string violated;
  std::string detail;
};

// Checks the four axioms against an explicit collection. Cap: 2^16 members.
UltrafilterVerdict is_ultrafilter(const IndexSet& i, const std::vector<IndexSubset>& d);

// Principal ultrafilter at the least point of ⋂omega; throws
// PreconditionError when that intersection is empty.
Ultrafilter extend_fip(const IndexSet& i, const std::vector<IndexSubset>& omega);

// {x : x̂ ∈ D}
ArgSet reduced_meet(const IndexedFamily& fam, const Ultrafilter& d);

// For a ⊆-directed range: a principal D whose meet is the union.
std::pair<Ultrafilter, ArgSet> directed_union_as_meet(const IndexedFamily& fam);

// X ∪ X_eta^+ ⊆ Y ∪ Y_eta^+
bool propto(const Aaf& f, int eta, const ArgSet& x, const ArgSet& y);

struct LawResult {
  std::string law;
  std::string instance;
  bool pass = true;
};

// Evaluates the distributive, subset, out and upper-bound laws. `other`
// supplies the second family for the subset law; when absent it is
// X_i ∪ (X_i)_eta^+.
std::vector<LawResult> check_laws(const Aaf& f, const Params& p, const IndexedFamily& fam,
                                  const Ultrafilter& d,
                                  const std::optional<IndexedFamily>& other = std::nullopt);
nlohmann::json laws_to_json(const std::vector<LawResult>& laws);

struct ClosureReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool closed() const { return failures == 0; }
};

// Draws indexed families from `family` with random principal ultrafilters
// and checks that each reduced meet stays in the family.
ClosureReport check_family_closure(const Aaf& f, const ExtensionFamily& family, std::mt19937_64& rng,
                                   std::size_t samples, std::size_t max_index = 5);

}  // namespace gaf
