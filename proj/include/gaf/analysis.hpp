#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaf/framework.hpp"
#include "gaf/semantics.hpp"

namespace gaf {

// ∃E ∈ family with X ⊆ E.
bool is_extensible(const ExtensionFamily& family, const ArgSet& x);
// Every member containing X contains a (vacuously true when none does).
bool infers(const ExtensionFamily& family, const ArgSet& x, std::size_t a);

// ⊆-minimal sets contained in no member of the family.
std::vector<ArgSet> anti_sets(const Aaf& f, const ExtensionFamily& family);

struct GammaAt {
  std::vector<ArgSet> gamma;
  // Classes of sets whose remainders after removing a sit in the same maximal members.
  std::vector<std::vector<ArgSet>> classes;
};
GammaAt gamma_at(const Aaf& f, const ExtensionFamily& family, std::size_t a);

struct Comparison {
  bool anti_equal = false;
  bool approx_equal = false;
  bool max_equal = false;
  bool inference_equal = false;
  bool both_anti_nonempty = false;

  // The first three agree, and the fourth joins them when both anti families are nonempty.
  bool consistent() const;
  nlohmann::json to_json() const;
};

// Frameworks must declare the same argument names; order may differ.
Comparison compare_frameworks(const Aaf& f1, const Aaf& f2, const SemanticsSpec& spec, const Params& p,
                              const EnumerationOptions& opts = {});

// Keeps a -> b only when some anti-cf set contains both endpoints.
Aaf safe_restrict_cf(const Aaf& f, int l);

// Rebuilds the framework from its anti-cf sets through an organizing choice.
Aaf canonical_cf(const Aaf& f, int l, std::size_t choice_cap = 16);

struct OrderOptions {
  std::size_t cap = std::size_t{1} << 14;
  std::size_t lattice_cap = std::size_t{1} << 10;
  // Families up to this size have every subfamily examined.
  std::size_t subfamily_cap = 12;
};

struct Flag {
  enum class State { True, False, Skipped };
  State state = State::True;
  std::vector<ArgSet> witness;

  bool ok() const { return state == State::True; }
};

struct OrderReport {
  Flag down_closed;
  Flag union_closed;
  Flag directed_union_closed;
  Flag has_least;
  Flag has_greatest;
  Flag is_lattice;
  Flag lindenbaum;
  // inf S = ⋃{X : X ⊆ ⋂S} for nonempty S.
  Flag inf_formula;
  std::optional<ArgSet> least;

  nlohmann::json to_json(const Aaf& f) const;
};

OrderReport order_report(const ExtensionFamily& family, const OrderOptions& opts = {});

// For every admissible E and complete E': lfp(E) ⊆ E' iff E ⊆ E'. Needs n >= l >= m.
bool galois_check(const Aaf& f, const Params& p, const EnumerationOptions& opts = {});

}  // namespace gaf
