#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gaf/framework.hpp"
#include "gaf/semantics.hpp"

namespace gaf {

// First-order formulas over {Att, P, =}.
struct Formula {
  enum class Kind { True, False, Pred, Att, Eq, Not, And, Or, Imp, Forall, Exists };

  Kind kind = Kind::True;
  // Atom arguments, or the bound variable of a quantifier.
  std::vector<std::string> vars;
  std::vector<Formula> kids;

  static Formula truth() { return {Kind::True, {}, {}}; }
  static Formula falsity() { return {Kind::False, {}, {}}; }
  static Formula pred(std::string x) { return {Kind::Pred, {std::move(x)}, {}}; }
  static Formula att(std::string x, std::string y) { return {Kind::Att, {std::move(x), std::move(y)}, {}}; }
  static Formula eq(std::string x, std::string y) { return {Kind::Eq, {std::move(x), std::move(y)}, {}}; }
  static Formula neg(Formula f) { return {Kind::Not, {}, {std::move(f)}}; }
  // A single conjunct/disjunct is returned as is; none gives true/false.
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula imp(Formula a, Formula b) { return {Kind::Imp, {}, {std::move(a), std::move(b)}}; }
  static Formula forall(std::string x, Formula f) { return {Kind::Forall, {std::move(x)}, {std::move(f)}}; }
  static Formula exists(std::string x, Formula f) { return {Kind::Exists, {std::move(x)}, {std::move(f)}}; }
  // Nested quantifier block, outermost first.
  static Formula forall(const std::vector<std::string>& xs, Formula f);
  static Formula exists(const std::vector<std::string>& xs, Formula f);

  friend bool operator==(const Formula&, const Formula&) = default;
};

std::set<std::string> free_vars(const Formula& f);

struct FolModel {
  const Aaf& frame;
  ArgSet predicate;
};

using Assignment = std::map<std::string, std::size_t>;

// Throws PreconditionError when a free variable is unassigned.
bool eval(const FolModel& model, const Formula& phi, const Assignment& rho = {});

// Pairwise distinct attackers xs of target.
Formula cf_macro(const std::vector<std::string>& attackers, const std::string& target);

struct SentenceLibrary {
  Formula beta1;  // self-defense
  Formula beta2;  // pre-fixpoint of defense
  Formula beta3;  // l-conflict-freeness
  Formula beta4;  // N_l(E) ⊆ E
  Formula alpha1;
  Formula alpha2;
  Formula alpha3;
  Formula alpha4;
  std::vector<Formula> sigma_def;
  std::vector<Formula> sigma_cf;
  std::vector<Formula> sigma_ad;
  std::vector<Formula> sigma_co;
  std::vector<Formula> sigma_stb;
};

Formula beta1(int m, int n);
Formula beta2(int m, int n);
Formula beta3(int l);
Formula beta4(int l);
Formula alpha1(int m, int n);
Formula alpha2(int m, int n);
Formula alpha3(int l);
Formula alpha4(int l);
SentenceLibrary sentence_library(const Params& p);
// "def", "cf", "ad", "co" or "stb".
const std::vector<Formula>& sigma_by_name(const SentenceLibrary& lib, std::string_view name);

struct DefinabilityResult {
  bool holds = true;
  std::optional<ArgSet> counterexample;
};

// For every E ⊆ A: <A,->,E> satisfies all of sigma iff E ∈ family.
DefinabilityResult verify_definability(const Aaf& f, const std::vector<Formula>& sigma,
                                       const ExtensionFamily& family, const EnumerationOptions& opts = {});

// True iff rho is non-universal: the model satisfies ∃x ψ but not ∀x ψ.
bool nua(const FolModel& model, const Formula& phi, const Assignment& rho);

// Size of the union over all E of the witnesses b for ψ[rho{b/x}] at
// models where rho is non-universal.
std::size_t omega_finitary_at(const Aaf& f, const Formula& phi, const Assignment& rho, std::size_t cap = 22);

// (P x) (att x y) (= x y) (not f) (and f...) (or f...) (imp f g) (all x f) (ex x f) true false
Formula parse_formula(std::string_view text);
std::string to_sexpr(const Formula& f);

}  // namespace gaf
