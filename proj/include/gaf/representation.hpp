#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaf/framework.hpp"

namespace gaf {

// A universe plus an arbitrary collection of its subsets.
struct CandidateOmega {
  std::vector<std::string> universe;
  std::vector<ArgSet> sets;

  std::size_t size() const { return universe.size(); }
  // Builds from the universe of f and a family over f.
  static CandidateOmega of(const Aaf& f, const ExtensionFamily& family);
  // {"universe":[...],"sets":[[...],...]}
  static CandidateOmega from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

enum class Variant { I, II, III };
Variant parse_variant(const std::string& text);

// Chosen member for every minimal non-member (domain in canonical order).
struct ChoiceFunction {
  std::vector<ArgSet> domain;
  std::vector<std::size_t> choice;
  bool well_founded = false;

  std::size_t at(const ArgSet& y) const;
};

// ⊆-minimal subsets of the universe contained in no member of `sets`.
// Size-ascending sweep; candidates containing a found set are skipped.
std::vector<ArgSet> minimal_non_extensible(std::size_t universe, const std::vector<ArgSet>& sets,
                                           std::size_t cap = 22);

std::vector<ArgSet> gamma_omega(const CandidateOmega& omega);

struct Condition {
  std::string id;      // "a".."f", "d'", "e'", "directed-unions"
  std::string status;  // "pass", "fail", "auto"
  std::string detail;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  std::optional<ChoiceFunction> choice;

  bool all_pass() const;
  nlohmann::json to_json(const CandidateOmega& omega) const;
};

ConditionReport check_conditions(const CandidateOmega& omega, int l, Variant variant,
                                 std::size_t choice_cap = 16);

// First well-organized choice in search order (non-members canonical, members in
// argument order). Variant II additionally demands well-foundedness.
// Throws CapExceeded when there are more than cap minimal non-members.
std::optional<ChoiceFunction> find_choice(const CandidateOmega& omega, int l, Variant variant,
                                          std::size_t cap = 16);

// Edges b -> ch(Y) for b in Y; b = ch(Y) included only when |Y| = l.
Aaf construct_f_omega(const CandidateOmega& omega, int l, const ChoiceFunction& ch);

struct RepresentationVerdict {
  bool yes = false;
  ConditionReport report;
  std::optional<Aaf> witness;
};

RepresentationVerdict representable(const CandidateOmega& omega, int l, Variant variant,
                                    std::size_t choice_cap = 16);

// {l : representable(omega, l, I)}
struct Rho {
  bool all_positive = false;
  std::vector<int> values;
};
Rho rho(const CandidateOmega& omega, std::size_t choice_cap = 16);

}  // namespace gaf
