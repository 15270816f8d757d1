#include "gaf/representation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "gaf/errors.hpp"
#include "gaf/fixpoint.hpp"
#include "gaf/semantics.hpp"

namespace gaf {

CandidateOmega CandidateOmega::of(const Aaf& f, const ExtensionFamily& family) {
  return CandidateOmega{f.names(), family.sets()};
}

CandidateOmega CandidateOmega::from_json(const nlohmann::json& j) {
  try {
    CandidateOmega o;
    o.universe = j.at("universe").get<std::vector<std::string>>();
    if (o.universe.empty()) throw ParseError(0, "universe must be nonempty");
    std::vector<std::pair<std::string, std::string>> none;
    Aaf names_only = Aaf::from_names(o.universe, none);
    for (const auto& s : j.at("sets")) {
      o.sets.push_back(names_only.set_of(s.get<std::vector<std::string>>()));
    }
    return o;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad candidate JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

nlohmann::json CandidateOmega::to_json() const {
  nlohmann::json j;
  j["universe"] = universe;
  auto arr = nlohmann::json::array();
  for (const auto& s : canonicalize(sets)) {
    auto names = nlohmann::json::array();
    for (auto i : s.members()) names.push_back(universe[i]);
    arr.push_back(names);
  }
  j["sets"] = arr;
  return j;
}

Variant parse_variant(const std::string& text) {
  if (text == "I" || text == "1") return Variant::I;
  if (text == "II" || text == "2") return Variant::II;
  if (text == "III" || text == "3") return Variant::III;
  throw PreconditionError("unknown variant '" + text + "' (expected I, II or III)");
}

std::size_t ChoiceFunction::at(const ArgSet& y) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == y) return choice[i];
  }
  throw PreconditionError("choice function undefined on this set");
}

std::vector<ArgSet> minimal_non_extensible(std::size_t universe, const std::vector<ArgSet>& sets,
                                           std::size_t cap) {
  if (universe > cap || universe > 62) {
    throw CapExceeded("minimal non-extensible sweep over " + std::to_string(universe) +
                      " elements exceeds the cap");
  }
  const auto tops = maximal_of(ExtensionFamily(universe, sets)).sets();
  auto extensible = [&](const ArgSet& x) {
    return std::any_of(tops.begin(), tops.end(), [&](const ArgSet& t) { return x.is_subset_of(t); });
  };
  std::vector<ArgSet> found;
  if (extensible(ArgSet::full(universe))) return found;
  for (std::size_t k = 0; k <= universe; ++k) {
    if (k == 0) {
      if (!extensible(ArgSet(universe))) return {ArgSet(universe)};
      continue;
    }
    // Gosper's hack walks all masks with k bits set.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << universe;
    while (mask < limit) {
      auto x = ArgSet::from_mask(universe, mask);
      bool pruned = std::any_of(found.begin(), found.end(), [&](const ArgSet& y) { return y.is_subset_of(x); });
      if (!pruned && !extensible(x)) found.push_back(std::move(x));
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return canonicalize(std::move(found));
}

std::vector<ArgSet> gamma_omega(const CandidateOmega& omega) {
  return minimal_non_extensible(omega.size(), omega.sets);
}

bool ConditionReport::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.status != "fail"; });
}

nlohmann::json ConditionReport::to_json(const CandidateOmega& omega) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& c : conditions) j[c.id] = {{"status", c.status}, {"detail", c.detail}};
  if (choice) {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < choice->domain.size(); ++i) {
      auto names = nlohmann::json::array();
      for (auto m : choice->domain[i].members()) names.push_back(omega.universe[m]);
      arr.push_back({{"set", names}, {"choice", omega.universe[choice->choice[i]]}});
    }
    j["choice"] = arr;
  }
  return j;
}

namespace {

std::string format_set(const CandidateOmega& omega, const ArgSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ",";
    out += omega.universe[i];
    first = false;
  }
  return out + "}";
}

class ChoiceSearch {
 public:
  ChoiceSearch(const CandidateOmega& omega, std::vector<ArgSet> gamma, bool well_founded)
      : gamma_(std::move(gamma)), need_wf_(well_founded), universe_(omega.size()) {
    for (const auto& s : omega.sets) members_.insert(s);
    ch_.assign(gamma_.size(), 0);
  }

  std::optional<ChoiceFunction> run() {
    if (!assign(0)) return std::nullopt;
    ChoiceFunction out{gamma_, ch_, is_acyclic(gamma_.size())};
    return out;
  }

 private:
  bool assign(std::size_t i) {
    if (i == gamma_.size()) return true;
    for (auto c : gamma_[i].members()) {
      ch_[i] = c;
      if (group_ok(i, c) && (!need_wf_ || is_acyclic(i + 1)) && assign(i + 1)) return true;
    }
    return false;
  }

  // Checks the organization condition for the group of sets choosing c
  // among the first i+1 assignments. Violations persist as groups grow.
  bool group_ok(std::size_t i, std::size_t c) const {
    ArgSet u(universe_);
    std::size_t smallest = universe_ + 1;
    for (std::size_t j = 0; j <= i; ++j) {
      if (ch_[j] == c) {
        u |= gamma_[j];
        smallest = std::min(smallest, gamma_[j].count());
      }
    }
    // Z ranges over subsets of u containing c with |Z| >= smallest.
    ArgSet rest = u;
    rest.erase(c);
    auto pool = rest.members();
    const std::uint64_t total = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) + 1 < smallest) continue;
      ArgSet z(universe_);
      z.insert(c);
      for (std::size_t b = 0; b < pool.size(); ++b) {
        if ((mask >> b) & 1U) z.insert(pool[b]);
      }
      if (members_.count(z)) return false;
    }
    return true;
  }

  // Relation Y -> Y' when ch(Y') ∈ Y and ch(Y) != ch(Y'), on the first k sets.
  bool is_acyclic(std::size_t k) const {
    std::vector<int> state(k, 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
      state[v] = 1;
      for (std::size_t w = 0; w < k; ++w) {
        if (ch_[v] == ch_[w] || !gamma_[v].contains(ch_[w])) continue;
        if (state[w] == 1) return false;
        if (state[w] == 0 && !dfs(w)) return false;
      }
      state[v] = 2;
      return true;
    };
    for (std::size_t v = 0; v < k; ++v) {
      if (state[v] == 0 && !dfs(v)) return false;
    }
    return true;
  }

  std::vector<ArgSet> gamma_;
  bool need_wf_;
  std::size_t universe_;
  std::unordered_set<ArgSet, ArgSetHash> members_;
  std::vector<std::size_t> ch_;
};

}  // namespace

std::optional<ChoiceFunction> find_choice(const CandidateOmega& omega, int l, Variant variant,
                                          std::size_t cap) {
  if (l < 1) throw PreconditionError("grade l must be positive");
  auto gamma = gamma_omega(omega);
  if (gamma.size() > cap) {
    throw CapExceeded("choice search over " + std::to_string(gamma.size()) + " sets exceeds the cap of " +
                      std::to_string(cap));
  }
  return ChoiceSearch(omega, std::move(gamma), variant == Variant::II).run();
}

ConditionReport check_conditions(const CandidateOmega& omega, int l, Variant variant, std::size_t choice_cap) {
  if (l < 1) throw PreconditionError("grade l must be positive");
  ConditionReport r;
  r.conditions.push_back({"a", omega.sets.empty() ? "fail" : "pass",
                          omega.sets.empty() ? "candidate is empty" : ""});

  std::unordered_set<ArgSet, ArgSetHash> members(omega.sets.begin(), omega.sets.end());
  Condition down{"b", "pass", ""};
  for (const auto& x : canonicalize(omega.sets)) {
    for (auto i : x.members()) {
      ArgSet y = x;
      y.erase(i);
      if (!members.count(y)) {
        down = {"b", "fail", format_set(omega, x) + " present but " + format_set(omega, y) + " missing"};
        break;
      }
    }
    if (down.status == "fail") break;
  }
  r.conditions.push_back(down);
  r.conditions.push_back({"c", "auto", "finite universe: closed under reduced meets"});
  r.conditions.push_back({"directed-unions", "auto", "finite universe: directed subfamilies contain their union"});

  auto gamma = gamma_omega(omega);
  const bool exact = variant == Variant::II;
  Condition size{exact ? "d'" : "d", "pass", ""};
  for (const auto& y : gamma) {
    const auto k = static_cast<int>(y.count());
    bool ok = exact ? k == l + 1 : (l - 1 < k && k <= l + 1);
    if (!ok) {
      size = {size.id, "fail",
              format_set(omega, y) + " has size " + std::to_string(k) +
                  (exact ? ", expected " + std::to_string(l + 1)
                         : ", outside (" + std::to_string(l - 1) + "," + std::to_string(l + 1) + "]")};
      break;
    }
  }
  r.conditions.push_back(size);

  const std::string org_id = exact ? "e'" : "e";
  if (gamma.empty()) {
    r.conditions.push_back({org_id, "pass", "no minimal non-members"});
    r.choice = ChoiceFunction{{}, {}, true};
  } else {
    r.choice = find_choice(omega, l, variant, choice_cap);
    r.conditions.push_back({org_id, r.choice ? "pass" : "fail",
                            r.choice ? "" : (exact ? "no well-founded organizing choice" : "no organizing choice")});
  }

  if (variant == Variant::III) {
    std::string counts;
    for (std::size_t a = 0; a < omega.size(); ++a) {
      auto c = std::count_if(gamma.begin(), gamma.end(), [&](const ArgSet& y) { return y.contains(a); });
      if (!counts.empty()) counts += ", ";
      counts += omega.universe[a] + ":" + std::to_string(c);
    }
    r.conditions.push_back({"f", "pass", counts});
  }
  return r;
}

Aaf construct_f_omega(const CandidateOmega& omega, int l, const ChoiceFunction& ch) {
  auto gamma = gamma_omega(omega);
  std::vector<Attack> edges;
  for (const auto& y : gamma) {
    const auto k = static_cast<int>(y.count());
    if (!(l - 1 < k && k <= l + 1)) {
      throw PreconditionError("minimal non-member " + format_set(omega, y) + " has size outside (l-1, l+1]");
    }
    const auto target = ch.at(y);
    if (!y.contains(target)) throw PreconditionError("choice outside its set");
    for (auto b : y.members()) {
      if (b != target || k == l) edges.emplace_back(b, target);
    }
  }
  return Aaf(omega.universe, std::move(edges));
}

RepresentationVerdict representable(const CandidateOmega& omega, int l, Variant variant, std::size_t choice_cap) {
  RepresentationVerdict v;
  v.report = check_conditions(omega, l, variant, choice_cap);
  if (!v.report.all_pass()) return v;
  Aaf witness = construct_f_omega(omega, l, *v.report.choice);
  Params p;
  p.l = l;
  auto got = enumerate(witness, p, SemanticsSpec::of(BaseSemantics::Cf));
  if (!(got == ExtensionFamily(omega.size(), omega.sets))) {
    throw InvariantViolation("constructed framework does not reproduce the candidate");
  }
  if (variant == Variant::II && !wf_on(witness, witness.all())) {
    throw InvariantViolation("well-founded construction produced an attack cycle");
  }
  v.yes = true;
  v.witness = std::move(witness);
  return v;
}

Rho rho(const CandidateOmega& omega, std::size_t choice_cap) {
  Rho r;
  auto gamma = gamma_omega(omega);
  if (gamma.empty()) {
    r.all_positive = true;
    return r;
  }
  std::size_t lo = gamma.front().count();
  std::size_t hi = lo;
  for (const auto& y : gamma) {
    lo = std::min(lo, y.count());
    hi = std::max(hi, y.count());
  }
  if (hi - lo >= 2) return r;
  const int k = static_cast<int>(lo);
  for (int l : {k - 1, k}) {
    if (l >= 1 && representable(omega, l, Variant::I, choice_cap).yes) r.values.push_back(l);
  }
  return r;
}

}  // namespace gaf
