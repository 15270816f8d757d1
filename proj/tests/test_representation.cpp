#include <doctest.h>

#include <random>

#include "gaf/errors.hpp"
#include "gaf/representation.hpp"
#include "gaf/semantics.hpp"
#include "support.hpp"

using namespace gaf;

namespace {
CandidateOmega omega_of(std::vector<std::string> universe, const std::vector<std::vector<std::string>>& sets) {
  const Aaf names(universe, {});
  CandidateOmega o{std::move(universe), {}};
  for (const auto& s : sets) o.sets.push_back(names.set_of(s));
  return o;
}

// Five arguments, grade two, three anti sets.
CandidateOmega five_point() {
  return omega_of({"a", "b", "c", "d", "e"},
                  {{},         {"a"},      {"b"},      {"c"},      {"d"},           {"e"},
                   {"a", "d"}, {"a", "e"}, {"b", "c"}, {"b", "d"}, {"b", "e"},      {"c", "d"},
                   {"c", "e"}, {"d", "e"}, {"a", "d", "e"}, {"b", "c", "e"}, {"b", "d", "e"}, {"c", "d", "e"}});
}

const Condition& cond(const ConditionReport& r, const std::string& id) {
  for (const auto& c : r.conditions) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("missing condition " + id);
}
}  // namespace

TEST_CASE("pair candidate") {
  const auto omega = omega_of({"a", "b"}, {{}, {"a"}, {"b"}});
  CHECK(gamma_omega(omega) == std::vector<ArgSet>{ArgSet::full(2)});
  auto v = representable(omega, 1, Variant::I);
  REQUIRE(v.yes);
  REQUIRE(v.witness);
  CHECK(v.witness->attacks().size() == 1);
  CHECK(enumerate(*v.witness, Params{}, "cf") == ExtensionFamily(2, omega.sets));
  CHECK(representable(omega, 2, Variant::I).witness->attacks().size() == 2);
  CHECK_FALSE(representable(omega, 3, Variant::I).yes);
  auto r = rho(omega);
  CHECK_FALSE(r.all_positive);
  CHECK(r.values == std::vector<int>{1, 2});
}

TEST_CASE("degenerate candidates") {
  // Only the empty set: a single self-attacker.
  const auto lone = omega_of({"a"}, {{}});
  auto v = representable(lone, 1, Variant::I);
  REQUIRE(v.yes);
  CHECK(v.witness->attacks() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
  CHECK_FALSE(representable(lone, 1, Variant::II).yes);

  const auto power = omega_of({"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}});
  CHECK(gamma_omega(power).empty());
  auto all = rho(power);
  CHECK(all.all_positive);
  CHECK(representable(power, 4, Variant::III).yes);
  CHECK(representable(power, 4, Variant::II).yes);

  const auto empty = omega_of({"a", "b"}, {});
  CHECK(gamma_omega(empty) == std::vector<ArgSet>{ArgSet(2)});
  auto no = representable(empty, 1, Variant::I);
  CHECK_FALSE(no.yes);
  CHECK(cond(no.report, "a").status == "fail");
}

TEST_CASE("mixed anti set sizes are not representable") {
  // Minimal non-members {d} and {a,b,c}: sizes one and three cannot share a grade.
  const auto omega =
      omega_of({"a", "b", "c", "d"}, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
  const auto gamma = gamma_omega(omega);
  REQUIRE(gamma.size() == 2);
  for (int l = 1; l <= 4; ++l) CHECK_FALSE(representable(omega, l, Variant::I).yes);
  CHECK(rho(omega).values.empty());
}

TEST_CASE("non down-closed candidates fail the closure condition") {
  const auto omega = omega_of({"a", "b"}, {{"a", "b"}});
  auto v = representable(omega, 1, Variant::I);
  CHECK_FALSE(v.yes);
  CHECK(cond(v.report, "b").status == "fail");
  auto j = v.report.to_json(omega);
  CHECK(j["b"]["status"] == "fail");
}

TEST_CASE("five argument candidate at grade two") {
  const auto omega = five_point();
  const Aaf names(omega.universe, {});
  CHECK(gamma_omega(omega) ==
        std::vector<ArgSet>{names.set_of({"a", "b"}), names.set_of({"a", "c"}), names.set_of({"b", "c", "d"})});
  const auto ch = find_choice(omega, 2, Variant::I);
  REQUIRE(ch);
  CHECK(ch->at(names.set_of({"a", "b"})) == names.index("a"));
  CHECK(ch->at(names.set_of({"a", "c"})) == names.index("a"));
  CHECK(enumerate(construct_f_omega(omega, 2, *ch), Params{2, 1, 1, 1}, "cf") == ExtensionFamily(5, omega.sets));
  // The choice picking d out of {b,c,d} is organizing as well.
  ChoiceFunction by_hand{gamma_omega(omega), {names.index("a"), names.index("a"), names.index("d")}, false};
  const Aaf built = construct_f_omega(omega, 2, by_hand);
  const Aaf expected(omega.universe, {{1, 0}, {0, 0}, {2, 0}, {1, 3}, {2, 3}});
  CHECK(built == expected);
  CHECK(enumerate(built, Params{2, 1, 1, 1}, "cf") == ExtensionFamily(5, omega.sets));
  auto v = representable(omega, 2, Variant::I);
  CHECK(v.yes);
  CHECK(cond(v.report, "d").status == "pass");
  CHECK_FALSE(representable(omega, 1, Variant::I).yes);
}

TEST_CASE("json round trip of candidates") {
  const auto omega = five_point();
  CHECK(CandidateOmega::from_json(omega.to_json()).sets.size() == omega.sets.size());
  CHECK_THROWS(CandidateOmega::from_json(nlohmann::json::parse(R"({"universe":["a"],"sets":[["z"]]})")));
  CHECK(parse_variant("II") == Variant::II);
  CHECK_THROWS_AS(parse_variant("IV"), PreconditionError);
}

TEST_CASE("cf families of random frames round trip") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 120; ++round) {
    const Aaf f = random_frame(rng, random_size(rng, 1, 6), 0.3);
    for (int l = 1; l <= 3; ++l) {
      const auto cf = enumerate(f, Params{l, 1, 1, 1}, "cf");
      const auto omega = CandidateOmega::of(f, cf);
      auto v = representable(omega, l, Variant::I, 64);
      REQUIRE(v.yes);
      CHECK(enumerate(*v.witness, Params{l, 1, 1, 1}, "cf") == cf);
    }
  }
}

TEST_CASE("cf families of acyclic frames admit well-founded witnesses") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 80; ++round) {
    const Aaf f = random_acyclic_frame(rng, random_size(rng, 1, 6), 0.4);
    for (int l = 1; l <= 2; ++l) {
      const auto cf = enumerate(f, Params{l, 1, 1, 1}, "cf");
      auto v = representable(CandidateOmega::of(f, cf), l, Variant::II, 64);
      REQUIRE(v.yes);
      CHECK(enumerate(*v.witness, Params{l, 1, 1, 1}, "cf") == cf);
      for (const auto& y : gamma_omega(CandidateOmega::of(f, cf))) CHECK(y.count() == static_cast<std::size_t>(l + 1));
    }
  }
}
