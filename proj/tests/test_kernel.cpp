#include <doctest.h>

#include <random>

#include "gaf/errors.hpp"
#include "gaf/kernel.hpp"
#include "support.hpp"

using namespace gaf;

TEST_CASE("neutrality examples") {
  const Aaf cyc = fixtures::three_cycle();
  const Aaf k3d = fixtures::triangle_sink();
  for (int l = 1; l <= 3; ++l) CHECK(neutrality(k3d, l, k3d.none()) == k3d.all());
  CHECK(neutrality(cyc, 1, cyc.set_of({"a"})) == cyc.set_of({"a", "c"}));
  CHECK(neutrality(k3d, 3, k3d.set_of({"a", "b", "c"})) == k3d.set_of({"a", "b", "c"}));
  CHECK_THROWS_AS(neutrality(cyc, 0, cyc.none()), PreconditionError);
}

TEST_CASE("defense examples") {
  const Aaf cyc = fixtures::three_cycle();
  const Aaf chain = fixtures::chain();
  const Aaf k3d = fixtures::triangle_sink();
  CHECK(defense(cyc, 1, 1, cyc.set_of({"a"})) == cyc.set_of({"c"}));
  CHECK(defense(chain, 1, 1, chain.none()) == chain.set_of({"a"}));
  CHECK(defense(k3d, 2, 2, k3d.set_of({"a", "b", "c"})) == k3d.all());
}

TEST_CASE("range examples") {
  const Aaf chain = fixtures::chain();
  const Aaf k3d = fixtures::triangle_sink();
  CHECK(range_plus(k3d, 2, k3d.none()).empty());
  CHECK(range_plus(chain, 1, chain.set_of({"a"})) == chain.set_of({"b"}));
  CHECK(range_plus(k3d, 2, k3d.set_of({"a", "b"})) == k3d.set_of({"c", "d"}));
  CHECK(range_of(chain, 1, chain.set_of({"a"})) == chain.all());
}

TEST_CASE("attacker combinations") {
  const Aaf k3d = fixtures::triangle_sink();
  auto combos = enumerate_attacker_combinations(k3d, k3d.index("d"), 2);
  CHECK(combos == std::vector<ArgSet>{k3d.set_of({"a", "b"}), k3d.set_of({"a", "c"}), k3d.set_of({"b", "c"})});
  const Aaf chain = fixtures::chain();
  CHECK(enumerate_attacker_combinations(chain, chain.index("b"), 2).empty());
  const Aaf self = fixtures::self_attacker();
  CHECK(enumerate_attacker_combinations(self, 0, 1) == std::vector<ArgSet>{self.all()});
}

TEST_CASE("operators match the literal counting oracle") {
  std::mt19937 rng(21);
  for (int round = 0; round < 150; ++round) {
    const int n = 1 + round % 10;
    const auto g = oracle::random_graph(rng, n, 0.1 + 0.05 * (round % 9));
    const Aaf f = support::to_aaf(g);
    std::uniform_int_distribution<oracle::Mask> pick(0, g.all());
    for (int s = 0; s < 10; ++s) {
      const oracle::Mask e = pick(rng);
      const ArgSet set = support::to_set(g, e);
      for (int a = 1; a <= 4; ++a) {
        CHECK(neutrality(f, a, set) == support::to_set(g, oracle::neutral(g, a, e)));
        CHECK(is_conflict_free(f, a, set) == oracle::graded_cf(g, a, e));
        CHECK(range_plus(f, a, set) == support::to_set(g, g.all() & ~oracle::neutral(g, a, e)));
        for (int b = 1; b <= 3; ++b) {
          CHECK(defense(f, a, b, set) == support::to_set(g, oracle::defended(g, a, b, e)));
        }
      }
    }
  }
}

TEST_CASE("order laws of the operators") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 120; ++round) {
    const Aaf f = random_frame(rng, random_size(rng, 1, 10), 0.3);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << f.size()) - 1);
    const ArgSet x = ArgSet::from_mask(f.size(), pick(rng));
    const ArgSet y = x | ArgSet::from_mask(f.size(), pick(rng));
    for (int l = 1; l <= 4; ++l) {
      // Antitone in the set, monotone in the grade.
      CHECK(neutrality(f, l, y).is_subset_of(neutrality(f, l, x)));
      CHECK(neutrality(f, l, x).is_subset_of(neutrality(f, l + 1, x)));
      for (int n = 1; n <= 3; ++n) {
        CHECK(defense(f, l, n, x).is_subset_of(defense(f, l, n, y)));
        CHECK(defense(f, l, n, x) == neutrality(f, l, neutrality(f, n, x)));
      }
    }
    // Neutrality of a chain's union is the meet of the neutralities.
    std::vector<ArgSet> chain{x};
    for (int k = 0; k < 4; ++k) chain.push_back(chain.back() | ArgSet::from_mask(f.size(), pick(rng)));
    for (int l = 1; l <= 3; ++l) {
      ArgSet meet = ArgSet::full(f.size());
      for (const auto& c : chain) meet &= neutrality(f, l, c);
      CHECK(neutrality(f, l, chain.back()) == meet);
    }
  }
}
