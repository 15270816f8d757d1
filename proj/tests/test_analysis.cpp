#include <doctest.h>

#include <random>

#include "gaf/analysis.hpp"
#include "gaf/errors.hpp"
#include "gaf/semantics.hpp"
#include "support.hpp"

using namespace gaf;
using support::family;

TEST_CASE("extensibility and inference") {
  const Aaf cyc = fixtures::three_cycle();
  const Aaf chain = fixtures::chain();
  const auto cf = enumerate(cyc, Params{}, "cf");
  CHECK(is_extensible(cf, cyc.set_of({"a"})));
  CHECK_FALSE(is_extensible(cf, cyc.set_of({"a", "b"})));
  CHECK(is_extensible(family(cyc, {{"a", "b", "c"}}), cyc.set_of({"b", "c"})));
  CHECK(infers(enumerate(chain, Params{}, "co"), chain.none(), chain.index("a")));
  const auto co = enumerate(cyc, Params{}, "co");
  CHECK_FALSE(infers(co, cyc.none(), cyc.index("a")));
  CHECK(infers(co, cyc.set_of({"a"}), cyc.index("b")));
}

TEST_CASE("anti sets") {
  const Aaf cyc = fixtures::three_cycle();
  CHECK(anti_sets(cyc, enumerate(cyc, Params{}, "cf")) ==
        std::vector<ArgSet>{cyc.set_of({"a", "b"}), cyc.set_of({"a", "c"}), cyc.set_of({"b", "c"})});
  const Aaf self = fixtures::self_attacker();
  CHECK(anti_sets(self, enumerate(self, Params{}, "cf")) == std::vector<ArgSet>{self.all()});
  CHECK(anti_sets(cyc, family(cyc, {{"a", "b", "c"}})).empty());
}

TEST_CASE("anti sets are the minimal non-extensible sets") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 60; ++round) {
    const Aaf f = random_frame(rng, random_size(rng, 1, 7), 0.3);
    const auto fam = enumerate(f, Params{2, 1, 2, 1}, round % 2 ? "co" : "cf");
    const auto anti = anti_sets(f, fam);
    std::vector<ArgSet> expected;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
      const ArgSet x = ArgSet::from_mask(f.size(), mask);
      if (is_extensible(fam, x)) continue;
      bool minimal = true;
      for (auto a : x.members()) {
        ArgSet y = x;
        y.erase(a);
        minimal = minimal && is_extensible(fam, y);
      }
      if (minimal) expected.push_back(x);
    }
    CHECK(anti == canonicalize(expected));
  }
}

TEST_CASE("gamma at an argument") {
  const Aaf cyc = fixtures::three_cycle();
  auto g = gamma_at(cyc, enumerate(cyc, Params{}, "cf"), cyc.index("a"));
  CHECK(g.gamma == std::vector<ArgSet>{cyc.set_of({"a", "b"}), cyc.set_of({"a", "c"})});
  CHECK(g.classes.size() == 2);
  const Aaf self = fixtures::self_attacker();
  auto s = gamma_at(self, enumerate(self, Params{}, "cf"), 0);
  CHECK(s.gamma.size() == 1);
  CHECK(s.classes.size() == 1);
  const Aaf chain = fixtures::chain();
  CHECK(gamma_at(chain, enumerate(chain, Params{2, 1, 1, 1}, "cf"), 0).gamma.empty());
}

TEST_CASE("framework comparison") {
  const Aaf chain = fixtures::chain();
  const Aaf same({"a", "b"}, {{0, 1}, {0, 1}});
  auto c = compare_frameworks(chain, same, parse_spec("co"), Params{});
  CHECK(c.anti_equal);
  CHECK(c.approx_equal);
  CHECK(c.max_equal);
  CHECK(c.inference_equal);
  const Aaf empty({"b", "a"}, {});
  auto d = compare_frameworks(chain, empty, parse_spec("cf"), Params{2, 1, 1, 1});
  CHECK(d.anti_equal);
  CHECK(d.approx_equal);
  CHECK(d.max_equal);
  CHECK(d.inference_equal);
  CHECK_FALSE(d.both_anti_nonempty);
  CHECK_THROWS_AS(compare_frameworks(chain, fixtures::self_attacker(), parse_spec("cf"), Params{}), PreconditionError);
  auto e = compare_frameworks(chain, empty, parse_spec("cf"), Params{});
  CHECK_FALSE(e.anti_equal);
  CHECK(e.consistent());
}

TEST_CASE("safe operators") {
  const Aaf cyc = fixtures::three_cycle();
  CHECK(safe_restrict_cf(cyc, 1) == cyc);
  const Aaf chain = fixtures::chain();
  CHECK(safe_restrict_cf(chain, 2).attacks().empty());
  const Aaf self = fixtures::self_attacker();
  CHECK(safe_restrict_cf(self, 1) == self);
  CHECK(canonical_cf(self, 1) == self);
  CHECK(canonical_cf(chain, 2).attacks().empty());
  const Aaf rebuilt = canonical_cf(cyc, 1);
  CHECK(rebuilt.attacks().size() == 3);
  CHECK(enumerate(rebuilt, Params{}, "cf") == family(cyc, {{}, {"a"}, {"b"}, {"c"}}));
}

TEST_CASE("order report") {
  const Aaf cyc = fixtures::three_cycle();
  auto r = order_report(enumerate(cyc, Params{}, "cf"));
  CHECK(r.down_closed.ok());
  CHECK_FALSE(r.union_closed.ok());
  CHECK(r.union_closed.witness == std::vector<ArgSet>{cyc.set_of({"a"}), cyc.set_of({"b"})});
  CHECK(r.directed_union_closed.ok());
  CHECK(r.lindenbaum.ok());
  CHECK(r.has_least.ok());
  CHECK(r.least == cyc.none());

  auto d = order_report(enumerate(cyc, Params{1, 2, 2, 1}, "def"));
  CHECK(d.union_closed.ok());
  CHECK(d.has_greatest.ok());
  CHECK(d.is_lattice.ok());

  auto e = order_report(ExtensionFamily(3));
  CHECK(e.down_closed.ok());
  CHECK(e.union_closed.ok());
  CHECK(e.directed_union_closed.ok());
  CHECK_FALSE(e.has_least.ok());
  CHECK_FALSE(e.has_greatest.ok());

  auto j = r.to_json(cyc);
  CHECK(j["down_closed"] == true);
  CHECK(j["union_closed"]["witness"] == nlohmann::json::parse(R"([["a"],["b"]])"));
  OrderOptions tight;
  tight.lattice_cap = 1;
  CHECK(order_report(enumerate(cyc, Params{}, "cf"), tight).to_json(cyc)["is_lattice"] == "skipped");
  tight.cap = 2;
  CHECK_THROWS_AS(order_report(enumerate(cyc, Params{}, "cf"), tight), CapExceeded);
}

TEST_CASE("galois check") {
  CHECK(galois_check(fixtures::chain(), Params{}));
  CHECK(galois_check(fixtures::three_cycle(), Params{}));
  CHECK_THROWS_AS(galois_check(fixtures::chain(), Params{3, 2, 2, 1}), PreconditionError);
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    const Aaf f = random_frame(rng, random_size(rng, 1, 7), 0.3);
    CHECK(galois_check(f, Params{2, 1, 3, 1}));
    CHECK(galois_check(f, Params{2, 2, 2, 1}));
  }
}
