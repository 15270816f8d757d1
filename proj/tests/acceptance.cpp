// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gaf/io.hpp"
#include "gaf/representation.hpp"
#include "gaf/semantics.hpp"
#include "gaf/verify.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace gaf;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

Outcome from_suites(std::initializer_list<const char*> names) {
  Outcome o;
  for (const char* name : names) {
    const auto r = run_suite(name);
    o.pass = o.pass && r.pass();
    if (!o.note.empty()) o.note += "; ";
    o.note += std::string(name) + " checks=" + std::to_string(r.checks()) +
              " violations=" + std::to_string(r.violations());
    for (const auto& w : r.witnesses) o.note += " [" + w + "]";
  }
  return o;
}

Outcome classical_collapse() {
  std::mt19937 rng(2024);
  const Params p{};
  std::size_t frames = 0;
  std::size_t mismatches = 0;
  std::string first;
  for (int round = 0; round < 240; ++round) {
    const int n = 1 + round % 8;
    const auto g = oracle::random_graph(rng, n, 0.1 + 0.05 * (round % 8));
    const Aaf f = support::to_aaf(g);
    const oracle::Mask grounded = oracle::classical_grounded(g);
    const auto stb = oracle::classical_stb(g);
    const std::vector<std::pair<const char*, oracle::Family>> expected{
        {"cf", oracle::classical_cf(g)},
        {"def", oracle::classical_def(g)},
        {"ad", oracle::classical_ad(g)},
        {"co", oracle::classical_co(g)},
        {"stb", stb},
        {"gr", {grounded}},
        {"gr-dung", {grounded}},
        {"gr-dunne", {grounded}},
        {"na", oracle::classical_na(g)},
        {"pr", oracle::maximal(oracle::classical_co(g))},
        {"pr-dung", oracle::classical_pr(g)},
        {"stg", oracle::classical_stg(g)},
        {"ss", oracle::classical_ss(g)},
        {"rra", oracle::classical_rra(g)},
        {"rrs", oracle::range_maximal(g, stb)},
        {"id", oracle::classical_ideal(g)},
        {"eg", oracle::classical_eager(g)},
    };
    for (const auto& [name, fam] : expected) {
      if (!(enumerate(f, p, name) == support::to_family(g, fam))) {
        if (mismatches++ == 0) first = std::string(name) + " on " + emit_apx(f);
      }
    }
    ++frames;
  }
  return {mismatches == 0, std::to_string(frames) + " frames, 17 semantics, mismatches=" +
                               std::to_string(mismatches) + (first.empty() ? "" : " first: " + first)};
}

// The infinite descending chain has two complete extensions; any finite prefix
// has an unattacked top element and collapses to the grounded one.
Outcome truncated_chain() {
  oracle::Graph g(10);
  for (int k = 0; k + 1 < 10; ++k) g.add(k + 1, k);
  const Aaf f = support::to_aaf(g);
  const auto co = enumerate(f, Params{}, "co");
  const bool ok = co == support::to_family(g, oracle::classical_co(g)) && co.size() == 1 &&
                  co == enumerate(f, Params{}, "gr");
  return {ok, "10-element chain co=" + family_to_json(f, co).dump()};
}

Outcome five_point_candidate() {
  const Aaf names({"a", "b", "c", "d", "e"}, {});
  const std::vector<std::vector<std::string>> listed{
      {},         {"a"},      {"b"},      {"c"},      {"d"},           {"e"},
      {"a", "d"}, {"a", "e"}, {"b", "c"}, {"b", "d"}, {"b", "e"},      {"c", "d"},
      {"c", "e"}, {"d", "e"}, {"a", "d", "e"}, {"b", "c", "e"}, {"b", "d", "e"}, {"c", "d", "e"}};
  const auto target = support::family(names, listed);
  CandidateOmega omega{{"a", "b", "c", "d", "e"}, {target.begin(), target.end()}};
  const auto gamma = gamma_omega(omega);
  const bool gamma_ok =
      gamma == std::vector<ArgSet>{names.set_of({"a", "b"}), names.set_of({"a", "c"}), names.set_of({"b", "c", "d"})};
  const auto v = representable(omega, 2, Variant::I);
  const bool rebuilt = v.yes && enumerate(*v.witness, Params{2, 1, 1, 1}, "cf") == target;

  CandidateOmega power{{"a", "b", "c"}, {}};
  for (std::uint64_t m = 0; m < 8; ++m) power.sets.push_back(ArgSet::from_mask(3, m));
  const bool all = rho(power).all_positive;
  return {gamma_ok && rebuilt && all, std::string("gamma ") + (gamma_ok ? "matches" : "differs") +
                                          ", witness " + (rebuilt ? "reproduces" : "fails") +
                                          ", rho(powerset) " + (all ? "all positive" : "bounded")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "classical collapse vs oracle", classical_collapse},
      {2, "fundamental lemma", [] { return from_suites({"fundamental-lemma"}); }},
      {3, "necessity witnesses", [] { return from_suites({"necessity-witness"}); }},
      {4, "grounded triad", [] { return from_suites({"grounded-triad"}); }},
      {5, "relations", [] { return from_suites({"relations"}); }},
      {6, "well-founded collapse", [] { return from_suites({"well-founded"}); }},
      {7, "galois adjunction", [] { return from_suites({"galois"}); }},
      {8, "reduced-meet laws", [] { return from_suites({"reduced-meet"}); }},
      {9, "representation round trips",
       [] {
         auto a = from_suites({"representation"});
         auto b = five_point_candidate();
         return Outcome{a.pass && b.pass, a.note + "; " + b.note};
       }},
      {10, "safe operators", [] { return from_suites({"safe-operators"}); }},
      {11, "first-order definability", [] { return from_suites({"definability"}); }},
      {12, "order structure",
       [] {
         auto a = from_suites({"order"});
         auto b = truncated_chain();
         return Outcome{a.pass && b.pass, a.note + "; " + b.note};
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Each criterion carries a 60 s budget.
    if (secs > 60.0) {
      o.pass = false;
      o.note += "; over time budget";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s) %.2fs: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
