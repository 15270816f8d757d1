#include "gaf/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gaf/analysis.hpp"
#include "gaf/errors.hpp"
#include "gaf/fixpoint.hpp"
#include "gaf/fol.hpp"
#include "gaf/generators.hpp"
#include "gaf/io.hpp"
#include "gaf/kernel.hpp"
#include "gaf/reduced_meet.hpp"
#include "gaf/representation.hpp"
#include "gaf/semantics.hpp"

namespace gaf {

std::size_t SuiteReport::checks() const {
  std::size_t c = 0;
  for (const auto& [_, t] : properties) c += t.checks;
  return c;
}

std::size_t SuiteReport::violations() const {
  std::size_t v = 0;
  for (const auto& [_, t] : properties) v += t.violations;
  return v;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json props = nlohmann::json::object();
  for (const auto& [name, t] : properties) props[name] = {{"checks", t.checks}, {"violations", t.violations}};
  return {{"suite", suite},     {"seed", seed},           {"pass", pass()},   {"checks", checks()},
          {"violations", violations()}, {"properties", props}, {"witnesses", witnesses}, {"found", found}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fundamental-lemma", "necessity-witness", "grounded-triad",
                                              "relations",         "well-founded",      "galois",
                                              "reduced-meet",      "representation",    "safe-operators",
                                              "definability",      "order"};
  return names;
}

namespace {

constexpr std::size_t kMaxWitnesses = 8;

class Tally {
 public:
  explicit Tally(SuiteReport& r) : r_(r) {}

  void check(const std::string& property, bool ok, const std::function<std::string()>& what) {
    auto& t = r_.properties[property];
    ++t.checks;
    if (ok) return;
    ++t.violations;
    if (r_.witnesses.size() < kMaxWitnesses) r_.witnesses.push_back(property + ": " + what());
  }

 private:
  SuiteReport& r_;
};

std::string inline_apx(const Aaf& f) {
  std::string s = emit_apx(f);
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string grades(const Params& p) {
  return "l=" + std::to_string(p.l) + " m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) +
         " eta=" + std::to_string(p.eta);
}

std::string where(const Aaf& f, const Params& p) { return "[" + inline_apx(f) + "] " + grades(p); }

std::string where(const Aaf& f, const Params& p, const ArgSet& e) { return where(f, p) + " E=" + f.format(e); }

std::size_t pick(std::size_t configured, std::size_t fallback) { return configured ? configured : fallback; }

// All (l, m, n) in [1, g]^3 with eta = 1.
std::vector<Params> grade_triples(int g) {
  std::vector<Params> out;
  for (int l = 1; l <= g; ++l) {
    for (int m = 1; m <= g; ++m) {
      for (int n = 1; n <= g; ++n) out.push_back(Params{l, m, n, 1});
    }
  }
  return out;
}

std::vector<Params> grade_quads(int g) {
  std::vector<Params> out;
  for (auto p : grade_triples(g)) {
    for (int eta = 1; eta <= g; ++eta) {
      p.eta = eta;
      out.push_back(p);
    }
  }
  return out;
}

Aaf draw_frame(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = random_size(rng, lo, hi);
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  return random_frame(rng, n, density);
}

ExtensionFamily fam(const Aaf& f, const Params& p, BaseSemantics b) {
  return enumerate(f, p, SemanticsSpec::of(b));
}

bool subset_family(const ExtensionFamily& a, const ExtensionFamily& b) {
  return std::all_of(a.begin(), a.end(), [&](const ArgSet& e) { return b.contains(e); });
}

std::vector<ArgSet> all_subsets(std::size_t n) {
  std::vector<ArgSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(ArgSet::from_mask(n, mask));
  return out;
}

// ---------------------------------------------------------------------------

void fundamental_lemma(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 300);
  const std::size_t max_size = pick(c.max_size, 7);
  const int g = c.max_grade ? c.max_grade : 3;
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    const auto subsets = all_subsets(f.size());
    for (const auto& p : grade_triples(g)) {
      std::vector<ArgSet> self_defended;
      ArgSet sd_union(f.size());
      for (const auto& s : subsets) {
        if (is_self_defended(f, p.m, p.n, s)) {
          self_defended.push_back(s);
          sd_union |= s;
        }
      }
      t.check("gfp-is-union-of-self-defended", gfp(f, p.m, p.n) == sd_union, [&] { return where(f, p); });

      // Sets closed under defense with a well-founded complement admit no
      // self-defended proper extension.
      for (const auto& x : subsets) {
        if (!defense(f, p.m, p.n, x).is_subset_of(x) || !wf_plus_on(f, x.complement())) continue;
        bool ok = std::none_of(self_defended.begin(), self_defended.end(),
                               [&](const ArgSet& y) { return x.is_proper_subset_of(y); });
        if (ok && defense(f, p.m, p.n, x) == x) ok = x == gfp(f, p.m, p.n);
        t.check("transitive-closure-largest", ok, [&] { return where(f, p, x); });
      }

      if (!(p.n >= p.l && p.l >= p.m)) continue;
      const ArgSet ground = lfp_from(f, p.m, p.n, f.none());
      for (const auto& e : self_defended) {
        if (!is_conflict_free(f, p.l, e)) continue;
        const auto trace = iterate_defense(f, p.m, p.n, e);
        const ArgSet ne = neutrality(f, p.l, e);
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
          const ArgSet& s = trace.steps[i];
          const ArgSet ns = neutrality(f, p.l, s);
          t.check("inclusion-chain", e.is_subset_of(s) && s.is_subset_of(ns) && ns.is_subset_of(ne),
                  [&] { return where(f, p, e) + " step " + std::to_string(i); });
          if (i > 0) {
            t.check("trace-increasing", trace.steps[i - 1].is_subset_of(s),
                    [&] { return where(f, p, e) + " step " + std::to_string(i); });
          }
        }
        if (e.is_subset_of(ground)) {
          bool all_admissible = std::all_of(trace.steps.begin(), trace.steps.end(), [&](const ArgSet& s) {
            return is_conflict_free(f, p.l, s) && is_self_defended(f, p.m, p.n, s);
          });
          t.check("construction-co", all_admissible && lfp_from(f, p.m, p.n, e) == ground,
                  [&] { return where(f, p, e); });
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

bool loses_conflict_freeness(const Aaf& f, const Params& p, ArgSet& witness) {
  for (const auto& e : fam(f, p, BaseSemantics::Ad)) {
    if (!is_conflict_free(f, p.l, defense(f, p.m, p.n, e))) {
      witness = e;
      return true;
    }
  }
  return false;
}

void necessity_witness(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t budget = pick(c.frames, 50000);
  const std::size_t max_size = std::min<std::size_t>(pick(c.max_size, 6), 6);
  const Params lemma_grades{3, 2, 2, 1};
  const Params range_grades{3, 2, 2, 3};

  {
    const Aaf seed = fixtures::triangle_sink();
    const ArgSet e = seed.set_of({"a", "b", "c"});
    const bool admissible = fam(seed, lemma_grades, BaseSemantics::Ad).contains(e);
    const bool breaks = !is_conflict_free(seed, lemma_grades.l, defense(seed, lemma_grades.m, lemma_grades.n, e));
    t.check("seed-witness", admissible && breaks, [&] { return where(seed, lemma_grades, e); });
    if (admissible && breaks) r.found.push_back("cf-loss seed: " + where(seed, lemma_grades, e));
  }

  std::optional<std::string> cf_loss;
  std::optional<std::string> pr_gap;
  std::optional<std::string> ss_gap;
  std::size_t tried = 0;
  for (; tried < budget && (!cf_loss || !pr_gap || !ss_gap); ++tried) {
    const Aaf f = draw_frame(rng, 3, max_size);
    ArgSet e(f.size());
    if (!cf_loss && loses_conflict_freeness(f, lemma_grades, e)) {
      cf_loss = "cf-loss: " + where(f, lemma_grades, e) + " D(E)=" +
                f.format(defense(f, lemma_grades.m, lemma_grades.n, e));
    }
    if (!pr_gap) {
      const auto pr = fam(f, lemma_grades, BaseSemantics::Pr);
      const auto prd = fam(f, lemma_grades, BaseSemantics::PrDung);
      if (!(pr == prd)) {
        pr_gap = "pr != pr-dung: " + where(f, lemma_grades) + " pr=" + family_to_json(f, pr).dump() +
                 " pr-dung=" + family_to_json(f, prd).dump();
      }
    }
    if (!ss_gap) {
      const auto ss = fam(f, range_grades, BaseSemantics::Ss);
      const auto rra = fam(f, range_grades, BaseSemantics::Rra);
      if (!(ss == rra)) {
        ss_gap = "ss != rra: " + where(f, range_grades) + " ss=" + family_to_json(f, ss).dump() +
                 " rra=" + family_to_json(f, rra).dump();
      }
    }
  }
  const std::string searched = "none within " + std::to_string(tried) + " frames of size <= " +
                               std::to_string(max_size);
  t.check("search-cf-loss", cf_loss.has_value(), [&] { return searched; });
  t.check("search-pr-gap", pr_gap.has_value(), [&] { return searched; });
  t.check("search-ss-gap", ss_gap.has_value(), [&] { return searched; });
  for (const auto* s : {&cf_loss, &pr_gap, &ss_gap}) {
    if (*s) r.found.push_back(**s);
  }
  r.found.push_back("frames searched: " + std::to_string(tried));
}

// ---------------------------------------------------------------------------

void grounded_triad(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 300);
  const std::size_t max_size = pick(c.max_size, 6);
  const int g = c.max_grade ? c.max_grade : 3;

  auto run = [&](const Aaf& f, const Params& p) {
    const auto co = fam(f, p, BaseSemantics::Co);
    const auto gr = fam(f, p, BaseSemantics::Gr);
    const auto dung = fam(f, p, BaseSemantics::GrDung);
    const auto dunne = fam(f, p, BaseSemantics::GrDunne);
    const ArgSet bottom = lfp_from(f, p.m, p.n, f.none());
    const bool a = gr == dung && dung == dunne;
    const bool b = !co.empty();
    const bool cc = gr == ExtensionFamily(f.size(), {bottom});
    const bool d = is_conflict_free(f, p.l, bottom);
    t.check("condition-agreement", a == b && b == cc && cc == d, [&] { return where(f, p); });
    if (p.l >= p.m && p.n >= p.m) {
      t.check("triad-under-grade-order", b && a, [&] { return where(f, p); });
    }
  };
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    for (const auto& p : grade_triples(g)) run(f, p);
  }

  const Aaf cyc = fixtures::three_cycle();
  const Params p{1, 2, 2, 1};
  const auto co = fam(cyc, p, BaseSemantics::Co);
  const auto dunne = fam(cyc, p, BaseSemantics::GrDunne);
  const bool ok = co.empty() && dunne == ExtensionFamily(cyc.size(), {cyc.all()});
  t.check("empty-co-instance", ok, [&] { return where(cyc, p); });
  if (ok) r.found.push_back("co empty, gr-dunne = {A}: " + where(cyc, p));
}

// ---------------------------------------------------------------------------

void relations(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 150);
  const std::size_t max_size = pick(c.max_size, 6);
  const int g = c.max_grade ? c.max_grade : 3;
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    for (const auto& p : grade_quads(g)) {
      const auto stb = fam(f, p, BaseSemantics::Stb);
      const auto rrs = fam(f, p, BaseSemantics::Rrs);
      const auto stg = fam(f, p, BaseSemantics::Stg);
      const auto rra = fam(f, p, BaseSemantics::Rra);
      const auto ss = fam(f, p, BaseSemantics::Ss);
      const auto pr = fam(f, p, BaseSemantics::Pr);
      const auto prd = fam(f, p, BaseSemantics::PrDung);
      const auto na = fam(f, p, BaseSemantics::Na);
      const auto ad = fam(f, p, BaseSemantics::Ad);
      auto at = [&] { return where(f, p); };

      if (p.eta <= p.n || p.eta <= p.m) {
        t.check("stb-equals-rrs", stb == rrs, at);
        t.check("stb-in-range-families", subset_family(stb, stg) && subset_family(stb, rra) && subset_family(stb, ss),
                at);
      }
      if (p.l <= p.m || p.l <= p.n) t.check("stb-in-pr", subset_family(stb, pr), at);
      if (p.eta >= p.l) {
        t.check("rra-in-pr-dung", subset_family(rra, prd), at);
        t.check("ss-in-pr", subset_family(ss, pr), at);
        t.check("stg-in-na", subset_family(stg, na), at);
      }
      if (p.n >= p.l && p.l >= p.m) {
        t.check("pr-equals-pr-dung", pr == prd, at);
        t.check("ss-in-rra", subset_family(ss, rra), at);
        if (p.eta >= p.l) t.check("rra-in-ss", subset_family(rra, ss), at);
        for (const auto& e : pr) {
          bool between = std::any_of(ad.begin(), ad.end(), [&](const ArgSet& y) { return e.is_proper_subset_of(y); });
          t.check("no-interpolant", !between, [&] { return where(f, p, e); });
        }
      }
      if (p.l >= p.m) {
        for (const auto& e : ad) {
          const ArgSet top = lfp_from(f, p.m, p.n, e);
          t.check("least-stable-above", stb.contains(top) == (top == neutrality(f, p.n, top)),
                  [&] { return where(f, p, e); });
        }
      }
      if (p.eta >= p.l && p.l >= p.m && p.n >= p.m) {
        const auto gr = fam(f, p, BaseSemantics::Gr);
        const auto id = fam(f, p, BaseSemantics::Id);
        const auto eg = fam(f, p, BaseSemantics::Eg);
        bool ok = gr.size() == 1 && id.size() == 1 && eg.size() == 1 && gr[0].is_subset_of(id[0]) &&
                  id[0].is_subset_of(eg[0]);
        t.check("credulity-chain", ok, at);
        // Infimum in the admissible poset: the union of admissible sets below the meet.
        auto inf_in_ad = [&](const ExtensionFamily& s) {
          const ArgSet cut = s.intersection();
          ArgSet u(f.size());
          for (const auto& x : ad) {
            if (x.is_subset_of(cut)) u |= x;
          }
          return ExtensionFamily(f.size(), {u});
        };
        t.check("ideal-is-inf-pr", id == inf_in_ad(pr), at);
        t.check("eager-is-inf-ss", eg == inf_in_ad(ss), at);
      }
    }
  }
}

// ---------------------------------------------------------------------------

void well_founded(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 300);
  const std::size_t max_size = pick(c.max_size, 7);
  const int g = c.max_grade ? c.max_grade : 3;
  for (std::size_t k = 0; k < frames; ++k) {
    const std::size_t n = random_size(rng, 1, max_size);
    const Aaf f = random_acyclic_frame(rng, n, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    t.check("acyclic", wf_on(f, f.all()) && wf_plus_on(f, f.all()), [&] { return inline_apx(f); });
    for (const auto& p : grade_triples(g)) {
      auto at = [&] { return where(f, p); };
      const auto pr = fam(f, p, BaseSemantics::Pr);
      const auto stb = fam(f, p, BaseSemantics::Stb);
      t.check("stb-in-pr", subset_family(stb, pr), at);
      if (!(p.l >= p.m && p.n >= p.m)) continue;
      const ExtensionFamily ground(f.size(), {lfp_from(f, p.m, p.n, f.none())});
      t.check("co-collapses", fam(f, p, BaseSemantics::Co) == ground, at);
      t.check("pr-collapses", pr == ground, at);
      t.check("pr-dung-collapses", fam(f, p, BaseSemantics::PrDung) == ground, at);
      t.check("ad-equals-def", fam(f, p, BaseSemantics::Ad) == fam(f, p, BaseSemantics::Def), at);
      if (p.l == p.m && p.m == p.n) t.check("stb-collapses", stb == ground, at);
    }
  }
}

// ---------------------------------------------------------------------------

void galois(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 300);
  const std::size_t max_size = pick(c.max_size, 7);
  const int g = c.max_grade ? c.max_grade : 3;
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    for (const auto& p : grade_triples(g)) {
      if (!(p.n >= p.l && p.l >= p.m)) continue;
      t.check("adjunction", galois_check(f, p), [&] { return where(f, p); });
    }
  }
}

// ---------------------------------------------------------------------------

ArgSet random_set(std::mt19937_64& rng, std::size_t n) {
  return ArgSet::from_mask(n, std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
}

void reduced_meet_suite(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t triples = pick(c.frames, 1200);
  const std::size_t max_size = pick(c.max_size, 6);
  const int g = c.max_grade ? c.max_grade : 3;
  std::uniform_int_distribution<int> grade(1, g);
  for (std::size_t k = 0; k < triples; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    const Params p{grade(rng), grade(rng), grade(rng), grade(rng)};
    const std::size_t width = random_size(rng, 1, 5);
    IndexedFamily fam_i{IndexSet::numbered(width), {}};
    // Every other sample is a chain, so the upper-bound law gets exercised.
    const bool nested = k % 2 == 0;
    ArgSet acc(f.size());
    for (std::size_t i = 0; i < width; ++i) {
      ArgSet x = random_set(rng, f.size());
      if (nested) {
        acc |= x;
        x = acc;
      }
      fam_i.assign.push_back(x);
    }
    std::shuffle(fam_i.assign.begin(), fam_i.assign.end(), rng);
    const Ultrafilter d{fam_i.over, random_size(rng, 0, width - 1)};
    for (const auto& law : check_laws(f, p, fam_i, d)) {
      t.check(law.law, law.pass, [&] { return where(f, p) + " " + law.instance; });
    }

    // The explicit principal collection satisfies the axioms at its point.
    std::vector<IndexSubset> members;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
      auto s = IndexSubset::from_mask(width, mask);
      if (d.contains(s)) members.push_back(s);
    }
    const auto verdict = is_ultrafilter(d.over, members);
    t.check("principal-is-ultrafilter", verdict.ok && verdict.point == d.point,
            [&] { return "index size " + std::to_string(width); });
    if (width >= 2) {
      members.pop_back();
      t.check("truncated-is-not-ultrafilter", !is_ultrafilter(d.over, members).ok,
              [&] { return "index size " + std::to_string(width); });
    }
  }

  std::mt19937_64 closure_rng(c.seed + 1);
  const std::size_t frames = pick(c.frames, 1200) / 20;
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(closure_rng, 1, max_size);
    const Params p{grade(closure_rng), grade(closure_rng), grade(closure_rng), 1};
    for (auto b : {BaseSemantics::Cf, BaseSemantics::Def, BaseSemantics::Ad, BaseSemantics::Co, BaseSemantics::Stb,
                   BaseSemantics::Gr, BaseSemantics::Na, BaseSemantics::Pr, BaseSemantics::PrDung}) {
      const auto family = fam(f, p, b);
      const auto report = check_family_closure(f, family, closure_rng, 20);
      t.check("closure-" + to_string(SemanticsSpec::of(b)), report.closed(),
              [&] { return where(f, p) + " " + report.first_failure; });
    }
  }
}

// ---------------------------------------------------------------------------

void representation_suite(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 300);
  const std::size_t max_size = pick(c.max_size, 7);
  const int g = c.max_grade ? c.max_grade : 3;
  std::uniform_int_distribution<int> grade(1, g);
  std::size_t accepted = 0;
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    const int l = grade(rng);
    Params p;
    p.l = l;
    const auto cf = fam(f, p, BaseSemantics::Cf);
    const auto omega = CandidateOmega::of(f, cf);
    const auto verdict = representable(omega, l, Variant::I, c.choice_cap);
    bool ok = verdict.yes && verdict.witness && fam(*verdict.witness, p, BaseSemantics::Cf) == cf;
    t.check("round-trip-cf", ok, [&] { return where(f, p); });

    const Aaf dag = random_acyclic_frame(rng, f.size(), 0.4);
    const auto dag_cf = fam(dag, p, BaseSemantics::Cf);
    const auto v2 = representable(CandidateOmega::of(dag, dag_cf), l, Variant::II, c.choice_cap);
    ok = v2.yes && v2.witness && wf_on(*v2.witness, v2.witness->all()) &&
         fam(*v2.witness, p, BaseSemantics::Cf) == dag_cf;
    t.check("round-trip-well-founded", ok, [&] { return where(dag, p); });
    for (const auto& y : gamma_omega(CandidateOmega::of(dag, dag_cf))) {
      t.check("well-founded-gamma-sizes", y.count() == static_cast<std::size_t>(l) + 1,
              [&] { return where(dag, p) + " Y=" + dag.format(y); });
    }

    // Arbitrary down-closed candidates: the verdict must match rho.
    const std::size_t n = random_size(rng, 1, std::min<std::size_t>(max_size, 5));
    CandidateOmega cand{default_names(n), random_down_closed(rng, n, random_size(rng, 1, 3))};
    const Rho values = rho(cand, c.choice_cap);
    std::size_t widest = 0;
    for (const auto& y : gamma_omega(cand)) widest = std::max(widest, y.count());
    bool any = false;
    for (int lv = 1; lv <= static_cast<int>(widest) + 1; ++lv) {
      const auto vr = representable(cand, lv, Variant::I, c.choice_cap);
      const bool listed =
          values.all_positive || std::find(values.values.begin(), values.values.end(), lv) != values.values.end();
      t.check("rho-consistent", vr.yes == listed, [&] { return cand.to_json().dump() + " l=" + std::to_string(lv); });
      if (vr.yes) {
        any = true;
        Params q;
        q.l = lv;
        const ExtensionFamily target(n, cand.sets);
        t.check("witness-reproduces", fam(*vr.witness, q, BaseSemantics::Cf) == target,
                [&] { return cand.to_json().dump() + " l=" + std::to_string(lv); });
      }
    }
    accepted += any;

    // Random collections that are not down-closed can never be cf families.
    std::vector<ArgSet> loose{ArgSet(n)};
    for (std::size_t i = random_size(rng, 1, 4); i > 0; --i) loose.push_back(random_set(rng, n));
    const CandidateOmega scattered{default_names(n), canonicalize(loose)};
    const ExtensionFamily as_family(n, scattered.sets);
    if (!order_report(as_family).down_closed.ok()) {
      for (int lv = 1; lv <= 3; ++lv) {
        t.check("not-down-closed-rejected", !representable(scattered, lv, Variant::I, c.choice_cap).yes,
                [&] { return scattered.to_json().dump() + " l=" + std::to_string(lv); });
      }
    }
  }
  r.found.push_back("down-closed candidates representable at some grade: " + std::to_string(accepted) + " of " +
                    std::to_string(frames));
}

// ---------------------------------------------------------------------------

Aaf toggle_attack(std::mt19937_64& rng, const Aaf& f) {
  const std::size_t a = random_size(rng, 0, f.size() - 1);
  const std::size_t b = random_size(rng, 0, f.size() - 1);
  std::vector<Attack> edges;
  for (auto e : f.attacks()) {
    if (e != Attack{a, b}) edges.push_back(e);
  }
  if (!f.attacks(a, b)) edges.emplace_back(a, b);
  return Aaf(f.names(), std::move(edges));
}

void safe_operators(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 300);
  const std::size_t max_size = pick(c.max_size, 6);
  const int g = c.max_grade ? c.max_grade : 3;
  std::uniform_int_distribution<int> grade(1, g);
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    for (int l = 1; l <= g; ++l) {
      Params p;
      p.l = l;
      auto at = [&] { return where(f, p); };
      const Aaf restricted = safe_restrict_cf(f, l);
      t.check("restrict-keeps-cf", fam(restricted, p, BaseSemantics::Cf) == fam(f, p, BaseSemantics::Cf), at);
      t.check("restrict-keeps-na", fam(restricted, p, BaseSemantics::Na) == fam(f, p, BaseSemantics::Na), at);
      const Aaf rebuilt = canonical_cf(f, l, c.choice_cap);
      t.check("canonical-keeps-cf", fam(rebuilt, p, BaseSemantics::Cf) == fam(f, p, BaseSemantics::Cf), at);
    }

    // Pairs over one argument set: a frame against a perturbation, a
    // restriction, or an unrelated frame.
    const Aaf other = [&] {
      switch (k % 3) {
        case 0:
          return toggle_attack(rng, f);
        case 1:
          return safe_restrict_cf(f, grade(rng));
        default:
          return random_frame(rng, f.size(), 0.3);
      }
    }();
    const Params p{grade(rng), grade(rng), grade(rng), 1};
    for (auto b : {BaseSemantics::Cf, BaseSemantics::Ad, BaseSemantics::Co}) {
      const auto cmp = compare_frameworks(f, other, SemanticsSpec::of(b), p);
      t.check("anti-equivalences-" + to_string(SemanticsSpec::of(b)), cmp.consistent(),
              [&] { return where(f, p) + " vs [" + inline_apx(other) + "] " + cmp.to_json().dump(); });
    }
    const bool cf_eq = fam(f, p, BaseSemantics::Cf) == fam(other, p, BaseSemantics::Cf);
    const bool na_eq = fam(f, p, BaseSemantics::Na) == fam(other, p, BaseSemantics::Na);
    const bool anti_eq = anti_sets(f, fam(f, p, BaseSemantics::Cf)) == anti_sets(other, fam(other, p, BaseSemantics::Cf));
    t.check("na-cf-anti-agree", cf_eq == na_eq && na_eq == anti_eq,
            [&] { return where(f, p) + " vs [" + inline_apx(other) + "]"; });
  }
}

// ---------------------------------------------------------------------------

Aaf frame_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Attack> edges;
  for (std::size_t bit = 0; bit < n * n; ++bit) {
    if ((code >> bit) & 1U) edges.emplace_back(bit / n, bit % n);
  }
  return Aaf(default_names(n), std::move(edges));
}

void definability(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const int g = c.max_grade ? c.max_grade : 2;
  const std::size_t exhaustive = std::min<std::size_t>(pick(c.max_size, 3), 3);
  const std::size_t samples = pick(c.frames, 200);
  EnumerationOptions opts;
  opts.jobs = c.jobs;

  std::vector<Aaf> frames;
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) frames.push_back(frame_from_code(n, code));
  }
  for (std::size_t n = exhaustive + 1; n <= 5; ++n) {
    for (std::size_t k = 0; k < samples; ++k) {
      frames.push_back(random_frame(rng, n, std::uniform_real_distribution<double>(0.1, 0.6)(rng)));
    }
  }

  const Formula nua_example = Formula::exists(
      "x2", Formula::disj({Formula::pred("x1"), Formula::neg(Formula::pred("x1")), Formula::att("x2", "x1")}));

  for (const auto& f : frames) {
    for (const auto& p : grade_triples(g)) {
      const auto lib = sentence_library(p);
      const std::pair<const char*, BaseSemantics> targets[] = {{"def", BaseSemantics::Def},
                                                                {"cf", BaseSemantics::Cf},
                                                                {"ad", BaseSemantics::Ad},
                                                                {"co", BaseSemantics::Co},
                                                                {"stb", BaseSemantics::Stb}};
      for (const auto& [name, b] : targets) {
        const auto res = verify_definability(f, sigma_by_name(lib, name), fam(f, p, b), opts);
        t.check(std::string("sigma-") + name, res.holds, [&] {
          return where(f, p) + (res.counterexample ? " E=" + f.format(*res.counterexample) : "");
        });
      }
      if (f.size() > 4) continue;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
        const FolModel model{f, ArgSet::from_mask(f.size(), mask)};
        const bool ok = eval(model, lib.alpha1) == eval(model, lib.beta1) &&
                        eval(model, lib.alpha2) == eval(model, lib.beta2) &&
                        eval(model, lib.alpha3) == eval(model, lib.beta3) &&
                        eval(model, lib.alpha4) == eval(model, lib.beta4);
        t.check("prenex-agreement", ok, [&] { return where(f, p, model.predicate); });
        const bool closed = neutrality(f, p.l, model.predicate).is_subset_of(model.predicate);
        t.check("beta4-matches-kernel", eval(model, lib.beta4) == closed, [&] { return where(f, p, model.predicate); });
      }
    }
    if (f.size() <= 4) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
        const FolModel model{f, ArgSet::from_mask(f.size(), mask)};
        for (std::size_t x = 0; x < f.size(); ++x) {
          t.check("nua-example-empty", !nua(model, nua_example, {{"x1", x}}),
                  [&] { return "[" + inline_apx(f) + "] x1=" + f.name(x); });
        }
      }
      t.check("nua-example-finitary", omega_finitary_at(f, nua_example, {{"x1", 0}}) == 0,
              [&] { return inline_apx(f); });
    }
  }

  // Principal reduced meets of models project onto the model at the point.
  std::mt19937_64 meet_rng(c.seed + 3);
  for (std::size_t k = 0; k < 60; ++k) {
    const Aaf f = draw_frame(meet_rng, 1, 4);
    const Params p{1 + static_cast<int>(k % 2), 1 + static_cast<int>((k / 2) % 2), 1, 1};
    const auto lib = sentence_library(p);
    const std::size_t width = random_size(meet_rng, 1, 4);
    IndexedFamily models{IndexSet::numbered(width), {}};
    for (std::size_t i = 0; i < width; ++i) models.assign.push_back(random_set(meet_rng, f.size()));
    const Ultrafilter d{models.over, random_size(meet_rng, 0, width - 1)};
    const ArgSet meet = reduced_meet(models, d);
    for (const auto* phi : {&lib.beta1, &lib.beta2, &lib.beta3, &lib.beta4}) {
      bool ok = eval(FolModel{f, meet}, *phi) == eval(FolModel{f, models.assign[d.point]}, *phi);
      t.check("principal-meet-preserves", ok, [&] { return where(f, p); });
    }
  }
  r.found.push_back("frames checked: " + std::to_string(frames.size()) + " (all frames up to " +
                    std::to_string(exhaustive) + " arguments, " + std::to_string(samples) +
                    " sampled per larger size up to 5)");
}

// ---------------------------------------------------------------------------

void order(const SuiteConfig& c, SuiteReport& r) {
  Tally t(r);
  std::mt19937_64 rng(c.seed);
  const std::size_t frames = pick(c.frames, 150);
  const std::size_t max_size = pick(c.max_size, 6);
  const int g = c.max_grade ? c.max_grade : 3;
  for (std::size_t k = 0; k < frames; ++k) {
    const Aaf f = draw_frame(rng, 1, max_size);
    for (const auto& p : grade_triples(g)) {
      auto at = [&] { return where(f, p); };
      const auto cf = fam(f, p, BaseSemantics::Cf);
      const auto def = fam(f, p, BaseSemantics::Def);
      const auto ad = fam(f, p, BaseSemantics::Ad);
      const auto co = fam(f, p, BaseSemantics::Co);
      const auto rc = order_report(cf);
      t.check("cf-down-closed", rc.down_closed.ok(), at);
      t.check("cf-directed-unions", rc.directed_union_closed.ok(), at);
      t.check("cf-lindenbaum", rc.lindenbaum.ok(), at);
      const auto rd = order_report(def);
      t.check("def-union-closed", rd.union_closed.ok() && rd.has_greatest.ok(), at);
      const auto ra = order_report(ad);
      t.check("ad-directed-unions", ra.directed_union_closed.ok(), at);
      t.check("ad-inf-formula", ra.inf_formula.ok(), at);
      t.check("ad-lindenbaum", ra.lindenbaum.ok(), at);
      if (p.l >= p.m && p.n >= p.m && !co.empty()) {
        const auto rco = order_report(co);
        const bool ok = rco.directed_union_closed.ok() && rco.has_least.ok() &&
                        rco.least == lfp_from(f, p.m, p.n, f.none());
        t.check("co-cpo", ok, at);
        if (p.n >= p.l) t.check("co-inf-formula", rco.inf_formula.ok(), at);
      }

      // Extensibility is decided by subsets; inference by a subset witness.
      if (f.size() <= 5) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
          const ArgSet x = ArgSet::from_mask(f.size(), mask);
          bool every = true;
          for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
            every = every && is_extensible(co, ArgSet::from_mask(f.size(), sub));
            if (sub == 0) break;
          }
          t.check("compactness", is_extensible(co, x) == every, [&] { return where(f, p, x); });
          for (std::size_t a = 0; a < f.size(); ++a) {
            bool some = false;
            for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
              some = some || infers(co, ArgSet::from_mask(f.size(), sub), a);
              if (sub == 0) break;
            }
            t.check("co-compact-inference", infers(co, x, a) == some, [&] { return where(f, p, x); });
          }
        }
      }
    }
  }
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  static const std::map<std::string, std::function<void(const SuiteConfig&, SuiteReport&)>, std::less<>> table{
      {"fundamental-lemma", fundamental_lemma},
      {"necessity-witness", necessity_witness},
      {"grounded-triad", grounded_triad},
      {"relations", relations},
      {"well-founded", well_founded},
      {"galois", galois},
      {"reduced-meet", reduced_meet_suite},
      {"representation", representation_suite},
      {"safe-operators", safe_operators},
      {"definability", definability},
      {"order", order}};
  auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown suite '" + std::string(name) + "'");
  SuiteReport r;
  r.suite = std::string(name);
  r.seed = config.seed;
  it->second(config, r);
  return r;
}

}  // namespace gaf
