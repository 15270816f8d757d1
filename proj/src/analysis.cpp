#include "gaf/analysis.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "gaf/errors.hpp"
#include "gaf/fixpoint.hpp"
#include "gaf/representation.hpp"

namespace gaf {

bool is_extensible(const ExtensionFamily& family, const ArgSet& x) {
  return std::any_of(family.begin(), family.end(), [&](const ArgSet& e) { return x.is_subset_of(e); });
}

bool infers(const ExtensionFamily& family, const ArgSet& x, std::size_t a) {
  return std::all_of(family.begin(), family.end(),
                     [&](const ArgSet& e) { return !x.is_subset_of(e) || e.contains(a); });
}

std::vector<ArgSet> anti_sets(const Aaf& f, const ExtensionFamily& family) {
  return minimal_non_extensible(f.size(), family.sets());
}

GammaAt gamma_at(const Aaf& f, const ExtensionFamily& family, std::size_t a) {
  GammaAt g;
  for (auto& y : anti_sets(f, family)) {
    if (y.contains(a)) g.gamma.push_back(y);
  }
  const auto tops = maximal_of(family);
  std::vector<std::vector<bool>> keys;
  for (const auto& y : g.gamma) {
    ArgSet rest = y;
    rest.erase(a);
    std::vector<bool> key;
    for (const auto& t : tops) key.push_back(rest.is_subset_of(t));
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      g.classes.push_back({y});
    } else {
      g.classes[static_cast<std::size_t>(it - keys.begin())].push_back(y);
    }
  }
  return g;
}

bool Comparison::consistent() const {
  if (anti_equal != approx_equal || approx_equal != max_equal) return false;
  return !both_anti_nonempty || inference_equal == anti_equal;
}

nlohmann::json Comparison::to_json() const {
  return {{"anti_equal", anti_equal},
          {"approx_equal", approx_equal},
          {"max_equal", max_equal},
          {"inference_equal", inference_equal},
          {"both_anti_nonempty", both_anti_nonempty}};
}

namespace {

bool covered_by(const ExtensionFamily& a, const ExtensionFamily& b) {
  return std::all_of(a.begin(), a.end(), [&](const ArgSet& e) { return is_extensible(b, e); });
}

// Intersection of the members above X; the full set when there are none.
ArgSet consequences(const ExtensionFamily& family, const ArgSet& x) {
  ArgSet out = ArgSet::full(x.universe());
  for (const auto& e : family) {
    if (x.is_subset_of(e)) out &= e;
  }
  return out;
}

}  // namespace

Comparison compare_frameworks(const Aaf& f1, const Aaf& f2, const SemanticsSpec& spec, const Params& p,
                              const EnumerationOptions& opts) {
  auto n1 = f1.names();
  auto n2 = f2.names();
  std::sort(n1.begin(), n1.end());
  std::sort(n2.begin(), n2.end());
  if (n1 != n2) throw PreconditionError("frameworks are over different argument sets");
  std::vector<Attack> edges;
  for (auto [a, b] : f2.attacks()) edges.emplace_back(f1.index(f2.name(a)), f1.index(f2.name(b)));
  const Aaf g(f1.names(), std::move(edges));

  const auto e1 = enumerate(f1, p, spec, opts);
  const auto e2 = enumerate(g, p, spec, opts);
  Comparison c;
  const auto anti1 = anti_sets(f1, e1);
  const auto anti2 = anti_sets(g, e2);
  c.anti_equal = anti1 == anti2;
  c.both_anti_nonempty = !anti1.empty() && !anti2.empty();
  c.approx_equal = covered_by(e1, e2) && covered_by(e2, e1);
  const auto m1 = maximal_of(e1);
  const auto m2 = maximal_of(e2);
  c.max_equal = m1 == m2;
  c.inference_equal = true;
  const std::uint64_t total = std::uint64_t{1} << f1.size();
  for (std::uint64_t mask = 0; mask < total && c.inference_equal; ++mask) {
    auto x = ArgSet::from_mask(f1.size(), mask);
    c.inference_equal = consequences(m1, x) == consequences(m2, x);
  }
  return c;
}

Aaf safe_restrict_cf(const Aaf& f, int l) {
  Params p;
  p.l = l;
  const auto anti = anti_sets(f, enumerate(f, p, SemanticsSpec::of(BaseSemantics::Cf)));
  std::vector<Attack> kept;
  for (auto [a, b] : f.attacks()) {
    bool shared = std::any_of(anti.begin(), anti.end(), [&](const ArgSet& y) {
      return y.contains(a) && y.contains(b);
    });
    if (shared) kept.emplace_back(a, b);
  }
  return Aaf(f.names(), std::move(kept));
}

Aaf canonical_cf(const Aaf& f, int l, std::size_t choice_cap) {
  Params p;
  p.l = l;
  const auto omega = CandidateOmega::of(f, enumerate(f, p, SemanticsSpec::of(BaseSemantics::Cf)));
  auto ch = find_choice(omega, l, Variant::I, choice_cap);
  if (!ch) throw InvariantViolation("no organizing choice for the conflict-free sets of a framework");
  return construct_f_omega(omega, l, *ch);
}

nlohmann::json OrderReport::to_json(const Aaf& f) const {
  auto flag = [&](const Flag& x) -> nlohmann::json {
    switch (x.state) {
      case Flag::State::True:
        return true;
      case Flag::State::Skipped:
        return "skipped";
      case Flag::State::False: {
        auto w = nlohmann::json::array();
        for (const auto& s : x.witness) w.push_back(f.member_names(s));
        return {{"witness", w}};
      }
    }
    return nullptr;
  };
  nlohmann::json j = {{"down_closed", flag(down_closed)},
                      {"union_closed", flag(union_closed)},
                      {"directed_union_closed", flag(directed_union_closed)},
                      {"has_least", flag(has_least)},
                      {"has_greatest", flag(has_greatest)},
                      {"is_lattice", flag(is_lattice)},
                      {"lindenbaum", flag(lindenbaum)},
                      {"inf_formula", flag(inf_formula)}};
  if (least) j["least"] = f.member_names(*least);
  return j;
}

namespace {

Flag failed(std::vector<ArgSet> witness) { return Flag{Flag::State::False, std::move(witness)}; }

// Least member containing x, if the members containing x have one.
std::optional<ArgSet> least_above(const ExtensionFamily& fam, const ArgSet& x) {
  ArgSet cut = ArgSet::full(x.universe());
  bool any = false;
  for (const auto& z : fam) {
    if (x.is_subset_of(z)) {
      cut &= z;
      any = true;
    }
  }
  if (any && fam.contains(cut)) return cut;
  return std::nullopt;
}

std::optional<ArgSet> greatest_below(const ExtensionFamily& fam, const ArgSet& x) {
  ArgSet cup(x.universe());
  bool any = false;
  for (const auto& z : fam) {
    if (z.is_subset_of(x)) {
      cup |= z;
      any = true;
    }
  }
  if (any && fam.contains(cup)) return cup;
  return std::nullopt;
}

}  // namespace

OrderReport order_report(const ExtensionFamily& family, const OrderOptions& opts) {
  if (family.size() > opts.cap) {
    throw CapExceeded("order report limited to " + std::to_string(opts.cap) + " members");
  }
  OrderReport r;
  const auto& xs = family.sets();
  const std::size_t k = xs.size();

  for (const auto& x : xs) {
    for (auto i : x.members()) {
      ArgSet y = x;
      y.erase(i);
      if (!family.contains(y)) {
        r.down_closed = failed({x, y});
        break;
      }
    }
    if (!r.down_closed.ok()) break;
  }

  for (std::size_t i = 0; i < k && r.union_closed.ok(); ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!family.contains(xs[i] | xs[j])) {
        r.union_closed = failed({xs[i], xs[j]});
        break;
      }
    }
  }

  // Subfamilies to examine for the directed and infimum laws.
  std::vector<std::vector<std::size_t>> subs;
  if (k <= opts.subfamily_cap) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) s.push_back(i);
      }
      subs.push_back(std::move(s));
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      subs.push_back({i});
      for (std::size_t j = i + 1; j < k; ++j) subs.push_back({i, j});
    }
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    subs.push_back(std::move(all));
  }

  for (const auto& s : subs) {
    bool directed = true;
    for (std::size_t a = 0; a < s.size() && directed; ++a) {
      for (std::size_t b = a + 1; b < s.size() && directed; ++b) {
        directed = std::any_of(s.begin(), s.end(), [&](std::size_t c) {
          return xs[s[a]].is_subset_of(xs[c]) && xs[s[b]].is_subset_of(xs[c]);
        });
      }
    }
    if (!directed) continue;
    ArgSet u(family.universe());
    for (auto i : s) u |= xs[i];
    if (!family.contains(u)) {
      std::vector<ArgSet> w;
      for (auto i : s) w.push_back(xs[i]);
      r.directed_union_closed = failed(std::move(w));
      break;
    }
  }

  for (const auto& s : subs) {
    ArgSet cut = ArgSet::full(family.universe());
    for (auto i : s) cut &= xs[i];
    ArgSet below(family.universe());
    for (const auto& x : xs) {
      if (x.is_subset_of(cut)) below |= x;
    }
    if (!family.contains(below)) {
      std::vector<ArgSet> w;
      for (auto i : s) w.push_back(xs[i]);
      r.inf_formula = failed(std::move(w));
      break;
    }
  }

  auto least = std::find_if(xs.begin(), xs.end(), [&](const ArgSet& x) {
    return std::all_of(xs.begin(), xs.end(), [&](const ArgSet& y) { return x.is_subset_of(y); });
  });
  if (least == xs.end()) {
    r.has_least = failed({});
  } else {
    r.least = *least;
  }
  auto greatest = std::find_if(xs.begin(), xs.end(), [&](const ArgSet& x) {
    return std::all_of(xs.begin(), xs.end(), [&](const ArgSet& y) { return y.is_subset_of(x); });
  });
  if (greatest == xs.end()) r.has_greatest = failed({});

  if (k > opts.lattice_cap) {
    r.is_lattice.state = Flag::State::Skipped;
  } else {
    for (std::size_t i = 0; i < k && r.is_lattice.ok(); ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!least_above(family, xs[i] | xs[j]) || !greatest_below(family, xs[i] & xs[j])) {
          r.is_lattice = failed({xs[i], xs[j]});
          break;
        }
      }
    }
  }

  const auto tops = maximal_of(family);
  for (const auto& x : xs) {
    if (!is_extensible(tops, x)) {
      r.lindenbaum = failed({x});
      break;
    }
  }
  return r;
}

bool galois_check(const Aaf& f, const Params& p, const EnumerationOptions& opts) {
  p.validate();
  if (!(p.n >= p.l && p.l >= p.m)) throw PreconditionError("galois check needs n >= l >= m");
  const auto ad = enumerate(f, p, SemanticsSpec::of(BaseSemantics::Ad), opts);
  const auto co = enumerate(f, p, SemanticsSpec::of(BaseSemantics::Co), opts);
  for (const auto& e : ad) {
    const ArgSet closure = lfp_from(f, p.m, p.n, e);
    for (const auto& c : co) {
      if (closure.is_subset_of(c) != e.is_subset_of(c)) return false;
    }
  }
  return true;
}

}  // namespace gaf
