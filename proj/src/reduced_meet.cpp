#include "gaf/reduced_meet.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "gaf/errors.hpp"
#include "gaf/kernel.hpp"

namespace gaf {

IndexSet::IndexSet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw PreconditionError("index set must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& t : tokens_) {
    if (!seen.insert(t).second) throw PreconditionError("duplicate index token '" + t + "'");
  }
}

IndexSet IndexSet::numbered(std::size_t k) {
  std::vector<std::string> t;
  for (std::size_t i = 1; i <= k; ++i) t.push_back(std::to_string(i));
  return IndexSet(std::move(t));
}

std::size_t IndexSet::index(const std::string& token) const {
  auto it = std::find(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end()) throw PreconditionError("unknown index token '" + token + "'");
  return static_cast<std::size_t>(it - tokens_.begin());
}

IndexSubset IndexedFamily::hat(std::size_t x) const {
  IndexSubset s(over.size());
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (assign[i].contains(x)) s.insert(i);
  }
  return s;
}

UltrafilterVerdict is_ultrafilter(const IndexSet& index, const std::vector<IndexSubset>& d) {
  const std::size_t k = index.size();
  if (d.size() > (std::size_t{1} << 16) || k > 16) {
    throw CapExceeded("ultrafilter check limited to 2^16 member sets");
  }
  std::unordered_set<IndexSubset, ArgSetHash> members;
  for (const auto& s : d) {
    if (s.universe() != k) throw PreconditionError("member is not a subset of the index set");
    members.insert(s);
  }
  auto in = [&](const IndexSubset& s) { return members.count(s) > 0; };
  UltrafilterVerdict v;
  const IndexSubset whole = IndexSubset::full(k);
  const IndexSubset none(k);

  if (!in(whole)) return {false, std::nullopt, "U1", "index set not a member"};
  if (in(none)) return {false, std::nullopt, "U1", "empty set is a member"};

  std::vector<IndexSubset> list(members.begin(), members.end());
  list = canonicalize(std::move(list));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!in(list[i] & list[j])) {
        return {false, std::nullopt, "U2", "intersection of two members is missing"};
      }
    }
  }
  const std::uint64_t total = std::uint64_t{1} << k;
  for (const auto& s : list) {
    // Supersets of s: s plus any subset of its complement.
    const std::uint64_t base = s.mask();
    const std::uint64_t rest = (~base) & (total - 1);
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      if (!in(IndexSubset::from_mask(k, base | sub))) {
        return {false, std::nullopt, "U3", "a superset of a member is missing"};
      }
      if (sub == 0) break;
    }
  }
  // For a filter, primeness is equivalent to: every X or its complement.
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto x = IndexSubset::from_mask(k, mask);
    if (!in(x) && !in(x.complement())) {
      return {false, std::nullopt, "U4", "neither a set nor its complement is a member"};
    }
  }
  IndexSubset core = whole;
  for (const auto& s : list) core &= s;
  if (core.count() != 1) throw InvariantViolation("finite ultrafilter without a single generator");
  v.ok = true;
  v.point = core.first();
  return v;
}

Ultrafilter extend_fip(const IndexSet& index, const std::vector<IndexSubset>& omega) {
  IndexSubset core = IndexSubset::full(index.size());
  for (const auto& s : omega) core &= s;
  if (core.empty()) throw PreconditionError("collection lacks the finite intersection property");
  return Ultrafilter{index, core.first()};
}

ArgSet reduced_meet(const IndexedFamily& fam, const Ultrafilter& d) {
  if (!(fam.over == d.over)) throw PreconditionError("family and ultrafilter use different index sets");
  if (fam.assign.size() != fam.over.size() || fam.assign.empty()) {
    throw PreconditionError("indexed family must be total on its index set");
  }
  const std::size_t n = fam.assign.front().universe();
  ArgSet out(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (d.contains(fam.hat(x))) out.insert(x);
  }
  return out;
}

std::pair<Ultrafilter, ArgSet> directed_union_as_meet(const IndexedFamily& fam) {
  const auto& xs = fam.assign;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      bool bounded = std::any_of(xs.begin(), xs.end(), [&](const ArgSet& z) {
        return xs[i].is_subset_of(z) && xs[j].is_subset_of(z);
      });
      if (!bounded) throw PreconditionError("indexed family is not directed");
    }
  }
  ArgSet u = xs.front();
  for (const auto& x : xs) u |= x;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == u) {
      Ultrafilter d{fam.over, i};
      return {d, reduced_meet(fam, d)};
    }
  }
  throw InvariantViolation("finite directed family without a maximum");
}

bool propto(const Aaf& f, int eta, const ArgSet& x, const ArgSet& y) {
  return range_of(f, eta, x).is_subset_of(range_of(f, eta, y));
}

namespace {

IndexedFamily map_family(const IndexedFamily& fam, const std::function<ArgSet(const ArgSet&)>& op) {
  IndexedFamily out{fam.over, {}};
  for (const auto& x : fam.assign) out.assign.push_back(op(x));
  return out;
}

std::string describe(const Aaf& f, const IndexedFamily& fam) {
  std::string s = "(";
  for (std::size_t i = 0; i < fam.assign.size(); ++i) {
    if (i) s += ",";
    s += f.format(fam.assign[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<LawResult> check_laws(const Aaf& f, const Params& p, const IndexedFamily& fam,
                                  const Ultrafilter& d, const std::optional<IndexedFamily>& other) {
  p.validate();
  std::vector<LawResult> out;
  const ArgSet meet = reduced_meet(fam, d);
  const std::string where = describe(f, fam) + " at " + d.over.tokens()[d.point];

  {
    auto lhs = neutrality(f, p.l, meet);
    auto rhs = reduced_meet(map_family(fam, [&](const ArgSet& x) { return neutrality(f, p.l, x); }), d);
    out.push_back({"neutrality-distributes", where + ": " + f.format(lhs) + " vs " + f.format(rhs), lhs == rhs});
  }
  {
    auto lhs = defense(f, p.m, p.n, meet);
    auto rhs = reduced_meet(map_family(fam, [&](const ArgSet& x) { return defense(f, p.m, p.n, x); }), d);
    out.push_back({"defense-distributes", where + ": " + f.format(lhs) + " vs " + f.format(rhs), lhs == rhs});
  }
  {
    IndexedFamily ys = other ? *other : map_family(fam, [&](const ArgSet& x) { return range_of(f, p.eta, x); });
    if (!(ys.over == fam.over) || ys.assign.size() != fam.assign.size()) {
      throw PreconditionError("second family uses a different index set");
    }
    IndexSubset majority(fam.over.size());
    for (std::size_t i = 0; i < fam.assign.size(); ++i) {
      if (fam.assign[i].is_subset_of(ys.assign[i])) majority.insert(i);
    }
    const ArgSet my = reduced_meet(ys, d);
    bool premise = d.contains(majority);
    bool pass = !premise || meet.is_subset_of(my);
    out.push_back({"subset", where + ": premise " + (premise ? "holds" : "fails") + ", " + f.format(meet) +
                                 " vs " + f.format(my),
                   pass});
  }
  {
    const ArgSet meet_out = range_plus(f, p.eta, meet);
    bool pass = true;
    std::string bad;
    for (std::size_t a = 0; a < f.size(); ++a) {
      IndexSubset votes(fam.over.size());
      for (std::size_t i = 0; i < fam.assign.size(); ++i) {
        if (range_plus(f, p.eta, fam.assign[i]).contains(a)) votes.insert(i);
      }
      if (d.contains(votes) && !meet_out.contains(a)) {
        pass = false;
        bad = f.name(a);
      }
    }
    out.push_back({"out-rm", where + (pass ? "" : ": fails at " + bad), pass});
  }
  {
    const auto& xs = fam.assign;
    bool chain = true;
    for (std::size_t i = 0; i < xs.size() && chain; ++i) {
      for (std::size_t j = i + 1; j < xs.size() && chain; ++j) {
        chain = propto(f, p.eta, xs[i], xs[j]) || propto(f, p.eta, xs[j], xs[i]);
      }
    }
    if (chain) {
      // The ultrafilter is built from the index sets J_x = {i : x in range(X_i)}.
      std::vector<IndexSubset> js;
      ArgSet covered(f.size());
      for (const auto& x : xs) covered |= range_of(f, p.eta, x);
      for (auto x = covered.first(); x < covered.universe(); x = covered.next(x)) {
        IndexSubset j(fam.over.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (range_of(f, p.eta, xs[i]).contains(x)) j.insert(i);
        }
        js.push_back(j);
      }
      auto dd = extend_fip(fam.over, js);
      const ArgSet top = reduced_meet(fam, dd);
      bool pass = std::all_of(xs.begin(), xs.end(), [&](const ArgSet& x) { return propto(f, p.eta, x, top); });
      out.push_back({"rm-upper-bound",
                     describe(f, fam) + " at " + fam.over.tokens()[dd.point] + ": meet " + f.format(top), pass});
    }
  }
  return out;
}

nlohmann::json laws_to_json(const std::vector<LawResult>& laws) {
  auto arr = nlohmann::json::array();
  for (const auto& r : laws) arr.push_back({{"law", r.law}, {"instance", r.instance}, {"pass", r.pass}});
  return arr;
}

ClosureReport check_family_closure(const Aaf& f, const ExtensionFamily& family, std::mt19937_64& rng,
                                   std::size_t samples, std::size_t max_index) {
  ClosureReport r;
  if (family.empty()) return r;
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(1, max_index));
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t k = size_dist(rng);
    IndexedFamily fam{IndexSet::numbered(k), {}};
    for (std::size_t i = 0; i < k; ++i) fam.assign.push_back(family[pick(rng)]);
    Ultrafilter d{fam.over, std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)};
    ++r.samples;
    auto meet = reduced_meet(fam, d);
    if (!family.contains(meet)) {
      if (r.failures++ == 0) r.first_failure = describe(f, fam) + " -> " + f.format(meet);
    }
  }
  return r;
}

}  // namespace gaf
