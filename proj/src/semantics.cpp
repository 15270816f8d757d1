#include "gaf/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <thread>
#include <unordered_set>

#include "gaf/errors.hpp"
#include "gaf/fixpoint.hpp"
#include "gaf/kernel.hpp"

namespace gaf {

namespace {

const std::vector<std::pair<std::string_view, BaseSemantics>>& base_names() {
  static const std::vector<std::pair<std::string_view, BaseSemantics>> names = {
      {"cf", BaseSemantics::Cf},          {"def", BaseSemantics::Def},
      {"ad", BaseSemantics::Ad},          {"co", BaseSemantics::Co},
      {"stb", BaseSemantics::Stb},        {"gr", BaseSemantics::Gr},
      {"gr-dung", BaseSemantics::GrDung}, {"gr-dunne", BaseSemantics::GrDunne},
      {"na", BaseSemantics::Na},          {"pr", BaseSemantics::Pr},
      {"pr-dung", BaseSemantics::PrDung}, {"stg", BaseSemantics::Stg},
      {"ss", BaseSemantics::Ss},          {"rra", BaseSemantics::Rra},
      {"rrs", BaseSemantics::Rrs},        {"id", BaseSemantics::Id},
      {"eg", BaseSemantics::Eg},
  };
  return names;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SemanticsSpec parse() {
    auto s = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("bad semantics spec '" + std::string(text_) + "' at offset " +
                            std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a semantics name");
    return std::string(text_.substr(start, pos_ - start));
  }

  SemanticsSpec term() {
    auto w = word();
    if (w == "max") {
      expect('(');
      auto s = term();
      expect(')');
      return SemanticsSpec::max(std::move(s));
    }
    if (w == "rr") {
      expect('(');
      auto s = term();
      expect(')');
      return SemanticsSpec::rr(std::move(s));
    }
    if (w == "interval") {
      expect('(');
      auto lo = term();
      expect(',');
      auto mid = term();
      expect(',');
      auto hi = term();
      expect(')');
      return SemanticsSpec::interval(std::move(lo), std::move(mid), std::move(hi));
    }
    if (w == "param") {
      expect('(');
      auto mid = term();
      expect(',');
      auto hi = term();
      expect(')');
      return SemanticsSpec::param(std::move(mid), std::move(hi));
    }
    for (const auto& [name, tag] : base_names()) {
      if (name == w) return SemanticsSpec::of(tag);
    }
    fail("unknown semantics '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Evaluates a spec with per-call memoization of subterms.
class Evaluator {
 public:
  Evaluator(const Aaf& f, const Params& p, const EnumerationOptions& opts) : f_(f), p_(p), opts_(opts) {
    p_.validate();
  }

  const ExtensionFamily& eval(const SemanticsSpec& spec) {
    auto key = to_string(spec);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto fam = compute(spec);
    return cache_.emplace(key, std::move(fam)).first->second;
  }

 private:
  ExtensionFamily filter(const std::function<bool(const ArgSet&)>& pred) {
    return filter_subsets(f_, pred, opts_);
  }

  ExtensionFamily compute(const SemanticsSpec& spec) {
    using K = SemanticsSpec::Kind;
    switch (spec.kind) {
      case K::Max:
        return maximal_of(eval(spec.args[0]));
      case K::Rr:
        return range_maximal(f_, p_.eta, eval(spec.args[0]));
      case K::Interval:
        return interval(f_, eval(spec.args[0]), eval(spec.args[1]), eval(spec.args[2]));
      case K::Param:
        return interval(f_, ExtensionFamily(f_.size(), {f_.none()}), eval(spec.args[0]),
                        eval(spec.args[1]));
      case K::Base:
        return base(spec.base);
    }
    throw InvariantViolation("unhandled spec kind");
  }

  ExtensionFamily base(BaseSemantics b) {
    using B = BaseSemantics;
    const auto& f = f_;
    const int l = p_.l, m = p_.m, n = p_.n;
    auto S = [](B x) { return SemanticsSpec::of(x); };
    switch (b) {
      case B::Cf:
        return filter([&](const ArgSet& e) { return is_conflict_free(f, l, e); });
      case B::Def:
        return filter([&](const ArgSet& e) { return e.is_subset_of(defense(f, m, n, e)); });
      case B::Ad:
        return filter([&](const ArgSet& e) {
          return is_conflict_free(f, l, e) && e.is_subset_of(defense(f, m, n, e));
        });
      case B::Co:
        return filter([&](const ArgSet& e) {
          return is_conflict_free(f, l, e) && e == defense(f, m, n, e);
        });
      case B::Stb:
        return filter([&](const ArgSet& e) {
          return e == neutrality(f, n, e) && e == neutrality(f, m, e) && is_conflict_free(f, l, e);
        });
      case B::Gr: {
        const auto& co = eval(S(B::Co));
        for (const auto& e : co) {
          if (std::all_of(co.begin(), co.end(), [&](const ArgSet& x) { return e.is_subset_of(x); })) {
            return ExtensionFamily(f.size(), {e});
          }
        }
        return ExtensionFamily(f.size());
      }
      case B::GrDung:
        return ExtensionFamily(f.size(), {lfp_from(f, m, n, f.none())});
      case B::GrDunne:
        return ExtensionFamily(f.size(), {eval(S(B::Co)).intersection()});
      case B::Na:
        return maximal_of(eval(S(B::Cf)));
      case B::Pr:
        return maximal_of(eval(S(B::Co)));
      case B::PrDung:
        return maximal_of(eval(S(B::Ad)));
      case B::Stg:
        return range_maximal(f, p_.eta, eval(S(B::Cf)));
      case B::Ss:
        return range_maximal(f, p_.eta, eval(S(B::Co)));
      case B::Rra:
        return range_maximal(f, p_.eta, eval(S(B::Ad)));
      case B::Rrs:
        return range_maximal(f, p_.eta, eval(S(B::Stb)));
      case B::Id:
        return eval(SemanticsSpec::max(SemanticsSpec::param(S(B::Ad), S(B::Pr))));
      case B::Eg:
        return eval(SemanticsSpec::max(SemanticsSpec::param(S(B::Ad), S(B::Ss))));
    }
    throw InvariantViolation("unhandled base semantics");
  }

  const Aaf& f_;
  Params p_;
  EnumerationOptions opts_;
  std::map<std::string, ExtensionFamily> cache_;
};

}  // namespace

SemanticsSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const SemanticsSpec& spec) {
  using K = SemanticsSpec::Kind;
  switch (spec.kind) {
    case K::Base:
      for (const auto& [name, tag] : base_names()) {
        if (tag == spec.base) return std::string(name);
      }
      break;
    case K::Max:
      return "max(" + to_string(spec.args[0]) + ")";
    case K::Rr:
      return "rr(" + to_string(spec.args[0]) + ")";
    case K::Interval:
      return "interval(" + to_string(spec.args[0]) + "," + to_string(spec.args[1]) + "," +
             to_string(spec.args[2]) + ")";
    case K::Param:
      return "param(" + to_string(spec.args[0]) + "," + to_string(spec.args[1]) + ")";
  }
  throw InvariantViolation("unprintable spec");
}

ExtensionFamily filter_subsets(const Aaf& f, const std::function<bool(const ArgSet&)>& pred,
                               const EnumerationOptions& opts) {
  const std::size_t n = f.size();
  if (n > opts.cap || n > 62) {
    throw CapExceeded("subset enumeration over " + std::to_string(n) +
                      " arguments exceeds the cap of " + std::to_string(std::min<std::size_t>(opts.cap, 62)));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  auto run = [&](std::uint64_t lo, std::uint64_t hi, std::vector<ArgSet>& out) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      auto e = ArgSet::from_mask(n, mask);
      if (pred(e)) out.push_back(std::move(e));
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1 || total < 4096) {
    std::vector<ArgSet> out;
    run(0, total, out);
    return ExtensionFamily(n, std::move(out));
  }
  std::vector<std::vector<ArgSet>> parts(jobs);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t lo = std::min(total, chunk * j);
      const std::uint64_t hi = std::min(total, lo + chunk);
      workers.emplace_back([&, lo, hi, j] { run(lo, hi, parts[j]); });
    }
  }
  std::vector<ArgSet> merged;
  for (auto& part : parts) {
    merged.insert(merged.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return ExtensionFamily(n, std::move(merged));
}

ExtensionFamily enumerate(const Aaf& f, const Params& p, const SemanticsSpec& spec,
                          const EnumerationOptions& opts) {
  Evaluator ev(f, p, opts);
  return ev.eval(spec);
}

ExtensionFamily enumerate(const Aaf& f, const Params& p, std::string_view spec,
                          const EnumerationOptions& opts) {
  return enumerate(f, p, parse_spec(spec), opts);
}

ExtensionFamily maximal_of(const ExtensionFamily& family) {
  std::vector<ArgSet> by_size(family.sets().rbegin(), family.sets().rend());
  std::vector<ArgSet> kept;
  for (const auto& e : by_size) {
    // Any strict superset has a maximal superset that was already kept.
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const ArgSet& k) { return e.is_proper_subset_of(k); });
    if (!dominated) kept.push_back(e);
  }
  return ExtensionFamily(family.universe(), std::move(kept));
}

ExtensionFamily range_maximal(const Aaf& f, int eta, const ExtensionFamily& family) {
  std::vector<ArgSet> ranges;
  ranges.reserve(family.size());
  for (const auto& e : family) ranges.push_back(range_of(f, eta, e));
  auto top = maximal_of(ExtensionFamily(f.size(), ranges));
  std::vector<ArgSet> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (top.contains(ranges[i])) out.push_back(family[i]);
  }
  return ExtensionFamily(f.size(), std::move(out));
}

ExtensionFamily interval(const Aaf& f, const ExtensionFamily& lo, const ExtensionFamily& fam,
                         const ExtensionFamily& hi) {
  const ArgSet low = lo.intersection();
  const ArgSet high = hi.intersection();
  std::vector<ArgSet> out;
  for (const auto& e : fam) {
    if (low.is_subset_of(e) && e.is_subset_of(high)) out.push_back(e);
  }
  return ExtensionFamily(f.size(), std::move(out));
}

ExtensionFamily ideal(const Aaf& f, const Params& p, const EnumerationOptions& opts) {
  return enumerate(f, p, SemanticsSpec::of(BaseSemantics::Id), opts);
}

ExtensionFamily eager(const Aaf& f, const Params& p, const EnumerationOptions& opts) {
  return enumerate(f, p, SemanticsSpec::of(BaseSemantics::Eg), opts);
}

}  // namespace gaf
