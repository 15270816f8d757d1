#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gaf/framework.hpp"

namespace gaf {

enum class BaseSemantics {
  Cf,
  Def,
  Ad,
  Co,
  Stb,
  Gr,
  GrDung,
  GrDunne,
  Na,
  Pr,
  PrDung,
  // Shorthands for combinator terms.
  Stg,  // rr(cf)
  Ss,   // rr(co)
  Rra,  // rr(ad)
  Rrs,  // rr(stb)
  Id,   // max(param(ad, pr))
  Eg,   // max(param(ad, ss))
};

struct SemanticsSpec {
  enum class Kind { Base, Max, Rr, Interval, Param };

  Kind kind = Kind::Base;
  BaseSemantics base = BaseSemantics::Cf;
  std::vector<SemanticsSpec> args;

  static SemanticsSpec of(BaseSemantics b) { return {Kind::Base, b, {}}; }
  static SemanticsSpec max(SemanticsSpec s) { return {Kind::Max, {}, {std::move(s)}}; }
  static SemanticsSpec rr(SemanticsSpec s) { return {Kind::Rr, {}, {std::move(s)}}; }
  static SemanticsSpec interval(SemanticsSpec lo, SemanticsSpec mid, SemanticsSpec hi) {
    return {Kind::Interval, {}, {std::move(lo), std::move(mid), std::move(hi)}};
  }
  static SemanticsSpec param(SemanticsSpec mid, SemanticsSpec hi) {
    return {Kind::Param, {}, {std::move(mid), std::move(hi)}};
  }

  friend bool operator==(const SemanticsSpec&, const SemanticsSpec&) = default;
};

// Grammar: cf ad co stb gr gr-dung gr-dunne na pr pr-dung def stg ss rra rrs
// id eg max(S) rr(S) interval(S,S,S) param(S,S). Throws PreconditionError.
SemanticsSpec parse_spec(std::string_view text);
std::string to_string(const SemanticsSpec& spec);

struct EnumerationOptions {
  std::size_t cap = 22;
  unsigned jobs = 1;
};

ExtensionFamily enumerate(const Aaf& f, const Params& p, const SemanticsSpec& spec,
                          const EnumerationOptions& opts = {});
ExtensionFamily enumerate(const Aaf& f, const Params& p, std::string_view spec,
                          const EnumerationOptions& opts = {});

// All subsets of A satisfying pred, canonically ordered. Throws CapExceeded
// above opts.cap arguments. pred must be safe to call concurrently.
ExtensionFamily filter_subsets(const Aaf& f, const std::function<bool(const ArgSet&)>& pred,
                               const EnumerationOptions& opts = {});

ExtensionFamily maximal_of(const ExtensionFamily& family);
ExtensionFamily range_maximal(const Aaf& f, int eta, const ExtensionFamily& family);
// {E ∈ fam : ⋂lo ⊆ E ⊆ ⋂hi}, empty intersections being A.
ExtensionFamily interval(const Aaf& f, const ExtensionFamily& lo, const ExtensionFamily& fam,
                         const ExtensionFamily& hi);
ExtensionFamily ideal(const Aaf& f, const Params& p, const EnumerationOptions& opts = {});
ExtensionFamily eager(const Aaf& f, const Params& p, const EnumerationOptions& opts = {});

}  // namespace gaf
