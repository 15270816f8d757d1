#pragma once

#include <optional>
#include <vector>

#include "gaf/framework.hpp"

namespace gaf {

struct IterationTrace {
  ArgSet start;
  // D^0(E), D^1(E), ..., ending with two equal entries.
  std::vector<ArgSet> steps;
  // k with D^k(E) = D^{k+1}(E).
  std::size_t stabilized_at = 0;

  const ArgSet& final() const { return steps.back(); }
};

// Throws CycleError if the iteration revisits a state without stabilizing.
IterationTrace iterate_defense(const Aaf& f, int m, int n, const ArgSet& e);

bool is_self_defended(const Aaf& f, int m, int n, const ArgSet& e);

// Least fixpoint of the defense function above a self-defended E.
ArgSet lfp_from(const Aaf& f, int m, int n, const ArgSet& e);

// Greatest fixpoint, by downward iteration from A.
ArgSet gfp(const Aaf& f, int m, int n);

// Attack relation restricted to X x X is acyclic.
bool wf_on(const Aaf& f, const ArgSet& x);

// No a ∈ X lies on an attack cycle of the whole frame.
bool wf_plus_on(const Aaf& f, const ArgSet& x);

struct ReachabilityProfile {
  // Reachable from E in one or more attack steps.
  ArgSet sigma;
  // Shortest attack distance from E; 0 on E, nullopt when unreachable.
  std::vector<std::optional<std::size_t>> dist;
  // Every argument reachable from E in one or more steps.
  bool covers_all = false;
  // Every attack a -> b has defined distances with dist(a) < dist(b).
  bool distances_increase = false;
};

ReachabilityProfile reachability_profile(const Aaf& f, const ArgSet& e);

}  // namespace gaf
