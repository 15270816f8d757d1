#include "gaf/fixpoint.hpp"

#include <deque>
#include <unordered_set>

#include "gaf/errors.hpp"
#include "gaf/kernel.hpp"

namespace gaf {

IterationTrace iterate_defense(const Aaf& f, int m, int n, const ArgSet& e) {
  IterationTrace t{e, {e}, 0};
  std::unordered_set<ArgSet, ArgSetHash> seen{e};
  while (true) {
    ArgSet next = defense(f, m, n, t.steps.back());
    if (next == t.steps.back()) {
      t.stabilized_at = t.steps.size() - 1;
      t.steps.push_back(std::move(next));
      return t;
    }
    if (!seen.insert(next).second) {
      throw CycleError("defense iteration from " + f.format(e) + " cycles without a fixpoint");
    }
    t.steps.push_back(std::move(next));
  }
}

bool is_self_defended(const Aaf& f, int m, int n, const ArgSet& e) {
  return e.is_subset_of(defense(f, m, n, e));
}

ArgSet lfp_from(const Aaf& f, int m, int n, const ArgSet& e) {
  if (!is_self_defended(f, m, n, e)) {
    throw PreconditionError(f.format(e) + " is not self-defended");
  }
  return iterate_defense(f, m, n, e).final();
}

ArgSet gfp(const Aaf& f, int m, int n) {
  ArgSet cur = f.all();
  while (true) {
    ArgSet next = defense(f, m, n, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool wf_on(const Aaf& f, const ArgSet& x) {
  // Kahn's algorithm on the induced subgraph.
  std::vector<std::size_t> indeg(f.size(), 0);
  auto members = x.members();
  for (auto b : members) indeg[b] = f.attackers(b).intersection_count(x);
  std::vector<std::size_t> ready;
  for (auto b : members) {
    if (indeg[b] == 0) ready.push_back(b);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto a = ready.back();
    ready.pop_back();
    ++removed;
    ArgSet out = f.attacked_by(a) & x;
    for (auto b = out.first(); b < out.universe(); b = out.next(b)) {
      if (--indeg[b] == 0) ready.push_back(b);
    }
  }
  return removed == members.size();
}

namespace {
// Arguments reachable from `from` in one or more steps.
ArgSet reachable_plus(const Aaf& f, const ArgSet& from) {
  ArgSet seen(f.size());
  std::deque<std::size_t> queue;
  for (auto a = from.first(); a < from.universe(); a = from.next(a)) {
    const auto& out = f.attacked_by(a);
    for (auto b = out.first(); b < out.universe(); b = out.next(b)) {
      if (!seen.contains(b)) {
        seen.insert(b);
        queue.push_back(b);
      }
    }
  }
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    const auto& out = f.attacked_by(a);
    for (auto b = out.first(); b < out.universe(); b = out.next(b)) {
      if (!seen.contains(b)) {
        seen.insert(b);
        queue.push_back(b);
      }
    }
  }
  return seen;
}
}  // namespace

bool wf_plus_on(const Aaf& f, const ArgSet& x) {
  for (auto a = x.first(); a < x.universe(); a = x.next(a)) {
    if (reachable_plus(f, ArgSet::of(f.size(), {a})).contains(a)) return false;
  }
  return true;
}

ReachabilityProfile reachability_profile(const Aaf& f, const ArgSet& e) {
  ReachabilityProfile p;
  p.sigma = reachable_plus(f, e);
  p.dist.assign(f.size(), std::nullopt);
  std::deque<std::size_t> queue;
  for (auto a = e.first(); a < e.universe(); a = e.next(a)) {
    p.dist[a] = 0;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    const auto& out = f.attacked_by(a);
    for (auto b = out.first(); b < out.universe(); b = out.next(b)) {
      if (!p.dist[b]) {
        p.dist[b] = *p.dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  p.covers_all = p.sigma == f.all();
  p.distances_increase = true;
  for (auto [a, b] : f.attacks()) {
    if (!p.dist[a] || !p.dist[b] || !(*p.dist[a] < *p.dist[b])) {
      p.distances_increase = false;
      break;
    }
  }
  return p;
}

}  // namespace gaf
