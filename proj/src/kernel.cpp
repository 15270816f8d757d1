#include "gaf/kernel.hpp"

#include <algorithm>

#include "gaf/errors.hpp"

namespace gaf {

namespace {
void require_grade(int g) {
  if (g < 1) throw PreconditionError("grades must be positive integers");
}
}  // namespace

ArgSet neutrality(const Aaf& f, int l, const ArgSet& e) {
  require_grade(l);
  ArgSet out(f.size());
  const auto limit = static_cast<std::size_t>(l);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f.attackers(a).intersection_count(e) < limit) out.insert(a);
  }
  return out;
}

ArgSet defense(const Aaf& f, int m, int n, const ArgSet& e) {
  return neutrality(f, m, neutrality(f, n, e));
}

ArgSet range_plus(const Aaf& f, int eta, const ArgSet& e) {
  require_grade(eta);
  ArgSet out(f.size());
  const auto limit = static_cast<std::size_t>(eta);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f.attackers(a).intersection_count(e) >= limit) out.insert(a);
  }
  return out;
}

ArgSet range_of(const Aaf& f, int eta, const ArgSet& e) { return e | range_plus(f, eta, e); }

std::vector<ArgSet> enumerate_attacker_combinations(const Aaf& f, std::size_t a, int eta) {
  require_grade(eta);
  auto pool = f.attackers(a).members();
  const auto k = static_cast<std::size_t>(eta);
  std::vector<ArgSet> out;
  if (pool.size() < k) return out;
  // Selector with k leading trues; prev_permutation walks combinations.
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    ArgSet s(f.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) s.insert(pool[i]);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return canonicalize(std::move(out));
}

bool is_conflict_free(const Aaf& f, int l, const ArgSet& e) {
  require_grade(l);
  const auto limit = static_cast<std::size_t>(l);
  for (auto a = e.first(); a < e.universe(); a = e.next(a)) {
    if (f.attackers(a).intersection_count(e) >= limit) return false;
  }
  return true;
}

}  // namespace gaf
