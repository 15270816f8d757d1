#pragma once

#include <vector>

#include "gaf/framework.hpp"

namespace gaf {

// {a : |a^- ∩ E| < l}
ArgSet neutrality(const Aaf& f, int l, const ArgSet& e);

// N_m(N_n(E)): arguments without m distinct attackers that are each
// attacked by fewer than n members of E.
ArgSet defense(const Aaf& f, int m, int n, const ArgSet& e);

// {a : |a^- ∩ E| >= eta}, the complement of neutrality(f, eta, e).
ArgSet range_plus(const Aaf& f, int eta, const ArgSet& e);

// E ∪ E_eta^+
ArgSet range_of(const Aaf& f, int eta, const ArgSet& e);

// All size-eta subsets of a^-, in canonical order.
std::vector<ArgSet> enumerate_attacker_combinations(const Aaf& f, std::size_t a, int eta);

// E ⊆ N_l(E), checked without building N_l(E).
bool is_conflict_free(const Aaf& f, int l, const ArgSet& e);

}  // namespace gaf
