#pragma once
// Brute-force reference implementations over 32-bit masks. Written from the
// definitions directly, sharing nothing with the library beyond input edges.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Family = std::vector<Mask>;

struct Graph {
  int n = 0;
  // att[a] has bit b set when a attacks b.
  std::vector<Mask> att;
  // by[b] has bit a set when a attacks b.
  std::vector<Mask> by;

  explicit Graph(int size) : n(size), att(size, 0), by(size, 0) {}
  void add(int a, int b) {
    att[a] |= Mask{1} << b;
    by[b] |= Mask{1} << a;
  }
  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
  bool in(Mask s, int a) const { return (s >> a) & 1U; }
};

inline Graph random_graph(std::mt19937& rng, int n, double density) {
  Graph g(n);
  std::bernoulli_distribution coin(density);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (coin(rng)) g.add(a, b);
    }
  }
  return g;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edges(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      if (g.in(g.att[a], b)) out.emplace_back(a, b);
    }
  }
  return out;
}

inline Family filter(const Graph& g, auto pred) {
  Family out;
  for (Mask s = 0; s <= g.all(); ++s) {
    if (pred(s)) out.push_back(s);
    if (s == g.all()) break;
  }
  return out;
}

inline Family maximal(const Family& f) {
  Family out;
  for (Mask s : f) {
    bool top = std::none_of(f.begin(), f.end(), [&](Mask t) { return t != s && (s & t) == s; });
    if (top) out.push_back(s);
  }
  return out;
}

// ---- classical (all grades 1) -------------------------------------------

inline bool cf(const Graph& g, Mask s) {
  for (int a = 0; a < g.n; ++a) {
    if (g.in(s, a) && (g.att[a] & s)) return false;
  }
  return true;
}

inline Mask attacked_by(const Graph& g, Mask s) {
  Mask out = 0;
  for (int a = 0; a < g.n; ++a) {
    if (g.in(s, a)) out |= g.att[a];
  }
  return out;
}

// Every attacker of a is attacked by s.
inline bool acceptable(const Graph& g, Mask s, int a) { return (g.by[a] & ~attacked_by(g, s)) == 0; }

inline bool defends_all(const Graph& g, Mask s) {
  for (int a = 0; a < g.n; ++a) {
    if (g.in(s, a) && !acceptable(g, s, a)) return false;
  }
  return true;
}

inline Mask characteristic(const Graph& g, Mask s) {
  Mask out = 0;
  for (int a = 0; a < g.n; ++a) {
    if (acceptable(g, s, a)) out |= Mask{1} << a;
  }
  return out;
}

inline Family classical_def(const Graph& g) {
  return filter(g, [&](Mask s) { return defends_all(g, s); });
}
inline Family classical_cf(const Graph& g) {
  return filter(g, [&](Mask s) { return cf(g, s); });
}
inline Family classical_ad(const Graph& g) {
  return filter(g, [&](Mask s) { return cf(g, s) && defends_all(g, s); });
}
inline Family classical_co(const Graph& g) {
  return filter(g, [&](Mask s) { return cf(g, s) && characteristic(g, s) == s; });
}
inline Family classical_stb(const Graph& g) {
  return filter(g, [&](Mask s) { return cf(g, s) && (s | attacked_by(g, s)) == g.all(); });
}
inline Mask classical_grounded(const Graph& g) {
  Mask s = 0;
  for (;;) {
    Mask next = characteristic(g, s);
    if (next == s) return s;
    s = next;
  }
}
inline Family classical_na(const Graph& g) { return maximal(classical_cf(g)); }
inline Family classical_pr(const Graph& g) { return maximal(classical_ad(g)); }

inline Family range_maximal(const Graph& g, const Family& f) {
  Family out;
  for (Mask s : f) {
    const Mask rs = s | attacked_by(g, s);
    bool top = std::none_of(f.begin(), f.end(), [&](Mask t) {
      const Mask rt = t | attacked_by(g, t);
      return rt != rs && (rs & rt) == rs;
    });
    if (top) out.push_back(s);
  }
  return out;
}

inline Family classical_stg(const Graph& g) { return range_maximal(g, classical_cf(g)); }
inline Family classical_ss(const Graph& g) { return range_maximal(g, classical_co(g)); }
inline Family classical_rra(const Graph& g) { return range_maximal(g, classical_ad(g)); }

// Largest admissible set inside every member of `within`.
inline Family classical_inside(const Graph& g, const Family& within) {
  Mask cut = g.all();
  for (Mask s : within) cut &= s;
  Family below;
  for (Mask s : classical_ad(g)) {
    if ((s & cut) == s) below.push_back(s);
  }
  return maximal(below);
}
inline Family classical_ideal(const Graph& g) { return classical_inside(g, classical_pr(g)); }
inline Family classical_eager(const Graph& g) { return classical_inside(g, classical_ss(g)); }

// ---- graded, counted literally --------------------------------------------

inline int attackers_in(const Graph& g, int a, Mask s) { return std::popcount(g.by[a] & s); }

inline Mask neutral(const Graph& g, int l, Mask s) {
  Mask out = 0;
  for (int a = 0; a < g.n; ++a) {
    if (attackers_in(g, a, s) < l) out |= Mask{1} << a;
  }
  return out;
}

// a is defended unless at least m of its attackers are each attacked by
// fewer than n members of s.
inline Mask defended(const Graph& g, int m, int n, Mask s) {
  Mask out = 0;
  for (int a = 0; a < g.n; ++a) {
    int unanswered = 0;
    for (int b = 0; b < g.n; ++b) {
      if (g.in(g.by[a], b) && attackers_in(g, b, s) < n) ++unanswered;
    }
    if (unanswered < m) out |= Mask{1} << a;
  }
  return out;
}

inline bool graded_cf(const Graph& g, int l, Mask s) {
  for (int a = 0; a < g.n; ++a) {
    if (g.in(s, a) && attackers_in(g, a, s) >= l) return false;
  }
  return true;
}

struct Grades {
  int l = 1, m = 1, n = 1;
};

inline Family graded_cf(const Graph& g, Grades p) {
  return filter(g, [&](Mask s) { return graded_cf(g, p.l, s); });
}
inline Family graded_def(const Graph& g, Grades p) {
  return filter(g, [&](Mask s) { return (s & defended(g, p.m, p.n, s)) == s; });
}
inline Family graded_ad(const Graph& g, Grades p) {
  return filter(g, [&](Mask s) { return graded_cf(g, p.l, s) && (s & defended(g, p.m, p.n, s)) == s; });
}
inline Family graded_co(const Graph& g, Grades p) {
  return filter(g, [&](Mask s) { return graded_cf(g, p.l, s) && defended(g, p.m, p.n, s) == s; });
}
inline Family graded_stb(const Graph& g, Grades p) {
  return filter(g, [&](Mask s) {
    return graded_cf(g, p.l, s) && neutral(g, p.n, s) == s && neutral(g, p.m, s) == s;
  });
}
inline Mask graded_lfp(const Graph& g, Grades p) {
  Mask s = 0;
  for (;;) {
    Mask next = defended(g, p.m, p.n, s);
    if (next == s) return s;
    s = next;
  }
}

}  // namespace oracle
