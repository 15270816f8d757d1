#include "gaf/generators.hpp"

#include <algorithm>

namespace gaf {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  if (n <= 26) {
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
  }
  const std::size_t width = std::to_string(n - 1).size();
  for (std::size_t i = 0; i < n; ++i) {
    auto digits = std::to_string(i);
    out.push_back("a" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

namespace fixtures {

Aaf chain() { return Aaf::from_names({"a", "b"}, {{"a", "b"}}); }

Aaf three_cycle() { return Aaf::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

Aaf self_attacker() { return Aaf::from_names({"a"}, {{"a", "a"}}); }

Aaf triangle_sink() {
  return Aaf::from_names({"a", "b", "c", "d"}, {{"a", "b"},
                                                {"b", "a"},
                                                {"a", "c"},
                                                {"c", "a"},
                                                {"b", "c"},
                                                {"c", "b"},
                                                {"a", "d"},
                                                {"b", "d"},
                                                {"c", "d"}});
}

Aaf wf_cycle() { return Aaf::from_names({"a", "b", "c"}, {{"b", "a"}, {"a", "c"}, {"c", "b"}}); }

}  // namespace fixtures

Aaf random_frame(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Attack> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Aaf(default_names(n), std::move(edges));
}

Aaf random_acyclic_frame(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Attack> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Aaf(default_names(n), std::move(edges));
}

std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<ArgSet> random_down_closed(std::mt19937_64& rng, std::size_t n, std::size_t generators) {
  std::vector<ArgSet> out{ArgSet(n)};
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  for (std::size_t g = 0; g < generators; ++g) {
    const std::uint64_t top = mask(rng);
    for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
      out.push_back(ArgSet::from_mask(n, sub));
      if (sub == 0) break;
    }
  }
  return canonicalize(std::move(out));
}

}  // namespace gaf
