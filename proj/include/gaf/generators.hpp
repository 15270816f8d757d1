#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaf/framework.hpp"

namespace gaf {

// Single letters a..z up to 26 arguments, then a0, a1, ... zero-padded.
std::vector<std::string> default_names(std::size_t n);

namespace fixtures {
Aaf chain();          // a -> b
Aaf three_cycle();    // a -> b -> c -> a
Aaf self_attacker();  // a -> a
Aaf triangle_sink();  // a, b, c mutually attacking, each attacking d
Aaf wf_cycle();       // b -> a, a -> c, c -> b
}  // namespace fixtures

// Each ordered pair (self loops included) is an attack with probability density.
Aaf random_frame(std::mt19937_64& rng, std::size_t n, double density);
// Attacks only from higher to lower index, so the attack relation is acyclic.
Aaf random_acyclic_frame(std::mt19937_64& rng, std::size_t n, double density);
// Uniform draw in [lo, hi].
std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi);
// Down-closure of a few random generator sets over n elements.
std::vector<ArgSet> random_down_closed(std::mt19937_64& rng, std::size_t n, std::size_t generators);

}  // namespace gaf
