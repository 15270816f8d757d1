#pragma once
// Glue between the mask oracle and library types.

#include "gaf/framework.hpp"
#include "gaf/generators.hpp"
#include "oracle.hpp"

namespace support {

inline gaf::Aaf to_aaf(const oracle::Graph& g) {
  return gaf::Aaf(gaf::default_names(static_cast<std::size_t>(g.n)), oracle::edges(g));
}

inline gaf::ArgSet to_set(const oracle::Graph& g, oracle::Mask m) {
  return gaf::ArgSet::from_mask(static_cast<std::size_t>(g.n), m);
}

inline gaf::ExtensionFamily to_family(const oracle::Graph& g, const oracle::Family& f) {
  std::vector<gaf::ArgSet> sets;
  for (auto m : f) sets.push_back(to_set(g, m));
  return gaf::ExtensionFamily(static_cast<std::size_t>(g.n), sets);
}

inline gaf::ExtensionFamily family(const gaf::Aaf& f, std::vector<std::vector<std::string>> sets) {
  std::vector<gaf::ArgSet> out;
  for (const auto& s : sets) out.push_back(f.set_of(s));
  return gaf::ExtensionFamily(f.size(), out);
}

}  // namespace support
