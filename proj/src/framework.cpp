#include "gaf/framework.hpp"

#include <algorithm>
#include <cctype>

#include "gaf/errors.hpp"

namespace gaf {

bool is_valid_arg_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

void Params::validate() const {
  if (l < 1 || m < 1 || n < 1 || eta < 1) {
    throw PreconditionError("grades l, m, n, eta must be positive integers");
  }
}

Aaf::Aaf(std::vector<std::string> names, std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
  if (names_.empty()) throw PreconditionError("a framework needs at least one argument");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_arg_name(names_[i])) {
      throw PreconditionError("invalid argument name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw PreconditionError("duplicate argument '" + names_[i] + "'");
    }
  }
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
  attackers_.assign(size(), ArgSet(size()));
  attacked_.assign(size(), ArgSet(size()));
  for (auto [from, to] : attacks_) {
    if (from >= size() || to >= size()) throw PreconditionError("attack endpoint out of range");
    attackers_[to].insert(from);
    attacked_[from].insert(to);
  }
}

Aaf Aaf::from_names(std::vector<std::string> names,
                    const std::vector<std::pair<std::string, std::string>>& attacks) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  std::vector<Attack> edges;
  for (const auto& [x, y] : attacks) {
    auto ix = idx.find(x);
    auto iy = idx.find(y);
    if (ix == idx.end()) throw PreconditionError("undeclared argument '" + x + "'");
    if (iy == idx.end()) throw PreconditionError("undeclared argument '" + y + "'");
    edges.emplace_back(ix->second, iy->second);
  }
  return Aaf(std::move(names), std::move(edges));
}

std::optional<std::size_t> Aaf::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Aaf::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw PreconditionError("unknown argument '" + std::string(name) + "'");
  return *i;
}

ArgSet Aaf::set_of(const std::vector<std::string>& names) const {
  ArgSet s(size());
  for (const auto& n : names) s.insert(index(n));
  return s;
}

ArgSet Aaf::parse_set(std::string_view text) const {
  ArgSet s(size());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (!token.empty()) s.insert(index(token));
    pos = comma + 1;
  }
  return s;
}

std::string Aaf::format(const ArgSet& s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  }
  return out + "}";
}

std::vector<std::string> Aaf::member_names(const ArgSet& s) const {
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(names_[i]);
  return out;
}

ExtensionFamily::ExtensionFamily(std::size_t universe, std::vector<ArgSet> sets)
    : universe_(universe), sets_(canonicalize(std::move(sets))) {
  for (const auto& s : sets_) {
    if (s.universe() != universe_) throw PreconditionError("family member over a different universe");
  }
}

bool ExtensionFamily::contains(const ArgSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, CanonicalLess{});
}

ArgSet ExtensionFamily::intersection() const {
  ArgSet out = ArgSet::full(universe_);
  for (const auto& s : sets_) out &= s;
  return out;
}

ArgSet ExtensionFamily::union_all() const {
  ArgSet out(universe_);
  for (const auto& s : sets_) out |= s;
  return out;
}

ExtensionFamily canonicalize(const ExtensionFamily& family) {
  return ExtensionFamily(family.universe(), family.sets());
}

}  // namespace gaf
