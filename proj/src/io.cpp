#include "gaf/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gaf/errors.hpp"

namespace gaf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Pending {
  std::string from;
  std::string to;
  std::size_t line;
};

Aaf assemble(std::vector<std::string> names, const std::vector<Pending>& edges) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  std::vector<Attack> attacks;
  for (const auto& e : edges) {
    auto a = idx.find(e.from);
    if (a == idx.end()) throw ParseError(e.line, "undeclared argument '" + e.from + "'");
    auto b = idx.find(e.to);
    if (b == idx.end()) throw ParseError(e.line, "undeclared argument '" + e.to + "'");
    attacks.emplace_back(a->second, b->second);
  }
  if (names.empty()) throw ParseError(0, "no arguments declared");
  return Aaf(std::move(names), std::move(attacks));
}

}  // namespace

Aaf parse_apx(std::string_view text) {
  static const std::regex stmt(
      R"(^(arg|att)\s*\(\s*([A-Za-z0-9_]+)\s*(?:,\s*([A-Za-z0-9_]+)\s*)?\)$)");
  std::vector<std::string> names;
  std::unordered_set<std::string> declared;
  std::vector<Pending> edges;

  std::string current;
  std::size_t line = 1;
  std::size_t start_line = 0;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      in_comment = false;
      if (!current.empty()) current += ' ';
      continue;
    }
    if (in_comment) continue;
    if (c == '%') {
      in_comment = true;
      continue;
    }
    if (c == '.') {
      std::string body(trim(current));
      std::size_t at = start_line ? start_line : line;
      std::smatch m;
      if (!std::regex_match(body, m, stmt)) throw ParseError(at, "malformed statement '" + body + ".'");
      if (m[1] == "arg") {
        if (m[3].matched) throw ParseError(at, "arg takes one argument");
        if (!declared.insert(m[2]).second) throw ParseError(at, "duplicate argument '" + m[2].str() + "'");
        names.push_back(m[2]);
      } else {
        if (!m[3].matched) throw ParseError(at, "att takes two arguments");
        edges.push_back({m[2], m[3], at});
      }
      current.clear();
      start_line = 0;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c)) && start_line == 0) start_line = line;
    current += c;
  }
  if (!trim(current).empty()) throw ParseError(start_line, "statement without trailing '.'");
  return assemble(std::move(names), edges);
}

std::string emit_apx(const Aaf& f) {
  std::ostringstream out;
  for (const auto& n : f.names()) out << "arg(" << n << ").\n";
  for (auto [a, b] : f.attacks()) out << "att(" << f.name(a) << "," << f.name(b) << ").\n";
  return out.str();
}

Aaf parse_tgf(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_set<std::string> declared;
  std::vector<Pending> edges;
  bool separated = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    if (!separated) {
      if (line == "#") {
        separated = true;
        continue;
      }
      std::istringstream ls{std::string(line)};
      std::string name, extra;
      ls >> name;
      if (ls >> extra) throw ParseError(line_no, "node line with more than one token (missing '#' separator?)");
      if (!is_valid_arg_name(name)) throw ParseError(line_no, "invalid argument name '" + name + "'");
      if (!declared.insert(name).second) throw ParseError(line_no, "duplicate argument '" + name + "'");
      names.push_back(name);
    } else {
      std::istringstream ls{std::string(line)};
      std::string x, y, extra;
      if (!(ls >> x >> y) || (ls >> extra)) throw ParseError(line_no, "edge line must be 'X Y'");
      edges.push_back({x, y, line_no});
    }
  }
  if (!separated) throw ParseError(0, "missing '#' separator line");
  return assemble(std::move(names), edges);
}

std::string emit_tgf(const Aaf& f) {
  std::ostringstream out;
  for (const auto& n : f.names()) out << n << "\n";
  out << "#\n";
  for (auto [a, b] : f.attacks()) out << f.name(a) << " " << f.name(b) << "\n";
  return out.str();
}

std::string emit_dot(const Aaf& f, const std::optional<ArgSet>& highlight) {
  if (highlight && highlight->universe() != f.size()) {
    throw PreconditionError("highlight set belongs to another framework");
  }
  std::ostringstream out;
  out << "digraph F {\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << "  " << f.name(i);
    if (highlight && highlight->contains(i)) out << " [style=filled, fillcolor=lightgray]";
    out << ";\n";
  }
  for (auto [a, b] : f.attacks()) out << "  " << f.name(a) << " -> " << f.name(b) << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json family_to_json(const Aaf& f, const ExtensionFamily& family) {
  auto arr = nlohmann::json::array();
  for (const auto& s : canonicalize(family)) arr.push_back(f.member_names(s));
  return arr;
}

nlohmann::json to_json(const Aaf& f, const std::map<std::string, ExtensionFamily>& families) {
  nlohmann::json j;
  j["arguments"] = f.names();
  auto attacks = nlohmann::json::array();
  for (auto [a, b] : f.attacks()) attacks.push_back({f.name(a), f.name(b)});
  j["attacks"] = attacks;
  auto fams = nlohmann::json::object();
  for (const auto& [name, fam] : families) fams[name] = family_to_json(f, fam);
  j["families"] = fams;
  return j;
}

Aaf aaf_from_json(const nlohmann::json& j) {
  try {
    auto names = j.at("arguments").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> attacks;
    if (j.contains("attacks")) {
      for (const auto& e : j.at("attacks")) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "attack must be a pair");
        attacks.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
    return Aaf::from_names(std::move(names), attacks);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad framework JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

ExtensionFamily family_from_json(const Aaf& f, const nlohmann::json& j) {
  try {
    std::vector<ArgSet> sets;
    for (const auto& s : j) sets.push_back(f.set_of(s.get<std::vector<std::string>>()));
    return ExtensionFamily(f.size(), std::move(sets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad family JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

InputFormat parse_format(std::string_view name) {
  if (name == "apx") return InputFormat::Apx;
  if (name == "tgf") return InputFormat::Tgf;
  if (name == "json") return InputFormat::Json;
  throw PreconditionError("unknown input format '" + std::string(name) + "'");
}

Aaf parse_framework(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::Apx:
      return parse_apx(text);
    case InputFormat::Tgf:
      return parse_tgf(text);
    case InputFormat::Json:
      try {
        return aaf_from_json(nlohmann::json::parse(text));
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
      }
  }
  throw PreconditionError("unknown input format");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gaf
