#include "gaf/fol.hpp"

#include <cctype>
#include <unordered_map>

#include "gaf/errors.hpp"

namespace gaf {

Formula Formula::conj(std::vector<Formula> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return std::move(fs.front());
  return {Kind::And, {}, std::move(fs)};
}

Formula Formula::disj(std::vector<Formula> fs) {
  if (fs.empty()) return falsity();
  if (fs.size() == 1) return std::move(fs.front());
  return {Kind::Or, {}, std::move(fs)};
}

Formula Formula::forall(const std::vector<std::string>& xs, Formula f) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) f = forall(*it, std::move(f));
  return f;
}

Formula Formula::exists(const std::vector<std::string>& xs, Formula f) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) f = exists(*it, std::move(f));
  return f;
}

namespace {

using K = Formula::Kind;

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case K::Pred:
    case K::Att:
    case K::Eq:
      for (const auto& v : f.vars) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    case K::Forall:
    case K::Exists: {
      bool fresh = bound.insert(f.vars[0]).second;
      collect_free(f.kids[0], bound, out);
      if (fresh) bound.erase(f.vars[0]);
      return;
    }
    default:
      for (const auto& k : f.kids) collect_free(k, bound, out);
  }
}

// Variables resolved to slots once; environment is a flat vector.
class Compiled {
 public:
  explicit Compiled(const Formula& f) { root_ = build(f); }

  bool run(const FolModel& model, const Assignment& rho) const {
    std::vector<std::size_t> env(slots_.size(), 0);
    std::set<std::string> bound;
    std::set<std::string> free;
    collect_free(source_, bound, free);
    for (const auto& v : free) {
      auto it = rho.find(v);
      if (it == rho.end()) throw PreconditionError("free variable '" + v + "' is unassigned");
      if (it->second >= model.frame.size()) throw PreconditionError("assignment outside the domain");
      env[slots_.at(v)] = it->second;
    }
    return eval(model, root_, env);
  }

  std::size_t slot(const std::string& v) const { return slots_.at(v); }

 private:
  struct Node {
    K kind;
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<std::size_t> kids;
  };

  std::size_t slot_of(const std::string& v) {
    auto [it, fresh] = slots_.emplace(v, slots_.size());
    return it->second;
  }

  std::size_t build(const Formula& f) {
    if (nodes_.empty()) source_ = f;
    Node n{f.kind, 0, 0, {}};
    switch (f.kind) {
      case K::Pred:
        n.a = slot_of(f.vars.at(0));
        break;
      case K::Att:
      case K::Eq:
        n.a = slot_of(f.vars.at(0));
        n.b = slot_of(f.vars.at(1));
        break;
      case K::Forall:
      case K::Exists:
        n.a = slot_of(f.vars.at(0));
        break;
      default:
        break;
    }
    nodes_.push_back(n);
    const std::size_t id = nodes_.size() - 1;
    std::vector<std::size_t> kids;
    for (const auto& k : f.kids) kids.push_back(build(k));
    nodes_[id].kids = std::move(kids);
    return id;
  }

  bool eval(const FolModel& m, std::size_t id, std::vector<std::size_t>& env) const {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case K::True:
        return true;
      case K::False:
        return false;
      case K::Pred:
        return m.predicate.contains(env[n.a]);
      case K::Att:
        return m.frame.attacks(env[n.a], env[n.b]);
      case K::Eq:
        return env[n.a] == env[n.b];
      case K::Not:
        return !eval(m, n.kids[0], env);
      case K::And:
        for (auto k : n.kids) {
          if (!eval(m, k, env)) return false;
        }
        return true;
      case K::Or:
        for (auto k : n.kids) {
          if (eval(m, k, env)) return true;
        }
        return false;
      case K::Imp:
        return !eval(m, n.kids[0], env) || eval(m, n.kids[1], env);
      case K::Forall:
      case K::Exists: {
        const bool want = n.kind == K::Exists;
        const std::size_t saved = env[n.a];
        bool result = !want;
        for (std::size_t d = 0; d < m.frame.size(); ++d) {
          env[n.a] = d;
          if (eval(m, n.kids[0], env) == want) {
            result = want;
            break;
          }
        }
        env[n.a] = saved;
        return result;
      }
    }
    return false;
  }

  Formula source_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::unordered_map<std::string, std::size_t> slots_;
};

std::string var(const std::string& base, int i) { return base + std::to_string(i); }
std::string yvar(int i, int k) { return "y" + std::to_string(i) + "_" + std::to_string(k); }

std::vector<std::string> xs(int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(var("x", i));
  return out;
}

std::vector<std::string> ys(int i, int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back(yvar(i, k));
  return out;
}

std::vector<std::string> all_ys(int m, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) {
    for (auto& y : ys(i, n)) out.push_back(y);
  }
  return out;
}

Formula all_p(const std::vector<std::string>& vs) {
  std::vector<Formula> fs;
  for (const auto& v : vs) fs.push_back(Formula::pred(v));
  return Formula::conj(std::move(fs));
}

Formula some_not_p(const std::vector<std::string>& vs) {
  std::vector<Formula> fs;
  for (const auto& v : vs) fs.push_back(Formula::neg(Formula::pred(v)));
  return Formula::disj(std::move(fs));
}

void check_grade(int g) {
  if (g < 1) throw PreconditionError("grades must be positive integers");
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

bool eval(const FolModel& model, const Formula& phi, const Assignment& rho) {
  return Compiled(phi).run(model, rho);
}

Formula cf_macro(const std::vector<std::string>& attackers, const std::string& target) {
  if (attackers.empty()) throw PreconditionError("Cf needs at least one attacker variable");
  std::set<std::string> seen(attackers.begin(), attackers.end());
  if (seen.size() != attackers.size()) throw PreconditionError("Cf attacker variables must be distinct");
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < attackers.size(); ++i) {
    for (std::size_t j = i + 1; j < attackers.size(); ++j) {
      parts.push_back(Formula::neg(Formula::eq(attackers[i], attackers[j])));
    }
  }
  for (const auto& a : attackers) parts.push_back(Formula::att(a, target));
  return Formula::conj(std::move(parts));
}

Formula beta1(int m, int n) {
  check_grade(m);
  check_grade(n);
  std::vector<Formula> matrix{Formula::neg(Formula::pred("x")), Formula::neg(cf_macro(xs(m), "x"))};
  for (int i = 1; i <= m; ++i) {
    matrix.push_back(Formula::conj({cf_macro(ys(i, n), var("x", i)), all_p(ys(i, n))}));
  }
  std::vector<std::string> outer{"x"};
  for (auto& v : xs(m)) outer.push_back(v);
  return Formula::forall(outer, Formula::exists(all_ys(m, n), Formula::disj(std::move(matrix))));
}

Formula beta2(int m, int n) {
  check_grade(m);
  check_grade(n);
  std::vector<Formula> inner{cf_macro(xs(m), "x")};
  for (int i = 1; i <= m; ++i) {
    inner.push_back(Formula::disj({Formula::neg(cf_macro(ys(i, n), var("x", i))), some_not_p(ys(i, n))}));
  }
  Formula gamma4 = Formula::disj({Formula::pred("x"), Formula::conj(std::move(inner))});
  return Formula::forall("x", Formula::exists(xs(m), Formula::forall(all_ys(m, n), std::move(gamma4))));
}

Formula beta3(int l) {
  check_grade(l);
  std::vector<std::string> outer{"x"};
  for (auto& v : xs(l)) outer.push_back(v);
  Formula attacked = Formula::conj({all_p(xs(l)), cf_macro(xs(l), "x")});
  return Formula::forall(outer, Formula::disj({Formula::neg(Formula::pred("x")), Formula::neg(std::move(attacked))}));
}

Formula beta4(int l) {
  check_grade(l);
  Formula attacked = Formula::conj({all_p(xs(l)), cf_macro(xs(l), "x")});
  return Formula::forall("x", Formula::exists(xs(l), Formula::disj({std::move(attacked), Formula::pred("x")})));
}

namespace {
// ¬∃y_i(Cf(y_i, x_i) ∧ ⋀P(y_i)) for each i, conjoined with Cf(x1..xm, x).
Formula gamma3(int m, int n) {
  std::vector<Formula> parts{cf_macro(xs(m), "x")};
  for (int i = 1; i <= m; ++i) {
    parts.push_back(Formula::neg(
        Formula::exists(ys(i, n), Formula::conj({cf_macro(ys(i, n), var("x", i)), all_p(ys(i, n))}))));
  }
  return Formula::conj(std::move(parts));
}
}  // namespace

Formula alpha1(int m, int n) {
  check_grade(m);
  check_grade(n);
  return Formula::forall(
      "x", Formula::imp(Formula::pred("x"), Formula::neg(Formula::exists(xs(m), gamma3(m, n)))));
}

Formula alpha2(int m, int n) {
  check_grade(m);
  check_grade(n);
  return Formula::forall(
      "x", Formula::imp(Formula::neg(Formula::exists(xs(m), gamma3(m, n))), Formula::pred("x")));
}

Formula alpha3(int l) {
  check_grade(l);
  Formula attacked = Formula::exists(xs(l), Formula::conj({all_p(xs(l)), cf_macro(xs(l), "x")}));
  return Formula::forall("x", Formula::imp(Formula::pred("x"), Formula::neg(std::move(attacked))));
}

Formula alpha4(int l) {
  check_grade(l);
  Formula attacked = Formula::exists(xs(l), Formula::conj({all_p(xs(l)), cf_macro(xs(l), "x")}));
  return Formula::forall("x", Formula::imp(Formula::neg(std::move(attacked)), Formula::pred("x")));
}

SentenceLibrary sentence_library(const Params& p) {
  p.validate();
  SentenceLibrary lib{beta1(p.m, p.n),  beta2(p.m, p.n),  beta3(p.l),  beta4(p.l),
                      alpha1(p.m, p.n), alpha2(p.m, p.n), alpha3(p.l), alpha4(p.l),
                      {},               {},               {},          {},
                      {}};
  lib.sigma_def = {lib.beta1};
  lib.sigma_cf = {lib.beta3};
  lib.sigma_ad = {lib.beta3, lib.beta1};
  lib.sigma_co = {lib.beta3, lib.beta1, lib.beta2};
  lib.sigma_stb = {beta3(p.n), beta3(p.m), beta4(p.n), beta4(p.m), lib.beta3};
  return lib;
}

const std::vector<Formula>& sigma_by_name(const SentenceLibrary& lib, std::string_view name) {
  if (name == "def") return lib.sigma_def;
  if (name == "cf") return lib.sigma_cf;
  if (name == "ad") return lib.sigma_ad;
  if (name == "co") return lib.sigma_co;
  if (name == "stb") return lib.sigma_stb;
  throw PreconditionError("no sentence set named '" + std::string(name) + "' (def, cf, ad, co, stb)");
}

DefinabilityResult verify_definability(const Aaf& f, const std::vector<Formula>& sigma,
                                       const ExtensionFamily& family, const EnumerationOptions& opts) {
  std::vector<Compiled> compiled;
  for (const auto& s : sigma) {
    if (!free_vars(s).empty()) throw PreconditionError("definability needs sentences");
    compiled.emplace_back(s);
  }
  const Assignment none;
  auto models = filter_subsets(
      f,
      [&](const ArgSet& e) {
        const FolModel model{f, e};
        for (const auto& c : compiled) {
          if (!c.run(model, none)) return false;
        }
        return true;
      },
      opts);
  DefinabilityResult r;
  if (models == family) return r;
  r.holds = false;
  // First canonical set on which the two sides disagree.
  std::vector<ArgSet> diff;
  for (const auto& e : models) {
    if (!family.contains(e)) diff.push_back(e);
  }
  for (const auto& e : family) {
    if (!models.contains(e)) diff.push_back(e);
  }
  r.counterexample = canonicalize(std::move(diff)).front();
  return r;
}

bool nua(const FolModel& model, const Formula& phi, const Assignment& rho) {
  if (phi.kind != K::Exists) throw PreconditionError("formula must start with an existential quantifier");
  const Formula universal = Formula::forall(phi.vars[0], phi.kids[0]);
  return eval(model, phi, rho) && !eval(model, universal, rho);
}

std::size_t omega_finitary_at(const Aaf& f, const Formula& phi, const Assignment& rho, std::size_t cap) {
  if (phi.kind != K::Exists) throw PreconditionError("formula must start with an existential quantifier");
  if (f.size() > cap || f.size() > 62) throw CapExceeded("model sweep exceeds the enumeration cap");
  const std::string& x = phi.vars[0];
  const Compiled body(phi.kids[0]);
  ArgSet witnesses(f.size());
  const std::uint64_t total = std::uint64_t{1} << f.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const FolModel model{f, ArgSet::from_mask(f.size(), mask)};
    if (!nua(model, phi, rho)) continue;
    Assignment r = rho;
    for (std::size_t b = 0; b < f.size(); ++b) {
      r[x] = b;
      if (body.run(model, r)) witnesses.insert(b);
    }
  }
  return witnesses.count();
}

namespace {

struct Token {
  enum Type { Open, Close, Atom } type;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Open, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Close, ")"});
      ++i;
    } else {
      auto start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '(' &&
             text[i] != ')') {
        ++i;
      }
      out.push_back({Token::Atom, std::string(text.substr(start, i - start))});
    }
  }
  return out;
}

class SexprParser {
 public:
  explicit SexprParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    auto f = formula();
    if (pos_ != toks_.size()) fail("trailing tokens");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(0, "formula syntax: " + why + " at token " + std::to_string(pos_));
  }

  const Token& peek() const {
    if (pos_ >= toks_.size()) fail("unexpected end of input");
    return toks_[pos_];
  }

  std::string name() {
    const auto& t = peek();
    if (t.type != Token::Atom || !is_valid_arg_name(t.text)) fail("expected a variable");
    ++pos_;
    return t.text;
  }

  void close() {
    if (peek().type != Token::Close) fail("expected ')'");
    ++pos_;
  }

  Formula formula() {
    const auto& t = peek();
    if (t.type == Token::Atom) {
      ++pos_;
      if (t.text == "true") return Formula::truth();
      if (t.text == "false") return Formula::falsity();
      fail("unexpected atom '" + t.text + "'");
    }
    if (t.type == Token::Close) fail("unexpected ')'");
    ++pos_;
    const auto& head = peek();
    if (head.type != Token::Atom) fail("expected an operator");
    const std::string op = head.text;
    ++pos_;
    Formula out;
    if (op == "P") {
      out = Formula::pred(name());
    } else if (op == "att") {
      auto x = name();
      out = Formula::att(x, name());
    } else if (op == "=") {
      auto x = name();
      out = Formula::eq(x, name());
    } else if (op == "not") {
      out = Formula::neg(formula());
    } else if (op == "and" || op == "or") {
      std::vector<Formula> fs;
      while (peek().type != Token::Close) fs.push_back(formula());
      out = Formula{op == "and" ? K::And : K::Or, {}, std::move(fs)};
    } else if (op == "imp") {
      auto a = formula();
      out = Formula::imp(std::move(a), formula());
    } else if (op == "all" || op == "ex") {
      auto x = name();
      auto body = formula();
      out = op == "all" ? Formula::forall(x, std::move(body)) : Formula::exists(x, std::move(body));
    } else {
      fail("unknown operator '" + op + "'");
    }
    close();
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return SexprParser(tokenize(text)).parse(); }

std::string to_sexpr(const Formula& f) {
  auto join = [&](const std::string& op) {
    std::string s = "(" + op;
    for (const auto& k : f.kids) s += " " + to_sexpr(k);
    return s + ")";
  };
  switch (f.kind) {
    case K::True:
      return "true";
    case K::False:
      return "false";
    case K::Pred:
      return "(P " + f.vars[0] + ")";
    case K::Att:
      return "(att " + f.vars[0] + " " + f.vars[1] + ")";
    case K::Eq:
      return "(= " + f.vars[0] + " " + f.vars[1] + ")";
    case K::Not:
      return join("not");
    case K::And:
      return join("and");
    case K::Or:
      return join("or");
    case K::Imp:
      return join("imp");
    case K::Forall:
      return "(all " + f.vars[0] + " " + to_sexpr(f.kids[0]) + ")";
    case K::Exists:
      return "(ex " + f.vars[0] + " " + to_sexpr(f.kids[0]) + ")";
  }
  return "";
}

}  // namespace gaf
