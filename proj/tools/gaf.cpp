// Command-line front end: solve, verify, analyze, repr, fol.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaf/analysis.hpp"
#include "gaf/errors.hpp"
#include "gaf/fixpoint.hpp"
#include "gaf/fol.hpp"
#include "gaf/io.hpp"
#include "gaf/representation.hpp"
#include "gaf/semantics.hpp"
#include "gaf/verify.hpp"

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kCap = 3, kInvariant = 4 };

struct InputArgs {
  std::string path;
  std::string format;

  void add(CLI::App* cmd) {
    cmd->add_option("--input", path, "Framework file, or - for stdin")->required();
    cmd->add_option("--format", format, "apx, tgf or json (default: by extension, else apx)");
  }

  gaf::Aaf load() const {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      text = gaf::read_file(path);
    }
    std::string fmt = format;
    if (fmt.empty()) {
      auto dot = path.rfind('.');
      std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
      fmt = (ext == "tgf" || ext == "json") ? ext : "apx";
    }
    return gaf::parse_framework(text, gaf::parse_format(fmt));
  }
};

struct GradeArgs {
  gaf::Params p;

  void add(CLI::App* cmd) {
    cmd->add_option("--l", p.l, "Conflict-freeness grade")->check(CLI::PositiveNumber);
    cmd->add_option("--m", p.m, "Defense grade m")->check(CLI::PositiveNumber);
    cmd->add_option("--n", p.n, "Defense grade n")->check(CLI::PositiveNumber);
    cmd->add_option("--eta", p.eta, "Range grade")->check(CLI::PositiveNumber);
  }
};

struct EnumArgs {
  gaf::EnumerationOptions opts;

  void add(CLI::App* cmd) {
    cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--cap", opts.cap, "Largest argument count to enumerate");
  }
};

std::string json_list(const gaf::Aaf& f, const gaf::ExtensionFamily& fam) {
  return gaf::family_to_json(f, fam).dump();
}

std::string json_list(const gaf::Aaf& f, const std::vector<gaf::ArgSet>& sets) {
  return json_list(f, gaf::ExtensionFamily(f.size(), sets));
}

// ---------------------------------------------------------------------------

struct Solve {
  InputArgs in;
  GradeArgs grades;
  EnumArgs en;
  std::string spec;
  std::string task = "EE";
  std::string arg;
  std::string out = "text";

  void add(CLI::App& app, std::function<int()>& run) {
    auto* cmd = app.add_subcommand("solve", "Enumerate or query extensions");
    in.add(cmd);
    grades.add(cmd);
    en.add(cmd);
    cmd->add_option("--spec", spec, "Semantics term, e.g. co or rr(ad)")->required();
    cmd->add_option("--task", task, "EE, SE, DC or DS")->check(CLI::IsMember({"EE", "SE", "DC", "DS"}));
    cmd->add_option("--arg", arg, "Argument queried by DC and DS");
    cmd->add_option("--out", out, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->callback([&run, this] { run = [this] { return exec(); }; });
  }

  int exec() const {
    const auto f = in.load();
    const auto parsed = gaf::parse_spec(spec);
    if ((task == "DC" || task == "DS") && arg.empty()) throw CLI::ValidationError("--arg", "required by " + task);
    const auto fam = gaf::enumerate(f, grades.p, parsed, en.opts);

    if (task == "EE") {
      if (out == "json") {
        std::cout << gaf::to_json(f, {{gaf::to_string(parsed), fam}}).dump(2) << "\n";
      } else if (out == "dot") {
        std::cout << gaf::emit_dot(f, fam.empty() ? std::nullopt : std::optional(fam[0]));
      } else {
        std::cout << json_list(f, fam) << "\n";
      }
      return kYes;
    }
    if (task == "SE") {
      if (fam.empty()) {
        std::cout << "NO\n";
        return kNo;
      }
      if (out == "dot") {
        std::cout << gaf::emit_dot(f, fam[0]);
      } else {
        std::cout << nlohmann::json(f.member_names(fam[0])).dump() << "\n";
      }
      return kYes;
    }
    const std::size_t a = f.index(arg);
    bool yes = false;
    if (task == "DC") {
      yes = gaf::is_extensible(fam, gaf::ArgSet::of(f.size(), {a}));
    } else {
      if (fam.empty()) std::cerr << "warning: no extensions; skeptical acceptance holds vacuously\n";
      yes = gaf::infers(fam, f.none(), a);
    }
    std::cout << (yes ? "YES" : "NO") << "\n";
    return yes ? kYes : kNo;
  }
};

// ---------------------------------------------------------------------------

struct Verify {
  gaf::SuiteConfig config;
  std::string suite;
  std::string out = "text";

  void add(CLI::App& app, std::function<int()>& run) {
    auto* cmd = app.add_subcommand("verify", "Run a property suite over seeded random frames");
    cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(gaf::suite_names()));
    cmd->add_option("--seed", config.seed, "Generator seed");
    cmd->add_option("--frames", config.frames, "Frames sampled (0: suite default)");
    cmd->add_option("--max-size", config.max_size, "Largest frame (0: suite default)");
    cmd->add_option("--max-grade", config.max_grade, "Largest grade (0: suite default)");
    cmd->add_option("--choice-cap", config.choice_cap, "Bound on organizing-choice searches");
    cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->callback([&run, this] { run = [this] { return exec(); }; });
  }

  int exec() const {
    const auto r = gaf::run_suite(suite, config);
    if (out == "json") {
      std::cout << r.to_json().dump(2) << "\n";
    } else {
      std::cout << (r.pass() ? "pass" : "FAIL") << " " << r.suite << " seed=" << r.seed << " checks=" << r.checks()
                << " violations=" << r.violations() << "\n";
      for (const auto& [name, t] : r.properties) {
        std::cout << "  " << name << ": " << t.checks << " checks, " << t.violations << " violations\n";
      }
      for (const auto& s : r.found) std::cout << "  found " << s << "\n";
      for (const auto& s : r.witnesses) std::cout << "  violation " << s << "\n";
    }
    return r.pass() ? kYes : kInvariant;
  }
};

// ---------------------------------------------------------------------------

struct Analyze {
  InputArgs in;
  GradeArgs grades;
  EnumArgs en;
  std::string what;
  std::string spec = "cf";
  std::string set;
  std::string arg;
  std::string other;
  std::string out = "apx";
  std::size_t choice_cap = 16;

  void add(CLI::App& app, std::function<int()>& run) {
    auto* cmd = app.add_subcommand("analyze", "Structural reports on a framework");
    in.add(cmd);
    grades.add(cmd);
    en.add(cmd);
    cmd->add_option("--what", what, "anti, gamma, order, galois, wf, reach, safe-op, canonical or compare")
        ->required()
        ->check(CLI::IsMember({"anti", "gamma", "order", "galois", "wf", "reach", "safe-op", "canonical", "compare"}));
    cmd->add_option("--spec", spec, "Semantics term (default cf)");
    cmd->add_option("--set", set, "Argument set as a,b,c (wf, reach)");
    cmd->add_option("--arg", arg, "Argument for gamma");
    cmd->add_option("--other", other, "Second framework for compare (same format rules as --input)");
    cmd->add_option("--out", out, "Frame output for safe-op/canonical: apx, tgf, json or dot")
        ->check(CLI::IsMember({"apx", "tgf", "json", "dot"}));
    cmd->add_option("--choice-cap", choice_cap, "Bound on the organizing-choice search");
    cmd->callback([&run, this] { run = [this] { return exec(); }; });
  }

  void print_frame(const gaf::Aaf& g) const {
    if (out == "json") {
      std::cout << gaf::to_json(g).dump() << "\n";
    } else if (out == "tgf") {
      std::cout << gaf::emit_tgf(g);
    } else if (out == "dot") {
      std::cout << gaf::emit_dot(g);
    } else {
      std::cout << gaf::emit_apx(g);
    }
  }

  int exec() const {
    const auto f = in.load();
    const auto& p = grades.p;
    p.validate();
    if (what == "wf" || what == "reach") {
      const gaf::ArgSet x = set.empty() ? f.all() : f.parse_set(set);
      if (what == "wf") {
        std::cout << nlohmann::json{{"wf", gaf::wf_on(f, x)}, {"wf_plus", gaf::wf_plus_on(f, x)}}.dump() << "\n";
      } else {
        const auto prof = gaf::reachability_profile(f, x);
        nlohmann::json dist = nlohmann::json::object();
        for (std::size_t a = 0; a < f.size(); ++a) {
          if (prof.dist[a]) dist[f.name(a)] = *prof.dist[a];
        }
        std::cout << nlohmann::json{{"sigma", f.member_names(prof.sigma)},
                                    {"dist", dist},
                                    {"covers_all", prof.covers_all},
                                    {"distances_increase", prof.distances_increase}}
                         .dump()
                  << "\n";
      }
      return kYes;
    }
    if (what == "safe-op") {
      print_frame(gaf::safe_restrict_cf(f, p.l));
      return kYes;
    }
    if (what == "canonical") {
      print_frame(gaf::canonical_cf(f, p.l, choice_cap));
      return kYes;
    }
    if (what == "galois") {
      const bool ok = gaf::galois_check(f, p, en.opts);
      std::cout << nlohmann::json{{"galois", ok}}.dump() << "\n";
      return ok ? kYes : kNo;
    }
    const auto parsed = gaf::parse_spec(spec);
    const auto fam = gaf::enumerate(f, p, parsed, en.opts);
    if (what == "anti") {
      std::cout << json_list(f, gaf::anti_sets(f, fam)) << "\n";
    } else if (what == "gamma") {
      if (arg.empty()) throw CLI::ValidationError("--arg", "required by gamma");
      const auto g = gaf::gamma_at(f, fam, f.index(arg));
      auto classes = nlohmann::json::array();
      for (const auto& cl : g.classes) classes.push_back(gaf::family_to_json(f, gaf::ExtensionFamily(f.size(), cl)));
      std::cout << nlohmann::json{{"gamma", gaf::family_to_json(f, gaf::ExtensionFamily(f.size(), g.gamma))},
                                  {"classes", classes},
                                  {"class_count", g.classes.size()}}
                       .dump()
                << "\n";
    } else if (what == "order") {
      std::cout << gaf::order_report(fam).to_json(f).dump() << "\n";
    } else {
      if (other.empty()) throw CLI::ValidationError("--other", "required by compare");
      InputArgs second{other, in.format};
      const auto cmp = gaf::compare_frameworks(f, second.load(), parsed, p, en.opts);
      auto j = cmp.to_json();
      j["consistent"] = cmp.consistent();
      std::cout << j.dump() << "\n";
      if (!cmp.consistent()) return kInvariant;
    }
    return kYes;
  }
};

// ---------------------------------------------------------------------------

struct Repr {
  std::string omega_path;
  std::string omega_text;
  int l = 1;
  std::string variant = "I";
  std::string out = "text";
  std::size_t choice_cap = 16;
  bool show_rho = false;

  void add(CLI::App& app, std::function<int()>& run) {
    auto* cmd = app.add_subcommand("repr", "Decide whether a family is the l-conflict-free sets of some frame");
    auto* file = cmd->add_option("--omega", omega_path, "JSON file {\"universe\":[...],\"sets\":[[...],...]}");
    auto* inline_json = cmd->add_option("--omega-json", omega_text, "The same JSON given inline");
    file->excludes(inline_json);
    cmd->add_option("--l", l, "Conflict-freeness grade")->check(CLI::PositiveNumber);
    cmd->add_option("--variant", variant, "I, II or III")->check(CLI::IsMember({"I", "II", "III"}));
    cmd->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--choice-cap", choice_cap, "Bound on the organizing-choice search");
    cmd->add_flag("--rho", show_rho, "Also report every grade at which the family is representable");
    cmd->callback([&run, this] { run = [this] { return exec(); }; });
  }

  int exec() const {
    if (omega_path.empty() && omega_text.empty()) throw CLI::ValidationError("--omega", "give --omega or --omega-json");
    const std::string text = omega_path.empty() ? omega_text : gaf::read_file(omega_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw gaf::ParseError(0, std::string("omega JSON: ") + e.what());
    }
    const auto omega = gaf::CandidateOmega::from_json(j);
    const auto verdict = gaf::representable(omega, l, gaf::parse_variant(variant), choice_cap);
    std::optional<gaf::Rho> r;
    if (show_rho) r = gaf::rho(omega, choice_cap);
    if (out == "json") {
      auto report = verdict.report.to_json(omega);
      report["representable"] = verdict.yes;
      if (verdict.witness) report["witness"] = gaf::to_json(*verdict.witness);
      if (r) report["rho"] = r->all_positive ? nlohmann::json("all positive integers") : nlohmann::json(r->values);
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << (verdict.yes ? "YES" : "NO") << "\n";
      if (verdict.witness) {
        std::cout << gaf::emit_apx(*verdict.witness);
      } else {
        for (const auto& c : verdict.report.conditions) {
          if (c.status == "fail") std::cout << "condition " << c.id << " fails: " << c.detail << "\n";
        }
      }
      if (r) {
        std::cout << "rho: ";
        if (r->all_positive) {
          std::cout << "all positive integers";
        } else if (r->values.empty()) {
          std::cout << "none";
        } else {
          for (std::size_t i = 0; i < r->values.size(); ++i) std::cout << (i ? "," : "") << r->values[i];
        }
        std::cout << "\n";
      }
    }
    return verdict.yes ? kYes : kNo;
  }
};

// ---------------------------------------------------------------------------

struct Fol {
  InputArgs in;
  GradeArgs grades;
  EnumArgs en;
  std::string formula;
  std::string sigma;
  std::string set;
  std::vector<std::string> assign;

  void add(CLI::App& app, std::function<int()>& run) {
    auto* cmd = app.add_subcommand("fol", "Evaluate first-order formulas over <A, ->, E>");
    in.add(cmd);
    grades.add(cmd);
    en.add(cmd);
    auto* f = cmd->add_option("--formula", formula, "S-expression, e.g. (all x (imp (P x) (not (att x x))))");
    auto* s = cmd->add_option("--sigma", sigma, "Sentence set: def, cf, ad, co or stb");
    f->excludes(s);
    cmd->add_option("--set", set, "Interpretation of P as a,b,c; omitted with --sigma checks definability");
    cmd->add_option("--assign", assign, "Variable bindings var=arg");
    cmd->callback([&run, this] { run = [this] { return exec(); }; });
  }

  int exec() const {
    const auto f = in.load();
    const auto& p = grades.p;
    p.validate();
    if (formula.empty() && sigma.empty()) throw CLI::ValidationError("--formula", "give --formula or --sigma");
    const auto lib = gaf::sentence_library(p);
    std::vector<gaf::Formula> sentences;
    if (!sigma.empty()) {
      sentences = gaf::sigma_by_name(lib, sigma);
    } else {
      sentences.push_back(gaf::parse_formula(formula));
    }

    if (set.empty() && !sigma.empty()) {
      const auto fam = gaf::enumerate(f, p, sigma, en.opts);
      const auto res = gaf::verify_definability(f, sentences, fam, en.opts);
      if (res.holds) {
        std::cout << "DEFINABLE\n";
        return kYes;
      }
      std::cout << "NOT DEFINABLE at E=" << f.format(*res.counterexample) << "\n";
      return kNo;
    }

    gaf::Assignment rho;
    for (const auto& b : assign) {
      auto eq = b.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--assign", "expected var=arg, got '" + b + "'");
      rho[b.substr(0, eq)] = f.index(b.substr(eq + 1));
    }
    const gaf::FolModel model{f, f.parse_set(set)};
    bool sat = true;
    for (const auto& phi : sentences) sat = sat && gaf::eval(model, phi, rho);
    std::cout << (sat ? "SAT" : "UNSAT") << "\n";
    return sat ? kYes : kNo;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded argumentation frameworks: semantics, analysis and model checking"};
  app.require_subcommand(1);
  std::function<int()> run;
  Solve solve;
  Verify verify;
  Analyze analyze;
  Repr repr;
  Fol fol;
  solve.add(app, run);
  verify.add(app, run);
  analyze.add(app, run);
  repr.add(app, run);
  fol.add(app, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  try {
    return run();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gaf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const gaf::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gaf::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const gaf::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}
