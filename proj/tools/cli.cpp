#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fbal/corpus.hpp"
#include "fbal/field.hpp"
#include "fbal/gencogen.hpp"
#include "fbal/homalg.hpp"
#include "fbal/io.hpp"
#include "fbal/theorems.hpp"

namespace fbal::cli {

using nlohmann::json;

namespace {

// Usage errors that are not tied to a JSON field.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CorpusInstance load(const RunConfig& c) {
  if (c.corpus.empty() == c.spec.empty()) throw InputError("exactly one of --corpus and --spec is required");
  if (!c.spec.empty()) return load_instance_file(c.spec);
  try {
    return corpus_instance(c.corpus);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::vector<NamedModule> resolve(const CorpusInstance& inst, const std::string& list, const char* flag) {
  std::vector<NamedModule> out;
  for (const auto& name : split_names(list)) {
    if (name == "full") {
      if (!inst.has_closed_form()) throw InputError(std::string(flag) + ": 'full' needs a list of indecomposables");
      out.insert(out.end(), inst.indecomposables.begin(), inst.indecomposables.end());
      continue;
    }
    try {
      out.push_back({name, inst.module(name)});
    } catch (const std::invalid_argument&) {
      throw InputError(std::string(flag) + ": unknown module '" + name + "'");
    }
  }
  if (out.empty()) throw InputError(std::string(flag) + ": no modules given");
  return out;
}

std::vector<NamedModule> targets(const CorpusInstance& inst, const RunConfig& c) {
  if (!c.target.empty()) return resolve(inst, c.target, "--target");
  if (inst.has_closed_form()) return inst.indecomposables;
  std::vector<NamedModule> out;
  for (const auto& n : inst.module_names())
    if (n != "regular" && n != "dual") out.push_back({n, inst.module(n)});
  return out;
}

ModuleCategory add_of(const std::vector<NamedModule>& ms) {
  std::vector<Rep> reps;
  std::vector<std::string> names;
  for (const auto& m : ms) {
    reps.push_back(m.rep);
    names.push_back(m.name);
  }
  return add_category(reps, names);
}

json header(const RunConfig& c, const CorpusInstance& inst) {
  return {{"schema", kReportSchema},
          {"command", c.command},
          {"check", c.what},
          {"instance", inst.name},
          {"prime", c.prime},
          {"seed", c.seed}};
}

int code_of(const TheoremReport& r) { return r.ok() ? kVerified : kFalsified; }

Outcome check_dims(const RunConfig& c, const CorpusInstance& inst) {
  Outcome o{kVerified, header(c, inst)};
  auto xs = targets(inst, c);
  json rows = json::array();
  if (c.what == "hom") {
    for (const auto& x : xs)
      for (const auto& y : xs) rows.push_back({{"X", x.name}, {"Y", y.name}, {"hom", hom_dim(x.rep, y.rep)}});
  } else if (c.what == "ext") {
    for (const auto& x : xs) {
      FreeResolution r = free_resolution(x.rep, c.k + 1);
      for (const auto& y : xs) rows.push_back({{"X", x.name}, {"Y", y.name}, {"ext", ext_dims(r, y.rep, c.k + 1)}});
    }
    o.report["degrees"] = {0, c.k};
  } else {
    ModuleCategory m = add_of(resolve(inst, c.module, "--module"));
    o.report["M"] = describe(m);
    for (const auto& x : xs) {
      FreeResolution r = free_resolution(phi(x.rep, m), c.k + 1);
      for (const auto& y : xs)
        rows.push_back({{"X", x.name}, {"Y", y.name}, {"tor_phi_x_psi_y", tor_dims(r, psi(y.rep, m), c.k + 1)}});
    }
    o.report["degrees"] = {0, c.k};
  }
  o.report["table"] = rows;
  return o;
}

Outcome check_membership(const RunConfig& c, const CorpusInstance& inst) {
  Outcome o{kVerified, header(c, inst)};
  ModuleCategory m = add_of(resolve(inst, c.module, "--module"));
  const bool cogen = c.what == "cogen";
  json rows = json::array();
  bool all_members = true, all_agree = true;
  for (const auto& x : targets(inst, c)) {
    MembershipVerdict d = cogen ? cogen_definitional(x.rep, m, c.k) : gen_definitional(x.rep, m, c.k);
    MembershipVerdict ch = cogen ? cogen_characterized(x.rep, m, c.k) : gen_characterized(x.rep, m, c.k);
    const bool agree = d.member == ch.member;
    all_members = all_members && d.member;
    all_agree = all_agree && agree;
    rows.push_back({{"X", x.name},
                    {"member", d.member},
                    {"agreement", agree},
                    {"definitional", to_json(d)},
                    {"characterized", to_json(ch)}});
  }
  o.report["M"] = describe(m);
  o.report["k"] = c.k;
  o.report["rows"] = rows;
  o.report["agreement"] = all_agree;
  o.code = all_members && all_agree ? kVerified : kFalsified;
  return o;
}

Outcome check_theorem(const RunConfig& c, const CorpusInstance& inst) {
  Outcome o{kVerified, header(c, inst)};
  ModuleCategory m = add_of(resolve(inst, c.module, "--module"));
  std::vector<NamedModule> samples =
      c.target.empty() ? default_samples(inst, c.seed) : resolve(inst, c.target, "--target");
  TheoremReport r;
  if (c.what == "fb") {
    r = faithfully_balanced(m);
    o.code = r.ok() && r.verdict.value_or(false) ? kVerified : kFalsified;
  } else {
    if (c.what == "duality")
      r = verify_cogen1_duality(m, samples, c.k, 10, c.seed);
    else if (c.what == "symmetry")
      r = verify_symmetry(m, c.k);
    else if (c.what == "extyon")
      r = verify_extyon(m, samples);
    else
      r = verify_iso_on_ext(m, c.k, samples);
    o.code = code_of(r);
  }
  o.report["result"] = to_json(r);
  return o;
}

json sweep_row(const BasicSubcategory& sub, std::size_t k_max) {
  TheoremReport fb = faithfully_balanced(sub.category);
  SymmetryProfile p = symmetry_profile(sub.category, k_max);
  bool agree = fb.ok();
  json sym = json::array();
  for (std::size_t k = 1; k <= k_max; ++k) {
    TheoremReport s = symmetry_report(p, k), n = nice_special_case_report(p, k);
    const bool ok = s.ok() && n.ok() && s.verdict == n.verdict;
    agree = agree && ok;
    sym.push_back({{"k", k},
                   {"side1", s.details["side1"]},
                   {"side2", s.details["side2"]},
                   {"verdict", s.verdict.value_or(false)},
                   {"nice_special_case", n.verdict.value_or(false)},
                   {"agreement", ok}});
  }
  return {{"key", sub.key},
          {"faithfully_balanced", fb.verdict.value_or(false)},
          {"faithfully_balanced_agreement", fb.ok()},
          {"symmetry", sym},
          {"agreement", agree}};
}

}  // namespace

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '(' || ch == '{') ++depth;
    if (ch == ']' || ch == ')' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Outcome cmd_check(const RunConfig& c) {
  if (c.k == 0) throw InputError("--k must be at least 1");
  CorpusInstance inst = load(c);
  if (c.what == "hom" || c.what == "ext" || c.what == "tor") return check_dims(c, inst);
  if (c.what == "gen" || c.what == "cogen") return check_membership(c, inst);
  return check_theorem(c, inst);
}

Outcome cmd_sweep(const RunConfig& c) {
  if (c.k_max == 0) throw InputError("--k-max must be at least 1");
  CorpusInstance inst = load(c);
  if (!inst.has_closed_form()) throw InputError("sweep needs an instance with a list of indecomposables");
  std::vector<BasicSubcategory> subs = enumerate_basic_subcategories(inst);
  std::vector<json> rows(subs.size());
  std::size_t next = 0;
  std::mutex lock;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> g(lock);
        if (next == subs.size()) return;
        i = next++;
      }
      rows[i] = sweep_row(subs[i], c.k_max);
    }
  };
  const std::size_t n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
    return a["key"].get<std::string>() < b["key"].get<std::string>();
  });
  Outcome o{kVerified, header(c, inst)};
  o.report["k_max"] = c.k_max;
  bool all = true;
  for (const auto& r : rows) all = all && r["agreement"].get<bool>();
  o.report["rows"] = rows;
  o.report["agreement"] = all;
  o.code = all ? kVerified : kFalsified;
  return o;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Faithfully balanced subcategories: membership checks and verifiers"};
  app.require_subcommand(1);
  auto common = [&c](CLI::App* s) {
    s->add_option("--prime", c.prime, "field characteristic")->capture_default_str();
    s->add_option("--k", c.k, "k for gen_k / cogen^k")->capture_default_str();
    s->add_option("--k-max", c.k_max, "largest k in sweeps")->capture_default_str();
    s->add_option("--seed", c.seed, "seed for random samples")->capture_default_str();
    s->add_option("--corpus", c.corpus, "truncpoly:n, a_n:n or points:n");
    s->add_option("--spec", c.spec, "JSON instance file (fbal.quiver/1 with modules)");
    s->add_option("--module", c.module, "comma list of modules generating M; 'full' = all indecomposables")
        ->capture_default_str();
    s->add_option("--target", c.target, "comma list of objects to test");
    s->add_option("--out", c.out, "write the report here instead of stdout");
  };
  CLI::App* check = app.add_subcommand("check", "run one check on an instance");
  check->add_option("what", c.what, "what to check")
      ->required()
      ->check(CLI::IsMember({"hom", "ext", "tor", "gen", "cogen", "fb", "duality", "symmetry", "extyon", "isoext"}));
  common(check);
  CLI::App* sweep = app.add_subcommand("sweep", "classify every basic subcategory of an instance");
  common(sweep);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << json{{"schema", kReportSchema}, {"error", e.what()}}.dump(2) << "\n";
    return kInputError;
  }
  c.command = check->parsed() ? "check" : "sweep";

  Outcome o;
  try {
    if (!field::is_prime(c.prime) || c.prime >= (1u << 31)) throw InputError("--prime must be a prime below 2^31");
    field::PrimeGuard guard(c.prime);
    o = c.command == "check" ? cmd_check(c) : cmd_sweep(c);
  } catch (const SpecError& e) {
    o = {kInputError, {{"schema", kReportSchema}, {"error", e.what()}, {"field", e.field()}}};
  } catch (const InputError& e) {
    o = {kInputError, {{"schema", kReportSchema}, {"error", e.what()}}};
  } catch (const std::invalid_argument& e) {
    o = {kInputError, {{"schema", kReportSchema}, {"error", e.what()}}};
  } catch (const std::exception& e) {
    o = {kInputError, {{"schema", kReportSchema}, {"error", std::string("internal: ") + e.what()}}};
  }
  o.report["exit_code"] = o.code;
  const std::string text = o.report.dump(2) + "\n";
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << json{{"schema", kReportSchema}, {"error", "cannot write " + c.out}}.dump(2) << "\n";
      return kInputError;
    }
    f << text;
  }
  return o.code;
}

}  // namespace fbal::cli
