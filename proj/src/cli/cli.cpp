#include "lfgt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "lfgt/error.hpp"
#include "lfgt/formats.hpp"
#include "lfgt/lsubgroup.hpp"
#include "lfgt/verify.hpp"

namespace lfgt {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Options {
  std::string eta, mu, nu, theta, point, hom;
  std::vector<std::string> lattices, groups;
  bool json = false;
  bool timings = false;
  bool strict_bottom = false;
  std::optional<std::size_t> budget;

  std::uint64_t seed = 7;
  std::size_t cases = 100;
  int max_group = 6;
  int max_lattice = 3;
  bool chain_only = false, with_hom = false, nilpotent = false;
  std::string report_path, property, instance_path;

  bool list = false;
  std::vector<std::string> targets;
};

/// What a command hands back for printing.
struct Outcome {
  int exit_code = kExitTrue;
  Json doc;
  std::string text;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::UnknownReference, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Re-raises parser errors with the offending file named.
template <class F>
auto in_file(const std::string &path, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error &e) {
    throw Error(e.kind(), path + ": " + e.message(), e.line());
  }
}

bool env_flag(const char *name) {
  const char *v = std::getenv(name);
  return v && *v && std::string_view(v) != "0";
}

/// Inputs are files; group and lattice names referenced by them resolve to
/// --group/--lattice files, then sibling .grp/.lat files, then the catalog.
class Loader {
public:
  explicit Loader(const Options &opt) {
    for (const auto &path : opt.lattices)
      workspace_.add_lattice(std::make_shared<const Lattice>(
          in_file(path, [&] { return parse_lattice_file(read_file(path)); })));
    for (const auto &path : opt.groups)
      workspace_.add_group(std::make_shared<const FiniteGroup>(
          in_file(path, [&] { return parse_group_file(read_file(path)); })));
  }

  LSubset lsubset(const std::string &path) {
    std::string text = read_file(path);
    resolve_siblings(path, peek_field(text, "group"), peek_field(text, "lattice"));
    LSubset out = in_file(path, [&] { return parse_lsubset_file(text, workspace_); });
    std::string name = peek_name(text);
    names_[path] = name.empty() ? fs::path(path).stem().string() : name;
    return out;
  }

  GroupHom hom(const std::string &path) {
    std::string text = read_file(path);
    resolve_siblings(path, peek_field(text, "source"), {});
    resolve_siblings(path, peek_field(text, "target"), {});
    GroupHom out = in_file(path, [&] { return parse_hom_file(text, workspace_); });
    names_[path] = out.name().empty() ? fs::path(path).stem().string() : out.name();
    return out;
  }

  const std::string &name_of(const std::string &path) const { return names_.at(path); }

private:
  void resolve_siblings(const std::string &path, const std::string &group, const std::string &lattice) {
    fs::path dir = fs::path(path).parent_path();
    if (dir.empty())
      dir = ".";
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
      return;
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir, ec))
      if (entry.is_regular_file())
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto &file : files) {
      const std::string ext = file.extension().string();
      if (ext == ".grp" && !group.empty() && !workspace_.has_group(group)) {
        std::string text = read_file(file.string());
        if (peek_name(text) == group)
          workspace_.add_group(std::make_shared<const FiniteGroup>(
              in_file(file.string(), [&] { return parse_group_file(text); })));
      } else if (ext == ".lat" && !lattice.empty() && !workspace_.has_lattice(lattice)) {
        std::string text = read_file(file.string());
        if (peek_name(text) == lattice)
          workspace_.add_lattice(std::make_shared<const Lattice>(
              in_file(file.string(), [&] { return parse_lattice_file(text); })));
      }
    }
  }

  Workspace workspace_;
  std::map<std::string, std::string> names_;
};

Json map_json(const LSubset &s) {
  Json out = Json::object();
  for (Element x : s.group().elements())
    out[s.group().name(x)] = s.lattice().name(s(x));
  return out;
}

std::string table(const LSubset &s, const std::string &indent = "  ") {
  std::size_t width = 0;
  for (Element x : s.group().elements())
    width = std::max(width, s.group().name(x).size());
  std::ostringstream out;
  for (Element x : s.group().elements())
    out << indent << std::left << std::setw(static_cast<int>(width)) << s.group().name(x) << "  "
        << s.lattice().name(s(x)) << "\n";
  return out.str();
}

std::string point_text(const LSubset &s, LPoint p) { return format_lpoint(s.group(), s.lattice(), p); }

Json counterexample_json(const LSubset &ctx, const Counterexample &c) {
  Json out{{"note", c.note}};
  Json elements = Json::array();
  for (Element x : c.elements)
    elements.push_back(ctx.group().name(x));
  out["elements"] = elements;
  if (c.point)
    out["point"] = point_text(ctx, *c.point);
  if (c.level)
    out["level"] = ctx.lattice().name(*c.level);
  if (c.subset)
    out["subset"] = map_json(*c.subset);
  return out;
}

std::string counterexample_text(const LSubset &ctx, const Counterexample &c) {
  std::ostringstream out;
  out << "counterexample: " << c.note << "\n";
  if (!c.elements.empty()) {
    out << "  elements:";
    for (Element x : c.elements)
      out << " " << ctx.group().name(x);
    out << "\n";
  }
  if (c.point)
    out << "  point: " << point_text(ctx, *c.point) << "\n";
  if (c.level)
    out << "  level: " << ctx.lattice().name(*c.level) << "\n";
  if (c.subset)
    out << "  subset:\n" << table(*c.subset, "    ");
  return out.str();
}

Json series_json(const SeriesReport &s) {
  Json out = Json::array();
  for (const auto &stage : s.stages)
    out.push_back(map_json(stage));
  return out;
}

std::string series_text(const SeriesReport &s, const char *count_label) {
  std::ostringstream out;
  out << "series: " << s.stages.size() << " stages, stabilized at " << s.stabilized_at << ", target "
      << (s.reached_target ? "reached" : "not reached");
  if (s.defect_or_class)
    out << ", " << count_label << " " << *s.defect_or_class;
  out << "\n";
  for (std::size_t i = 0; i < s.stages.size(); ++i)
    out << "stage " << i << ":\n" << table(s.stages[i], "    ");
  return out.str();
}

Json series_meta(const SeriesReport &s, const char *count_label) {
  Json out{{"stages", s.stages.size()}, {"stabilized_at", s.stabilized_at}, {"reached_target", s.reached_target}};
  out[count_label] = s.defect_or_class ? Json(*s.defect_or_class) : Json(nullptr);
  return out;
}

/// The fixed document skeleton; timings are filled in by the caller.
Json skeleton(const std::string &command, Json inputs) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"verdict", nullptr},
              {"witness", Json::array()},
              {"series", Json::array()},
              {"timings", nullptr}};
}

void set_counterexample(Json &doc, Json c) {
  // Keeps the documented key order: counterexample sits before series.
  Json out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "series")
      out["counterexample"] = c;
    out[it.key()] = it.value();
  }
  doc = std::move(out);
}

std::string require(const std::string &value, const char *flag) {
  if (value.empty())
    throw Error(ErrorKind::BadParam, std::string("missing required option ") + flag);
  return value;
}

std::size_t maximal_budget(const Options &opt) {
  if (opt.budget)
    return *opt.budget;
  if (const char *v = std::getenv("LFGT_BUDGET"); v && *v) {
    char *end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0)
      throw Error(ErrorKind::BadParam, std::string("LFGT_BUDGET must be a positive integer, got '") + v + "'");
    return static_cast<std::size_t>(n);
  }
  return kDefaultMaximalBudget;
}

// ---- check ----

struct Inputs {
  Json json = Json::object();
  std::optional<LSubset> eta, mu, nu, theta;
};

/// Loads the named L-subset flags; `needed` lists flags that must be present.
Inputs load(const Options &opt, Loader &loader, std::initializer_list<const char *> needed,
            std::initializer_list<const char *> optional_flags = {}) {
  Inputs in;
  auto slot = [&](std::string_view flag) -> std::pair<const std::string *, std::optional<LSubset> *> {
    if (flag == "--eta") return {&opt.eta, &in.eta};
    if (flag == "--mu") return {&opt.mu, &in.mu};
    if (flag == "--nu") return {&opt.nu, &in.nu};
    return {&opt.theta, &in.theta};
  };
  auto take = [&](const char *flag, bool required) {
    auto [path, target] = slot(flag);
    if (path->empty()) {
      if (required)
        require(*path, flag);
      return;
    }
    *target = loader.lsubset(*path);
    in.json[std::string(flag + 2)] = loader.name_of(*path);
  };
  for (const char *f : needed)
    take(f, true);
  for (const char *f : optional_flags)
    take(f, false);
  const LSubset &any = in.eta ? *in.eta : *in.mu;
  in.json["group"] = any.group().name();
  in.json["lattice"] = any.lattice().name();
  return in;
}

Outcome verdict_outcome(const std::string &command, const std::string &label, Json inputs, const Verdict &v,
                        const LSubset &ctx, const char *series_label = "defect") {
  Outcome o;
  o.exit_code = v.holds ? kExitTrue : kExitFalse;
  o.doc = skeleton(command, std::move(inputs));
  o.doc["verdict"] = v.holds;
  std::ostringstream text;
  text << label << ": " << (v.holds ? "true" : "false") << "\n";
  if (!v.witness.empty()) {
    text << "witness (" << v.witness.size() << "):\n";
    for (const auto &w : v.witness) {
      o.doc["witness"].push_back({{"challenge", point_text(ctx, w.challenge)},
                                  {"certificate", point_text(ctx, w.certificate)}});
      text << "  " << point_text(ctx, w.challenge) << " -> " << point_text(ctx, w.certificate) << "\n";
    }
  }
  if (v.counterexample) {
    set_counterexample(o.doc, counterexample_json(ctx, *v.counterexample));
    text << counterexample_text(ctx, *v.counterexample);
  }
  if (v.series) {
    o.doc["series"] = series_json(*v.series);
    text << series_text(*v.series, series_label);
  }
  o.text = text.str();
  return o;
}

Outcome run_check(const std::string &what, const Options &opt) {
  Loader loader(opt);
  const std::string command = "check " + what;
  if (what == "lsubgroup") {
    Inputs in = load(opt, loader, {"--eta"}, {"--mu"});
    Verdict v = in.mu ? is_lsubgroup_of(*in.eta, *in.mu) : is_lsubgroup(*in.eta);
    return verdict_outcome(command, in.mu ? "L-subgroup of mu" : "L-subgroup", in.json, v, *in.eta);
  }
  if (what == "normal") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    return verdict_outcome(command, "normal", in.json, is_normal(*in.eta, *in.mu), *in.eta);
  }
  if (what == "pronormal") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    PronormalOptions po;
    po.strict_bottom = opt.strict_bottom || env_flag("LFGT_STRICT_BOTTOM");
    in.json["strict_bottom"] = po.strict_bottom;
    return verdict_outcome(command, "pronormal", in.json, is_pronormal(*in.eta, *in.mu, po), *in.eta);
  }
  if (what == "subnormal") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    return verdict_outcome(command, "subnormal", in.json, is_subnormal(*in.eta, *in.mu), *in.eta);
  }
  if (what == "nilpotent") {
    Inputs in = load(opt, loader, {"--mu"}, {"--eta"});
    const LSubset &eta = in.eta ? *in.eta : *in.mu;
    Verdict v;
    v.series = central_chain(eta, *in.mu);
    v.holds = v.series->reached_target;
    return verdict_outcome(command, "nilpotent", in.json, v, eta, "class");
  }
  if (what == "maximal") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    std::size_t budget = maximal_budget(opt);
    in.json["budget"] = budget;
    return verdict_outcome(command, "maximal", in.json, is_maximal(*in.eta, *in.mu, budget), *in.eta);
  }
  if (what == "sup-property") {
    Inputs in = load(opt, loader, {"--eta"});
    Verdict v;
    v.holds = has_sup_property(*in.eta);
    return verdict_outcome(command, "sup property", in.json, v, *in.eta);
  }
  throw Error(ErrorKind::BadParam, "unknown check '" + what + "'");
}

// ---- compute ----

Outcome result_outcome(const std::string &command, Json inputs, const LSubset &result) {
  Outcome o;
  o.doc = skeleton(command, std::move(inputs));
  o.doc["verdict"] = Json{{"result", map_json(result)}};
  o.text = table(result);
  return o;
}

Outcome series_outcome(const std::string &command, Json inputs, const SeriesReport &s, const char *label) {
  Outcome o;
  o.doc = skeleton(command, std::move(inputs));
  Json verdict = series_meta(s, label);
  verdict["result"] = map_json(s.stages.back());
  o.doc["verdict"] = verdict;
  o.doc["series"] = series_json(s);
  o.text = series_text(s, label);
  return o;
}

Outcome run_compute(const std::string &what, const Options &opt) {
  Loader loader(opt);
  const std::string command = "compute " + what;
  if (what == "generate") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    return result_outcome(command, in.json, generate(*in.eta, *in.mu));
  }
  if (what == "conjugate") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    LPoint p = parse_lpoint(in.eta->group(), in.eta->lattice(), require(opt.point, "--point"));
    in.json["point"] = point_text(*in.eta, p);
    return result_outcome(command, in.json, conjugate(*in.eta, p, *in.mu));
  }
  if (what == "normalizer") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    return result_outcome(command, in.json, normalizer(*in.eta, *in.mu));
  }
  if (what == "closure-series") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    return series_outcome(command, in.json, closure_series(*in.eta, *in.mu), "defect");
  }
  if (what == "central-chain") {
    Inputs in = load(opt, loader, {"--mu"}, {"--eta"});
    return series_outcome(command, in.json, central_chain(in.eta ? *in.eta : *in.mu, *in.mu), "class");
  }
  if (what == "normalizer-chain") {
    Inputs in = load(opt, loader, {"--eta", "--mu"});
    return series_outcome(command, in.json, normalizer_chain(*in.eta, *in.mu), "length");
  }
  if (what == "set-product") {
    Inputs in = load(opt, loader, {"--eta", "--nu"});
    return result_outcome(command, in.json, set_product(*in.eta, *in.nu));
  }
  if (what == "image") {
    Inputs in = load(opt, loader, {"--eta"});
    GroupHom f = loader.hom(require(opt.hom, "--hom"));
    in.json["hom"] = loader.name_of(opt.hom);
    return result_outcome(command, in.json, image(f, *in.eta));
  }
  if (what == "commutator") {
    Inputs in = load(opt, loader, {"--eta", "--theta", "--mu"});
    Commutator c = commutator(*in.eta, *in.theta, *in.mu);
    Outcome o = result_outcome(command, in.json, c.generated);
    o.doc["verdict"]["seed"] = map_json(c.seed);
    o.text = "seed:\n" + table(c.seed) + "generated:\n" + table(c.generated);
    return o;
  }
  throw Error(ErrorKind::BadParam, "unknown computation '" + what + "'");
}

// ---- verify ----

Outcome run_verify(const Options &opt) {
  if (!opt.property.empty()) {
    // Replays one suite entry on a serialized instance.
    Json doc = in_file(opt.instance_path, [&] {
      try {
        return Json::parse(read_file(require(opt.instance_path, "--instance")));
      } catch (const Json::exception &e) {
        throw Error(ErrorKind::BadSpec, e.what());
      }
    });
    if (doc.contains("instance"))
      doc = doc["instance"];
    Instance instance = instance_from_json(doc);
    PropertyResult r = run_property(opt.property, instance);
    Outcome o;
    o.doc = skeleton("verify", Json{{"property", opt.property}, {"instance", opt.instance_path}});
    o.doc["verdict"] = !r.failure.has_value();
    if (r.failure)
      set_counterexample(o.doc, Json{{"note", *r.failure}});
    o.exit_code = r.failure ? kExitFalse : kExitTrue;
    o.text = opt.property + ": " + (!r.applicable ? "not applicable" : r.failure ? "FAIL: " + *r.failure : "ok") + "\n";
    return o;
  }

  InstanceSpec spec;
  spec.seed = opt.seed;
  spec.max_group_order = opt.max_group;
  spec.max_lattice_size = opt.max_lattice;
  if (opt.chain_only || opt.with_hom || opt.nilpotent)
    spec.hints = ShapeHints{opt.chain_only, opt.with_hom, opt.nilpotent};
  SuiteReport report = run_suite(spec, opt.cases);

  if (!opt.report_path.empty()) {
    std::ofstream f(opt.report_path);
    if (!f)
      throw Error(ErrorKind::BadParam, "cannot write '" + opt.report_path + "'");
    f << to_json(report, true).dump(2) << "\n";
  }

  Json inputs{{"seed", spec.seed}, {"cases", opt.cases}, {"max_group", spec.max_group_order},
              {"max_lattice", spec.max_lattice_size}};
  if (spec.hints)
    inputs["hints"] = {{"chain_only", spec.hints->chain_only},
                       {"with_hom", spec.hints->with_hom},
                       {"nilpotent_ambient", spec.hints->nilpotent_ambient}};
  Outcome o;
  o.doc = skeleton("verify", inputs);
  o.doc["verdict"] = report.failures.empty();
  for (const auto &e : report.entries)
    o.doc["series"].push_back({{"name", e.name}, {"applicable", e.applicable}, {"failures", e.failures}});
  if (!report.failures.empty()) {
    Json failures = Json::array();
    for (const auto &f : report.failures)
      failures.push_back({{"entry", f.entry}, {"case", f.case_index}, {"note", f.note}, {"instance", f.instance}});
    set_counterexample(o.doc, Json{{"note", std::to_string(report.failures.size()) + " failures"},
                                   {"failures", failures}});
  }

  std::ostringstream text;
  std::size_t width = 0;
  for (const auto &e : report.entries)
    width = std::max(width, e.name.size());
  for (const auto &e : report.entries)
    text << std::left << std::setw(static_cast<int>(width)) << e.name << "  applicable " << std::setw(5)
         << e.applicable << " failures " << e.failures << "\n";
  for (const auto &f : report.failures)
    text << "FAIL " << f.entry << " case " << f.case_index << ": " << f.note << "\n";
  text << "cases: " << report.cases << ", failures: " << report.failures.size() << "\n";
  o.text = text.str();
  o.exit_code = report.failures.empty() ? kExitTrue : kExitFalse;
  return o;
}

// ---- builtin, diag ----

Outcome run_builtin(const Options &opt) {
  if (!opt.list)
    throw Error(ErrorKind::BadParam, "builtin needs --list");
  Outcome o;
  o.doc = skeleton("builtin", Json::object());
  Json groups = builtin_group_keys(), lattices = builtin_lattice_keys();
  o.doc["verdict"] = Json{{"groups", groups}, {"lattices", lattices}};
  std::ostringstream text;
  text << "groups:";
  for (const auto &k : builtin_group_keys())
    text << " " << k;
  text << "\nlattices:";
  for (const auto &k : builtin_lattice_keys())
    text << " " << k;
  text << "\n";
  o.text = text.str();
  return o;
}

Outcome run_diag_lattice(const Options &opt) {
  std::vector<std::pair<std::string, Lattice>> items;
  for (const auto &path : opt.lattices)
    items.emplace_back(fs::path(path).filename().string(),
                       in_file(path, [&] { return parse_lattice_file(read_file(path)); }));
  for (const auto &t : opt.targets) {
    std::error_code ec;
    if (fs::is_regular_file(t, ec))
      items.emplace_back(fs::path(t).filename().string(),
                         in_file(t, [&] { return parse_lattice_file(read_file(t)); }));
    else
      items.emplace_back(t, builtin_lattice(t));
  }
  if (items.empty())
    throw Error(ErrorKind::BadParam, "diag lattice needs a lattice name or file");

  Outcome o;
  Json inputs = Json::array();
  Json verdict = Json::array();
  std::ostringstream text;
  for (const auto &[ref, l] : items) {
    inputs.push_back(ref);
    bool dist = is_distributive(l), uwo = is_upper_well_ordered(l);
    verdict.push_back({{"name", l.name().empty() ? ref : l.name()},
                       {"size", l.size()},
                       {"distributive", dist},
                       {"upper_well_ordered", uwo}});
    text << (l.name().empty() ? ref : l.name()) << ": size " << l.size() << ", "
         << (dist ? "distributive" : "not distributive") << ", "
         << (uwo ? "upper-well-ordered" : "not upper-well-ordered") << "\n";
  }
  o.doc = skeleton("diag lattice", Json{{"lattices", inputs}});
  o.doc["verdict"] = verdict;
  o.text = text.str();
  return o;
}

void add_common(CLI::App *app, Options &opt) {
  app->add_flag("--json", opt.json, "Print the structured report");
  app->add_flag("--timings", opt.timings, "Report wall time");
  app->add_option("--lattice", opt.lattices, "Lattice file (repeatable)");
  app->add_option("--group", opt.groups, "Group file (repeatable)");
}

void add_subsets(CLI::App *app, Options &opt) {
  app->add_option("--eta", opt.eta, "L-subset file");
  app->add_option("--mu", opt.mu, "Ambient L-subgroup file");
  app->add_option("--nu", opt.nu, "Second L-subset file");
  app->add_option("--theta", opt.theta, "Second L-subgroup file");
  app->add_option("--point", opt.point, "L-point, e.g. d@(1 2 3)");
  app->add_option("--hom", opt.hom, "Homomorphism file");
  app->add_flag("--strict-bottom", opt.strict_bottom, "Include bottom-valued pronormality challenges");
  app->add_option("--budget", opt.budget, "Maximality search cap on |G|*|L|");
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Pronormality and related checks for lattice-valued subgroups", "lfgt"};
  app.require_subcommand(1);

  std::function<Outcome()> action;

  auto *check = app.add_subcommand("check", "Evaluate a predicate");
  check->require_subcommand(1);
  for (const char *name : {"lsubgroup", "normal", "pronormal", "subnormal", "nilpotent", "maximal", "sup-property"}) {
    auto *sub = check->add_subcommand(name);
    add_common(sub, opt);
    add_subsets(sub, opt);
    sub->callback([&, what = std::string(name)] { action = [&, what] { return run_check(what, opt); }; });
  }

  auto *compute = app.add_subcommand("compute", "Compute an L-subset or series");
  compute->require_subcommand(1);
  for (const char *name : {"generate", "conjugate", "normalizer", "closure-series", "central-chain",
                           "normalizer-chain", "set-product", "image", "commutator"}) {
    auto *sub = compute->add_subcommand(name);
    add_common(sub, opt);
    add_subsets(sub, opt);
    sub->callback([&, what = std::string(name)] { action = [&, what] { return run_compute(what, opt); }; });
  }

  auto *verify = app.add_subcommand("verify", "Run the randomized theorem suite");
  add_common(verify, opt);
  verify->add_option("--seed", opt.seed);
  verify->add_option("--cases", opt.cases);
  verify->add_option("--max-group", opt.max_group);
  verify->add_option("--max-lattice", opt.max_lattice);
  verify->add_flag("--chain-only", opt.chain_only);
  verify->add_flag("--with-hom", opt.with_hom);
  verify->add_flag("--nilpotent", opt.nilpotent);
  verify->add_option("--report", opt.report_path, "Write the full suite report here");
  verify->add_option("--property", opt.property, "Replay one entry on --instance");
  verify->add_option("--instance", opt.instance_path, "Serialized instance (or failure record)");
  verify->callback([&] { action = [&] { return run_verify(opt); }; });

  auto *builtin = app.add_subcommand("builtin", "Builtin catalog");
  add_common(builtin, opt);
  builtin->add_flag("--list", opt.list);
  builtin->callback([&] { action = [&] { return run_builtin(opt); }; });

  auto *diag = app.add_subcommand("diag", "Diagnostics");
  diag->require_subcommand(1);
  auto *diag_lattice = diag->add_subcommand("lattice", "Distributivity and chain report");
  add_common(diag_lattice, opt);
  diag_lattice->add_option("targets", opt.targets, "Lattice files or catalog references");
  diag_lattice->callback([&] { action = [&] { return run_diag_lattice(opt); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = action();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.json) {
      if (opt.timings)
        o.doc["timings"] = Json{{"total_ms", ms}};
      out << o.doc.dump(2) << "\n";
    } else {
      out << o.text;
      if (opt.timings)
        out << "time: " << std::fixed << std::setprecision(3) << ms << " ms\n";
    }
    return o.exit_code;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInputError : kExitInternal;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

} // namespace lfgt
