// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfgt/cli.hpp"
#include "lfgt/verify.hpp"

namespace lfgt {
namespace {

const std::string kData = LFGT_TEST_DATA;
const std::string kS4M = kData + "/fixtures/s4_m/";

/// Outcome of one criterion: pass/fail plus a short detail line.
struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

LatticePtr lattice(std::string_view ref) { return std::make_shared<const Lattice>(builtin_lattice(ref)); }
GroupPtr group(std::string_view ref) { return std::make_shared<const FiniteGroup>(builtin_group(ref)); }

ElementSet named(const FiniteGroup &g, std::initializer_list<std::string_view> names) {
  ElementSet out(g.size());
  for (auto n : names)
    out.insert(g.element(n));
  return out;
}

ElementSet generated(const FiniteGroup &g, std::initializer_list<std::string_view> names) {
  return subgroup_closure(g, named(g, names));
}

/// S4 over the lattice M: μ is u on V4, d elsewhere; η is u at e, d on V4\{e},
/// a/b/c on the three dihedral subgroups outside V4, f elsewhere.
struct S4M {
  GroupPtr s4 = std::make_shared<const FiniteGroup>(build_group_perm(4, std::vector<std::string>{"(1 2)", "(1 2 3 4)"}, "S4"));
  LatticePtr m = lattice("example_M");
  ElementSet e = named(*s4, {"e"});
  ElementSet v4 = named(*s4, {"e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  ElementSet d1 = generated(*s4, {"(2 4)", "(1 2 3 4)"});
  ElementSet d2 = generated(*s4, {"(1 2)", "(1 3 2 4)"});
  ElementSet d3 = generated(*s4, {"(2 3)", "(1 3 4 2)"});

  LSubset layered(std::string_view fallback,
                  std::initializer_list<std::pair<const ElementSet *, std::string_view>> layers) const {
    std::vector<Value> values(s4->size(), m->value(fallback));
    for (auto [set, v] : layers)
      for (Element x : set->elements())
        values[x.id] = m->value(v);
    return LSubset(s4, m, std::move(values));
  }
  LSubset mu() const { return layered("d", {{&v4, "u"}}); }
  LSubset eta() const { return layered("f", {{&d1, "a"}, {&d2, "b"}, {&d3, "c"}, {&v4, "d"}, {&e, "u"}}); }
  LPoint point(std::string_view text) const { return parse_lpoint(*s4, *m, text); }
};

struct CliRun {
  int code;
  nlohmann::ordered_json doc;
};

CliRun cli(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str().empty() ? nlohmann::ordered_json() : nlohmann::ordered_json::parse(out.str())};
}

Outcome conjugate_table() {
  S4M ex;
  CliRun r = cli({"compute", "conjugate", "--eta", kS4M + "eta.lsub", "--mu", kS4M + "mu.lsub", "--point", "d@(1 2 3)"});
  if (r.code != kExitTrue)
    return {false, "exit code " + std::to_string(r.code)};
  LSubset expected = check::conjugate(ex.eta(), ex.point("d@(1 2 3)"));
  const auto &table = r.doc["verdict"]["result"];
  if (table.size() != ex.s4->size())
    return {false, "table has " + std::to_string(table.size()) + " rows"};
  for (Element x : ex.s4->elements())
    if (table[ex.s4->name(x)] != ex.m->name(expected(x)))
      return {false, "mismatch at " + ex.s4->name(x)};
  return {true, "24 rows match the direct evaluation"};
}

Outcome union_and_generate() {
  S4M ex;
  LSubset c = conjugate(ex.eta(), ex.point("d@(1 2 3)"), ex.mu());
  LSubset un = combine({ex.eta(), c}, CombineMode::Union);
  if (un != ex.layered("f", {{&ex.d1, "d"}, {&ex.d2, "d"}, {&ex.d3, "d"}, {&ex.e, "u"}}))
    return {false, "union differs"};
  if (generate(un, ex.mu()) != ex.layered("d", {{&ex.e, "u"}}))
    return {false, "generated L-subgroup differs"};
  return {true, "union and its closure match"};
}

Outcome pronormal_example() {
  S4M ex;
  LSubset eta = ex.eta(), mu = ex.mu();
  Verdict v = is_pronormal(eta, mu);
  if (!v.holds)
    return {false, "verdict false"};
  if (auto bad = check::pronormal_verdict(eta, mu, v))
    return {false, "checker: " + *bad};
  // Every non-bottom L-point of μ is challenged exactly once.
  std::size_t points = 0;
  for (Element x : ex.s4->elements())
    for (Value a : ex.m->values())
      points += a != ex.m->bottom() && ex.m->leq(a, mu(x));
  if (v.witness.size() != points)
    return {false, "witness size " + std::to_string(v.witness.size())};
  LPoint challenge = ex.point("u@(1 2)(3 4)");
  if (conjugate(eta, challenge, mu) != eta)
    return {false, "conjugate by u@(1 2)(3 4) differs from eta"};
  for (const auto &w : v.witness)
    if (w.challenge == challenge)
      return {w.certificate == ex.point("u@e"), std::to_string(points) + " challenges, u@(1 2)(3 4) certified by " +
                                                    format_lpoint(*ex.s4, *ex.m, w.certificate)};
  return {false, "challenge u@(1 2)(3 4) missing"};
}

Outcome normal_counterexample() {
  S4M ex;
  Verdict v = is_normal(ex.eta(), ex.mu());
  if (v.holds || !v.counterexample || !v.counterexample->level)
    return {false, "expected a level counterexample"};
  if (*v.counterexample->level != ex.m->value("a"))
    return {false, "level " + ex.m->name(*v.counterexample->level)};
  return {true, "not normal, failing level a"};
}

Outcome crisp_embedding(bool weak, std::size_t &mismatches) {
  S4M ex;
  auto c2 = lattice("chain(2)");
  auto subs = enumerate_subgroups(*ex.s4);
  PronormalOptions options;
  options.weak_certificate_check = weak;
  std::size_t pairs = 0, rejected = 0;
  mismatches = 0;
  for (const auto &k : subs)
    for (const auto &h : subs) {
      if (!h.subset_of(k))
        continue;
      ++pairs;
      LSubset eta = characteristic(ex.s4, c2, h), mu = characteristic(ex.s4, c2, k);
      Verdict v = is_pronormal(eta, mu, options);
      if (v.holds != crisp_pronormal(*ex.s4, k, h).holds) {
        ++mismatches;
        rejected += check::pronormal_verdict(eta, mu, v).has_value();
      }
    }
  std::string detail = std::to_string(subs.size()) + " subgroups, " + std::to_string(pairs) + " pairs, " +
                       std::to_string(mismatches) + " mismatches";
  if (weak)
    return {mismatches > 0 && rejected == mismatches, detail + ", " + std::to_string(rejected) + " rejected by checker"};
  return {subs.size() == 30 && mismatches == 0, detail};
}

Outcome suite_run() {
  SuiteReport r = run_suite(InstanceSpec{7, 12, 6, std::nullopt}, 300);
  std::size_t applicable = 0;
  for (const auto &e : r.entries)
    applicable += e.applicable;
  std::string detail = std::to_string(r.entries.size()) + " entries, " + std::to_string(applicable) +
                       " applicable runs, " + std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty())
    detail += "; first: " + r.failures.front().entry + " case " + std::to_string(r.failures.front().case_index);
  return {r.failures.empty() && applicable > 0, detail};
}

/// All value maps below μ, in odometer order.
std::vector<LSubset> subsets_below(const LSubset &mu) {
  const auto &g = mu.group();
  const auto &l = mu.lattice();
  std::vector<LSubset> out;
  std::vector<std::size_t> digit(g.size(), 0);
  auto values = l.values();
  while (true) {
    std::vector<Value> v;
    bool below = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      v.push_back(values[digit[i]]);
      below = below && l.leq(v.back(), mu.values()[i]);
    }
    if (below)
      out.emplace_back(mu.group_ptr(), mu.lattice_ptr(), std::move(v));
    std::size_t i = 0;
    while (i < g.size() && ++digit[i] == values.size())
      digit[i++] = 0;
    if (i == g.size())
      return out;
  }
}

Outcome oracle_equivalence() {
  std::size_t generate_checks = 0, normalizer_checks = 0;
  auto compare = [&](const LSubset &eta, const LSubset &mu, bool lsubgroup) -> std::optional<std::string> {
    ++generate_checks;
    if (generate(eta, mu) != oracle_generate(eta, mu))
      return "generate";
    if (lsubgroup && is_distributive(mu.lattice())) {
      ++normalizer_checks;
      if (normalizer(eta, mu) != oracle_normalizer_maximality(eta, mu))
        return "normalizer";
    }
    return std::nullopt;
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Instance in = gen_instance(InstanceSpec{seed, 6, 3, std::nullopt});
    if (auto bad = compare(in.eta, in.mu, true))
      return {false, *bad + " differs at seed " + std::to_string(seed)};
  }
  for (auto [g, l] : {std::pair{"C(4)", "chain(2)"}, std::pair{"C(2)", "chain(3)"}}) {
    auto grp = group(g);
    auto lat = lattice(l);
    for (const LSubset &mu : enumerate_lsubgroups(constant_lsubset(grp, lat, lat->top()))) {
      for (const LSubset &eta : subsets_below(mu))
        if (auto bad = compare(eta, mu, false))
          return {false, *bad + " differs on " + std::string(g) + " over " + l};
      for (const LSubset &eta : enumerate_lsubgroups(mu))
        if (auto bad = compare(eta, mu, true))
          return {false, *bad + " differs on " + std::string(g) + " over " + l};
    }
  }
  return {true, std::to_string(generate_checks) + " generate and " + std::to_string(normalizer_checks) +
                    " normalizer comparisons"};
}

/// Subgroups H of `k` inside the ambient: 1_H is normal iff pronormal, and subnormal.
std::optional<std::string> nilpotent_check(const GroupPtr &g, const ElementSet &k, std::size_t &count) {
  auto c2 = lattice("chain(2)");
  LSubset mu = characteristic(g, c2, k);
  if (!central_chain(mu, mu).reached_target)
    return "ambient is not nilpotent";
  for (const auto &h : enumerate_subgroups(*g)) {
    if (!h.subset_of(k))
      continue;
    ++count;
    LSubset eta = characteristic(g, c2, h);
    if (is_normal(eta, mu).holds != is_pronormal(eta, mu).holds)
      return "normal and pronormal disagree for a subgroup of order " + std::to_string(h.size());
    if (!is_subnormal(eta, mu).holds)
      return "subgroup of order " + std::to_string(h.size()) + " not subnormal";
  }
  return std::nullopt;
}

Outcome nilpotent_ambients() {
  S4M ex;
  std::size_t count = 0;
  if (auto bad = nilpotent_check(ex.s4, ex.d1, count))
    return {false, "D4 in S4: " + *bad};
  std::size_t d4 = count;
  auto q8c2 = std::make_shared<const FiniteGroup>(direct_product(builtin_group("Q8"), builtin_group("C(2)")));
  ElementSet q8(q8c2->size());
  for (Element x : q8c2->elements())
    if (q8c2->name(x).ends_with(",0)"))
      q8.insert(x);
  if (q8.size() != 8 || !is_subgroup(*q8c2, q8))
    return {false, "could not locate Q8 in Q8xC2"};
  if (auto bad = nilpotent_check(q8c2, q8, count))
    return {false, "Q8 in Q8xC2: " + *bad};
  return {d4 == 10 && count == 16, std::to_string(d4) + " subgroups of D4, " + std::to_string(count - d4) +
                                       " subgroups of Q8"};
}

Outcome maximality() {
  auto c2 = lattice("chain(2)");
  auto z4 = group("C(4)");
  LSubset half = characteristic(z4, c2, named(*z4, {"0", "2"}));
  if (!is_maximal(half, constant_lsubset(z4, c2, c2->top())).holds)
    return {false, "1_{0,2} not maximal in 1_Z4"};
  auto c3 = lattice("chain(3)");
  auto z2 = group("C(2)");
  LSubset eta = make_lsubset(z2, c3, {{"0", "1"}}, "0");
  LSubset mu = constant_lsubset(z2, c3, c3->top());
  Verdict v = is_maximal(eta, mu);
  if (v.holds || !v.counterexample || !v.counterexample->subset)
    return {false, "expected a counterexample over chain(3)"};
  if (*v.counterexample->subset != make_lsubset(z2, c3, {{"0", "1"}, {"1", "m"}}, "0"))
    return {false, "unexpected intermediate L-subgroup"};
  if (auto bad = check::maximal_counterexample(eta, mu, v))
    return {false, "checker: " + *bad};
  return {true, "maximal over C2; over chain(3) the intermediate is e:1, g:m"};
}

Outcome lattice_diagnostics() {
  std::vector<std::string> args{"diag", "lattice", "example_M", kS4M + "M.lat"};
  for (int n = 1; n <= 8; ++n)
    args.push_back("chain(" + std::to_string(n) + ")");
  CliRun r = cli(args);
  if (r.code != kExitTrue)
    return {false, "exit code " + std::to_string(r.code)};
  const auto &rows = r.doc["verdict"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool chain = i >= 2;
    if (rows[i]["distributive"] != chain || rows[i]["upper_well_ordered"] != chain)
      return {false, "wrong diagnosis for " + rows[i]["name"].get<std::string>()};
  }
  return {rows.size() == 10, "M neither; chain(1..8) both"};
}

} // namespace
} // namespace lfgt

int main() {
  using namespace lfgt;
  std::size_t strict_mismatches = 0, weak_mismatches = 0;
  const std::vector<Criterion> criteria{
      {"1", "conjugate table of the S4/M example", 1, conjugate_table},
      {"2", "union with a conjugate and its generated L-subgroup", 1, union_and_generate},
      {"3", "pronormal example with full witness map", 60, pronormal_example},
      {"4", "non-normal example with a level counterexample", 1, normal_counterexample},
      {"5", "crisp embedding over all subgroup pairs of S4", 300,
       [&] { return crisp_embedding(false, strict_mismatches); }},
      {"6", "randomized property suite, seed 7, 300 cases", 600, suite_run},
      {"7", "generate and normalizer agree with exhaustive oracles", 300, oracle_equivalence},
      {"8", "nilpotent ambients: normal iff pronormal, all subnormal", 60, nilpotent_ambients},
      {"9", "maximality over C2 and chain(3)", 2, maximality},
      {"10", "lattice diagnostics for M and chains", 1, lattice_diagnostics},
      {"canary", "weakened certificate check is caught", 300,
       [&] { return crisp_embedding(true, weak_mismatches); }},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failed += !o.pass;
    std::printf("%s [%s] %s (%.0f ms): %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(), seconds * 1000,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
