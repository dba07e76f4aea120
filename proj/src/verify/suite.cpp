#include <chrono>
#include <sstream>

#include "lfgt/error.hpp"
#include "lfgt/verify.hpp"
#include "rng.hpp"

namespace lfgt {

namespace {

using detail::Rng;

PropertyResult skip() { return {false, std::nullopt}; }
PropertyResult pass() { return {true, std::nullopt}; }
PropertyResult fail(std::string note) { return {true, std::move(note)}; }

std::string show(const LSubset &s) {
  std::ostringstream out;
  for (Element x : s.group().elements())
    out << (x.id ? " " : "") << s.group().name(x) << ":" << s.lattice().name(s(x));
  return out.str();
}

std::string show(const LSubset &s, LPoint p) { return format_lpoint(s.group(), s.lattice(), p); }

Rng rng_for(const Instance &in, std::string_view entry) { return Rng(detail::mix(in.seed, entry)); }

LPoint random_point(Rng &rng, const LSubset &mu) {
  Element x{static_cast<std::uint32_t>(rng.below(mu.size()))};
  std::vector<Value> below;
  for (Value a : mu.lattice().values())
    if (mu.lattice().leq(a, mu(x)))
      below.push_back(a);
  return {rng.pick(below), x};
}

LSubset random_lsubset(Rng &rng, const LSubset &like) {
  std::vector<Value> v(like.size());
  for (auto &x : v)
    x = like.lattice().values()[rng.below(like.lattice().size())];
  return LSubset(like.group_ptr(), like.lattice_ptr(), std::move(v));
}

bool distributive(const Instance &in) { return is_distributive(*in.lattice); }

bool lsubgroup_of(const LSubset &eta, const LSubset &mu) { return is_lsubgroup_of(eta, mu).holds; }

bool pronormal(const LSubset &eta, const LSubset &mu) { return is_pronormal(eta, mu).holds; }

/// L-subgroups of μ worth asking questions about, derived from the instance.
std::vector<LSubset> derived_subgroups(const Instance &in) {
  std::vector<LSubset> out{in.eta, in.mu, trivial_of(in.mu)};
  for (const LSubset &s : {normal_closure(in.eta, in.mu), normalizer(in.eta, in.mu)})
    if (lsubgroup_of(s, in.mu))
      out.push_back(s);
  return out;
}

PropertyResult axioms_agree_with_levels(const Instance &in) {
  Rng rng = rng_for(in, "levels");
  for (const LSubset &s : {in.eta, in.mu, random_lsubset(rng, in.mu)}) {
    bool a = is_lsubgroup(s).holds, b = is_lsubgroup_by_levels(s).holds, c = check::axioms(s);
    if (a != b || a != c)
      return fail("axiom and level criteria disagree on " + show(s));
  }
  for (const auto &[e, m] : {std::pair{in.eta, in.mu}, std::pair{in.mu, in.eta}})
    if (is_lsubgroup_of(e, m).holds != is_lsubgroup_of_by_levels(e, m).holds)
      return fail("containment criteria disagree on " + show(e));
  if (!lsubgroup_of(in.eta, in.mu))
    return fail("generated η is not an L-subgroup of μ");
  return pass();
}

PropertyResult tip_at_identity(const Instance &in) {
  for (const LSubset &s : {in.eta, in.mu})
    if (extrema(s).tip != s(s.group().identity()))
      return fail("tip not attained at e for " + show(s));
  return pass();
}

PropertyResult level_monotonicity(const Instance &in) {
  const Lattice &l = *in.lattice;
  for (Value s : l.values())
    for (Value t : l.values()) {
      if (l.leq(s, t) && !level_subset(in.eta, t).subset_of(level_subset(in.eta, s)))
        return fail("levels of η are not monotone at " + l.name(s) + " <= " + l.name(t));
    }
  for (Value a : l.values())
    if (!level_subset(in.eta, a).subset_of(level_subset(in.mu, a)))
      return fail("η_" + l.name(a) + " is not inside μ_" + l.name(a));
  return pass();
}

PropertyResult set_product_associative(const Instance &in) {
  if (in.group->size() > 8 || !distributive(in))
    return skip();
  Rng rng = rng_for(in, "assoc");
  LSubset r = random_lsubset(rng, in.mu);
  if (!(set_product(set_product(in.eta, in.mu), r) == set_product(in.eta, set_product(in.mu, r))))
    return fail("set product is not associative on (η, μ, " + show(r) + ")");
  return pass();
}

PropertyResult sup_property_definition(const Instance &in) {
  const std::size_t n = in.group->size();
  if (n > 6)
    return skip();
  Rng rng = rng_for(in, "sup");
  const Lattice &l = *in.lattice;
  for (const LSubset &s : {in.eta, in.mu, random_lsubset(rng, in.mu)}) {
    bool by_subsets = true;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n) && by_subsets; ++mask) {
      std::vector<Value> values;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          values.push_back(s.values()[i]);
      Value j = l.join(values);
      by_subsets = std::find(values.begin(), values.end(), j) != values.end();
    }
    if (by_subsets != has_sup_property(s))
      return fail("sup-property criteria disagree on " + show(s));
  }
  return pass();
}

PropertyResult generate_contains_and_idempotent(const Instance &in) {
  if (!distributive(in))
    return skip();
  Rng rng = rng_for(in, "generate");
  LPoint p = random_point(rng, in.mu);
  LSubset theta = combine({in.eta, conjugate(in.eta, p, in.mu)}, CombineMode::Union);
  LSubset g = generate(theta, in.mu);
  if (!contains(g, theta))
    return fail("generate does not contain its seed " + show(theta));
  if (!lsubgroup_of(g, in.mu))
    return fail("generate(" + show(theta) + ") is not an L-subgroup of μ");
  if (!(generate(g, in.mu) == g))
    return fail("generate is not idempotent at " + show(g));
  if (!(g == check::closure(theta)))
    return fail("generate differs from the axiom closure at " + show(theta));
  return pass();
}

PropertyResult generated_levels_under_sup(const Instance &in) {
  if (!distributive(in))
    return skip();
  Rng rng = rng_for(in, "sup-levels");
  bool applicable = false;
  const Lattice &l = *in.lattice;
  LSubset joined = combine({in.eta, conjugate(in.eta, random_point(rng, in.mu), in.mu)}, CombineMode::Union);
  for (const LSubset &theta : {in.eta, joined}) {
    if (!has_sup_property(theta))
      continue;
    applicable = true;
    LSubset g = generate(theta, in.mu);
    for (Value b : l.values())
      if (l.leq(b, extrema(theta).tip) &&
          !(level_subset(g, b) == subgroup_closure(*in.group, level_subset(theta, b))))
        return fail("⟨θ⟩_" + l.name(b) + " differs from ⟨θ_" + l.name(b) + "⟩ for " + show(theta));
  }
  return applicable ? pass() : skip();
}

PropertyResult conjugate_levels(const Instance &in) {
  Rng rng = rng_for(in, "conj-levels");
  const Lattice &l = *in.lattice;
  for (int k = 0; k < 4; ++k) {
    LPoint p = random_point(rng, in.mu);
    LSubset c = conjugate(in.eta, p, in.mu);
    if (!(c == check::conjugate(in.eta, p)))
      return fail("conjugate disagrees with the direct formula at " + show(in.eta, p));
    Value tip = extrema(c).tip;
    if (tip != l.meet(p.value, extrema(in.eta).tip))
      return fail("tip of η^{" + show(in.eta, p) + "} is not a ∧ tip(η)");
    if (!lsubgroup_of(c, in.mu))
      return fail("η^{" + show(in.eta, p) + "} is not an L-subgroup of μ");
    for (Value t : l.values())
      if (l.leq(t, tip) &&
          !(level_subset(c, t) == conjugate_subgroup(*in.group, level_subset(in.eta, t), in.group->inv(p.support))))
        return fail("level " + l.name(t) + " of η^{" + show(in.eta, p) + "} is not z⁻¹η_t z");
  }
  return pass();
}

PropertyResult coset_is_set_product(const Instance &in) {
  Rng rng = rng_for(in, "coset");
  LPoint p = random_point(rng, in.mu);
  LSubset point = lpoint_subset(in.group, in.lattice, p);
  if (!(coset(p, in.eta, CosetSide::Left) == set_product(point, in.eta)) ||
      !(coset(p, in.eta, CosetSide::Right) == set_product(in.eta, point)))
    return fail("coset differs from the set product at " + show(in.eta, p));
  return pass();
}

PropertyResult conjugate_product_law(const Instance &in) {
  if (!distributive(in))
    return skip();
  Rng rng = rng_for(in, "product-law");
  LPoint p = random_point(rng, in.mu);
  for (const LSubset &nu : {in.mu, normal_closure(in.eta, in.mu)}) {
    LSubset lhs = conjugate_unchecked(set_product(in.eta, nu), p);
    LSubset rhs = set_product(conjugate_unchecked(in.eta, p), conjugate_unchecked(nu, p));
    if (!(lhs == rhs))
      return fail("(η ∘ ν)^{a_z} differs from η^{a_z} ∘ ν^{a_z} at " + show(in.eta, p));
  }
  return pass();
}

PropertyResult normal_criteria_agree(const Instance &in) {
  for (const LSubset &s : derived_subgroups(in)) {
    bool a = is_normal(s, in.mu).holds;
    bool b = is_normal_by_levels(s, in.mu);
    bool c = is_normal_by_conjugates(s, in.mu);
    bool d = distributive(in) ? normalizer(s, in.mu) == in.mu : a;
    if (a != b || a != c || a != d)
      return fail("normality criteria disagree on " + show(s));
  }
  return pass();
}

PropertyResult normalizer_definitions_agree(const Instance &in) {
  LSubset n = normalizer_by_cosets(in.eta, in.mu);
  if (!(n == normalizer_by_conjugates(in.eta, in.mu)))
    return fail("coset and conjugate normalizers differ");
  if (!contains(n, in.eta))
    return fail("N(η) does not contain η");
  if (!distributive(in))
    return pass();
  if (!lsubgroup_of(n, in.mu))
    return fail("N(η) is not an L-subgroup of μ: " + show(n));
  if (!is_normal(in.eta, n).holds)
    return fail("η is not normal in N(η)");
  return pass();
}

PropertyResult normal_implies_pronormal(const Instance &in) {
  for (const LSubset &s : derived_subgroups(in))
    if (is_normal(s, in.mu).holds && !pronormal(s, in.mu))
      return fail("normal but not pronormal: " + show(s));
  return pass();
}

PropertyResult pronormal_subnormal_normal(const Instance &in) {
  for (const LSubset &s : derived_subgroups(in))
    if (pronormal(s, in.mu) && is_subnormal(s, in.mu).holds && !is_normal(s, in.mu).holds)
      return fail("pronormal and subnormal but not normal: " + show(s));
  return pass();
}

PropertyResult closure_contains_conjugates(const Instance &in) {
  if (!distributive(in))
    return skip();
  LSubset nc = normal_closure(in.eta, in.mu);
  if (!contains(nc, in.eta))
    return fail("normal closure does not contain η");
  if (!lsubgroup_of(nc, in.mu) || !is_normal(nc, in.mu).holds)
    return fail("normal closure is not normal in μ: " + show(nc));
  for (Element z : in.group->elements())
    for (Value a : in.lattice->values())
      if (in.lattice->leq(a, in.mu(z)) && !contains(nc, conjugate(in.eta, {a, z}, in.mu)))
        return fail("η^{" + show(in.eta, {a, z}) + "} escapes the normal closure");
  return pass();
}

PropertyResult pronormal_monotone(const Instance &in) {
  if (!pronormal(in.eta, in.mu))
    return skip();
  for (const LSubset &nu : derived_subgroups(in))
    if (contains(nu, in.eta) && !pronormal(in.eta, nu))
      return fail("η is pronormal in μ but not in " + show(nu));
  return pass();
}

PropertyResult normalizer_pronormal(const Instance &in) {
  if (!distributive(in) || extrema(in.eta).tip != extrema(in.mu).tip || !pronormal(in.eta, in.mu))
    return skip();
  LSubset n = normalizer(in.eta, in.mu);
  if (!lsubgroup_of(n, in.mu) || !pronormal(n, in.mu))
    return fail("N(η) is not pronormal in μ: " + show(n));
  return pass();
}

PropertyResult set_product_pronormal(const Instance &in) {
  if (!distributive(in))
    return skip();
  bool applicable = false;
  std::vector<LSubset> candidates = derived_subgroups(in);
  for (const LSubset &normal : candidates) {
    if (!is_normal(normal, in.mu).holds)
      continue;
    for (const LSubset &nu : candidates) {
      if (extrema(normal).tip != extrema(nu).tip || !pronormal(nu, in.mu))
        continue;
      applicable = true;
      LSubset product = set_product(normal, nu);
      if (!lsubgroup_of(product, in.mu) || !pronormal(product, in.mu))
        return fail("η ∘ ν is not a pronormal L-subgroup for η = " + show(normal) + ", ν = " + show(nu));
    }
  }
  return applicable ? pass() : skip();
}

PropertyResult maximal_pronormal(const Instance &in) {
  if (in.group->size() * in.lattice->size() > kDefaultMaximalBudget)
    return skip();
  for (const LSubset &s : derived_subgroups(in)) {
    Verdict v = is_maximal(s, in.mu);
    if (auto bad = check::maximal_counterexample(s, in.mu, v))
      return fail("maximality counterexample does not re-validate: " + *bad);
    if (v.holds && !pronormal(s, in.mu))
      return fail("maximal but not pronormal: " + show(s));
  }
  return pass();
}

PropertyResult hom_conjugate(const Instance &in) {
  if (!in.hom || !distributive(in))
    return skip();
  const GroupHom &f = *in.hom;
  Rng rng = rng_for(in, "hom-conj");
  LPoint p = random_point(rng, in.mu);
  LSubset lhs = image(f, conjugate_unchecked(in.eta, p));
  LSubset rhs = conjugate_unchecked(image(f, in.eta), {p.value, f(p.support)});
  if (!(lhs == rhs))
    return fail("f(η^{a_z}) differs from f(η)^{a_f(z)} at " + show(in.eta, p));
  return pass();
}

PropertyResult hom_levels(const Instance &in) {
  if (!in.hom)
    return skip();
  const GroupHom &f = *in.hom;
  LSubset img = image(f, in.eta);
  for (Value t : in.lattice->values()) {
    ElementSet level = level_subset(img, t);
    for (Element x : level_subset(in.eta, t).elements())
      if (!level.contains(f(x)))
        return fail("f(η_" + in.lattice->name(t) + ") is not inside f(η)_" + in.lattice->name(t));
  }
  if (!contains(preimage(f, img), in.eta))
    return fail("η is not inside f⁻¹(f(η))");
  if (f.injective() && !(preimage(f, img) == in.eta))
    return fail("f injective but f⁻¹(f(η)) != η");
  return pass();
}

PropertyResult hom_pronormal(const Instance &in) {
  if (!in.hom || !in.hom->surjective() || !has_sup_property(in.mu) || !pronormal(in.eta, in.mu))
    return skip();
  LSubset fe = image(*in.hom, in.eta), fm = image(*in.hom, in.mu);
  if (!lsubgroup_of(fe, fm))
    return fail("f(η) is not an L-subgroup of f(μ)");
  Verdict v = is_pronormal(fe, fm);
  if (!v.holds)
    return fail("f(η) is not pronormal in f(μ); challenge " + show(fe, *v.counterexample->point));
  return pass();
}

PropertyResult level_pronormal(const Instance &in) {
  if (!is_upper_well_ordered(*in.lattice) || !pronormal(in.eta, in.mu))
    return skip();
  const Lattice &l = *in.lattice;
  for (Value t : l.values())
    if (l.leq(t, extrema(in.eta).tip) &&
        !crisp_pronormal(*in.group, level_subset(in.mu, t), level_subset(in.eta, t)).holds)
      return fail("η_" + l.name(t) + " is not pronormal in μ_" + l.name(t));
  return pass();
}

PropertyResult bracket_invariance(const Instance &in) {
  for (const auto &[a, b] : {std::pair{in.eta, in.eta}, std::pair{in.eta, in.mu}, std::pair{in.mu, in.mu}})
    if (!(commutator_seed(a, b, in.mu, Bracket::InverseFirst) == commutator_seed(a, b, in.mu, Bracket::InverseLast)))
      return fail("bracket conventions give different seeds");
  return pass();
}

PropertyResult intersections(const Instance &in) {
  Rng rng = rng_for(in, "intersections");
  LSubset c = conjugate(in.eta, random_point(rng, in.mu), in.mu);
  for (const LSubset &other : derived_subgroups(in)) {
    if (!lsubgroup_of(combine({in.eta, other}, CombineMode::Intersection), in.mu) ||
        !lsubgroup_of(combine({c, other}, CombineMode::Intersection), in.mu))
      return fail("an intersection of L-subgroups of μ is not one: " + show(other));
  }
  std::vector<LSubset> normals;
  for (const LSubset &s : derived_subgroups(in))
    if (is_normal(s, in.mu).holds)
      normals.push_back(s);
  if (!normals.empty() && !is_normal(combine(normals, CombineMode::Intersection), in.mu).holds)
    return fail("an intersection of normal L-subgroups is not normal");
  return pass();
}

PropertyResult nilpotent_corollaries(const Instance &in) {
  auto [tip, tail] = extrema(in.mu);
  if (tip == tail || extrema(in.eta).tip != tip || extrema(in.eta).tail != tail)
    return skip();
  if (!central_chain(in.mu, in.mu).reached_target)
    return skip();
  if (!is_subnormal(in.eta, in.mu).holds)
    return fail("μ nilpotent, tips and tails match, yet η is not subnormal");
  if (is_normal(in.eta, in.mu).holds != pronormal(in.eta, in.mu))
    return fail("μ nilpotent, yet normality and pronormality of η differ");
  return pass();
}

PropertyResult generate_oracle(const Instance &in) {
  if (in.group->size() > 6 || in.lattice->size() > 3)
    return skip();
  Rng rng = rng_for(in, "oracle-generate");
  LSubset r = combine({random_lsubset(rng, in.mu), in.mu}, CombineMode::Intersection);
  LSubset joined = combine({in.eta, conjugate(in.eta, random_point(rng, in.mu), in.mu)}, CombineMode::Union);
  for (const LSubset &theta : {in.eta, joined, r})
    if (!(generate(theta, in.mu) == oracle_generate(theta, in.mu)))
      return fail("generate differs from the intersection oracle at " + show(theta));
  return pass();
}

PropertyResult normalizer_oracle(const Instance &in) {
  if (in.group->size() > 6 || in.lattice->size() > 3)
    return skip();
  if (!(normalizer(in.eta, in.mu) == oracle_normalizer_maximality(in.eta, in.mu)))
    return fail("normalizer differs from the union oracle");
  return pass();
}

PropertyResult witnesses_revalidate(const Instance &in) {
  if (!distributive(in))
    return skip();
  for (const LSubset &s : derived_subgroups(in))
    if (auto bad = check::pronormal_verdict(s, in.mu, is_pronormal(s, in.mu)))
      return fail("pronormality verdict does not re-validate: " + *bad);
  return pass();
}

PropertyResult series_relations(const Instance &in) {
  SeriesReport cs = closure_series(in.eta, in.mu);
  for (std::size_t i = 1; i < cs.stages.size(); ++i)
    if (!(cs.stages[i] == normal_closure(in.eta, cs.stages[i - 1])))
      return fail("closure series stage " + std::to_string(i) + " breaks its recurrence");
  if (!(normal_closure(in.eta, cs.stages.back()) == cs.stages.back()))
    return fail("closure series did not stabilize");
  if (!distributive(in))
    return pass();
  SeriesReport nc = normalizer_chain(in.eta, in.mu);
  for (std::size_t i = 1; i < nc.stages.size(); ++i)
    if (!(nc.stages[i] == normalizer(nc.stages[i - 1], in.mu)))
      return fail("normalizer chain stage " + std::to_string(i) + " breaks its recurrence");
  return pass();
}

} // namespace

const std::vector<TheoremEntry> &theorem_suite() {
  static const std::vector<TheoremEntry> suite{
      {"lsubgroup-axioms-agree-with-levels", axioms_agree_with_levels},
      {"tip-attained-at-identity", tip_at_identity},
      {"level-monotonicity", level_monotonicity},
      {"set-product-associative", set_product_associative},
      {"sup-property-matches-subset-definition", sup_property_definition},
      {"generate-contains-and-is-idempotent", generate_contains_and_idempotent},
      {"generated-levels-under-sup-property", generated_levels_under_sup},
      {"conjugate-levels-are-conjugate-subgroups", conjugate_levels},
      {"coset-equals-set-product", coset_is_set_product},
      {"conjugate-product-law", conjugate_product_law},
      {"normality-criteria-agree", normal_criteria_agree},
      {"normalizer-definitions-agree", normalizer_definitions_agree},
      {"normal-implies-pronormal", normal_implies_pronormal},
      {"pronormal-and-subnormal-implies-normal", pronormal_subnormal_normal},
      {"normal-closure-contains-conjugates", closure_contains_conjugates},
      {"pronormality-is-monotone", pronormal_monotone},
      {"normalizer-of-pronormal-is-pronormal", normalizer_pronormal},
      {"set-product-of-normal-and-pronormal", set_product_pronormal},
      {"maximal-implies-pronormal", maximal_pronormal},
      {"hom-image-of-conjugate", hom_conjugate},
      {"hom-image-of-levels", hom_levels},
      {"hom-image-of-pronormal", hom_pronormal},
      {"level-pronormality-on-chains", level_pronormal},
      {"bracket-convention-invariance", bracket_invariance},
      {"intersections-stay-lsubgroups", intersections},
      {"nilpotent-ambient-corollaries", nilpotent_corollaries},
      {"generate-matches-oracle", generate_oracle},
      {"normalizer-matches-oracle", normalizer_oracle},
      {"pronormal-witnesses-revalidate", witnesses_revalidate},
      {"series-recurrences", series_relations},
  };
  return suite;
}

PropertyResult run_property(const std::string &name, const Instance &instance) {
  for (const auto &entry : theorem_suite())
    if (entry.name == name) {
      try {
        return entry.run(instance);
      } catch (const Error &e) {
        return fail(std::string("raised ") + e.what());
      }
    }
  throw Error(ErrorKind::BadParam, "no suite entry named '" + name + "'");
}

SuiteReport run_suite(const InstanceSpec &spec, std::size_t cases) {
  if (cases == 0)
    throw Error(ErrorKind::BadSpec, "a suite run needs at least one case");
  if (spec.max_group_order < 1 || spec.max_lattice_size < 1)
    throw Error(ErrorKind::BadSpec, "instance bounds must be positive");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.spec = spec;
  report.cases = cases;
  for (const auto &entry : theorem_suite())
    report.entries.push_back({entry.name, 0, 0});

  for (std::size_t i = 0; i < cases; ++i) {
    Instance instance = gen_instance(case_spec(spec, i));
    for (std::size_t k = 0; k < theorem_suite().size(); ++k) {
      PropertyResult r = run_property(theorem_suite()[k].name, instance);
      if (!r.applicable)
        continue;
      ++report.entries[k].applicable;
      if (r.failure) {
        ++report.entries[k].failures;
        report.failures.push_back({theorem_suite()[k].name, i, *r.failure, instance_to_json(instance)});
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const SuiteReport &report, bool include_time) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json spec{{"seed", report.spec.seed},
                              {"max_group_order", report.spec.max_group_order},
                              {"max_lattice_size", report.spec.max_lattice_size}};
  if (report.spec.hints)
    spec["hints"] = {{"chain_only", report.spec.hints->chain_only},
                     {"with_hom", report.spec.hints->with_hom},
                     {"nilpotent_ambient", report.spec.hints->nilpotent_ambient}};
  doc["spec"] = spec;
  doc["cases"] = report.cases;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto &e : report.entries)
    doc["entries"].push_back({{"name", e.name}, {"applicable", e.applicable}, {"failures", e.failures}});
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto &f : report.failures)
    doc["failures"].push_back(
        {{"entry", f.entry}, {"case", f.case_index}, {"note", f.note}, {"instance", f.instance}});
  if (include_time)
    doc["wall_seconds"] = report.wall_seconds;
  return doc;
}

SuiteReport suite_report_from_json(const nlohmann::ordered_json &doc) {
  try {
    SuiteReport r;
    const auto &spec = doc.at("spec");
    r.spec.seed = spec.at("seed").get<std::uint64_t>();
    r.spec.max_group_order = spec.at("max_group_order").get<int>();
    r.spec.max_lattice_size = spec.at("max_lattice_size").get<int>();
    if (spec.contains("hints")) {
      const auto &h = spec.at("hints");
      r.spec.hints = ShapeHints{h.at("chain_only").get<bool>(), h.at("with_hom").get<bool>(),
                                h.at("nilpotent_ambient").get<bool>()};
    }
    r.cases = doc.at("cases").get<std::size_t>();
    for (const auto &e : doc.at("entries"))
      r.entries.push_back({e.at("name").get<std::string>(), e.at("applicable").get<std::size_t>(),
                           e.at("failures").get<std::size_t>()});
    for (const auto &f : doc.at("failures"))
      r.failures.push_back({f.at("entry").get<std::string>(), f.at("case").get<std::size_t>(),
                            f.at("note").get<std::string>(), f.at("instance")});
    if (doc.contains("wall_seconds"))
      r.wall_seconds = doc.at("wall_seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::BadSpec, std::string("malformed suite report: ") + e.what());
  }
}

} // namespace lfgt
