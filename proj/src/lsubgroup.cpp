#include "lfgt/lsubgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfgt/error.hpp"

namespace lfgt {

namespace {

LSubset with_values(const LSubset &like, std::vector<Value> values) {
  return LSubset(like.group_ptr(), like.lattice_ptr(), std::move(values));
}

void require_lsubgroup_of(const LSubset &eta, const LSubset &mu) {
  if (!is_lsubgroup_of(eta, mu).holds)
    throw Error(ErrorKind::NotAnLSubgroupOf, "η is not an L-subgroup of μ");
}

Verdict failed(Counterexample c) {
  Verdict v;
  v.holds = false;
  v.counterexample = std::move(c);
  return v;
}

Verdict passed() {
  Verdict v;
  v.holds = true;
  return v;
}

} // namespace

Verdict is_lsubgroup(const LSubset &eta) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  for (Element x : g.elements())
    for (Element y : g.elements())
      if (!l.leq(l.meet(eta(x), eta(y)), eta(g.mul(x, y))))
        return failed({"η(" + g.name(x) + "·" + g.name(y) + ") = " + l.name(eta(g.mul(x, y))) +
                           " is not above " + l.name(eta(x)) + " ∧ " + l.name(eta(y)),
                       {x, y}, std::nullopt, std::nullopt, std::nullopt});
  for (Element x : g.elements())
    if (eta(g.inv(x)) != eta(x))
      return failed({"η(" + g.name(x) + "⁻¹) differs from η(" + g.name(x) + ")", {x}, std::nullopt,
                     std::nullopt, std::nullopt});
  return passed();
}

Verdict is_lsubgroup_by_levels(const LSubset &eta) {
  for (Value a : eta.lattice().values()) {
    ElementSet level = level_subset(eta, a);
    if (!level.empty() && !is_subgroup(eta.group(), level))
      return failed({"level " + eta.lattice().name(a) + " is not a subgroup", level.elements(),
                     std::nullopt, a, std::nullopt});
  }
  return passed();
}

Verdict is_lsubgroup_of(const LSubset &eta, const LSubset &mu) {
  require_same_carriers(eta, mu);
  const Lattice &l = eta.lattice();
  for (Element x : eta.group().elements())
    if (!l.leq(eta(x), mu(x)))
      return failed({"η(" + eta.group().name(x) + ") = " + l.name(eta(x)) + " is not below μ(" +
                         eta.group().name(x) + ") = " + l.name(mu(x)),
                     {x}, std::nullopt, std::nullopt, std::nullopt});
  return is_lsubgroup(eta);
}

Verdict is_lsubgroup_of_by_levels(const LSubset &eta, const LSubset &mu) {
  require_same_carriers(eta, mu);
  for (Value a : eta.lattice().values()) {
    ElementSet level = level_subset(eta, a);
    if (level.empty())
      continue;
    if (!is_subgroup(eta.group(), level) || !level.subset_of(level_subset(mu, a)))
      return failed({"level " + eta.lattice().name(a) + " is not a subgroup of μ's level",
                     level.elements(), std::nullopt, a, std::nullopt});
  }
  return passed();
}

LSubset generate(const LSubset &eta, const LSubset &mu) {
  if (!contains(mu, eta))
    throw Error(ErrorKind::NotContained, "generate needs η contained in μ");
  const Lattice &l = eta.lattice();
  const Value tip = extrema(eta).tip;
  std::vector<Value> values(eta.size(), l.bottom());
  for (Value a : l.values()) {
    if (!l.leq(a, tip))
      continue;
    ElementSet closed = subgroup_closure(eta.group(), level_subset(eta, a));
    for (Element x : closed.elements())
      values[x.id] = l.join(values[x.id], a);
  }
  return with_values(eta, std::move(values));
}

LSubset conjugate_unchecked(const LSubset &eta, LPoint p) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> values(eta.size());
  for (Element x : g.elements())
    values[x.id] = l.meet(p.value, eta(g.conj(p.support, x)));
  return with_values(eta, std::move(values));
}

LSubset conjugate(const LSubset &eta, LPoint p, const LSubset &mu) {
  require_same_carriers(eta, mu);
  if (!lpoint_in(p, mu))
    throw Error(ErrorKind::PointNotInMu, format_lpoint(mu.group(), mu.lattice(), p) + " is not an L-point of μ");
  if (!is_lsubgroup_of(eta, mu).holds)
    throw Error(ErrorKind::NotAnLSubgroup, "η is not an L-subgroup of μ");
  return conjugate_unchecked(eta, p);
}

LSubset coset(LPoint p, const LSubset &eta, CosetSide side) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  if (p.support.id >= g.size() || p.value.id >= l.size())
    throw Error(ErrorKind::MixedCarriers, "L-point does not live over η's carriers");
  const Element xinv = g.inv(p.support);
  std::vector<Value> values(eta.size());
  for (Element z : g.elements()) {
    Element w = side == CosetSide::Left ? g.mul(xinv, z) : g.mul(z, xinv);
    values[z.id] = l.meet(p.value, eta(w));
  }
  return with_values(eta, std::move(values));
}

Verdict is_normal(const LSubset &eta, const LSubset &mu) {
  require_lsubgroup_of(eta, mu);
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::optional<std::pair<Element, Element>> bad;
  for (Element x : g.elements()) {
    for (Element y : g.elements())
      if (!l.leq(l.meet(eta(x), mu(y)), eta(g.conj(y, x)))) {
        bad.emplace(x, y);
        break;
      }
    if (bad)
      break;
  }
  if (!bad)
    return passed();

  for (Value a : l.values()) {
    ElementSet level = level_subset(eta, a);
    ElementSet ambient = level_subset(mu, a);
    if (level.empty() || crisp_predicates(g, ambient, level).is_normal_in_k)
      continue;
    for (Element y : ambient.elements())
      for (Element x : level.elements())
        if (!level.contains(g.conj(y, x)))
          return failed({"level " + l.name(a) + ": η_a is not a normal subgroup of μ_a", {x, y},
                         std::nullopt, a, std::nullopt});
  }
  auto [x, y] = *bad;
  return failed({"η(yxy⁻¹) is not above η(x) ∧ μ(y)", {x, y}, std::nullopt, std::nullopt,
                 std::nullopt});
}

bool is_normal_by_levels(const LSubset &eta, const LSubset &mu) {
  for (Value a : eta.lattice().values()) {
    ElementSet level = level_subset(eta, a);
    if (!level.empty() && !crisp_predicates(eta.group(), level_subset(mu, a), level).is_normal_in_k)
      return false;
  }
  return true;
}

bool is_normal_by_conjugates(const LSubset &eta, const LSubset &mu) {
  const Lattice &l = eta.lattice();
  for (Element z : eta.group().elements())
    for (Value a : l.values())
      if (l.leq(a, mu(z)) && !contains(eta, conjugate_unchecked(eta, {a, z})))
        return false;
  return true;
}

LSubset normalizer_by_cosets(const LSubset &eta, const LSubset &mu) {
  require_lsubgroup_of(eta, mu);
  const Lattice &l = eta.lattice();
  std::vector<Value> values(eta.size(), l.bottom());
  for (Element x : eta.group().elements())
    for (Value a : l.values())
      if (l.leq(a, mu(x)) && coset({a, x}, eta, CosetSide::Left) == coset({a, x}, eta, CosetSide::Right))
        values[x.id] = l.join(values[x.id], a);
  return with_values(eta, std::move(values));
}

LSubset normalizer_by_conjugates(const LSubset &eta, const LSubset &mu) {
  require_lsubgroup_of(eta, mu);
  const Lattice &l = eta.lattice();
  std::vector<Value> values(eta.size(), l.bottom());
  for (Element z : eta.group().elements())
    for (Value a : l.values())
      if (l.leq(a, mu(z)) && contains(eta, conjugate_unchecked(eta, {a, z})))
        values[z.id] = l.join(values[z.id], a);
  return with_values(eta, std::move(values));
}

LSubset normalizer(const LSubset &eta, const LSubset &mu) {
  LSubset n = normalizer_by_cosets(eta, mu);
#ifndef NDEBUG
  if (!(n == normalizer_by_conjugates(eta, mu)))
    throw std::logic_error("normalizer: coset and conjugate conditions disagree");
#endif
  return n;
}

Verdict is_pronormal(const LSubset &eta, const LSubset &mu, const PronormalOptions &options) {
  require_lsubgroup_of(eta, mu);
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> descending(l.linear_extension().rbegin(), l.linear_extension().rend());

  Verdict verdict;
  for (Element x : g.elements()) {
    for (Value a : l.values()) {
      if (!l.leq(a, mu(x)) || (a == l.bottom() && !options.strict_bottom))
        continue;
      const LPoint challenge{a, x};
      const LSubset target = conjugate_unchecked(eta, challenge);
      const LSubset join = generate(combine({eta, target}, CombineMode::Union), mu);
      auto certifies = [&](LPoint p) {
        if (!lpoint_in(p, join))
          return false;
        return options.weak_certificate_check || conjugate_unchecked(eta, p) == target;
      };

      std::optional<LPoint> found;
      if (certifies(challenge))
        found = challenge;
      for (auto b = descending.begin(); !found && b != descending.end(); ++b)
        for (Element y : g.elements())
          if (certifies({*b, y})) {
            found = LPoint{*b, y};
            break;
          }
      if (!found) {
        verdict.holds = false;
        verdict.witness.clear();
        verdict.counterexample =
            Counterexample{"no L-point b_y of ⟨η ∪ η^{a_x}⟩ has η^{b_y} = η^{a_x}", {}, challenge,
                           std::nullopt, join};
        return verdict;
      }
      verdict.witness.push_back({challenge, *found});
    }
  }
  verdict.holds = true;
  return verdict;
}

LSubset trivial_of(const LSubset &eta) {
  auto [tip, tail] = extrema(eta);
  std::vector<Value> values(eta.size(), tail);
  values[eta.group().identity().id] = tip;
  return with_values(eta, std::move(values));
}

LSubset conj_seed(const LSubset &eta, const LSubset &nu) {
  if (!contains(nu, eta))
    throw Error(ErrorKind::NotContained, "conjugate spread needs η contained in ν");
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> values(eta.size(), l.bottom());
  for (Element y : g.elements())
    for (Element z : g.elements()) {
      Element x = g.conj(z, y);
      values[x.id] = l.join(values[x.id], l.meet(eta(y), nu(z)));
    }
  return with_values(eta, std::move(values));
}

LSubset normal_closure(const LSubset &eta, const LSubset &nu) {
  require_lsubgroup_of(eta, nu);
  return generate(conj_seed(eta, nu), nu);
}

SeriesReport closure_series(const LSubset &eta, const LSubset &mu) {
  require_lsubgroup_of(eta, mu);
  SeriesReport report;
  report.stages.push_back(mu);
  while (true) {
    LSubset next = normal_closure(eta, report.stages.back());
    if (next == report.stages.back())
      break;
    report.stages.push_back(std::move(next));
  }
  report.stabilized_at = report.stages.size() - 1;
  for (std::size_t i = 0; i < report.stages.size(); ++i)
    if (report.stages[i] == eta) {
      report.defect_or_class = i;
      break;
    }
  report.reached_target = report.stages.back() == eta;
  return report;
}

Verdict is_subnormal(const LSubset &eta, const LSubset &mu) {
  SeriesReport series = closure_series(eta, mu);
  Verdict verdict;
  verdict.holds = series.reached_target;
  if (!verdict.holds)
    verdict.counterexample = Counterexample{"the normal closure series stabilizes above η", {},
                                            std::nullopt, std::nullopt, series.stages.back()};
  verdict.series = std::move(series);
  return verdict;
}

LSubset commutator_seed(const LSubset &eta, const LSubset &theta, const LSubset &mu, Bracket bracket) {
  if (!contains(mu, eta) || !contains(mu, theta))
    throw Error(ErrorKind::NotContained, "commutator needs η and θ contained in μ");
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> values(eta.size(), l.bottom());
  std::vector<bool> is_bracket(eta.size(), false);
  for (Element y : g.elements())
    for (Element z : g.elements()) {
      Element x = bracket == Bracket::InverseFirst
                      ? g.mul(g.mul(g.inv(y), g.inv(z)), g.mul(y, z))
                      : g.mul(g.mul(y, z), g.mul(g.inv(y), g.inv(z)));
      is_bracket[x.id] = true;
      values[x.id] = l.join(values[x.id], l.meet(eta(y), theta(z)));
    }
  const Value tails = l.meet(extrema(eta).tail, extrema(theta).tail);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!is_bracket[i])
      values[i] = tails;
  return with_values(eta, std::move(values));
}

Commutator commutator(const LSubset &eta, const LSubset &theta, const LSubset &mu) {
  LSubset seed = commutator_seed(eta, theta, mu);
  LSubset generated = generate(seed, mu);
  return {std::move(seed), std::move(generated)};
}

SeriesReport central_chain(const LSubset &eta, const LSubset &mu) {
  require_lsubgroup_of(eta, mu);
  auto [tip, tail] = extrema(eta);
  if (tip == tail)
    throw Error(ErrorKind::DegenerateTipTail, "nilpotency needs tip(η) != tail(η)");
  const LSubset target = trivial_of(eta);
  SeriesReport report;
  report.stages.push_back(eta);
  while (true) {
    LSubset next = commutator(report.stages.back(), eta, mu).generated;
    if (std::find(report.stages.begin(), report.stages.end(), next) != report.stages.end())
      break;
    report.stages.push_back(std::move(next));
  }
  report.stabilized_at = report.stages.size() - 1;
  for (std::size_t i = 0; i < report.stages.size(); ++i)
    if (report.stages[i] == target) {
      report.defect_or_class = i;
      break;
    }
  report.reached_target = report.stages.back() == target;
  return report;
}

Verdict is_maximal(const LSubset &eta, const LSubset &mu, std::size_t budget) {
  require_lsubgroup_of(eta, mu);
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  auto [tip, tail] = extrema(eta);
  if (tip == tail || eta == mu)
    return failed({"η is not proper (constant or equal to μ)", {}, std::nullopt, std::nullopt,
                   std::nullopt});
  if (g.size() * l.size() > budget)
    throw Error(ErrorKind::SearchBudgetExceeded,
                "|G|·|L| = " + std::to_string(g.size() * l.size()) + " exceeds the budget of " +
                    std::to_string(budget));

  // One slot per {x, x⁻¹}, both sides get the same value.
  std::vector<Element> slots;
  for (Element x : g.elements())
    if (g.inv(x).id >= x.id)
      slots.push_back(x);

  std::vector<Value> theta(g.size(), l.bottom());
  std::vector<bool> assigned(g.size(), false);
  std::optional<LSubset> found;

  auto consistent = [&] {
    for (Element p : g.elements()) {
      if (!assigned[p.id])
        continue;
      for (Element q : g.elements()) {
        Element r = g.mul(p, q);
        if (assigned[q.id] && assigned[r.id] && !l.leq(l.meet(theta[p.id], theta[q.id]), theta[r.id]))
          return false;
      }
    }
    return true;
  };

  auto search = [&](auto &&self, std::size_t i) -> void {
    if (found)
      return;
    if (i == slots.size()) {
      LSubset candidate = with_values(eta, theta);
      if (!(candidate == eta) && !(candidate == mu))
        found = std::move(candidate);
      return;
    }
    const Element x = slots[i];
    const Element xi = g.inv(x);
    for (Value v : l.values()) {
      if (!l.leq(eta(x), v) || !l.leq(v, mu(x)))
        continue;
      theta[x.id] = theta[xi.id] = v;
      assigned[x.id] = assigned[xi.id] = true;
      if (consistent())
        self(self, i + 1);
      assigned[x.id] = assigned[xi.id] = false;
      if (found)
        return;
    }
  };
  search(search, 0);

  if (found)
    return failed({"an L-subgroup lies strictly between η and μ", {}, std::nullopt, std::nullopt,
                   std::move(found)});
  return passed();
}

SeriesReport normalizer_chain(const LSubset &eta, const LSubset &mu) {
  require_lsubgroup_of(eta, mu);
  SeriesReport report;
  report.stages.push_back(eta);
  while (true) {
    LSubset next = normalizer(report.stages.back(), mu);
    if (std::find(report.stages.begin(), report.stages.end(), next) != report.stages.end())
      break;
    report.stages.push_back(std::move(next));
  }
  report.stabilized_at = report.stages.size() - 1;
  report.reached_target = report.stages.back() == mu;
  for (std::size_t i = 0; i < report.stages.size(); ++i)
    if (report.stages[i] == mu) {
      report.defect_or_class = i;
      break;
    }
  return report;
}

} // namespace lfgt
