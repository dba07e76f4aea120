#include <set>

#include "lfgt/error.hpp"
#include "lfgt/verify.hpp"

namespace lfgt {

namespace {

constexpr std::size_t kOracleGroupCap = 6;
constexpr std::size_t kOracleLatticeCap = 3;

void require_cap(const LSubset &mu) {
  if (mu.group().size() > kOracleGroupCap || mu.lattice().size() > kOracleLatticeCap)
    throw Error(ErrorKind::OracleCapExceeded, "oracles are limited to |G| <= 6 and |L| <= 3");
}

bool below(const Lattice &l, const std::vector<Value> &a, const std::vector<Value> &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!l.leq(a[i], b[i]))
      return false;
  return true;
}

/// η normal in ν, straight from the definition.
bool normal_in(const LSubset &eta, const LSubset &nu) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  for (Element x : g.elements())
    for (Element y : g.elements()) {
      Element c = g.mul(g.mul(y, x), g.inv(y));
      if (!l.leq(l.meet(eta(x), nu(y)), eta(c)))
        return false;
    }
  return true;
}

} // namespace

std::vector<LSubset> enumerate_lsubgroups(const LSubset &mu) {
  require_cap(mu);
  const Lattice &l = mu.lattice();
  const std::size_t n = mu.size();
  std::vector<std::vector<Value>> choices(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Value v : l.values())
      if (l.leq(v, mu.values()[i]))
        choices[i].push_back(v);

  std::vector<LSubset> out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Value> values(n);
    for (std::size_t i = 0; i < n; ++i)
      values[i] = choices[i][digit[i]];
    LSubset candidate(mu.group_ptr(), mu.lattice_ptr(), std::move(values));
    if (check::axioms(candidate))
      out.push_back(std::move(candidate));
    std::size_t i = 0;
    while (i < n && ++digit[i] == choices[i].size())
      digit[i++] = 0;
    if (i == n)
      break;
  }
  return out;
}

LSubset oracle_generate(const LSubset &eta, const LSubset &mu) {
  require_same_carriers(eta, mu);
  require_cap(mu);
  const Lattice &l = mu.lattice();
  std::vector<Value> meet(mu.size(), l.top());
  bool any = false;
  for (const LSubset &theta : enumerate_lsubgroups(mu)) {
    if (!below(l, eta.values(), theta.values()))
      continue;
    any = true;
    for (std::size_t i = 0; i < meet.size(); ++i)
      meet[i] = l.meet(meet[i], theta.values()[i]);
  }
  if (!any)
    throw Error(ErrorKind::NotContained, "no L-subgroup of μ contains η");
  return LSubset(mu.group_ptr(), mu.lattice_ptr(), std::move(meet));
}

LSubset oracle_normalizer_maximality(const LSubset &eta, const LSubset &mu) {
  require_same_carriers(eta, mu);
  require_cap(mu);
  const Lattice &l = mu.lattice();
  std::vector<Value> join(mu.size(), l.bottom());
  for (const LSubset &nu : enumerate_lsubgroups(mu)) {
    if (!below(l, eta.values(), nu.values()) || !normal_in(eta, nu))
      continue;
    for (std::size_t i = 0; i < join.size(); ++i)
      join[i] = l.join(join[i], nu.values()[i]);
  }
  return LSubset(mu.group_ptr(), mu.lattice_ptr(), std::move(join));
}

namespace check {

bool axioms(const LSubset &eta) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  for (Element x : g.elements()) {
    if (eta(x) != eta(g.inv(x)))
      return false;
    for (Element y : g.elements())
      if (!l.leq(l.meet(eta(x), eta(y)), eta(g.mul(x, y))))
        return false;
  }
  return true;
}

LSubset closure(const LSubset &eta) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> v = eta.values();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x : g.elements()) {
      Value inv = l.join(v[g.inv(x).id], v[x.id]);
      if (inv != v[g.inv(x).id]) {
        v[g.inv(x).id] = inv;
        changed = true;
      }
      for (Element y : g.elements()) {
        Element xy = g.mul(x, y);
        Value up = l.join(v[xy.id], l.meet(v[x.id], v[y.id]));
        if (up != v[xy.id]) {
          v[xy.id] = up;
          changed = true;
        }
      }
    }
  }
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

LSubset conjugate(const LSubset &eta, LPoint p) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> v(eta.size());
  for (Element x : g.elements())
    v[x.id] = l.meet(p.value, eta(g.mul(g.mul(p.support, x), g.inv(p.support))));
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

namespace {

LSubset challenge_join(const LSubset &eta, const LSubset &target) {
  const Lattice &l = eta.lattice();
  std::vector<Value> v(eta.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = l.join(eta.values()[i], target.values()[i]);
  return closure(LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v)));
}

std::string point_text(const LSubset &s, LPoint p) {
  return s.lattice().name(p.value) + "@" + s.group().name(p.support);
}

} // namespace

std::optional<std::string> pronormal_verdict(const LSubset &eta, const LSubset &mu, const Verdict &v,
                                             bool strict_bottom) {
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  if (v.holds) {
    std::set<LPoint> expected, seen;
    for (Element x : g.elements())
      for (Value a : l.values())
        if (l.leq(a, mu(x)) && (strict_bottom || a != l.bottom()))
          expected.insert({a, x});
    for (const auto &w : v.witness) {
      if (!seen.insert(w.challenge).second)
        return "challenge " + point_text(eta, w.challenge) + " appears twice";
      LSubset target = conjugate(eta, w.challenge);
      LSubset join = challenge_join(eta, target);
      if (!l.leq(w.certificate.value, join(w.certificate.support)))
        return "certificate " + point_text(eta, w.certificate) + " is not in the join";
      if (!(conjugate(eta, w.certificate) == target))
        return "certificate " + point_text(eta, w.certificate) + " conjugates η differently from " +
               point_text(eta, w.challenge);
    }
    if (seen != expected)
      return "witness does not cover every challenge";
    return std::nullopt;
  }
  if (!v.counterexample || !v.counterexample->point)
    return "negative verdict without a challenge";
  const LPoint challenge = *v.counterexample->point;
  LSubset target = conjugate(eta, challenge);
  LSubset join = challenge_join(eta, target);
  for (Element y : g.elements())
    for (Value b : l.values())
      if (l.leq(b, join(y)) && conjugate(eta, {b, y}) == target)
        return "challenge " + point_text(eta, challenge) + " is certified by " + point_text(eta, {b, y});
  return std::nullopt;
}

std::optional<std::string> maximal_counterexample(const LSubset &eta, const LSubset &mu, const Verdict &v) {
  if (v.holds)
    return std::nullopt;
  if (!v.counterexample)
    return "negative verdict without a counterexample";
  if (!v.counterexample->subset) {
    bool constant = true;
    for (Value x : eta.values())
      constant = constant && x == eta.values().front();
    if (constant || eta == mu)
      return std::nullopt;
    return "η is proper but no intermediate L-subgroup was given";
  }
  const LSubset &theta = *v.counterexample->subset;
  if (!axioms(theta))
    return "intermediate candidate is not an L-subgroup";
  if (!below(eta.lattice(), eta.values(), theta.values()) || !below(eta.lattice(), theta.values(), mu.values()))
    return "intermediate candidate is not between η and μ";
  if (theta == eta || theta == mu)
    return "intermediate candidate equals an endpoint";
  return std::nullopt;
}

} // namespace check

} // namespace lfgt
