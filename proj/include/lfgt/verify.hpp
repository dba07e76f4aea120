#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfgt/lsubgroup.hpp"

namespace lfgt {

struct ShapeHints {
  /// Lattice is a chain.
  bool chain_only = false;
  /// Instance carries a surjective homomorphism (a quotient projection).
  bool with_hom = false;
  /// Group of prime-power order; η shares tip and tail with μ.
  bool nilpotent_ambient = false;

  bool operator==(const ShapeHints &) const = default;
};

struct InstanceSpec {
  std::uint64_t seed = 1;
  int max_group_order = 6;
  int max_lattice_size = 3;
  /// Forced hints; when empty every case draws its own.
  std::optional<ShapeHints> hints;
};

struct Instance {
  std::uint64_t seed = 0;
  ShapeHints hints;
  GroupPtr group;
  LatticePtr lattice;
  LSubset mu;
  LSubset eta;
  std::optional<GroupHom> hom;
};

/// Pure function of `spec`. Throws BadSpec for non-positive bounds.
Instance gen_instance(const InstanceSpec &spec);

/// Spec of case `index` in a suite run: same bounds, derived seed.
InstanceSpec case_spec(const InstanceSpec &spec, std::size_t index);

/// Every L-subgroup of μ containing η, intersected. Exhaustive over value
/// maps; throws OracleCapExceeded above |G| <= 6, |L| <= 3.
LSubset oracle_generate(const LSubset &eta, const LSubset &mu);

/// Union of every L-subgroup ν of μ with η ⊆ ν and η normal in ν.
/// Same cap as oracle_generate.
LSubset oracle_normalizer_maximality(const LSubset &eta, const LSubset &mu);

/// All L-subgroups of μ (exhaustive, same cap), in odometer order.
std::vector<LSubset> enumerate_lsubgroups(const LSubset &mu);

namespace check {

/// Independent re-validation of search results. None of these call the
/// search code in lsubgroup.
bool axioms(const LSubset &eta);
/// Least L-subgroup above η, by saturating the axioms.
LSubset closure(const LSubset &eta);
LSubset conjugate(const LSubset &eta, LPoint p);
/// Every witness entry is a correct certificate and the challenge set is
/// complete; or the counterexample challenge really has no certificate.
std::optional<std::string> pronormal_verdict(const LSubset &eta, const LSubset &mu, const Verdict &v,
                                             bool strict_bottom = false);
/// The counterexample θ of a failed maximality check lies strictly between.
std::optional<std::string> maximal_counterexample(const LSubset &eta, const LSubset &mu,
                                                  const Verdict &v);

} // namespace check

/// A property either does not apply, holds, or fails with a note.
struct PropertyResult {
  bool applicable = false;
  std::optional<std::string> failure;
};

struct TheoremEntry {
  std::string name;
  std::function<PropertyResult(const Instance &)> run;
};

const std::vector<TheoremEntry> &theorem_suite();

struct EntryStats {
  std::string name;
  std::size_t applicable = 0;
  std::size_t failures = 0;
};

struct SuiteFailure {
  std::string entry;
  std::size_t case_index = 0;
  std::string note;
  nlohmann::ordered_json instance;
};

struct SuiteReport {
  InstanceSpec spec;
  std::size_t cases = 0;
  std::vector<EntryStats> entries;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;
};

/// Throws BadSpec for cases == 0.
SuiteReport run_suite(const InstanceSpec &spec, std::size_t cases);

/// Re-runs one named entry. Throws BadParam for an unknown name.
PropertyResult run_property(const std::string &name, const Instance &instance);

nlohmann::ordered_json instance_to_json(const Instance &instance);
/// Throws BadSpec on malformed documents, plus parser errors.
Instance instance_from_json(const nlohmann::ordered_json &doc);

nlohmann::ordered_json to_json(const SuiteReport &report, bool include_time = true);
SuiteReport suite_report_from_json(const nlohmann::ordered_json &doc);

} // namespace lfgt
