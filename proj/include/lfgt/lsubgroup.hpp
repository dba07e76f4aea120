#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lfgt/lsubset.hpp"

namespace lfgt {

/// Iterated construction. `stages` holds the distinct stages in order; the
/// last one is the stable stage.
struct SeriesReport {
  std::vector<LSubset> stages;
  std::size_t stabilized_at = 0;
  bool reached_target = false;
  std::optional<std::size_t> defect_or_class;
};

struct WitnessEntry {
  LPoint challenge;
  LPoint certificate;
};

/// Whatever a failed decision procedure can point at. Only the fields that
/// make sense for the procedure are filled in.
struct Counterexample {
  std::string note;
  std::vector<Element> elements;
  std::optional<LPoint> point;
  std::optional<Value> level;
  std::optional<LSubset> subset;
};

struct Verdict {
  bool holds = false;
  std::vector<WitnessEntry> witness;
  std::optional<Counterexample> counterexample;
  std::optional<SeriesReport> series;
};

/// μ(xy) >= μ(x) ∧ μ(y) and μ(x⁻¹) = μ(x). The counterexample lists the
/// violating pair (or the single element for the inverse axiom).
Verdict is_lsubgroup(const LSubset &eta);
/// Same question answered through the level subsets.
Verdict is_lsubgroup_by_levels(const LSubset &eta);

/// contains(μ, η) and is_lsubgroup(η).
Verdict is_lsubgroup_of(const LSubset &eta, const LSubset &mu);
/// Every non-empty η_a is a subgroup of μ_a.
Verdict is_lsubgroup_of_by_levels(const LSubset &eta, const LSubset &mu);

/// η̂(x) = join of a <= tip(η) with x ∈ ⟨η_a⟩. Throws NotContained unless
/// contains(μ, η).
LSubset generate(const LSubset &eta, const LSubset &mu);

/// x ↦ a ∧ η(zxz⁻¹) for p = a_z. Throws PointNotInMu, NotAnLSubgroup.
LSubset conjugate(const LSubset &eta, LPoint p, const LSubset &mu);
/// The same map without precondition checks.
LSubset conjugate_unchecked(const LSubset &eta, LPoint p);

enum class CosetSide { Left, Right };

/// Left: z ↦ a ∧ η(x⁻¹z). Right: z ↦ a ∧ η(zx⁻¹).
LSubset coset(LPoint p, const LSubset &eta, CosetSide side);

/// η(yxy⁻¹) >= η(x) ∧ μ(y). On failure the counterexample names the first
/// level (declaration order) at which η_a is not normal in μ_a, together
/// with a crisp pair (x, y). Throws NotAnLSubgroupOf.
Verdict is_normal(const LSubset &eta, const LSubset &mu);
bool is_normal_by_levels(const LSubset &eta, const LSubset &mu);
/// η^{a_z} ⊆ η for every L-point a_z of μ.
bool is_normal_by_conjugates(const LSubset &eta, const LSubset &mu);

/// Join of the L-points a_x of μ with a_x ∘ η = η ∘ a_x. In builds without
/// NDEBUG the conjugate-condition form is also computed and compared.
/// Throws NotAnLSubgroupOf.
LSubset normalizer(const LSubset &eta, const LSubset &mu);
LSubset normalizer_by_cosets(const LSubset &eta, const LSubset &mu);
LSubset normalizer_by_conjugates(const LSubset &eta, const LSubset &mu);

struct PronormalOptions {
  /// Also challenge with bottom-valued L-points.
  bool strict_bottom = false;
  /// Test hook: accept any b_y in the join without comparing conjugates.
  bool weak_certificate_check = false;
};

/// For every L-point a_x of μ, search b_y ∈ ⟨η ∪ η^{a_x}⟩ with
/// η^{b_y} = η^{a_x}. The challenge itself is tried first, then b along the
/// reversed linear extension and y in carrier order. Throws NotAnLSubgroupOf.
Verdict is_pronormal(const LSubset &eta, const LSubset &mu, const PronormalOptions &options = {});

/// tip(η) at e, tail(η) elsewhere.
LSubset trivial_of(const LSubset &eta);

/// x ↦ join of η(y) ∧ ν(z) over x = zyz⁻¹. Throws NotContained.
LSubset conj_seed(const LSubset &eta, const LSubset &nu);

/// generate(conj_seed(η, ν), ν). Throws NotAnLSubgroupOf.
LSubset normal_closure(const LSubset &eta, const LSubset &nu);

/// η_0 = μ, η_i = normal closure of η in η_{i-1}. The defect is the first
/// index whose stage equals η.
SeriesReport closure_series(const LSubset &eta, const LSubset &mu);
Verdict is_subnormal(const LSubset &eta, const LSubset &mu);

enum class Bracket {
  /// y⁻¹z⁻¹yz
  InverseFirst,
  /// yzy⁻¹z⁻¹
  InverseLast,
};

/// (η, θ)(x): join of η(y) ∧ θ(z) over x = [y, z], or tail(η) ∧ tail(θ)
/// when x is not a commutator. Throws NotContained.
LSubset commutator_seed(const LSubset &eta, const LSubset &theta, const LSubset &mu,
                        Bracket bracket = Bracket::InverseFirst);

struct Commutator {
  LSubset seed;
  LSubset generated;
};

Commutator commutator(const LSubset &eta, const LSubset &theta, const LSubset &mu);

/// Z_0 = η, Z_{i+1} = [Z_i, η]; reaches its target at trivial_of(η).
/// Throws NotAnLSubgroupOf, DegenerateTipTail.
SeriesReport central_chain(const LSubset &eta, const LSubset &mu);

inline constexpr std::size_t kDefaultMaximalBudget = 48;

/// Proper (non-constant, η != μ) with nothing strictly between η and μ.
/// Throws NotAnLSubgroupOf, SearchBudgetExceeded when |G|·|L| > budget.
Verdict is_maximal(const LSubset &eta, const LSubset &mu,
                   std::size_t budget = kDefaultMaximalBudget);

/// η_0 = η, η_{i+1} = N(η_i); reaches its target at μ.
SeriesReport normalizer_chain(const LSubset &eta, const LSubset &mu);

} // namespace lfgt
