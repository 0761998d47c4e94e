// Mechanical checks of the classification on truncated instances: the
// per-step subobject relations, the final product chain, the two-sided
// closure-vs-realization comparison, and the algebraic property suite.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathfusion/closure.hpp"

namespace pathfusion {

/// Step l of the first proof relation: the word with its length-l prefix
/// replaced by the prefix geodesic is a subobject of
/// (geodesic loop at the (l-1)-prefix) (x) (word with (l-1)-prefix geodesic
/// head). Requires 1 <= l <= |word|.
bool check_relation_1(const PathWord& word, int l);

/// Step l of the second proof relation: the out-and-back geodesic loop at
/// the l-prefix endpoint is a subobject of X (x) conjugate(X), where X is
/// the word with its length-l prefix replaced by the prefix geodesic.
bool check_relation_2(const PathWord& word, int l);

/// Membership of the word in the left-associated product of its prefix
/// geodesic loops followed by its endpoint geodesic.
bool check_final_chain(const PathWord& word);

struct ProofStepCounts {
  std::uint64_t relation1_checked = 0;
  std::uint64_t relation1_failed = 0;
  std::uint64_t relation2_checked = 0;
  std::uint64_t relation2_failed = 0;
  std::uint64_t chain_checked = 0;
  std::uint64_t chain_failed = 0;
  bool all_passed() const noexcept {
    return relation1_failed == 0 && relation2_failed == 0 && chain_failed == 0;
  }
};

/// Outcome of the two-sided theorem check at one instance. The closure side
/// is computed by the fusion fixpoint, the realization side by Stallings
/// filtering; neither trusts the other.
struct VerificationReport {
  int cutoff = 0;
  int radius = 0;
  /// Largest r <= radius at which both sides agree as sets within ball(r).
  int agreement_radius = 0;
  bool closure_saturated = false;
  std::size_t closure_size = 0;
  std::size_t realized_size = 0;
  /// Words of length <= radius lying in exactly one side, canonical order.
  std::vector<PathWord> witnesses;
  ProofStepCounts steps;
  /// extract_pair of the closure's word set equals extract_pair of the
  /// generators.
  bool pair_stable = false;

  bool passed() const noexcept {
    return agreement_radius == radius && witnesses.empty() && steps.all_passed() && pair_stable;
  }
};

/// Computes closure(generators, cutoff) and realize(extract_pair, radius),
/// reports the agreement radius with witnesses, runs both relation checks
/// for every closure word at every l, and the final chain for every
/// realized word. Requires 0 <= radius <= cutoff.
VerificationReport verify_theorem(Signature sig, std::span<const PathWord> generators,
                                  int cutoff, int radius,
                                  std::size_t max_set_size = default_closure_cap);

struct PropertyCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;
  bool passed() const noexcept { return failures == 0; }
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyCheck> checks;
  bool passed() const noexcept;
  const PropertyCheck& check(const std::string& name) const;
};

/// Scales of the individual property checks. Defaults match the standing
/// invariants of the fusion module.
struct PropertySuiteConfig {
  int unit_radius = 6;
  int frobenius_exhaustive_radius = 2;
  int frobenius_sample_radius = 4;
  std::uint64_t frobenius_samples = 10000;
  int associativity_radius = 3;
  std::uint64_t associativity_samples = 1000;
  int multiplicity_radius = 5;
  int vertex_radius = 4;
  int endpoint_radius = 4;
  int conjugate_sample_radius = 4;
  std::uint64_t conjugate_samples = 10000;

  /// Every radius clamped to at most `radius`.
  static PropertySuiteConfig clamped(int radius);
};

PropertyReport run_property_suite(Signature sig, const PropertySuiteConfig& config,
                                  std::uint64_t seed);

/// Convenience overload: the default config clamped to `radius`.
PropertyReport run_property_suite(Signature sig, int radius, std::uint64_t seed);

}  // namespace pathfusion
