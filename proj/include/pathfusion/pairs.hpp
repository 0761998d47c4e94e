// Candidate pairs (Gamma, S) with S presented as a finite union of cosets
// Gamma * t: validation of the three classification conditions, the
// membership predicate for the classified subcategory, and realization of
// its irreducible set at a truncation radius.

#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "pathfusion/fusion.hpp"
#include "pathfusion/stallings.hpp"

namespace pathfusion {

/// The three conditions a candidate pair must satisfy.
struct ValidationResult {
  bool contains_gamma = false;  // some t in T lies in Gamma (equivalently 1 in S)
  bool invariant = true;        // S = Gamma*T is left Gamma-invariant by construction
  bool connected = false;       // S is connected in the Cayley graph
  bool valid() const noexcept { return contains_gamma && invariant && connected; }
  friend bool operator==(const ValidationResult&, const ValidationResult&) = default;
};

struct InvalidPairError : std::runtime_error {
  explicit InvalidPairError(ValidationResult r);
  ValidationResult result;
};

/// Finite, conjugation-closed, canonically ordered set of path words of
/// length <= radius, containing the unit. The constructor sorts, dedupes
/// and checks those invariants.
class IrrSet {
 public:
  IrrSet(Signature sig, int radius, std::vector<PathWord> words);

  Signature sig() const noexcept { return Signature(rank_); }
  int radius() const noexcept { return radius_; }
  const std::vector<PathWord>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(const PathWord& w) const { return index_.count(w) != 0; }

  /// The sub-set of words of length <= radius (radius <= this->radius()).
  IrrSet restricted(int radius) const;

  friend bool operator==(const IrrSet& a, const IrrSet& b) {
    return a.rank_ == b.rank_ && a.radius_ == b.radius_ && a.words_ == b.words_;
  }

 private:
  std::vector<PathWord> words_;
  std::unordered_set<PathWord> index_;
  std::int32_t rank_;
  int radius_;
};

/// A pair (Gamma, S): Gamma by generators (folded at construction), S as
/// Gamma * T over a finite transversal T. Validation runs eagerly; the
/// operations below that require a valid pair throw InvalidPairError.
class PairSpec {
 public:
  PairSpec(Signature sig, std::vector<GroupWord> gamma_generators,
           std::vector<GroupWord> transversal);

  Signature sig() const noexcept { return Signature(rank_); }
  const std::vector<GroupWord>& gamma_generators() const noexcept { return gamma_generators_; }
  const std::vector<GroupWord>& transversal() const noexcept { return transversal_; }
  const StallingsGraph& gamma() const noexcept { return gamma_; }
  const ValidationResult& validation() const noexcept { return validation_; }
  bool valid() const noexcept { return validation_.valid(); }
  void require_valid() const {
    if (!valid()) throw InvalidPairError(validation_);
  }

  bool member_gamma(const GroupWord& g) const { return member_subgroup(gamma_, g); }
  bool member_s(const GroupWord& g) const { return member_coset_union(gamma_, transversal_, g); }

 private:
  std::vector<GroupWord> gamma_generators_;
  std::vector<GroupWord> transversal_;
  StallingsGraph gamma_;
  ValidationResult validation_;
  std::int32_t rank_;
};

/// Whether S = Gamma*T is connected in the Cayley graph. The graph is a
/// tree, so S containing 1 is connected iff it is geodesic-prefix-closed,
/// and prefix sets compose under multiplication; the global condition thus
/// reduces to the finite checks over the generators and the transversal.
bool is_connected(const PairSpec& p);

ValidationResult validate_pair(const PairSpec& p);

/// The membership predicate of the classified subcategory: the endpoint of
/// e lies in Gamma and every prefix endpoint lies in S.
bool in_subcategory(const PathWord& e, const PairSpec& p);

/// All words of length <= radius satisfying in_subcategory.
IrrSet realize(const PairSpec& p, int radius);

/// Same subgroup and the same S (mutual coset-union membership of the
/// transversals).
bool pair_equal(const PairSpec& p, const PairSpec& q);

/// Drops transversal elements whose coset is already represented by an
/// earlier kept element in canonical order; S is unchanged.
PairSpec minimal_transversal(const PairSpec& p);

}  // namespace pathfusion
