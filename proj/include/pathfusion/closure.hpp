// Truncated subobject-and-conjugation closure: the combinatorial shadow of
// the smallest full subcategory containing the given objects, computed to a
// worklist fixpoint, and extraction of the classifying pair.

#pragma once

#include "pathfusion/pairs.hpp"

namespace pathfusion {

inline constexpr std::size_t default_closure_cap = 1'000'000;

struct ClosureResult {
  IrrSet set;
  /// True when no tensor term was discarded for exceeding the cutoff, i.e.
  /// the set is closed under the untruncated tensor.
  bool saturated;
};

/// Least set containing the unit and the generators, closed under
/// conjugation, and containing every term of length <= cutoff of tensors of
/// its members. Throws CapacityError beyond max_set_size.
ClosureResult closure(Signature sig, std::span<const PathWord> generators, int cutoff,
                      std::size_t max_set_size = default_closure_cap);

/// The pair classifying the subcategory generated by the given objects:
/// Gamma is generated by their endpoints, T by their prefix endpoints
/// (coset-minimized). The result always validates.
PairSpec extract_pair(Signature sig, std::span<const PathWord> generators);

}  // namespace pathfusion
