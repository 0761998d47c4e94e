// Finitely generated subgroups of F_n as folded core automata: construction
// by Stallings folding, membership by tracing, canonical equality.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pathfusion/words.hpp"

namespace pathfusion {

/// Folded, base-pointed, letter-labeled core graph of a finitely generated
/// subgroup of F_n. Vertex 0 is the base. Construction relabels vertices in
/// breadth-first discovery order (letters ascending), so the transition
/// table is a canonical form: two graphs describe the same subgroup iff
/// their tables are identical.
class StallingsGraph {
 public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  static StallingsGraph build(Signature sig, std::span<const GroupWord> generators);

  Signature sig() const noexcept { return Signature(rank_); }
  int rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return table_.size() / width(); }
  /// Number of geometric edges (one per positive-letter transition).
  std::size_t edge_count() const noexcept;
  bool trivial() const noexcept { return vertex_count() == 1 && edge_count() == 0; }

  /// Transition from vertex by letter, or npos when undefined.
  std::uint32_t target(std::uint32_t vertex, Letter l) const noexcept {
    if (l.code() >= width()) return npos;
    return table_[vertex * width() + l.code()];
  }

  /// Trace a freely reduced letter sequence from the base; true iff every
  /// transition exists and the trace ends at the base.
  bool accepts(std::span<const Letter> reduced) const noexcept;

  std::string to_dot() const;

  friend bool subgroup_equal(const StallingsGraph& a, const StallingsGraph& b) noexcept {
    return a.rank_ == b.rank_ && a.table_ == b.table_;
  }

 private:
  StallingsGraph(int rank, std::vector<std::uint32_t> table)
      : table_(std::move(table)), rank_(rank) {}
  std::size_t width() const noexcept { return 2 * static_cast<std::size_t>(rank_); }

  std::vector<std::uint32_t> table_;  // vertex-major, 2n slots per vertex
  std::int32_t rank_;
};

bool subgroup_equal(const StallingsGraph& a, const StallingsGraph& b) noexcept;

/// Whether g lies in the subgroup the graph recognizes.
bool member_subgroup(const StallingsGraph& graph, const GroupWord& g);

/// Whether g lies in S = Gamma * T, i.e. g t^-1 is in Gamma for some t.
bool member_coset_union(const StallingsGraph& graph, std::span<const GroupWord> transversal,
                        const GroupWord& g);

}  // namespace pathfusion
