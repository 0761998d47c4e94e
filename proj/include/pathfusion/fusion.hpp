// The fusion ring of Rep F on path words: conjugation, the binary tensor
// decomposition via the simultaneous stripping recursion, iterated tensors
// with multiplicities, subobject tests, and ball enumeration.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pathfusion/words.hpp"

namespace pathfusion {

/// Formal nonnegative-integer combination of path words, as produced by
/// tensor decompositions. Binary tensors are multiplicity-free; iterated
/// ones are not. Iteration is in canonical word order.
class FusionTerms {
 public:
  using Map = std::map<PathWord, std::uint64_t, CanonicalLess>;

  FusionTerms() = default;

  void add(const PathWord& w, std::uint64_t mult = 1) {
    if (mult == 0) return;
    terms_[w] += mult;
  }
  bool contains(const PathWord& w) const { return terms_.count(w) != 0; }
  std::uint64_t multiplicity(const PathWord& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  Map::const_iterator begin() const noexcept { return terms_.begin(); }
  Map::const_iterator end() const noexcept { return terms_.end(); }

  friend bool operator==(const FusionTerms&, const FusionTerms&) = default;

 private:
  Map terms_;
};

/// Dual object: reverse the path and invert every letter.
PathWord conjugate(const PathWord& e);

/// Number of simultaneous strip steps available between e's tail and f's
/// head: the largest L such that for every l < L the last letter of e_l and
/// the first letter of f_l are mutually inverse.
std::size_t strip_depth(const PathWord& e, const PathWord& f);

/// Visit the letter sequence of every term of e (x) f, longest first,
/// without interning. The span passed to fn is valid only during the call.
template <typename Fn>
void for_each_term_raw(const PathWord& e, const PathWord& f, Fn&& fn) {
  const std::size_t depth = strip_depth(e, f);
  std::vector<Letter> buf;
  buf.reserve(e.size() + f.size());
  for (std::size_t l = 0; l <= depth; ++l) {
    buf.clear();
    const auto head = e.letters().first(e.size() - l);
    const auto tail = f.letters().subspan(l);
    buf.insert(buf.end(), head.begin(), head.end());
    buf.insert(buf.end(), tail.begin(), tail.end());
    fn(std::span<const Letter>(buf));
  }
}

/// Binary tensor product decomposition into irreducibles.
FusionTerms tensor(const PathWord& e, const PathWord& f);

/// Whether z occurs in tensor(x, y).
bool is_subobject(const PathWord& z, const PathWord& x, const PathWord& y);

/// Left-associated iterated tensor with multiplicities.
FusionTerms tensor_many(std::span<const PathWord> factors);

/// (2n)^0 + ... + (2n)^radius; throws DomainError on overflow.
std::size_t ball_size(Signature sig, int radius);

/// All path words of length <= radius, canonically ordered, no duplicates.
std::vector<PathWord> enumerate_ball(Signature sig, int radius);

}  // namespace pathfusion
