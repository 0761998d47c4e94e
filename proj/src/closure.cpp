#include "pathfusion/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace pathfusion {

ClosureResult closure(Signature sig, std::span<const PathWord> generators, int cutoff,
                      std::size_t max_set_size) {
  if (cutoff < 0) throw DomainError("closure: cutoff must be >= 0");
  for (const auto& g : generators) {
    detail::check_same_rank(g.rank(), sig.rank());
    if (g.size() > static_cast<std::size_t>(cutoff))
      throw DomainError("closure: generator longer than cutoff");
  }

  std::vector<PathWord> elems;
  std::unordered_set<PathWord> seen;
  bool truncated = false;

  const auto insert = [&](const PathWord& w) -> bool {
    if (!seen.insert(w).second) return false;
    if (seen.size() > max_set_size)
      throw CapacityError("closure: set grew past the cap of " + std::to_string(max_set_size));
    elems.push_back(w);
    return true;
  };
  const auto insert_with_conjugate = [&](const PathWord& w) {
    if (insert(w)) insert(conjugate(w));
  };

  insert_with_conjugate(PathWord(sig));
  for (const auto& g : generators) insert_with_conjugate(g);

  // Each new element is paired against everything present, both orders, so
  // every ordered pair is expanded exactly once.
  const auto expand = [&](const PathWord& x, const PathWord& y) {
    for_each_term_raw(x, y, [&](std::span<const Letter> term) {
      if (term.size() > static_cast<std::size_t>(cutoff)) {
        truncated = true;
        return;
      }
      insert_with_conjugate(PathWord(sig, term));
    });
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const PathWord x = elems[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const PathWord y = elems[j];
      expand(x, y);
      if (i != j) expand(y, x);
    }
  }

  return ClosureResult{IrrSet(sig, cutoff, std::move(elems)), !truncated};
}

PairSpec extract_pair(Signature sig, std::span<const PathWord> generators) {
  std::vector<GroupWord> gamma;
  std::vector<GroupWord> transversal{GroupWord(sig)};
  for (const auto& e : generators) {
    detail::check_same_rank(e.rank(), sig.rank());
    const auto prefixes = prefix_endpoints(e);
    if (!prefixes.back().empty()) gamma.push_back(prefixes.back());
    transversal.insert(transversal.end(), prefixes.begin(), prefixes.end());
  }
  std::sort(gamma.begin(), gamma.end(), CanonicalLess{});
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  std::sort(transversal.begin(), transversal.end(), CanonicalLess{});
  transversal.erase(std::unique(transversal.begin(), transversal.end()), transversal.end());
  return minimal_transversal(PairSpec(sig, std::move(gamma), std::move(transversal)));
}

}  // namespace pathfusion
