#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pathfusion::oracles {

std::vector<Letter> slow_free_reduce(std::vector<Letter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1].inverse()) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

std::unordered_set<GroupWord> bounded_products(Signature sig,
                                               std::span<const GroupWord> generators,
                                               int max_factors) {
  std::vector<GroupWord> steps;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    steps.push_back(g);
    steps.push_back(invert(g));
  }
  std::unordered_set<GroupWord> out{GroupWord(sig)};
  std::vector<GroupWord> frontier{GroupWord(sig)};
  for (int depth = 0; depth < max_factors; ++depth) {
    std::vector<GroupWord> next;
    for (const auto& p : frontier)
      for (const auto& s : steps) {
        const GroupWord q = multiply(p, s);
        if (out.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return out;
}

SubgroupOracle::SubgroupOracle(Signature sig, std::vector<GroupWord> generators, int factors)
    : elements_(bounded_products(sig, generators, factors)) {
  const auto deeper = bounded_products(sig, generators, factors + 1);
  std::size_t first_new = std::numeric_limits<std::size_t>::max();
  for (const auto& w : deeper)
    if (elements_.count(w) == 0) first_new = std::min(first_new, w.size());
  saturation_radius_ = first_new == std::numeric_limits<std::size_t>::max()
                           ? std::numeric_limits<int>::max()
                           : static_cast<int>(first_new) - 1;
}

std::optional<bool> SubgroupOracle::classify(const GroupWord& w) const {
  if (elements_.count(w) != 0) return true;
  if (static_cast<int>(w.size()) <= saturation_radius_) return false;
  return std::nullopt;
}

bool bfs_connected_within_ball(const PairSpec& pair, int radius) {
  std::unordered_set<GroupWord> inside;
  for (const auto& g : enumerate_group_ball(pair.sig(), radius))
    if (pair.member_s(g)) inside.insert(g);
  if (inside.size() <= 1) return !inside.empty();

  const Signature sig = pair.sig();
  std::deque<GroupWord> queue{*inside.begin()};
  std::unordered_set<GroupWord> seen{*inside.begin()};
  while (!queue.empty()) {
    const GroupWord g = queue.front();
    queue.pop_front();
    for (int code = 0; code < 2 * sig.rank(); ++code) {
      const GroupWord h =
          multiply(g, GroupWord(sig, {Letter::from_code(static_cast<std::uint32_t>(code))}));
      if (h.size() > static_cast<std::size_t>(radius)) continue;
      if (inside.count(h) == 0 || !seen.insert(h).second) continue;
      queue.push_back(h);
    }
  }
  return seen.size() == inside.size();
}

PathWord random_path_word(Rng& rng, Signature sig, int max_len) {
  const std::uint64_t len = rng.below(static_cast<std::uint64_t>(max_len) + 1);
  std::vector<Letter> buf;
  buf.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i)
    buf.push_back(Letter::from_code(
        static_cast<std::uint32_t>(rng.below(2 * static_cast<std::uint64_t>(sig.rank())))));
  return PathWord(sig, buf);
}

GroupWord random_group_word(Rng& rng, Signature sig, int max_len) {
  const std::uint64_t len = rng.below(static_cast<std::uint64_t>(max_len) + 1);
  std::vector<Letter> buf;
  buf.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    while (true) {
      const Letter l = Letter::from_code(
          static_cast<std::uint32_t>(rng.below(2 * static_cast<std::uint64_t>(sig.rank()))));
      if (!buf.empty() && buf.back() == l.inverse()) continue;
      buf.push_back(l);
      break;
    }
  }
  return GroupWord(sig, buf);
}

}  // namespace pathfusion::oracles
