#include "pathfusion/fusion.hpp"

#include <algorithm>
#include <limits>

namespace pathfusion {

PathWord conjugate(const PathWord& e) {
  std::vector<Letter> buf;
  buf.reserve(e.size());
  const auto letters = e.letters();
  for (std::size_t i = letters.size(); i-- > 0;) buf.push_back(letters[i].inverse());
  return PathWord(e.sig(), buf);
}

std::size_t strip_depth(const PathWord& e, const PathWord& f) {
  detail::check_same_rank(e.rank(), f.rank());
  const auto el = e.letters();
  const auto fl = f.letters();
  std::size_t l = 0;
  while (l < el.size() && l < fl.size() && el[el.size() - 1 - l] == fl[l].inverse()) ++l;
  return l;
}

FusionTerms tensor(const PathWord& e, const PathWord& f) {
  FusionTerms out;
  const Signature sig = e.sig();
  for_each_term_raw(e, f, [&](std::span<const Letter> term) { out.add(PathWord(sig, term)); });
  return out;
}

bool is_subobject(const PathWord& z, const PathWord& x, const PathWord& y) {
  detail::check_same_rank(x.rank(), y.rank());
  detail::check_same_rank(z.rank(), x.rank());
  const std::size_t total = x.size() + y.size();
  if (z.size() > total || (total - z.size()) % 2 != 0) return false;
  const std::size_t l = (total - z.size()) / 2;
  if (l > std::min(x.size(), y.size())) return false;
  const auto xl = x.letters();
  const auto yl = y.letters();
  const auto zl = z.letters();
  for (std::size_t i = 0; i < l; ++i)
    if (xl[xl.size() - 1 - i] != yl[i].inverse()) return false;
  const std::size_t head = x.size() - l;
  return std::equal(xl.begin(), xl.begin() + head, zl.begin()) &&
         std::equal(yl.begin() + l, yl.end(), zl.begin() + head);
}

FusionTerms tensor_many(std::span<const PathWord> factors) {
  if (factors.empty()) throw DomainError("tensor_many: factor list must be nonempty");
  FusionTerms acc;
  acc.add(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    FusionTerms next;
    const Signature sig = factors[i].sig();
    for (const auto& [term, mult] : acc) {
      const std::uint64_t m = mult;
      for_each_term_raw(term, factors[i],
                        [&](std::span<const Letter> t) { next.add(PathWord(sig, t), m); });
    }
    acc = std::move(next);
  }
  return acc;
}

std::size_t ball_size(Signature sig, int radius) {
  if (radius < 0) throw DomainError("ball_size: radius must be >= 0");
  const std::size_t alphabet = 2 * static_cast<std::size_t>(sig.rank());
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t level = 1;
  for (int k = 0;; ++k) {
    if (total > cap - level) throw DomainError("ball_size: overflow");
    total += level;
    if (k == radius) break;
    if (level > cap / alphabet) throw DomainError("ball_size: overflow");
    level *= alphabet;
  }
  return total;
}

std::vector<PathWord> enumerate_ball(Signature sig, int radius) {
  if (radius < 0) throw DomainError("enumerate_ball: radius must be >= 0");
  const int alphabet = 2 * sig.rank();
  std::vector<PathWord> out;
  out.reserve(ball_size(sig, radius));
  out.push_back(PathWord(sig));
  std::vector<Letter> buf;
  std::vector<int> digits;
  for (int len = 1; len <= radius; ++len) {
    digits.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      buf.clear();
      for (const int d : digits) buf.push_back(Letter::from_code(static_cast<std::uint32_t>(d)));
      out.push_back(PathWord(sig, buf));
      int pos = len - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == alphabet) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

}  // namespace pathfusion
