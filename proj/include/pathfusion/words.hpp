// Letters, free-group words and path words over the Cayley graph of F_n,
// plus the translations between the two regimes (endpoints, geodesics,
// prefixes, concatenation).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathfusion {

// Error taxonomy. The CLI maps these onto its exit codes: ParseError,
// SignatureMismatch and DomainError are input errors, CapacityError is a
// resource error; InvalidPairError (pairs.hpp) has its own code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SignatureMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number of free factors n; fixes the alphabet a1, A1, ..., an, An.
class Signature {
 public:
  explicit Signature(int rank) : rank_(rank) {
    if (rank < 1) throw DomainError("Signature: rank must be >= 1");
  }
  int rank() const noexcept { return rank_; }
  friend bool operator==(Signature, Signature) noexcept = default;

 private:
  int rank_;
};

/// One oriented Cayley edge type: a 1-based generator index and a direction.
/// Letters order as a1 < A1 < a2 < A2 < ...; words inherit the induced
/// length-then-lexicographic order used for all set-valued output.
class Letter {
 public:
  constexpr Letter(int index, int sign)
      : code_((static_cast<std::uint32_t>(index) - 1u) * 2u + (sign < 0 ? 1u : 0u)) {
    if (index < 1) throw DomainError("Letter: index must be >= 1");
    if (sign != 1 && sign != -1) throw DomainError("Letter: sign must be +1 or -1");
  }

  static constexpr Letter from_code(std::uint32_t code) noexcept { return Letter(code); }

  constexpr int index() const noexcept { return static_cast<int>(code_ / 2u) + 1; }
  constexpr int sign() const noexcept { return (code_ & 1u) ? -1 : 1; }
  constexpr Letter inverse() const noexcept { return Letter(code_ ^ 1u); }
  constexpr std::uint32_t code() const noexcept { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

 private:
  constexpr explicit Letter(std::uint32_t code) noexcept : code_(code) {}
  std::uint32_t code_;
};

namespace detail {

// Hash-consing pool: every distinct letter sequence is stored exactly once
// with a stable address, so words compare and hash in constant time.
const Letter* intern_letters(std::span<const Letter> letters);

std::vector<Letter> free_reduce(std::span<const Letter> letters);
void check_letters(Signature sig, std::span<const Letter> letters);
std::vector<Letter> parse_letters(Signature sig, std::string_view text);
std::string format_letters(std::span<const Letter> letters);

inline void check_same_rank(int a, int b) {
  if (a != b)
    throw SignatureMismatch("signature mismatch: rank " + std::to_string(a) +
                            " vs rank " + std::to_string(b));
}

}  // namespace detail

enum class WordKind { path, group };

/// Immutable interned word over the letter alphabet. Path words are raw
/// sequences in the free monoid on 2n letters (every sequence is a distinct
/// normal form); group words are kept freely reduced, so they are elements
/// of F_n. The two regimes never mix implicitly.
template <WordKind Kind>
class Word {
 public:
  explicit Word(Signature sig) : Word(sig, std::span<const Letter>{}) {}

  Word(Signature sig, std::span<const Letter> letters) : rank_(sig.rank()) {
    detail::check_letters(sig, letters);
    if constexpr (Kind == WordKind::group) {
      const auto reduced = detail::free_reduce(letters);
      data_ = detail::intern_letters(reduced);
      size_ = static_cast<std::uint32_t>(reduced.size());
    } else {
      data_ = detail::intern_letters(letters);
      size_ = static_cast<std::uint32_t>(letters.size());
    }
  }

  Word(Signature sig, std::initializer_list<Letter> letters)
      : Word(sig, std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word parse(Signature sig, std::string_view text) {
    const auto letters = detail::parse_letters(sig, text);
    return Word(sig, std::span<const Letter>(letters));
  }

  Signature sig() const noexcept { return Signature(rank_); }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Letter operator[](std::size_t i) const noexcept { return data_[i]; }
  std::span<const Letter> letters() const noexcept { return {data_, size_}; }

  /// Word-grammar rendering; the empty word prints as "1".
  std::string str() const { return detail::format_letters(letters()); }

  // Interned: equal content implies equal storage.
  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.data_ == b.data_ && a.rank_ == b.rank_;
  }

 private:
  const Letter* data_;
  std::uint32_t size_;
  std::int32_t rank_;
};

using PathWord = Word<WordKind::path>;
using GroupWord = Word<WordKind::group>;

/// Length-then-lexicographic order (ranks compare first for safety).
template <WordKind Kind>
std::strong_ordering canonical_order(const Word<Kind>& a, const Word<Kind>& b) noexcept {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto la = a.letters(), lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i)
    if (auto c = la[i] <=> lb[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

struct CanonicalLess {
  template <WordKind Kind>
  bool operator()(const Word<Kind>& a, const Word<Kind>& b) const noexcept {
    return canonical_order(a, b) < 0;
  }
};

/// Free reduction of a raw letter sequence; idempotent on reduced input.
inline GroupWord reduce(Signature sig, std::span<const Letter> raw) {
  return GroupWord(sig, raw);
}

/// Terminal vertex of a path.
GroupWord endpoint(const PathWord& e);

GroupWord multiply(const GroupWord& g, const GroupWord& h);
GroupWord invert(const GroupWord& g);

/// Geodesic from the identity to g: the same letters read as a path.
PathWord shortest_path(const GroupWord& g);

/// Endpoints of all k+1 prefixes of e, in traversal order (repeats kept).
std::vector<GroupWord> prefix_endpoints(const PathWord& e);

/// V(e): the distinct vertices visited by e, canonically ordered.
std::vector<GroupWord> vertices(const PathWord& e);

PathWord concat(const PathWord& e, const PathWord& f);

/// All freely reduced words of length <= radius, canonically ordered.
std::vector<GroupWord> enumerate_group_ball(Signature sig, int radius);

inline PathWord parse_path_word(Signature sig, std::string_view text) {
  return PathWord::parse(sig, text);
}
inline GroupWord parse_group_word(Signature sig, std::string_view text) {
  return GroupWord::parse(sig, text);
}
template <WordKind Kind>
std::string format_word(const Word<Kind>& w) {
  return w.str();
}

}  // namespace pathfusion

template <pathfusion::WordKind Kind>
struct std::hash<pathfusion::Word<Kind>> {
  std::size_t operator()(const pathfusion::Word<Kind>& w) const noexcept {
    const auto h = std::hash<const void*>{}(static_cast<const void*>(w.letters().data()));
    return h ^ (static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ull);
  }
};
