#include "pathfusion/words.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace pathfusion {
namespace detail {
namespace {

struct SeqView {
  const Letter* data;
  std::size_t size;
};

struct SeqHash {
  std::size_t operator()(SeqView v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < v.size; ++i) {
      h ^= v.data[i].code();
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct SeqEq {
  bool operator()(SeqView a, SeqView b) const noexcept {
    return a.size == b.size && std::equal(a.data, a.data + a.size, b.data);
  }
};

// Append-only pool. std::deque keeps stored vectors at stable addresses and
// their heap buffers never move, so returned pointers stay valid for the
// process lifetime. Interning takes the lock; reads of interned buffers are
// lock-free.
class InternPool {
 public:
  const Letter* intern(std::span<const Letter> letters) {
    if (letters.empty()) return empty_rep();
    std::scoped_lock lock(mu_);
    if (auto it = set_.find(SeqView{letters.data(), letters.size()}); it != set_.end())
      return it->data;
    auto& stored = pool_.emplace_back(letters.begin(), letters.end());
    set_.insert(SeqView{stored.data(), stored.size()});
    return stored.data();
  }

  static const Letter* empty_rep() noexcept {
    static const Letter sentinel(1, 1);  // address only; never dereferenced
    return &sentinel;
  }

 private:
  std::mutex mu_;
  std::deque<std::vector<Letter>> pool_;
  std::unordered_set<SeqView, SeqHash, SeqEq> set_;
};

InternPool& pool() {
  static InternPool instance;
  return instance;
}

}  // namespace

const Letter* intern_letters(std::span<const Letter> letters) {
  return pool().intern(letters);
}

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter l : letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void check_letters(Signature sig, std::span<const Letter> letters) {
  for (const Letter l : letters)
    if (l.index() > sig.rank())
      throw SignatureMismatch("letter index " + std::to_string(l.index()) +
                              " exceeds rank " + std::to_string(sig.rank()));
}

std::vector<Letter> parse_letters(Signature sig, std::string_view text) {
  const auto is_sep = [](char c) {
    return c == '.' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw ParseError("empty word literal; write \"1\" for the unit");
  if (tokens.size() == 1 && tokens[0] == "1") return {};

  std::vector<Letter> out;
  out.reserve(tokens.size());
  for (const auto tok : tokens) {
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A'))
      throw ParseError("malformed token '" + std::string(tok) + "'");
    int index = 0;
    const auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("malformed token '" + std::string(tok) + "'");
    if (index < 1)
      throw ParseError("letter index must be >= 1 in '" + std::string(tok) + "'");
    if (index > sig.rank())
      throw SignatureMismatch("letter index " + std::to_string(index) +
                              " exceeds rank " + std::to_string(sig.rank()));
    out.push_back(Letter(index, tok[0] == 'a' ? 1 : -1));
  }
  return out;
}

std::string format_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += '.';
    out += letters[i].sign() > 0 ? 'a' : 'A';
    out += std::to_string(letters[i].index());
  }
  return out;
}

}  // namespace detail

GroupWord endpoint(const PathWord& e) { return GroupWord(e.sig(), e.letters()); }

GroupWord multiply(const GroupWord& g, const GroupWord& h) {
  detail::check_same_rank(g.rank(), h.rank());
  std::vector<Letter> buf;
  buf.reserve(g.size() + h.size());
  buf.insert(buf.end(), g.letters().begin(), g.letters().end());
  buf.insert(buf.end(), h.letters().begin(), h.letters().end());
  return GroupWord(g.sig(), buf);
}

GroupWord invert(const GroupWord& g) {
  std::vector<Letter> buf;
  buf.reserve(g.size());
  const auto letters = g.letters();
  for (std::size_t i = letters.size(); i-- > 0;) buf.push_back(letters[i].inverse());
  return GroupWord(g.sig(), buf);
}

PathWord shortest_path(const GroupWord& g) { return PathWord(g.sig(), g.letters()); }

std::vector<GroupWord> prefix_endpoints(const PathWord& e) {
  std::vector<GroupWord> out;
  out.reserve(e.size() + 1);
  out.push_back(GroupWord(e.sig()));
  std::vector<Letter> stack;
  for (const Letter l : e.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
    out.push_back(GroupWord(e.sig(), stack));
  }
  return out;
}

std::vector<GroupWord> vertices(const PathWord& e) {
  auto out = prefix_endpoints(e);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PathWord concat(const PathWord& e, const PathWord& f) {
  detail::check_same_rank(e.rank(), f.rank());
  std::vector<Letter> buf;
  buf.reserve(e.size() + f.size());
  buf.insert(buf.end(), e.letters().begin(), e.letters().end());
  buf.insert(buf.end(), f.letters().begin(), f.letters().end());
  return PathWord(e.sig(), buf);
}

std::vector<GroupWord> enumerate_group_ball(Signature sig, int radius) {
  if (radius < 0) throw DomainError("enumerate_group_ball: radius must be >= 0");
  std::vector<GroupWord> out;
  out.push_back(GroupWord(sig));
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  std::vector<Letter> buf;
  const int alphabet = 2 * sig.rank();
  for (int len = 1; len <= radius; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const GroupWord g = out[i];
      for (int code = 0; code < alphabet; ++code) {
        const Letter l = Letter::from_code(static_cast<std::uint32_t>(code));
        if (!g.empty() && g.letters().back() == l.inverse()) continue;
        buf.assign(g.letters().begin(), g.letters().end());
        buf.push_back(l);
        out.push_back(GroupWord(sig, buf));
      }
    }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

}  // namespace pathfusion
