#include "pathfusion/pairs.hpp"

#include <algorithm>

namespace pathfusion {

namespace {

std::string describe(const ValidationResult& r) {
  const auto word = [](bool b) { return b ? "true" : "false"; };
  return std::string("invalid pair: contains_gamma: ") + word(r.contains_gamma) +
         ", invariant: " + word(r.invariant) + ", connected: " + word(r.connected);
}

bool prefixes_in_s(const StallingsGraph& gamma, std::span<const GroupWord> transversal,
                   const GroupWord& w) {
  for (const auto& p : prefix_endpoints(shortest_path(w)))
    if (!member_coset_union(gamma, transversal, p)) return false;
  return true;
}

}  // namespace

InvalidPairError::InvalidPairError(ValidationResult r)
    : std::runtime_error(describe(r)), result(r) {}

IrrSet::IrrSet(Signature sig, int radius, std::vector<PathWord> words)
    : words_(std::move(words)), rank_(sig.rank()), radius_(radius) {
  if (radius < 0) throw DomainError("IrrSet: radius must be >= 0");
  std::sort(words_.begin(), words_.end(), CanonicalLess{});
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  index_.reserve(words_.size() * 2);
  for (const auto& w : words_) {
    detail::check_same_rank(w.rank(), rank_);
    if (w.size() > static_cast<std::size_t>(radius))
      throw DomainError("IrrSet: word longer than radius");
    index_.insert(w);
  }
  if (words_.empty() || !words_.front().empty())
    throw DomainError("IrrSet: must contain the empty word");
  for (const auto& w : words_)
    if (!contains(conjugate(w))) throw DomainError("IrrSet: not closed under conjugation");
}

IrrSet IrrSet::restricted(int radius) const {
  if (radius < 0 || radius > radius_) throw DomainError("IrrSet::restricted: bad radius");
  // canonical order is length-major, so the restriction is a prefix
  const auto cut = std::partition_point(words_.begin(), words_.end(), [&](const PathWord& w) {
    return w.size() <= static_cast<std::size_t>(radius);
  });
  return IrrSet(sig(), radius, std::vector<PathWord>(words_.begin(), cut));
}

PairSpec::PairSpec(Signature sig, std::vector<GroupWord> gamma_generators,
                   std::vector<GroupWord> transversal)
    : gamma_generators_(std::move(gamma_generators)),
      transversal_(std::move(transversal)),
      gamma_(StallingsGraph::build(sig, gamma_generators_)),
      rank_(sig.rank()) {
  if (transversal_.empty()) throw DomainError("PairSpec: transversal must be nonempty");
  for (const auto& g : gamma_generators_) detail::check_same_rank(g.rank(), rank_);
  for (const auto& t : transversal_) detail::check_same_rank(t.rank(), rank_);

  for (const auto& t : transversal_)
    if (member_subgroup(gamma_, t)) {
      validation_.contains_gamma = true;
      break;
    }
  validation_.invariant = true;

  validation_.connected = true;
  for (const auto& w : gamma_generators_)
    if (!prefixes_in_s(gamma_, transversal_, w)) {
      validation_.connected = false;
      break;
    }
  if (validation_.connected)
    for (const auto& t : transversal_)
      if (!prefixes_in_s(gamma_, transversal_, t)) {
        validation_.connected = false;
        break;
      }
}

bool is_connected(const PairSpec& p) { return p.validation().connected; }

ValidationResult validate_pair(const PairSpec& p) { return p.validation(); }

bool in_subcategory(const PathWord& e, const PairSpec& p) {
  p.require_valid();
  detail::check_same_rank(e.rank(), p.sig().rank());
  const auto prefixes = prefix_endpoints(e);
  if (!p.member_gamma(prefixes.back())) return false;
  for (const auto& v : prefixes)
    if (!p.member_s(v)) return false;
  return true;
}

IrrSet realize(const PairSpec& p, int radius) {
  p.require_valid();
  if (radius < 0) throw DomainError("realize: radius must be >= 0");
  const Signature sig = p.sig();

  // Grow S-paths letter by letter; a path with a vertex outside S has no
  // extension inside S, so pruning loses nothing.
  struct Node {
    PathWord word;
    GroupWord end;
  };
  std::vector<PathWord> found{PathWord(sig)};
  std::vector<Node> frontier{{PathWord(sig), GroupWord(sig)}};
  std::vector<Letter> buf;
  const int alphabet = 2 * sig.rank();
  for (int len = 1; len <= radius; ++len) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (int code = 0; code < alphabet; ++code) {
        const Letter l = Letter::from_code(static_cast<std::uint32_t>(code));
        buf.assign(node.end.letters().begin(), node.end.letters().end());
        buf.push_back(l);
        const GroupWord end(sig, buf);
        if (!p.member_s(end)) continue;
        buf.assign(node.word.letters().begin(), node.word.letters().end());
        buf.push_back(l);
        const PathWord word(sig, buf);
        if (p.member_gamma(end)) found.push_back(word);
        next.push_back(Node{word, end});
      }
    }
    frontier = std::move(next);
  }
  return IrrSet(sig, radius, std::move(found));
}

bool pair_equal(const PairSpec& p, const PairSpec& q) {
  p.require_valid();
  q.require_valid();
  detail::check_same_rank(p.sig().rank(), q.sig().rank());
  if (!subgroup_equal(p.gamma(), q.gamma())) return false;
  for (const auto& t : p.transversal())
    if (!q.member_s(t)) return false;
  for (const auto& t : q.transversal())
    if (!p.member_s(t)) return false;
  return true;
}

PairSpec minimal_transversal(const PairSpec& p) {
  p.require_valid();
  std::vector<GroupWord> sorted = p.transversal();
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  std::vector<GroupWord> kept;
  for (const auto& t : sorted) {
    const bool represented = std::any_of(kept.begin(), kept.end(), [&](const GroupWord& s) {
      return p.member_gamma(multiply(t, invert(s)));
    });
    if (!represented) kept.push_back(t);
  }
  return PairSpec(p.sig(), p.gamma_generators(), std::move(kept));
}

}  // namespace pathfusion
