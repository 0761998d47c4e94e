#include "pathfusion/stallings.hpp"

#include <numeric>
#include <queue>
#include <unordered_map>
#include <utility>

namespace pathfusion {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving root.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

StallingsGraph StallingsGraph::build(Signature sig, std::span<const GroupWord> generators) {
  const std::size_t width = 2 * static_cast<std::size_t>(sig.rank());

  std::size_t total = 1;
  for (const auto& g : generators) {
    detail::check_letters(sig, g.letters());
    if (!g.empty()) total += g.size() - 1;
  }

  // Wedge of generator loops at the base, folded with a worklist of clashing
  // transitions and union-find vertex merging. Both orientations of every
  // edge are recorded so determinism conflicts surface in either direction.
  UnionFind uf(total);
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> trans(total);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> clashes;

  const auto insert_edge = [&](std::uint32_t u, std::uint32_t code, std::uint32_t v) {
    u = uf.find(u);
    const auto [it, fresh] = trans[u].try_emplace(code, v);
    if (!fresh && uf.find(it->second) != uf.find(v)) clashes.emplace_back(it->second, v);
  };

  std::uint32_t fresh_vertex = 1;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    std::uint32_t prev = 0;
    const auto letters = g.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const std::uint32_t next = (i + 1 == letters.size()) ? 0 : fresh_vertex++;
      insert_edge(prev, letters[i].code(), next);
      insert_edge(next, letters[i].inverse().code(), prev);
      prev = next;
    }
  }

  while (!clashes.empty()) {
    auto [x, y] = clashes.back();
    clashes.pop_back();
    x = uf.find(x);
    y = uf.find(y);
    if (x == y) continue;
    const std::uint32_t root = uf.unite(x, y);
    const std::uint32_t other = (root == x) ? y : x;
    if (trans[other].size() > trans[root].size()) std::swap(trans[other], trans[root]);
    for (const auto& [code, tgt] : trans[other]) insert_edge(root, code, tgt);
    trans[other] = {};
  }

  // Resolve transitions to root level.
  const std::uint32_t base = uf.find(0);
  for (std::uint32_t v = 0; v < total; ++v) {
    if (uf.find(v) != v) continue;
    for (auto& [code, tgt] : trans[v]) tgt = uf.find(tgt);
  }

  // Core-prune: drop non-base vertices with at most one incident edge end.
  std::vector<bool> dead(total, false);
  std::queue<std::uint32_t> prune;
  for (std::uint32_t v = 0; v < total; ++v)
    if (uf.find(v) == v && v != base && trans[v].size() <= 1) prune.push(v);
  while (!prune.empty()) {
    const std::uint32_t v = prune.front();
    prune.pop();
    if (dead[v] || trans[v].size() > 1) continue;
    dead[v] = true;
    if (trans[v].empty()) continue;
    const auto [code, tgt] = *trans[v].begin();
    trans[v].clear();
    if (tgt != v && !dead[tgt]) {
      trans[tgt].erase(code ^ 1u);
      if (tgt != base && trans[tgt].size() <= 1) prune.push(tgt);
    }
  }

  // Canonical relabeling: breadth-first from the base, letters ascending.
  std::unordered_map<std::uint32_t, std::uint32_t> label;
  std::vector<std::uint32_t> order;
  label.emplace(base, 0);
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t v = order[i];
    for (std::uint32_t code = 0; code < width; ++code) {
      const auto it = trans[v].find(code);
      if (it == trans[v].end()) continue;
      if (label.emplace(it->second, static_cast<std::uint32_t>(order.size())).second)
        order.push_back(it->second);
    }
  }

  std::vector<std::uint32_t> table(order.size() * width, npos);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [code, tgt] : trans[order[i]]) table[i * width + code] = label.at(tgt);

  return StallingsGraph(sig.rank(), std::move(table));
}

std::size_t StallingsGraph::edge_count() const noexcept {
  std::size_t count = 0;
  const std::size_t w = width();
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (std::size_t code = 0; code < w; code += 2)
      if (table_[v * w + code] != npos) ++count;
  return count;
}

bool StallingsGraph::accepts(std::span<const Letter> reduced) const noexcept {
  std::uint32_t v = 0;
  for (const Letter l : reduced) {
    if (l.code() >= width()) return false;
    v = table_[v * width() + l.code()];
    if (v == npos) return false;
  }
  return v == 0;
}

std::string StallingsGraph::to_dot() const {
  std::string out = "digraph stallings {\n  rankdir=LR;\n  node [shape=circle];\n"
                    "  0 [shape=doublecircle];\n";
  const std::size_t w = width();
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t code = 0; code < w; code += 2) {
      const std::uint32_t tgt = table_[v * w + code];
      if (tgt == npos) continue;
      out += "  " + std::to_string(v) + " -> " + std::to_string(tgt) +
             " [label=\"a" + std::to_string(code / 2 + 1) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

bool member_subgroup(const StallingsGraph& graph, const GroupWord& g) {
  return graph.accepts(g.letters());
}

bool member_coset_union(const StallingsGraph& graph, std::span<const GroupWord> transversal,
                        const GroupWord& g) {
  if (transversal.empty()) throw DomainError("member_coset_union: transversal must be nonempty");
  for (const auto& t : transversal)
    if (member_subgroup(graph, multiply(g, invert(t)))) return true;
  return false;
}

}  // namespace pathfusion
