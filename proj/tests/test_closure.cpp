#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pathfusion/closure.hpp"

using namespace pathfusion;

namespace {
const Signature rank1(1);
const Signature rank2(2);

PathWord pw(Signature sig, const char* text) { return PathWord::parse(sig, text); }
GroupWord gw(Signature sig, const char* text) { return GroupWord::parse(sig, text); }

std::vector<PathWord> gens(Signature sig, std::initializer_list<const char*> words) {
  std::vector<PathWord> out;
  for (const char* w : words) out.push_back(PathWord::parse(sig, w));
  return out;
}

// Keep applying conjugation and every binary tensor until nothing new fits
// under the cutoff; no worklist bookkeeping to share bugs with closure().
std::vector<PathWord> closure_fixpoint_oracle(Signature sig, const std::vector<PathWord>& seed,
                                              int cutoff) {
  std::vector<PathWord> elems{PathWord(sig)};
  for (const auto& g : seed) elems.push_back(g);
  std::sort(elems.begin(), elems.end(), CanonicalLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PathWord> fresh;
    for (const auto& x : elems) {
      const PathWord c = conjugate(x);
      if (!std::binary_search(elems.begin(), elems.end(), c, CanonicalLess{}))
        fresh.push_back(c);
      for (const auto& y : elems)
        for (const auto& [term, mult] : tensor(x, y)) {
          (void)mult;
          if (term.size() <= static_cast<std::size_t>(cutoff) &&
              !std::binary_search(elems.begin(), elems.end(), term, CanonicalLess{}))
            fresh.push_back(term);
        }
    }
    if (!fresh.empty()) {
      changed = true;
      elems.insert(elems.end(), fresh.begin(), fresh.end());
      std::sort(elems.begin(), elems.end(), CanonicalLess{});
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    }
  }
  return elems;
}
}  // namespace

TEST_SUITE("closure") {
  TEST_CASE("closure of nothing is the unit") {
    const auto result = closure(rank2, {}, 5);
    CHECK(result.set.words() == std::vector<PathWord>{PathWord(rank2)});
    CHECK(result.saturated);
  }

  TEST_CASE("closure of the basic loop") {
    const auto result = closure(rank1, gens(rank1, {"a1.A1"}), 4);
    CHECK(result.set.words() == std::vector<PathWord>{PathWord(rank1), pw(rank1, "a1.A1"),
                                                      pw(rank1, "a1.A1.a1.A1")});
    CHECK_FALSE(result.saturated);
  }

  TEST_CASE("closure of the fundamental object saturates the rank-1 ball") {
    const auto result = closure(rank1, gens(rank1, {"a1"}), 2);
    const auto ball = enumerate_ball(rank1, 2);
    CHECK(result.set.words() == ball);
    CHECK(result.set.size() == 7);
  }

  TEST_CASE("closure matches the brute-force fixpoint oracle") {
    const std::vector<std::vector<PathWord>> instances = {
        gens(rank2, {"a1.A1"}),
        gens(rank2, {"a1"}),
        gens(rank2, {"a2.a1.A2"}),
        gens(rank2, {"a1.A1", "a2.A2"}),
        gens(rank2, {"a1.a2"}),
    };
    for (const auto& seed : instances)
      for (int cutoff = 3; cutoff <= 5; ++cutoff) {
        const auto expected = closure_fixpoint_oracle(rank2, seed, cutoff);
        REQUIRE(closure(rank2, seed, cutoff).set.words() == expected);
      }
  }

  TEST_CASE("closure is independent of generator order") {
    const auto forward = closure(rank2, gens(rank2, {"a1.A1", "a2.A2", "a1.a2"}), 6);
    const auto backward = closure(rank2, gens(rank2, {"a1.a2", "a2.A2", "a1.A1"}), 6);
    CHECK(forward.set.words() == backward.set.words());
  }

  TEST_CASE("closure errors") {
    CHECK_THROWS_AS(closure(rank1, gens(rank1, {"a1.a1.a1"}), 2), DomainError);
    CHECK_THROWS_AS(closure(rank1, gens(rank1, {"a1"}), 4, 5), CapacityError);
  }

  TEST_CASE("extract_pair") {
    const auto bounce = extract_pair(rank2, gens(rank2, {"a1.A1"}));
    CHECK(bounce.gamma_generators().empty());
    CHECK(bounce.transversal() == std::vector<GroupWord>{GroupWord(rank2), gw(rank2, "a1")});
    CHECK(bounce.valid());

    const auto axis = extract_pair(rank2, gens(rank2, {"a1"}));
    CHECK(axis.gamma_generators() == std::vector<GroupWord>{gw(rank2, "a1")});
    CHECK(axis.transversal() == std::vector<GroupWord>{GroupWord(rank2)});

    // prefix endpoints are 1, a2, a2.a1, a2.a1.A2; the endpoint joins
    // Gamma*1 and a2.a1 joins Gamma*a2, so the coset dedup keeps [1, a2]
    const auto zig = extract_pair(rank2, gens(rank2, {"a2.a1.A2"}));
    CHECK(zig.gamma_generators() == std::vector<GroupWord>{gw(rank2, "a2.a1.A2")});
    CHECK(zig.transversal() == std::vector<GroupWord>{GroupWord(rank2), gw(rank2, "a2")});
    CHECK(pair_equal(zig, PairSpec(rank2, {gw(rank2, "a2.a1.A2")},
                                   {GroupWord(rank2), gw(rank2, "a2"), gw(rank2, "a2.a1")})));

    const auto empty = extract_pair(rank2, {});
    CHECK(empty.gamma_generators().empty());
    CHECK(empty.transversal() == std::vector<GroupWord>{GroupWord(rank2)});
    CHECK(empty.valid());
  }

  TEST_CASE("extract_pair is stable under closure") {
    const std::vector<std::vector<PathWord>> instances = {
        gens(rank2, {"a1.A1"}),
        gens(rank2, {"a2.a1.A2"}),
        gens(rank2, {"a1.a2"}),
        gens(rank2, {"a1.A1", "a2.A2"}),
    };
    for (const auto& seed : instances) {
      const auto direct = extract_pair(rank2, seed);
      const auto through_closure = extract_pair(rank2, closure(rank2, seed, 8).set.words());
      REQUIRE(pair_equal(direct, through_closure));
    }
  }

  TEST_CASE("closure words all satisfy the extracted pair's membership") {
    const auto seed = gens(rank2, {"a2.a1.A2"});
    const auto pair = extract_pair(rank2, seed);
    const auto result = closure(rank2, seed, 8);
    for (const auto& w : result.set.words()) REQUIRE(in_subcategory(w, pair));
  }
}
