#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pathfusion/pairs.hpp"

using namespace pathfusion;

namespace {
const Signature rank1(1);
const Signature rank2(2);

GroupWord gw(Signature sig, const char* text) { return GroupWord::parse(sig, text); }
PathWord pw(Signature sig, const char* text) { return PathWord::parse(sig, text); }

PairSpec make_pair(Signature sig, std::initializer_list<const char*> gamma,
                   std::initializer_list<const char*> transversal) {
  std::vector<GroupWord> gens, trans;
  for (const char* g : gamma) gens.push_back(GroupWord::parse(sig, g));
  for (const char* t : transversal) trans.push_back(GroupWord::parse(sig, t));
  return PairSpec(sig, std::move(gens), std::move(trans));
}

// Random pair anchored at the identity, so Gamma is contained in S and the
// tree-convexity decision applies.
PairSpec random_anchored_pair(oracles::Rng& rng, Signature sig, int max_len) {
  std::vector<GroupWord> gens, trans{GroupWord(sig)};
  const int gen_count = static_cast<int>(rng.below(3));
  for (int i = 0; i < gen_count; ++i) gens.push_back(oracles::random_group_word(rng, sig, max_len));
  const int extra = static_cast<int>(rng.below(3));
  for (int i = 0; i < extra; ++i) trans.push_back(oracles::random_group_word(rng, sig, max_len));
  return PairSpec(sig, std::move(gens), std::move(trans));
}

int max_input_length(const PairSpec& p) {
  std::size_t max_len = 0;
  for (const auto& w : p.gamma_generators()) max_len = std::max(max_len, w.size());
  for (const auto& w : p.transversal()) max_len = std::max(max_len, w.size());
  return static_cast<int>(max_len);
}
}  // namespace

TEST_SUITE("pairs") {
  TEST_CASE("is_connected") {
    CHECK_FALSE(is_connected(make_pair(rank1, {"a1.a1"}, {"1"})));
    CHECK(is_connected(make_pair(rank1, {"a1.a1"}, {"1", "a1"})));
    CHECK_FALSE(is_connected(make_pair(rank2, {}, {"1", "a1.a2"})));
  }

  TEST_CASE("validate_pair") {
    const auto trivial = make_pair(rank2, {}, {"1"});
    CHECK(trivial.valid());
    CHECK(validate_pair(trivial) == ValidationResult{true, true, true});

    const auto off_axis = make_pair(rank2, {"a1"}, {"a2"});
    CHECK_FALSE(validate_pair(off_axis).contains_gamma);
    CHECK_FALSE(off_axis.valid());

    const auto gappy = make_pair(rank1, {"a1.a1"}, {"1"});
    CHECK(validate_pair(gappy).contains_gamma);
    CHECK_FALSE(validate_pair(gappy).connected);
    CHECK_THROWS_AS(gappy.require_valid(), InvalidPairError);

    CHECK_THROWS_AS(PairSpec(rank1, {}, {}), DomainError);
  }

  TEST_CASE("in_subcategory") {
    const auto p = make_pair(rank2, {}, {"1", "a1"});
    CHECK(in_subcategory(PathWord(rank2), p));
    CHECK(in_subcategory(pw(rank2, "a1.A1"), p));
    CHECK_FALSE(in_subcategory(pw(rank2, "a1"), p));
    CHECK_THROWS_AS(in_subcategory(pw(rank1, "a1"), make_pair(rank1, {"a1.a1"}, {"1"})),
                    InvalidPairError);
  }

  TEST_CASE("realize") {
    const auto only_unit = realize(make_pair(rank2, {}, {"1"}), 4);
    CHECK(only_unit.words() == std::vector<PathWord>{PathWord(rank2)});

    const auto bounce = realize(make_pair(rank2, {}, {"1", "a1"}), 4);
    CHECK(bounce.words() == std::vector<PathWord>{PathWord(rank2), pw(rank2, "a1.A1"),
                                                  pw(rank2, "a1.A1.a1.A1")});
    // same instance seen inside the rank-1 alphabet
    const auto bounce1 = realize(make_pair(rank1, {}, {"1", "a1"}), 4);
    CHECK(bounce1.size() == 3);

    const auto axis = realize(make_pair(rank2, {"a1"}, {"1"}), 2);
    REQUIRE(axis.size() == 7);
    for (const auto& w : axis.words())
      for (const Letter l : w.letters()) CHECK(l.index() == 1);
  }

  TEST_CASE("realize output is an in_subcategory filter of the ball") {
    const auto p = make_pair(rank2, {"a2.a1.A2"}, {"1", "a2", "a2.a1"});
    const auto set = realize(p, 4);
    for (const auto& w : enumerate_ball(rank2, 4))
      REQUIRE(set.contains(w) == in_subcategory(w, p));
  }

  TEST_CASE("realize is conjugation-closed and truncation-tensor-closed") {
    const auto p = make_pair(rank2, {"a1"}, {"1", "a2"});
    REQUIRE(p.valid());
    const auto set = realize(p, 4);
    for (const auto& x : set.words()) {
      CHECK(set.contains(conjugate(x)));
      for (const auto& y : set.words())
        for (const auto& [term, mult] : tensor(x, y)) {
          (void)mult;
          if (term.size() <= 4) REQUIRE(set.contains(term));
        }
    }
  }

  TEST_CASE("monotone consistency of realize") {
    const auto p = make_pair(rank2, {"a2.a1.A2"}, {"1", "a2"});
    const auto big = realize(p, 6);
    const auto small = realize(p, 4);
    CHECK(big.restricted(4) == small);
  }

  TEST_CASE("pair_equal") {
    const auto a = make_pair(rank1, {"a1"}, {"1"});
    const auto b = make_pair(rank1, {"a1"}, {"a1"});
    CHECK(pair_equal(a, b));
    CHECK(pair_equal(a, a));
    CHECK_FALSE(pair_equal(make_pair(rank1, {}, {"1", "a1"}), make_pair(rank1, {}, {"1"})));
  }

  TEST_CASE("pair_equal implies equal realizations") {
    const auto a = make_pair(rank2, {"a2.a1.A2"}, {"1", "a2"});
    const auto b = make_pair(rank2, {"a2.a1.A2"}, {"1", "a2", "a2.a1"});
    REQUIRE(pair_equal(a, b));
    for (int radius = 0; radius <= 5; ++radius)
      CHECK(realize(a, radius) == realize(b, radius));
  }

  TEST_CASE("minimal_transversal") {
    const auto pruned = minimal_transversal(make_pair(rank2, {"a1"}, {"1", "a1", "a2"}));
    CHECK(pruned.transversal() ==
          std::vector<GroupWord>{GroupWord(rank2), gw(rank2, "a2")});

    const auto untouched = minimal_transversal(make_pair(rank2, {}, {"1", "a1"}));
    CHECK(untouched.transversal() ==
          std::vector<GroupWord>{GroupWord(rank2), gw(rank2, "a1")});

    // a2.a1 = (a2.a1.A2) * a2 lies in Gamma*a2, so only [1, a2] survives
    const auto folded =
        minimal_transversal(make_pair(rank2, {"a2.a1.A2"}, {"1", "a2", "a2.a1", "a2.a1.A2"}));
    CHECK(folded.transversal() ==
          std::vector<GroupWord>{GroupWord(rank2), gw(rank2, "a2")});
    CHECK(pair_equal(folded, make_pair(rank2, {"a2.a1.A2"}, {"1", "a2", "a2.a1"})));
  }

  TEST_CASE("is_connected agrees with the BFS oracle on random anchored pairs") {
    oracles::Rng rng(41);
    int connected_seen = 0;
    int disconnected_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const PairSpec p = random_anchored_pair(rng, rank2, 2);
      const int radius = std::max(1, 4 * max_input_length(p));
      const bool expected = oracles::bfs_connected_within_ball(p, radius);
      REQUIRE(is_connected(p) == expected);
      (expected ? connected_seen : disconnected_seen)++;
    }
    CHECK(connected_seen > 0);
    CHECK(disconnected_seen > 0);
  }

  TEST_CASE("IrrSet invariants are enforced") {
    CHECK_THROWS_AS(IrrSet(rank1, 2, {pw(rank1, "a1")}), DomainError);  // missing unit
    CHECK_THROWS_AS(IrrSet(rank1, 2, {PathWord(rank1), pw(rank1, "a1.a1.a1")}), DomainError);
    CHECK_THROWS_AS(IrrSet(rank2, 2, {PathWord(rank2), pw(rank2, "a1.a2")}), DomainError);
    const IrrSet ok(rank2, 2, {PathWord(rank2), pw(rank2, "a1.a2"), pw(rank2, "A2.A1")});
    CHECK(ok.size() == 3);
  }
}
