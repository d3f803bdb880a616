#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rummikub/oracle.hpp"
#include "rummikub/solver.hpp"
#include "support.hpp"

using namespace rummikub;
using rummikub::testing::problem;
using rummikub::testing::randomProblem;

namespace {

const TileSetParams kGame{13, 4, 2, 2};
const TileSetParams kGameNoJokers{13, 4, 2, 0};

// Clubs are suit 2 in these fixtures.
const char* kFigure1 = "3:1 3:2 3:3 6:2 7:2 8:2 9:2";

SuitRunState state(std::vector<RunSymbol> slots) {
  std::sort(slots.begin(), slots.end());
  return {slots};
}

Problem permuteSuits(const Problem& p, const std::vector<int>& perm) {
  Hand h(p.params.n, p.params.k), t(p.params.n, p.params.k);
  for (int v = 1; v <= p.params.n; ++v) {
    for (int s = 1; s <= p.params.k; ++s) {
      h.setCount({v, perm[s - 1]}, p.hand.count(v, s));
      t.setCount({v, perm[s - 1]}, p.table.count(v, s));
    }
  }
  h.setJokers(p.hand.jokers());
  t.setJokers(p.table.jokers());
  return Problem::make(p.params, h, t);
}

}  // namespace

TEST_CASE("run symbols") {
  CHECK(RunSymbol::empty().length() == 0);
  CHECK(RunSymbol::single(true, false).length() == 1);
  CHECK(RunSymbol::pair(false, true, true).length() == 2);
  CHECK(RunSymbol::complete().length() == 3);
  CHECK(RunSymbol::pair(false, true, false).jokerAt(1));
  CHECK_FALSE(RunSymbol::pair(false, true, false).jokerAt(2));
  CHECK_FALSE(RunSymbol::pair(false, false, true).droppable());
  CHECK_FALSE(RunSymbol::single(true, false).droppable());
  CHECK(RunSymbol::single(false, false).droppable());
  for (std::uint8_t c = 0; c < RunSymbol::kAlphabetSize; ++c) CHECK(RunSymbol::fromCode(c).code() == c);

  int score = 0;
  auto s = RunSymbol::pair(false, false, false).extended(Fill::Free, 5, score);
  CHECK(s == RunSymbol::complete());
  CHECK(score == 12);
  s = RunSymbol::complete().extended(Fill::Joker, 6, score);
  CHECK(score == 0);
  s = RunSymbol::complete().extended(Fill::Mandatory, 6, score);
  CHECK(score == 6);
}

TEST_CASE("makeRuns: extend, restart or stop a pair") {
  auto out = makeRuns(state({RunSymbol::pair(false, false, false)}), 1, 0, 0, 5);
  auto find = [&](RunSymbol next) {
    return std::find_if(out.begin(), out.end(), [&](const RunTransition& t) { return t.next.slots[0] == next; });
  };
  auto extend = find(RunSymbol::complete());
  REQUIRE(extend != out.end());
  CHECK(extend->deferredScore == 12);
  auto restart = find(RunSymbol::single(false, false));
  REQUIRE(restart != out.end());
  CHECK(restart->deferredScore == 0);
  auto stop = find(RunSymbol::empty());
  REQUIRE(stop != out.end());
  CHECK(stop->freeUsed == 0);
}

TEST_CASE("makeRuns: joker positions score nothing") {
  auto out = makeRuns(state({RunSymbol::pair(false, true, false)}), 1, 0, 0, 5);
  auto it = std::find_if(out.begin(), out.end(),
                         [](const RunTransition& t) { return t.next.slots[0] == RunSymbol::complete(); });
  REQUIRE(it != out.end());
  CHECK(it->deferredScore == 8);
}

TEST_CASE("makeRuns: a tile may extend either slot") {
  auto out = makeRuns(state({RunSymbol::single(false, false), RunSymbol::complete()}), 1, 0, 0, 9);
  bool extendsShort = false, extendsLong = false;
  for (const auto& t : out) {
    if (t.moves[0].action == SlotAction::Extend) extendsShort = true;
    if (t.moves[1].action == SlotAction::Extend && t.moves[0].action != SlotAction::Extend) extendsLong = true;
  }
  CHECK(extendsShort);
  CHECK(extendsLong);
}

TEST_CASE("makeRuns: table tiles may not be dropped") {
  CHECK(makeRuns(state({RunSymbol::pair(false, false, true)}), 0, 0, 0, 5).empty());
  auto out = makeRuns(state({RunSymbol::pair(false, false, true)}), 0, 0, 1, 5);
  REQUIRE(out.size() == 1);
  CHECK(out[0].jokersUsed == 1);
  CHECK(out[0].deferredScore == 3 + 4);
}

TEST_CASE("per-suit state count") {
  CHECK(countReachableSuitStates(1) == 4);
  CHECK(countReachableSuitStates(2) == 10);
  for (int m = 1; m <= 6; ++m) CHECK(countReachableSuitStates(m) == tetrahedral(m));
}

TEST_CASE("max score examples") {
  CHECK(maxScore(problem(kGameNoJokers, kFigure1)) == 39);
  CHECK(maxScore(problem(kGame, "1:1 2:1")) == 0);
  CHECK(maxScore(problem(kGame, "6:2 7:2 8:2 9:2 10:2 8:2 9:2 10:2")) == 67);
  CHECK(maxScore(problem(kGame, "6:2 7:2", "8:2")) == 21);
  CHECK_FALSE(maxScore(problem(kGame, "", "5:1 5:2")).has_value());
  CHECK(maxScore(problem(kGame, "")) == 0);

  Hand all(13, 4);
  for (int v = 1; v <= 13; ++v)
    for (int s = 1; s <= 4; ++s) all.setCount({v, s}, 2);
  CHECK(maxScore(Problem::fromHand(kGameNoJokers, all)) == 728);
}

TEST_CASE("jokers") {
  CHECK(maxScore(problem(kGame, "3:1 3:2 J")) == 6);
  CHECK(maxScore(problem(kGame, "6:2 J 8:2")) == 14);
  // A joker on the table must be placed again.
  CHECK_FALSE(maxScore(problem(kGame, "", "J")).has_value());
  CHECK_FALSE(maxScore(problem(kGame, "", "J J")).has_value());
  CHECK(maxScore(problem(TileSetParams{13, 4, 2, 3}, "", "J J J")) == 0);
  CHECK(maxScore(problem(kGame, "5:1 5:2", "J")) == 10);
}

TEST_CASE("best arrangement") {
  Problem fig = problem(kGameNoJokers, kFigure1);
  Arrangement a = bestArrangement(fig);
  CHECK(a.score == 39);
  REQUIRE(a.runs.size() == 1);
  CHECK(a.runs[0] == RunPlacement{2, 6, 4, {}});
  REQUIRE(a.groups.size() == 1);
  CHECK(a.groups[0] == GroupPlacement{3, {1, 2, 3}, 0});
  CHECK(verifyArrangement(fig, a));

  Arrangement empty = bestArrangement(problem(kGame, ""));
  CHECK(empty.runs.empty());
  CHECK(empty.groups.empty());
  CHECK(empty.score == 0);

  CHECK_THROWS_AS(bestArrangement(problem(kGame, "", "5:1 5:2")), InfeasibleError);
  CHECK_THROWS_WITH(bestArrangement(problem(kGame, "", "5:1 5:2")), "table constraint unsatisfiable");
}

TEST_CASE("fully playable") {
  CHECK(isFullyPlayable(rummikub::testing::hand(kGame, "6:2 7:2 8:2 9:2"), kGame));
  CHECK_FALSE(isFullyPlayable(rummikub::testing::hand(kGame, "6:2 7:2"), kGame));
  CHECK(isFullyPlayable(rummikub::testing::hand(kGame, "6:2 7:2 J"), kGame));
  CHECK(isFullyPlayable(Hand(13, 4), kGame));
}

TEST_CASE("solver limits") {
  CHECK_THROWS_AS(maxScore(Problem::fromHand({5, 9, 1, 0}, Hand(5, 9))), std::invalid_argument);
  CHECK_THROWS_AS(maxScore(Problem::fromHand({5, 3, 9, 0}, Hand(5, 3))), std::invalid_argument);
}

TEST_CASE("agrees with the oracle on random problems") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 400; ++i) {
    TileSetParams p{3 + static_cast<int>(rng() % 6), 3 + static_cast<int>(rng() % 2),
                    1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 3)};
    Problem pr = randomProblem(rng, p, 3 + static_cast<int>(rng() % 10), 0.25, true);
    auto dp = maxScore(pr);
    CAPTURE(formatProblem(pr));
    REQUIRE(dp == oracleMaxScore(pr));
    if (dp) {
      Arrangement a = bestArrangement(pr);
      Verdict v = verifyArrangement(pr, a);
      CAPTURE(v.reason);
      CHECK(v.ok);
      CHECK(a.score == *dp);
    }
  }
}

TEST_CASE("memo modes and early stop agree") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    bool jokers = i % 2 == 1;
    TileSetParams p{6, 4, 2, jokers ? 2 : 0};
    Problem pr = randomProblem(rng, p, 4 + static_cast<int>(rng() % 9), jokers ? 0.2 : 0.0, jokers);
    auto base = maxScore(pr);
    CAPTURE(formatProblem(pr));
    CHECK(maxScore(pr, {MemoMode::Hashed, true}) == base);
    CHECK(maxScore(pr, {MemoMode::Hashed, false}) == base);
    CHECK(maxScore(pr, {MemoMode::Off, false}) == base);
    CHECK(maxScore(pr, {MemoMode::Off, true}) == base);
    if (!jokers) CHECK(maxScore(pr, {MemoMode::Dense, false}) == base);
    if (base) {
      CHECK(bestArrangement(pr, {MemoMode::Hashed, false}).score == *base);
    }
  }
}

TEST_CASE("dense memo is chosen for the plain alphabet") {
  SolveStats stats;
  maxScore(problem(kGameNoJokers, kFigure1), {}, &stats);
  CHECK(stats.denseMemo);
  maxScore(problem(kGame, "3:1 3:2 J"), {}, &stats);
  CHECK_FALSE(stats.denseMemo);
}

TEST_CASE("deterministic arrangements") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Problem pr = randomProblem(rng, kGame, 20, 0.1, true);
    auto first = maxScore(pr);
    if (!first) continue;
    CHECK(bestArrangement(pr) == bestArrangement(pr));
    CHECK(maxScore(pr) == first);
  }
}

TEST_CASE("score properties") {
  std::mt19937_64 rng(99);
  std::vector<int> perm{1, 2, 3, 4};
  for (int i = 0; i < 200; ++i) {
    Problem pr = randomProblem(rng, kGame, 6 + static_cast<int>(rng() % 20), 0.15, true);
    auto base = maxScore(pr);
    CAPTURE(formatProblem(pr));
    if (base) CHECK(*base <= handValue(pr.combined()));
    if (pr.table.empty() && base) {
      CHECK((*base == handValue(pr.hand)) ==
            (pr.hand.jokers() == 0 && isFullyPlayable(pr.hand, pr.params)));
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(maxScore(permuteSuits(pr, perm)) == base);

    Tile extra{1 + static_cast<int>(rng() % 13), 1 + static_cast<int>(rng() % 4)};
    if (pr.combined().count(extra) < pr.params.m && base) {
      Hand more = pr.hand;
      more.add(extra);
      auto grown = maxScore(Problem::make(pr.params, more, pr.table));
      REQUIRE(grown);
      CHECK(*grown >= *base);
    }
  }
}
