#include <functional>

#include "doctest.h"
#include "rummikub/counting.hpp"
#include "rummikub/solver.hpp"

using namespace rummikub;

namespace {

// Winning counts per hand size by visiting every hand of the universe.
std::vector<BigInt> bruteForceWinning(const TileSetParams& p) {
  std::vector<BigInt> out(p.plainTiles() + 1, 0);
  Hand h(p.n, p.k);
  std::function<void(int, int)> rec = [&](int cell, int size) {
    if (cell == p.tileTypes()) {
      if (isFullyPlayable(h, p)) ++out[size];
      return;
    }
    Tile t{cell / p.k + 1, cell % p.k + 1};
    for (int c = 0; c <= p.m; ++c) {
      h.setCount(t, c);
      rec(cell + 1, size + c);
    }
    h.setCount(t, 0);
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("total hands") {
  TileSetParams game{13, 4, 2, 0};
  CHECK(totalHands(game, 14) == BigInt("37418772170780"));
  CHECK(totalHands(game, 26) == BigInt("17862050779716207204"));
  CHECK(totalHands({2, 2, 1, 0}, 2) == 6);
  CHECK(totalHands(game, 0) == 1);
  CHECK(totalHands(game, 104) == 1);
  CHECK_THROWS_AS(totalHands(game, 105), std::out_of_range);
  CHECK_THROWS_AS(totalHands(game, -1), std::out_of_range);

  for (TileSetParams p : {TileSetParams{2, 2, 1, 0}, TileSetParams{5, 3, 2, 0}, game}) {
    BigInt sum = 0;
    for (const auto& c : handCountPolynomial(p)) sum += c;
    BigInt expected = boost::multiprecision::pow(BigInt(p.m + 1), p.tileTypes());
    CHECK(sum == expected);
  }
}

TEST_CASE("partitions into 3, 4 and 5") {
  CHECK(partitionsInto345(3) == std::vector<std::vector<int>>{{3}});
  CHECK(partitionsInto345(14) == std::vector<std::vector<int>>{{3, 3, 3, 5}, {3, 3, 4, 4}, {4, 5, 5}});
  CHECK(partitionsInto345(1).empty());
  CHECK(partitionsInto345(2).empty());
  CHECK(partitionsInto345(0) == std::vector<std::vector<int>>{{}});
  for (int t = 3; t <= 1000; ++t) CHECK_FALSE(partitionsInto345(t).empty());
}

TEST_CASE("candidate catalog") {
  auto count = [](const std::vector<CandidateSet>& sets, CandidateSet::Kind kind) {
    return std::count_if(sets.begin(), sets.end(), [&](const CandidateSet& c) { return c.kind == kind; });
  };
  auto game = catalogSets({13, 4, 2, 0});
  CHECK(count(game, CandidateSet::Kind::Run) == 120);
  CHECK(count(game, CandidateSet::Kind::Group) == 65);
  auto tiny = catalogSets({3, 3, 1, 0});
  CHECK(count(tiny, CandidateSet::Kind::Run) == 3);
  CHECK(count(tiny, CandidateSet::Kind::Group) == 3);
  auto five = catalogSets({5, 5, 1, 0});
  CHECK(std::any_of(five.begin(), five.end(), [](const CandidateSet& c) {
    return c.kind == CandidateSet::Kind::Group && c.size == 5;
  }));
  for (const auto& c : game) {
    CHECK(static_cast<int>(c.tiles().size()) == c.size);
    CHECK(c.size >= 3);
    CHECK(c.size <= 5);
  }
}

TEST_CASE("winning hands examples") {
  CHECK(countWinningHands({3, 3, 1, 0}, 3) == 6);
  CHECK(countWinningHands({3, 3, 1, 0}, 9) == 1);
  CHECK(countWinningHands({4, 3, 2, 0}, 24) == 1);
  CHECK(countWinningHands({4, 3, 2, 0}, 0) == 1);
  CHECK(countWinningHands({4, 3, 2, 0}, 2) == 0);
}

TEST_CASE("both methods agree with brute force on toy universes") {
  for (TileSetParams p : {TileSetParams{3, 3, 1, 0}, TileSetParams{4, 2, 2, 0}, TileSetParams{4, 3, 1, 0},
                          TileSetParams{3, 3, 2, 0}}) {
    auto brute = bruteForceWinning(p);
    auto automaton = winningHandsByAutomaton(p);
    for (int t = 0; t <= p.plainTiles(); ++t) {
      CAPTURE(t);
      CHECK(countWinningHands(p, t) == brute[t]);
      CHECK(automaton[t] == brute[t]);
    }
  }
}

TEST_CASE("methods agree on a mid-size universe") {
  TileSetParams p{5, 4, 2, 0};
  auto automaton = winningHandsByAutomaton(p);
  for (int t : {3, 6, 9, 12}) CHECK(countWinningHands(p, t) == automaton[t]);
  for (int t = p.plainTiles() - 4; t <= p.plainTiles(); ++t) CHECK(automaton[t] == totalHands(p, t));
}

TEST_CASE("dedup is independent of order, shards and threads") {
  TileSetParams p{6, 4, 2, 0};
  for (int t : {9, 12}) {
    BigInt base = countWinningHands(p, t);
    CHECK(countWinningHands(p, t, {1, 1, true}) == base);
    CHECK(countWinningHands(p, t, {1, 7, false}) == base);
    CHECK(countWinningHands(p, t, {3, 5, true}) == base);
  }
}

TEST_CASE("dedup memory budget") {
  CountOptions tight;
  tight.maxKeys = 1000;  // t=9 has 10872 winning hands
  CHECK_THROWS_AS(countWinningHands({6, 4, 2, 0}, 9, tight), CountingBudgetExceeded);
  try {
    winningTable({6, 4, 2, 0}, 3, 9, WinningMethod::Partition, tight);
    FAIL("expected budget failure");
  } catch (const CountingBudgetExceeded& e) {
    CHECK(e.lastCompletedT() == 8);
  }
}

TEST_CASE("ratio rendering") {
  CHECK(formatRatio(6, 84) == "7.14e-2");
  CHECK(formatRatio(1, 1) == "1.00e0");
  CHECK(formatRatio(0, 5) == "0.00e0");
  CHECK(formatRatio(BigInt("10232524"), BigInt("37418772170780")) == "2.73e-7");
  CHECK(formatRatio(9995, 10000) == "1.00e0");
  CHECK(formatRatio(1, 8) == "1.25e-1");
  CHECK(formatRatio(1, 3) == "3.33e-1");
}

TEST_CASE("tables and csv") {
  auto totals = totalsTable({13, 4, 2, 0}, 14, 14);
  REQUIRE(totals.size() == 1);
  CHECK(formatCsv(totals) == "t,total,winning,ratio\n14,37418772170780,,\n");

  auto rows = winningTable({3, 3, 1, 0}, 3, 3, WinningMethod::Partition);
  CHECK(formatCsv(rows) == "t,total,winning,ratio\n3,84,6,7.14e-2\n");
  CHECK(winningTable({3, 3, 1, 0}, 0, 9) == winningTable({3, 3, 1, 0}, 0, 9, WinningMethod::Partition));
  CHECK_THROWS_AS(winningTable({3, 3, 1, 0}, 4, 3), std::out_of_range);
  CHECK_THROWS_AS(totalsTable({3, 3, 1, 0}, 0, 10), std::out_of_range);
}
