#include "doctest.h"
#include "rummikub/arrangement.hpp"
#include "support.hpp"

using namespace rummikub;
using rummikub::testing::problem;

namespace {
const TileSetParams kGame{13, 4, 2, 2};
}

TEST_CASE("verifier accepts valid sets") {
  Problem p = problem(kGame, "3:1 3:2 3:3 6:2 7:2 8:2 9:2");
  Arrangement a{{{2, 6, 4, {}}}, {}, 30};
  CHECK(verifyArrangement(p, a));
  a.groups.push_back({3, {1, 2, 3}, 0});
  a.score = 39;
  CHECK(verifyArrangement(p, a));
  CHECK(arrangementScore(a) == 39);
  CHECK(a.usage(13, 4).count(3, 2) == 1);
}

TEST_CASE("verifier rejects") {
  Problem p = problem(kGame, "3:1 3:2 3:3 3:3 6:2 7:2 8:2 9:2 J");
  auto reason = [&](const Arrangement& a) { return verifyArrangement(p, a).reason; };

  Verdict v = verifyArrangement(p, {{{2, 6, 2, {}}}, {}, 13});
  CHECK_FALSE(v);
  CHECK(v.reason.find("length") != std::string::npos);

  CHECK_FALSE(verifyArrangement(p, {{}, {{3, {3, 3, 1}, 0}}, 9}));
  CHECK(reason({{}, {{3, {1, 3, 3}, 0}}, 9}).find("suit") != std::string::npos);

  CHECK_FALSE(verifyArrangement(p, {{{2, 12, 3, {}}}, {}, 0}));   // leaves the board
  CHECK_FALSE(verifyArrangement(p, {{{2, 7, 4, {}}}, {}, 34}));   // 10:2 not held
  CHECK_FALSE(verifyArrangement(p, {{{2, 6, 4, {}}}, {}, 31}));   // wrong score
  CHECK_FALSE(verifyArrangement(p, {{}, {{3, {1, 2}, 2}}, 6}));   // one joker held
  CHECK_FALSE(verifyArrangement(p, {{}, {{3, {1, 2, 3, 4}, 1}}, 12}));  // larger than k
  CHECK(verifyArrangement(p, {{{2, 5, 5, {5}}}, {}, 30}));
  CHECK(verifyArrangement(p, {{{2, 6, 4, {7}}}, {}, 23}));
  CHECK_FALSE(verifyArrangement(p, {{{2, 6, 4, {10}}}, {}, 30}));
}

TEST_CASE("verifier enforces the table") {
  Problem p = problem(kGame, "6:2 7:2", "8:2");
  CHECK_FALSE(verifyArrangement(p, {}));
  CHECK(verifyArrangement(p, {{{2, 6, 3, {}}}, {}, 21}));
  Problem withJoker = problem(kGame, "6:2 7:2", "J");
  CHECK_FALSE(verifyArrangement(withJoker, {}));
  CHECK(verifyArrangement(withJoker, {{{2, 6, 3, {8}}}, {}, 13}));
}

TEST_CASE("joker penalty and formatting") {
  Problem p = problem(kGame, "6:2 7:2 J J");
  Arrangement a{{{2, 6, 3, {8}}}, {}, 13};
  CHECK(jokerPenalty(p, a) == kUnplacedJokerPenalty);
  CHECK(a.jokersPlaced() == 1);
  a.groups.push_back({4, {1, 2}, 1});
  auto lines = formatArrangement(a);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "RUN suit=2 start=6 len=3 jokers=8");
  CHECK(lines[1] == "GROUP value=4 suits=1,2 jokers=1");
  CHECK(formatArrangement({{{1, 1, 3, {}}}, {}, 6})[0] == "RUN suit=1 start=1 len=3 jokers=");
}
