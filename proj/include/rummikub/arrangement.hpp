#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rummikub/tileset.hpp"

namespace rummikub {

/// Penalty charged per joker left unplaced, reported separately from the score.
inline constexpr int kUnplacedJokerPenalty = 25;

struct RunPlacement {
  int suit = 1;
  int start = 1;
  int length = 0;
  std::vector<int> jokerValues;  // positions (tile values) held by jokers, ascending

  friend auto operator<=>(const RunPlacement&, const RunPlacement&) = default;
};

struct GroupPlacement {
  int value = 1;
  std::vector<int> suits;  // real members, ascending
  int jokers = 0;

  friend auto operator<=>(const GroupPlacement&, const GroupPlacement&) = default;
};

struct Arrangement {
  std::vector<RunPlacement> runs;
  std::vector<GroupPlacement> groups;
  int score = 0;

  int jokersPlaced() const;
  /// Real tiles consumed per (value, suit), as a hand.
  Hand usage(int n, int k) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

/// Sum of real tile values over every run and group.
int arrangementScore(const Arrangement& arrangement);

/// kUnplacedJokerPenalty for every joker of the problem the arrangement leaves unplaced.
int jokerPenalty(const Problem& problem, const Arrangement& arrangement);

struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks set shapes, supply bounds, table coverage, joker bounds and the
/// declared score. Shares nothing with the solvers beyond the tile types.
Verdict verifyArrangement(const Problem& problem, const Arrangement& arrangement);

/// Human-readable lines: `RUN suit=<s> start=<v> len=<L> jokers=<positions>`
/// and `GROUP value=<v> suits=<s1,s2,...> jokers=<count>`.
std::vector<std::string> formatArrangement(const Arrangement& arrangement);

}  // namespace rummikub
