#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rummikub/groups.hpp"
#include "rummikub/tileset.hpp"

namespace rummikub {

// Counting works over the plain tile set (n*k tile types, m copies each);
// the joker count of TileSetParams is ignored throughout this header.

/// Number of hands of size t: the coefficient of x^t in (1 + x + ... + x^m)^(n*k).
BigInt totalHands(const TileSetParams& params, int t);

/// Coefficients of (1 + x + ... + x^m)^(n*k), index = hand size.
std::vector<BigInt> handCountPolynomial(const TileSetParams& params);

/// Multisets of parts from {3, 4, 5} summing to t, each ascending, in
/// lexicographic order. t = 0 yields the single empty partition.
std::vector<std::vector<int>> partitionsInto345(int t);

struct CandidateSet {
  enum class Kind { Run, Group };
  Kind kind = Kind::Run;
  int suit = 0;    // runs
  int start = 0;   // runs
  int value = 0;   // groups
  std::vector<int> suits;  // groups, ascending
  int size = 0;

  std::vector<Tile> tiles() const;
};

/// Runs of length 3..5 (suit, length, start order) followed by groups of size
/// 3..min(k, 5) (value, then suit subset order).
std::vector<CandidateSet> catalogSets(const TileSetParams& params);

struct CountOptions {
  int threads = 1;
  /// The key space is split into this many disjoint shards; each shard is
  /// collected in its own pass, bounding peak memory.
  int shards = 1;
  /// Enumerate candidates in reverse catalog order (result must not change).
  bool reverseOrder = false;
  /// Upper bound on distinct keys held in memory per shard.
  std::size_t maxKeys = static_cast<std::size_t>(-1);
};

class CountingBudgetExceeded : public std::runtime_error {
public:
  CountingBudgetExceeded(const std::string& what, int lastCompletedT)
      : std::runtime_error(what), lastCompletedT_(lastCompletedT) {}
  int lastCompletedT() const { return lastCompletedT_; }

private:
  int lastCompletedT_;
};

/// Distinct hands of size t whose tiles can all be placed, found by covering
/// with every multiset of catalog sets whose sizes form a {3,4,5}-partition
/// of t and deduplicating the resulting hands.
BigInt countWinningHands(const TileSetParams& params, int t, const CountOptions& options = {});

/// Winning-hand counts for every t in 0..n*k*m at once. The scan moves value
/// by value and tracks, for each hand prefix, the set of run configurations
/// reachable with every tile so far placed; prefixes with equal sets merge.
std::vector<BigInt> winningHandsByAutomaton(const TileSetParams& params);

struct CountRow {
  int t = 0;
  BigInt total;
  std::optional<BigInt> winning;

  /// Winning / total in scientific notation with 3 significant digits.
  std::string ratio() const;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

enum class WinningMethod { Partition, Automaton };

std::vector<CountRow> winningTable(const TileSetParams& params, int tFrom, int tTo,
                                   WinningMethod method = WinningMethod::Automaton,
                                   const CountOptions& options = {});

/// Totals only; winning stays empty.
std::vector<CountRow> totalsTable(const TileSetParams& params, int tFrom, int tTo);

/// `d.dde<exp>` rendering of num/den, rounded half up. num must not exceed den.
std::string formatRatio(const BigInt& num, const BigInt& den);

/// Header `t,total,winning,ratio`; rows without a winning count leave the last
/// two fields empty.
std::string formatCsv(const std::vector<CountRow>& rows);

}  // namespace rummikub
