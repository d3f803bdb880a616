#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rummikub/arrangement.hpp"
#include "rummikub/tileset.hpp"

namespace rummikub {

/// How a tile placed into a run slot was supplied.
enum class Fill : std::uint8_t { Free, Mandatory, Joker };

/// State of one run slot with the length clipped at 3. Incomplete runs keep
/// which of their positions are jokers (those score nothing once the run
/// completes) and whether they hold a table tile (they may not be dropped).
class RunSymbol {
public:
  static constexpr int kAlphabetSize = 14;

  constexpr RunSymbol() = default;

  static constexpr RunSymbol empty() { return RunSymbol(0); }
  static constexpr RunSymbol complete() { return RunSymbol(13); }
  static constexpr RunSymbol single(bool joker, bool mandatory) {
    return RunSymbol(static_cast<std::uint8_t>(1 + joker + 2 * mandatory));
  }
  /// `older` is the position at value-2, `newer` the one at value-1.
  static constexpr RunSymbol pair(bool olderJoker, bool newerJoker, bool mandatory) {
    return RunSymbol(static_cast<std::uint8_t>(5 + olderJoker + 2 * newerJoker + 4 * mandatory));
  }
  static RunSymbol fromCode(std::uint8_t code);

  /// 0, 1, 2, or 3 for "3 or more".
  constexpr int length() const { return code_ == 0 ? 0 : code_ <= 4 ? 1 : code_ <= 12 ? 2 : 3; }
  /// Joker flag of the position `back` values behind the current one (1 or 2).
  bool jokerAt(int back) const;
  bool mandatory() const;
  bool hasJoker() const { return jokerAt(1) || jokerAt(2); }
  /// A slot can be reset only if it is empty, complete, or holds no
  /// table tile and no joker.
  bool droppable() const { return length() == 0 || length() == 3 || (!mandatory() && !hasJoker()); }

  constexpr std::uint8_t code() const { return code_; }

  /// Appends one tile at `value`; `score` receives the points that become
  /// final with this tile.
  RunSymbol extended(Fill fill, int value, int& score) const;

  friend constexpr auto operator<=>(RunSymbol, RunSymbol) = default;

private:
  constexpr explicit RunSymbol(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

/// Multiset of the m run slots of one suit, kept sorted by symbol code.
struct SuitRunState {
  std::vector<RunSymbol> slots;

  static SuitRunState initial(int m) { return {std::vector<RunSymbol>(m, RunSymbol::empty())}; }

  friend auto operator<=>(const SuitRunState&, const SuitRunState&) = default;
};

enum class SlotAction : std::uint8_t {
  Stop,     // slot ends (or stays) at length 0
  Extend,   // slot continues with one tile (starts a run if empty)
  Restart,  // slot ends and a new run begins with one tile
};

struct SlotMove {
  RunSymbol from;
  SlotAction action = SlotAction::Stop;
  Fill fill = Fill::Free;

  friend auto operator<=>(const SlotMove&, const SlotMove&) = default;
};

struct RunTransition {
  SuitRunState next;
  int deferredScore = 0;  // points finalized at this value
  int committedTiles = 0;  // real tiles counted toward completed runs at this value
  int freeUsed = 0;
  int mandatoryUsed = 0;
  int jokersUsed = 0;
  std::vector<SlotMove> moves;  // one per slot, aligned with the source state's slots
};

/// Every distinct way to continue the runs of one suit at `value`, given the
/// free and table tiles of that (value, suit) and the jokers that may be spent.
/// Unused tiles are left for groups. Results are sorted and free of duplicate
/// outcomes.
std::vector<RunTransition> makeRuns(const SuitRunState& state, int availFree, int availMandatory,
                                    int jokersSpendable, int value);

/// Number of distinct per-suit states reachable from the all-empty state with
/// no table tiles and no jokers.
std::size_t countReachableSuitStates(int m);

/// (m+1)(m+2)(m+3)/6.
constexpr std::size_t tetrahedral(int m) {
  return static_cast<std::size_t>(m + 1) * (m + 2) * (m + 3) / 6;
}

enum class MemoMode {
  Auto,    // dense table for the plain alphabet when it is small, hashed otherwise
  Dense,
  Hashed,
  Off,     // plain recursion; exponential, for cross-checking only
};

struct SolverOptions {
  MemoMode memo = MemoMode::Auto;
  /// Stop scanning transitions once a node reaches its score upper bound.
  bool earlyStop = true;
};

struct SolveStats {
  std::size_t memoEntries = 0;
  std::size_t nodesExpanded = 0;
  bool denseMemo = false;
};

class InfeasibleError : public std::runtime_error {
public:
  InfeasibleError() : std::runtime_error("table constraint unsatisfiable") {}
};

/// Maximum total value of real tiles placed in runs and groups, using every
/// table tile. nullopt when the table tiles cannot all be placed.
std::optional<int> maxScore(const Problem& problem, const SolverOptions& options = {},
                            SolveStats* stats = nullptr);

/// An optimal arrangement. Among equal scores it prefers fewer jokers, then
/// fewer real tiles, then the smallest successor state encoding.
/// MemoMode::Off is treated as Auto. Throws InfeasibleError.
Arrangement bestArrangement(const Problem& problem, const SolverOptions& options = {});

/// True iff every tile of the hand, jokers included, can be placed.
bool isFullyPlayable(const Hand& hand, const TileSetParams& params);

}  // namespace rummikub
