#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rummikub/tileset.hpp"

namespace rummikub {

using BigInt = boost::multiprecision::cpp_int;

/// Number of ways to form groups at one value with a single copy of each tile:
/// the empty formation plus every suit subset of size 3..k.
BigInt countGroupFormations(int k);

/// Tiles of one value left over after run extension.
struct GroupUsageQuery {
  std::vector<int> avail;      // free tiles per suit, may stay unused
  std::vector<int> mandatory;  // table tiles per suit, must be used
  int jokers = 0;              // jokers that may be spent on groups
};

/// Indexed by the number of jokers spent (0..query.jokers). Each entry is the
/// maximum number of real tiles placed in groups, or nullopt if no group
/// formation spending exactly that many jokers consumes every mandatory tile.
struct GroupUsageResult {
  std::vector<std::optional<int>> perJokerSpend;

  friend bool operator==(const GroupUsageResult&, const GroupUsageResult&) = default;
};

/// Reference semantics: exhaustive search over multisets of groups, each group
/// being a set of distinct suits plus joker slots with 3..k members in total.
GroupUsageResult maxGroupTiles(const GroupUsageQuery& query, const TileSetParams& params);

/// Closed form of maxGroupTiles. With g groups every suit supplies at most g
/// tiles, and a real/joker mix of size T fits into g groups iff 3g <= T <= k*g.
GroupUsageResult maxGroupTilesFast(const GroupUsageQuery& query, const TileSetParams& params);

/// The same closed form for a single joker spend; -1 when infeasible.
int maxGroupTilesForSpend(std::span<const int> avail, std::span<const int> mandatory, int spend,
                          int k);

struct GroupLayout {
  std::vector<int> suits;  // ascending, 1-based
  int jokers = 0;
};

/// Concrete groups that realize maxGroupTilesForSpend(avail, mandatory, spend).
/// Returns an empty optional when the spend is infeasible.
std::optional<std::vector<GroupLayout>> layoutGroups(std::span<const int> avail,
                                                     std::span<const int> mandatory, int spend,
                                                     int k);

}  // namespace rummikub
