#include "rummikub/groups.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace rummikub {

BigInt countGroupFormations(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  BigInt total = 1;
  BigInt binom = 1;  // C(k, i)
  for (int i = 1; i <= k; ++i) {
    binom = binom * (k - i + 1) / i;
    if (i >= kMinSetSize) total += binom;
  }
  return total;
}

namespace {

void checkQuery(const GroupUsageQuery& q, const TileSetParams& params) {
  if (static_cast<int>(q.avail.size()) != params.k ||
      static_cast<int>(q.mandatory.size()) != params.k) {
    throw std::invalid_argument("group query must have one entry per suit");
  }
  for (int i = 0; i < params.k; ++i) {
    if (q.avail[i] < 0 || q.mandatory[i] < 0 || q.avail[i] + q.mandatory[i] > params.m) {
      throw std::invalid_argument("group query counts out of range");
    }
  }
  if (q.jokers < 0) throw std::invalid_argument("negative joker count");
}

struct Shape {
  unsigned mask;
  int jokers;
};

}  // namespace

GroupUsageResult maxGroupTiles(const GroupUsageQuery& query, const TileSetParams& params) {
  checkQuery(query, params);
  const int k = params.k;
  if (k > 16) throw std::invalid_argument("brute-force group search supports k <= 16");

  std::vector<Shape> shapes;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int reals = std::popcount(mask);
    for (int x = 0; x <= query.jokers && reals + x <= k; ++x) {
      if (reals + x >= kMinSetSize) shapes.push_back({mask, x});
    }
  }

  // Closure over reachable (per-suit usage, jokers spent) states: every
  // multiset of groups maps to exactly one such state. States are mixed-radix
  // codes, suit 0 least significant, jokers most significant.
  std::vector<int> cap(k);
  std::vector<std::size_t> stride(k + 1);
  std::size_t states = 1;
  for (int i = 0; i < k; ++i) {
    cap[i] = query.avail[i] + query.mandatory[i];
    stride[i] = states;
    states *= static_cast<std::size_t>(cap[i] + 1);
  }
  stride[k] = states;
  states *= static_cast<std::size_t>(query.jokers + 1);

  std::vector<char> seen(states, 0);
  std::vector<std::size_t> frontier{0};
  seen[0] = 1;
  std::vector<int> use(k + 1);
  while (!frontier.empty()) {
    std::size_t cur = frontier.back();
    frontier.pop_back();
    for (int i = 0; i <= k; ++i) use[i] = static_cast<int>(cur / stride[i] % (i < k ? cap[i] + 1 : query.jokers + 1));
    for (const Shape& sh : shapes) {
      bool ok = use[k] + sh.jokers <= query.jokers;
      std::size_t next = cur + stride[k] * static_cast<std::size_t>(sh.jokers);
      for (int i = 0; ok && i < k; ++i) {
        if (sh.mask & (1u << i)) {
          ok = use[i] < cap[i];
          next += stride[i];
        }
      }
      if (ok && !seen[next]) {
        seen[next] = 1;
        frontier.push_back(next);
      }
    }
  }

  GroupUsageResult result;
  result.perJokerSpend.assign(query.jokers + 1, std::nullopt);
  for (std::size_t code = 0; code < states; ++code) {
    if (!seen[code]) continue;
    bool coversTable = true;
    int reals = 0;
    for (int i = 0; i < k; ++i) {
      int u = static_cast<int>(code / stride[i] % (cap[i] + 1));
      coversTable = coversTable && u >= query.mandatory[i];
      reals += u;
    }
    if (!coversTable) continue;
    auto& slot = result.perJokerSpend[code / stride[k]];
    if (!slot || *slot < reals) slot = reals;
  }
  return result;
}

namespace {

// Largest real-tile total for exactly `groups` groups, or -1.
int bestForGroupCount(std::span<const int> avail, std::span<const int> mandatory, int spend,
                      int k, int groups) {
  int sumMandatory = 0;
  int hi = 0;
  for (std::size_t i = 0; i < avail.size(); ++i) {
    if (mandatory[i] > groups) return -1;
    sumMandatory += mandatory[i];
    hi += std::min(avail[i] + mandatory[i], groups);
  }
  if (groups == 0) return (sumMandatory == 0 && spend == 0) ? 0 : -1;
  hi = std::min(hi, k * groups - spend);
  int lo = std::max({sumMandatory, kMinSetSize * groups - spend, 0});
  return lo <= hi ? hi : -1;
}

}  // namespace

int maxGroupTilesForSpend(std::span<const int> avail, std::span<const int> mandatory, int spend,
                          int k) {
  int total = 0;
  for (std::size_t i = 0; i < avail.size(); ++i) total += avail[i] + mandatory[i];
  int best = -1;
  for (int g = 0; g <= (total + spend) / kMinSetSize; ++g) {
    best = std::max(best, bestForGroupCount(avail, mandatory, spend, k, g));
  }
  return best;
}

GroupUsageResult maxGroupTilesFast(const GroupUsageQuery& query, const TileSetParams& params) {
  checkQuery(query, params);
  GroupUsageResult result;
  result.perJokerSpend.reserve(query.jokers + 1);
  for (int s = 0; s <= query.jokers; ++s) {
    int best = maxGroupTilesForSpend(query.avail, query.mandatory, s, params.k);
    result.perJokerSpend.push_back(best < 0 ? std::nullopt : std::optional<int>(best));
  }
  return result;
}

std::optional<std::vector<GroupLayout>> layoutGroups(std::span<const int> avail,
                                                     std::span<const int> mandatory, int spend,
                                                     int k) {
  const int best = maxGroupTilesForSpend(avail, mandatory, spend, k);
  if (best < 0) return std::nullopt;
  int total = 0;
  for (std::size_t i = 0; i < avail.size(); ++i) total += avail[i] + mandatory[i];

  int groups = 0;
  while (bestForGroupCount(avail, mandatory, spend, k, groups) != best) {
    if (++groups > (total + spend) / kMinSetSize) {
      throw std::logic_error("group layout inconsistent with closed form");
    }
  }
  std::vector<GroupLayout> out(groups);
  if (groups == 0) return out;

  const int suitCount = static_cast<int>(avail.size());
  std::vector<int> take(suitCount);
  int sum = 0;
  for (int i = 0; i < suitCount; ++i) {
    take[i] = std::min(avail[i] + mandatory[i], groups);
    sum += take[i];
  }
  for (int i = suitCount - 1; i >= 0 && sum > best; --i) {
    int drop = std::min(sum - best, take[i] - mandatory[i]);
    take[i] -= drop;
    sum -= drop;
  }

  // Round-robin keeps suits distinct within a group because take[i] <= groups.
  int slot = 0;
  for (int i = 0; i < suitCount; ++i) {
    for (int c = 0; c < take[i]; ++c) {
      out[slot].suits.push_back(i + 1);
      slot = (slot + 1) % groups;
    }
  }
  int jokersLeft = spend;
  for (auto& g : out) {
    int need = std::max(0, kMinSetSize - static_cast<int>(g.suits.size()));
    g.jokers = need;
    jokersLeft -= need;
  }
  for (auto& g : out) {
    int room = k - static_cast<int>(g.suits.size()) - g.jokers;
    int add = std::min(room, jokersLeft);
    g.jokers += add;
    jokersLeft -= add;
  }
  if (jokersLeft != 0) throw std::logic_error("group layout could not place all jokers");
  for (auto& g : out) std::sort(g.suits.begin(), g.suits.end());
  return out;
}

}  // namespace rummikub
