#pragma once

#include <random>
#include <string>

#include "rummikub/tileset.hpp"

namespace rummikub::testing {

inline std::string paramsLine(const TileSetParams& p) {
  return "params n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
         " m=" + std::to_string(p.m) + " j=" + std::to_string(p.j) + "\n";
}

// Tokens use the file grammar, e.g. "6:1 7:1 J".
inline Problem problem(const TileSetParams& p, const std::string& hand,
                       const std::string& table = "") {
  std::string text = paramsLine(p) + "hand " + hand + "\n";
  if (!table.empty()) text += "table " + table + "\n";
  return parseProblem(text);
}

inline Hand hand(const TileSetParams& p, const std::string& tokens) {
  return problem(p, tokens).hand;
}

// Random problem within the supply bounds; `tableShare` of the tiles go to the table.
inline Problem randomProblem(std::mt19937_64& rng, const TileSetParams& p, int size,
                             double tableShare, bool jokers) {
  Hand h(p.n, p.k), t(p.n, p.k);
  std::uniform_int_distribution<int> value(1, p.n), suit(1, p.k);
  std::bernoulli_distribution toTable(tableShare);
  for (int i = 0; i < size; ++i) {
    Tile tile{value(rng), suit(rng)};
    if (h.count(tile) + t.count(tile) >= p.m) continue;
    if (toTable(rng)) t.add(tile);
    else h.add(tile);
  }
  if (jokers) {
    int count = std::uniform_int_distribution<int>(0, p.j)(rng);
    for (int i = 0; i < count; ++i) {
      if (toTable(rng)) t.addJokers();
      else h.addJokers();
    }
  }
  return Problem::make(p, h, t);
}

}  // namespace rummikub::testing
