#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rummikub/arrangement.hpp"
#include "rummikub/tileset.hpp"

namespace rummikub {

struct OracleBudget {
  int maxTiles = 16;
  std::uint64_t maxNodes = 50'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::optional<int> score;  // nullopt: table tiles cannot all be placed
  std::optional<Arrangement> arrangement;
  std::uint64_t nodes = 0;
};

/// Exhaustive search: tiles are visited in (value, suit) order and each one is
/// left unused, opens a group with higher suits of its value, or opens a run
/// in its suit (jokers may pad either end). Throws BudgetExceeded.
OracleResult oracleSolve(const Problem& problem, const OracleBudget& budget = {});

std::optional<int> oracleMaxScore(const Problem& problem, const OracleBudget& budget = {});

}  // namespace rummikub
