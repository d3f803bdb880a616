#include "rummikub/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace rummikub {

int Arrangement::jokersPlaced() const {
  int total = 0;
  for (const auto& r : runs) total += static_cast<int>(r.jokerValues.size());
  for (const auto& g : groups) total += g.jokers;
  return total;
}

Hand Arrangement::usage(int n, int k) const {
  Hand used(n, k);
  for (const auto& r : runs) {
    for (int v = r.start; v < r.start + r.length; ++v) {
      if (std::find(r.jokerValues.begin(), r.jokerValues.end(), v) == r.jokerValues.end()) {
        used.add({v, r.suit});
      }
    }
  }
  for (const auto& g : groups) {
    for (int s : g.suits) used.add({g.value, s});
  }
  used.setJokers(jokersPlaced());
  return used;
}

int arrangementScore(const Arrangement& arrangement) {
  int score = 0;
  for (const auto& r : arrangement.runs) {
    for (int v = r.start; v < r.start + r.length; ++v) score += v;
    for (int v : r.jokerValues) score -= v;
  }
  for (const auto& g : arrangement.groups) score += g.value * static_cast<int>(g.suits.size());
  return score;
}

int jokerPenalty(const Problem& problem, const Arrangement& arrangement) {
  int available = problem.hand.jokers() + problem.table.jokers();
  return kUnplacedJokerPenalty * std::max(0, available - arrangement.jokersPlaced());
}

namespace {

Verdict fail(std::string reason) { return Verdict{false, std::move(reason)}; }

}  // namespace

Verdict verifyArrangement(const Problem& problem, const Arrangement& arrangement) {
  const auto& p = problem.params;
  std::vector<int> used(static_cast<std::size_t>(p.n * p.k), 0);
  auto at = [&](int v, int s) -> int& { return used[(s - 1) * p.n + (v - 1)]; };
  int jokers = 0;
  int score = 0;

  for (const auto& r : arrangement.runs) {
    std::string where = "run suit=" + std::to_string(r.suit) + " start=" + std::to_string(r.start);
    if (r.length < kMinSetSize) return fail(where + ": length " + std::to_string(r.length));
    if (r.suit < 1 || r.suit > p.k) return fail(where + ": suit out of range");
    if (r.start < 1 || r.start + r.length - 1 > p.n) return fail(where + ": values out of range");
    for (std::size_t i = 0; i < r.jokerValues.size(); ++i) {
      int v = r.jokerValues[i];
      if (v < r.start || v >= r.start + r.length) return fail(where + ": joker outside run");
      if (i > 0 && r.jokerValues[i - 1] >= v) return fail(where + ": joker positions not ascending");
    }
    jokers += static_cast<int>(r.jokerValues.size());
    for (int v = r.start; v < r.start + r.length; ++v) {
      bool joker = std::find(r.jokerValues.begin(), r.jokerValues.end(), v) != r.jokerValues.end();
      if (!joker) {
        ++at(v, r.suit);
        score += v;
      }
    }
  }

  for (const auto& g : arrangement.groups) {
    std::string where = "group value=" + std::to_string(g.value);
    if (g.value < 1 || g.value > p.n) return fail(where + ": value out of range");
    if (g.jokers < 0) return fail(where + ": negative jokers");
    int members = static_cast<int>(g.suits.size()) + g.jokers;
    if (members < kMinSetSize) return fail(where + ": only " + std::to_string(members) + " members");
    if (members > p.k) return fail(where + ": more members than suits");
    std::vector<int> suits = g.suits;
    std::sort(suits.begin(), suits.end());
    if (std::adjacent_find(suits.begin(), suits.end()) != suits.end()) {
      return fail(where + ": duplicate suit");
    }
    for (int s : suits) {
      if (s < 1 || s > p.k) return fail(where + ": suit out of range");
      ++at(g.value, s);
      score += g.value;
    }
    jokers += g.jokers;
  }

  for (int s = 1; s <= p.k; ++s) {
    for (int v = 1; v <= p.n; ++v) {
      int supply = problem.hand.count(v, s) + problem.table.count(v, s);
      std::string tile = std::to_string(v) + ":" + std::to_string(s);
      if (at(v, s) > supply) return fail("tile " + tile + " used more often than supplied");
      if (at(v, s) < problem.table.count(v, s)) return fail("table tile " + tile + " not used");
    }
  }
  if (jokers > problem.hand.jokers() + problem.table.jokers()) return fail("too many jokers used");
  if (jokers < problem.table.jokers()) return fail("table joker not used");
  if (score != arrangement.score) {
    return fail("declared score " + std::to_string(arrangement.score) + " but tiles sum to " +
                std::to_string(score));
  }
  return {};
}

std::vector<std::string> formatArrangement(const Arrangement& arrangement) {
  std::vector<std::string> lines;
  for (const auto& r : arrangement.runs) {
    std::ostringstream os;
    os << "RUN suit=" << r.suit << " start=" << r.start << " len=" << r.length << " jokers=";
    for (std::size_t i = 0; i < r.jokerValues.size(); ++i) os << (i ? "," : "") << r.jokerValues[i];
    lines.push_back(os.str());
  }
  for (const auto& g : arrangement.groups) {
    std::ostringstream os;
    os << "GROUP value=" << g.value << " suits=";
    for (std::size_t i = 0; i < g.suits.size(); ++i) os << (i ? "," : "") << g.suits[i];
    os << " jokers=" << g.jokers;
    lines.push_back(os.str());
  }
  return lines;
}

}  // namespace rummikub
