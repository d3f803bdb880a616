#include "rummikub/oracle.hpp"

#include <algorithm>
#include <vector>

namespace rummikub {

namespace {

class Search {
public:
  Search(const Problem& problem, const OracleBudget& budget)
      : p_(problem.params),
        budget_(budget),
        free_(problem.hand),
        rem_(static_cast<std::size_t>(p_.n * p_.k), 0),
        unused_(rem_.size(), 0),
        jokersLeft_(problem.hand.jokers() + problem.table.jokers()),
        totalJokers_(jokersLeft_),
        tableJokers_(problem.table.jokers()) {
    for (int v = 1; v <= p_.n; ++v) {
      for (int s = 1; s <= p_.k; ++s) {
        rem(v, s) = problem.hand.count(v, s) + problem.table.count(v, s);
        remainingValue_ += v * rem(v, s);
      }
    }
  }

  OracleResult run() {
    visit(0);
    OracleResult out;
    out.nodes = nodes_;
    if (found_) {
      out.score = bestScore_;
      out.arrangement = best_;
    }
    return out;
  }

private:
  int& rem(int v, int s) { return rem_[(v - 1) * p_.k + (s - 1)]; }
  int& unused(int v, int s) { return unused_[(v - 1) * p_.k + (s - 1)]; }

  void take(int v, int s) {
    --rem(v, s);
    remainingValue_ -= v;
  }
  void untake(int v, int s) {
    ++rem(v, s);
    remainingValue_ += v;
  }

  // Joker-only sets absorb jokers that must still be placed.
  bool settleJokers(std::vector<RunPlacement>& extraRuns, std::vector<GroupPlacement>& extraGroups) {
    int placed = totalJokers_ - jokersLeft_;
    int needed = std::max(0, tableJokers_ - placed);
    if (needed == 0) return true;
    int runMax = p_.n >= kMinSetSize ? p_.n : 0;
    int groupMax = p_.k >= kMinSetSize ? p_.k : 0;
    int partMax = std::max(runMax, groupMax);
    if (partMax == 0) return false;
    for (int u = needed; u <= jokersLeft_; ++u) {
      // Any u >= 3 splits into parts of size 3..partMax except when partMax
      // is small; check by direct decomposition.
      std::vector<int> parts;
      int left = u;
      while (left > 0) {
        int part = std::min(left, partMax);
        if (left - part > 0 && left - part < kMinSetSize) part = left - kMinSetSize;
        if (part < kMinSetSize) break;
        parts.push_back(part);
        left -= part;
      }
      if (left != 0) continue;
      for (int part : parts) {
        if (part <= runMax) {
          RunPlacement r{1, 1, part, {}};
          for (int v = 1; v <= part; ++v) r.jokerValues.push_back(v);
          extraRuns.push_back(std::move(r));
        } else {
          extraGroups.push_back({1, {}, part});
        }
      }
      return true;
    }
    return false;
  }

  void leaf() {
    std::vector<RunPlacement> extraRuns;
    std::vector<GroupPlacement> extraGroups;
    if (!settleJokers(extraRuns, extraGroups)) return;
    if (found_ && score_ <= bestScore_) return;
    found_ = true;
    bestScore_ = score_;
    best_ = current_;
    best_.runs.insert(best_.runs.end(), extraRuns.begin(), extraRuns.end());
    best_.groups.insert(best_.groups.end(), extraGroups.begin(), extraGroups.end());
    best_.score = score_;
  }

  void visit(int pos) {
    if (++nodes_ > budget_.maxNodes) throw BudgetExceeded("oracle node budget exceeded");
    if (found_ && score_ + remainingValue_ <= bestScore_) return;
    const int cells = p_.n * p_.k;
    while (pos < cells && rem_[pos] == 0) ++pos;
    if (pos == cells) {
      leaf();
      return;
    }
    const int v = pos / p_.k + 1;
    const int s = pos % p_.k + 1;

    // Leave one copy unused (free copies only).
    if (unused(v, s) < free_.count(v, s)) {
      take(v, s);
      ++unused(v, s);
      visit(pos);
      --unused(v, s);
      untake(v, s);
    }

    // Open a group whose lowest real suit is s.
    take(v, s);
    score_ += v;
    std::vector<int> members{s};
    groupWith(pos, v, s + 1, members);
    score_ -= v;
    untake(v, s);

    // Open a run whose lowest real tile is (v, s); positions below v are jokers.
    for (int lead = 0; lead <= jokersLeft_ && lead < v; ++lead) {
      jokersLeft_ -= lead;
      take(v, s);
      score_ += v;
      RunPlacement run{s, v - lead, lead + 1, {}};
      for (int w = v - lead; w < v; ++w) run.jokerValues.push_back(w);
      extendRun(pos, run);
      score_ -= v;
      untake(v, s);
      jokersLeft_ += lead;
    }
  }

  void groupWith(int pos, int v, int nextSuit, std::vector<int>& members) {
    int reals = static_cast<int>(members.size());
    for (int x = 0; x <= jokersLeft_ && reals + x <= p_.k; ++x) {
      if (reals + x < kMinSetSize) continue;
      jokersLeft_ -= x;
      current_.groups.push_back({v, members, x});
      visit(pos);
      current_.groups.pop_back();
      jokersLeft_ += x;
    }
    for (int t = nextSuit; t <= p_.k; ++t) {
      if (rem(v, t) == 0) continue;
      take(v, t);
      score_ += v;
      members.push_back(t);
      groupWith(pos, v, t + 1, members);
      members.pop_back();
      score_ -= v;
      untake(v, t);
    }
  }

  void extendRun(int pos, RunPlacement& run) {
    if (run.length >= kMinSetSize) {
      current_.runs.push_back(run);
      visit(pos);
      current_.runs.pop_back();
    }
    const int w = run.start + run.length;
    if (w > p_.n) return;
    if (rem(w, run.suit) > 0) {
      take(w, run.suit);
      score_ += w;
      ++run.length;
      extendRun(pos, run);
      --run.length;
      score_ -= w;
      untake(w, run.suit);
    }
    if (jokersLeft_ > 0) {
      --jokersLeft_;
      ++run.length;
      run.jokerValues.push_back(w);
      extendRun(pos, run);
      run.jokerValues.pop_back();
      --run.length;
      ++jokersLeft_;
    }
  }

  TileSetParams p_;
  OracleBudget budget_;
  const Hand& free_;
  std::vector<int> rem_;
  std::vector<int> unused_;
  int jokersLeft_;
  int totalJokers_;
  int tableJokers_;
  int remainingValue_ = 0;
  int score_ = 0;
  std::uint64_t nodes_ = 0;

  Arrangement current_;
  bool found_ = false;
  int bestScore_ = 0;
  Arrangement best_;
};

}  // namespace

OracleResult oracleSolve(const Problem& problem, const OracleBudget& budget) {
  problem.validate();
  if (budget.maxTiles <= 0 || budget.maxNodes == 0) {
    throw std::invalid_argument("oracle budget must be positive");
  }
  int tiles = problem.hand.size() + problem.table.size();
  if (tiles > budget.maxTiles) {
    throw BudgetExceeded("problem has " + std::to_string(tiles) + " tiles, oracle budget is " +
                         std::to_string(budget.maxTiles));
  }
  return Search(problem, budget).run();
}

std::optional<int> oracleMaxScore(const Problem& problem, const OracleBudget& budget) {
  return oracleSolve(problem, budget).score;
}

}  // namespace rummikub
