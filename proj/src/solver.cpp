#include "rummikub/solver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "rummikub/groups.hpp"

namespace rummikub {

RunSymbol RunSymbol::fromCode(std::uint8_t code) {
  if (code >= kAlphabetSize) throw std::out_of_range("run symbol code out of range");
  return RunSymbol(code);
}

bool RunSymbol::jokerAt(int back) const {
  if (code_ >= 1 && code_ <= 4) return back == 1 && ((code_ - 1) & 1);
  if (code_ >= 5 && code_ <= 12) return back == 2 ? ((code_ - 5) & 1) : back == 1 && ((code_ - 5) & 2);
  return false;
}

bool RunSymbol::mandatory() const {
  if (code_ >= 1 && code_ <= 4) return (code_ - 1) & 2;
  if (code_ >= 5 && code_ <= 12) return (code_ - 5) & 4;
  return false;
}

RunSymbol RunSymbol::extended(Fill fill, int value, int& score) const {
  const bool joker = fill == Fill::Joker;
  const bool table = fill == Fill::Mandatory;
  switch (length()) {
    case 0:
      score = 0;
      return single(joker, table);
    case 1:
      score = 0;
      return pair(jokerAt(1), joker, mandatory() || table);
    case 2:
      score = (joker ? 0 : value) + (jokerAt(1) ? 0 : value - 1) + (jokerAt(2) ? 0 : value - 2);
      return complete();
    default:
      score = joker ? 0 : value;
      return complete();
  }
}

namespace {

int realPositions(RunSymbol s) {
  switch (s.length()) {
    case 1: return s.jokerAt(1) ? 0 : 1;
    case 2: return (s.jokerAt(1) ? 0 : 1) + (s.jokerAt(2) ? 0 : 1);
    default: return 0;
  }
}

// Points still pending in an incomplete run when the scan is at `value`.
int pendingValue(RunSymbol s, int value) {
  switch (s.length()) {
    case 1: return s.jokerAt(1) ? 0 : value - 1;
    case 2: return (s.jokerAt(1) ? 0 : value - 1) + (s.jokerAt(2) ? 0 : value - 2);
    default: return 0;
  }
}

struct MakeRunsSearch {
  const SuitRunState& state;
  int value;
  int availFree;
  int availMandatory;
  int jokers;

  using OutcomeKey = std::tuple<std::vector<std::uint8_t>, int, int, int, int, int>;
  std::map<OutcomeKey, RunTransition> outcomes;

  std::vector<RunSymbol> next;
  std::vector<SlotMove> moves;
  int score = 0;
  int tiles = 0;
  int usedFree = 0;
  int usedMandatory = 0;
  int usedJokers = 0;

  bool canUse(Fill f) const {
    switch (f) {
      case Fill::Free: return usedFree < availFree;
      case Fill::Mandatory: return usedMandatory < availMandatory;
      default: return usedJokers < jokers;
    }
  }
  void use(Fill f, int delta) {
    switch (f) {
      case Fill::Free: usedFree += delta; break;
      case Fill::Mandatory: usedMandatory += delta; break;
      default: usedJokers += delta; break;
    }
  }

  void emit() {
    std::vector<RunSymbol> sorted = next;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint8_t> codes;
    for (auto s : sorted) codes.push_back(s.code());
    OutcomeKey key{codes, score, tiles, usedFree, usedMandatory, usedJokers};
    if (outcomes.contains(key)) return;
    outcomes.emplace(std::move(key), RunTransition{SuitRunState{std::move(sorted)}, score, tiles,
                                                   usedFree, usedMandatory, usedJokers, moves});
  }

  void place(std::size_t slot, RunSymbol from, SlotAction action, Fill fill) {
    RunSymbol base = action == SlotAction::Restart ? RunSymbol::empty() : from;
    int gained = 0;
    RunSymbol to = base.extended(fill, value, gained);
    int gainedTiles = 0;
    if (to.length() == 3) {
      gainedTiles = (fill == Fill::Joker ? 0 : 1) + (base.length() == 2 ? realPositions(base) : 0);
    }
    use(fill, 1);
    score += gained;
    tiles += gainedTiles;
    next.push_back(to);
    moves.push_back({from, action, fill});
    run(slot + 1);
    moves.pop_back();
    next.pop_back();
    tiles -= gainedTiles;
    score -= gained;
    use(fill, -1);
  }

  void run(std::size_t slot) {
    if (slot == state.slots.size()) {
      emit();
      return;
    }
    RunSymbol from = state.slots[slot];
    if (from.droppable()) {
      next.push_back(RunSymbol::empty());
      moves.push_back({from, SlotAction::Stop, Fill::Free});
      run(slot + 1);
      moves.pop_back();
      next.pop_back();
    }
    for (Fill f : {Fill::Free, Fill::Mandatory, Fill::Joker}) {
      if (!canUse(f)) continue;
      place(slot, from, SlotAction::Extend, f);
      if (from.length() > 0 && from.droppable()) place(slot, from, SlotAction::Restart, f);
    }
  }
};

}  // namespace

std::vector<RunTransition> makeRuns(const SuitRunState& state, int availFree, int availMandatory,
                                    int jokersSpendable, int value) {
  MakeRunsSearch search{state, value, availFree, availMandatory, jokersSpendable, {}, {}, {}};
  search.run(0);
  std::vector<RunTransition> out;
  out.reserve(search.outcomes.size());
  for (auto& [key, t] : search.outcomes) out.push_back(std::move(t));
  return out;
}

std::size_t countReachableSuitStates(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::set<SuitRunState> seen{SuitRunState::initial(m)};
  std::vector<SuitRunState> frontier{SuitRunState::initial(m)};
  while (!frontier.empty()) {
    SuitRunState cur = std::move(frontier.back());
    frontier.pop_back();
    for (auto& t : makeRuns(cur, m, 0, 0, kMinSetSize)) {
      if (seen.insert(t.next).second) frontier.push_back(std::move(t.next));
    }
  }
  return seen.size();
}

namespace {

constexpr int kMaxSuits = 8;
constexpr int kMaxCopies = 8;

struct Metric {
  int score = 0;
  int jokers = 0;
  int tiles = 0;
};

bool better(const Metric& a, const Metric& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.jokers != b.jokers) return a.jokers < b.jokers;
  return a.tiles < b.tiles;
}

bool sameMetric(const Metric& a, const Metric& b) {
  return a.score == b.score && a.jokers == b.jokers && a.tiles == b.tiles;
}

enum class EntryState : std::uint8_t { Unset, Infeasible, Done };

struct Entry {
  EntryState state = EntryState::Unset;
  std::uint8_t spend = 0;
  Metric best;
  std::uint64_t choice = 0;
  std::uint64_t successor = 0;
};

using Ranks = std::array<std::uint16_t, kMaxSuits>;

struct GroupKey {
  std::uint64_t leftover;
  int budget;
  friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

struct GroupKeyHash {
  std::size_t operator()(const GroupKey& key) const {
    return std::hash<std::uint64_t>()(key.leftover * 31 + static_cast<std::uint64_t>(key.budget));
  }
};

class DpSolver {
public:
  DpSolver(const Problem& problem, const SolverOptions& options);

  Entry solveRoot() { return solve(1, initialRanks(), 0); }
  Arrangement reconstruct();
  SolveStats stats() const;

private:
  struct SuitOption {
    int next;
    int score;
    int tiles;
    int freeUsed;
    int mandatoryUsed;
    int jokers;
  };
  struct OptionList {
    std::vector<SuitOption> options;
    std::vector<RunTransition> transitions;
  };

  Ranks initialRanks() const;
  std::uint64_t keyOf(const Ranks& ranks, int jokersUsed) const;
  int freeAt(int value, int suit) const { return free_[(value - 1) * k_ + suit]; }
  int mandatoryAt(int value, int suit) const { return mandatory_[(value - 1) * k_ + suit]; }
  const OptionList& options(int rank, int value, int suit, int jokersLeft);
  const std::vector<int>& groupResults(std::uint64_t leftover, const std::array<int, kMaxSuits>& avail,
                                       const std::array<int, kMaxSuits>& mand, int budget);
  Entry* memoSlot(int value, std::uint64_t key);
  void memoStore(int value, std::uint64_t key, const Entry& e);
  Entry solve(int value, const Ranks& ranks, int jokersUsed);
  int upperBound(int value, const Ranks& ranks) const;

  const Problem& problem_;
  SolverOptions options_;
  int n_, k_, m_;
  int totalJokers_, tableJokers_;
  bool flagged_;
  bool dense_ = false;

  std::vector<SuitRunState> suitStates_;
  std::unordered_map<std::uint32_t, int> rankOf_;
  std::uint64_t rankBase_ = 0;
  int choiceBits_ = 0;

  std::vector<int> free_, mandatory_;
  std::vector<int> suffixValue_;

  std::vector<std::unordered_map<std::uint64_t, OptionList>> optionCache_;  // per value
  std::unordered_map<GroupKey, std::vector<int>, GroupKeyHash> groupCache_;

  std::vector<Entry> denseMemo_;
  std::vector<std::unordered_map<std::uint64_t, Entry>> hashedMemo_;
  std::size_t nodes_ = 0;
};

std::uint32_t packCodes(const SuitRunState& s) {
  std::uint32_t packed = 0;
  for (auto sym : s.slots) packed = packed * 16 + sym.code();
  return packed;
}

void enumerateMultisets(const std::vector<std::uint8_t>& alphabet, int m, std::size_t from,
                        std::vector<RunSymbol>& cur, std::vector<SuitRunState>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back({cur});
    return;
  }
  for (std::size_t i = from; i < alphabet.size(); ++i) {
    cur.push_back(RunSymbol::fromCode(alphabet[i]));
    enumerateMultisets(alphabet, m, i, cur, out);
    cur.pop_back();
  }
}

DpSolver::DpSolver(const Problem& problem, const SolverOptions& options)
    : problem_(problem),
      options_(options),
      n_(problem.params.n),
      k_(problem.params.k),
      m_(problem.params.m),
      totalJokers_(problem.hand.jokers() + problem.table.jokers()),
      tableJokers_(problem.table.jokers()),
      flagged_(totalJokers_ > 0 || !problem.table.empty()) {
  problem.validate();
  if (k_ > kMaxSuits) throw std::invalid_argument("solver supports at most 8 suits");
  if (m_ > kMaxCopies) throw std::invalid_argument("solver supports at most 8 copies");

  std::vector<std::uint8_t> alphabet;
  if (flagged_) {
    for (std::uint8_t c = 0; c < RunSymbol::kAlphabetSize; ++c) alphabet.push_back(c);
  } else {
    alphabet = {RunSymbol::empty().code(), RunSymbol::single(false, false).code(),
                RunSymbol::pair(false, false, false).code(), RunSymbol::complete().code()};
  }
  std::vector<RunSymbol> cur;
  enumerateMultisets(alphabet, m_, 0, cur, suitStates_);
  for (std::size_t r = 0; r < suitStates_.size(); ++r) {
    rankOf_.emplace(packCodes(suitStates_[r]), static_cast<int>(r));
  }
  rankBase_ = suitStates_.size();

  long double keySpace = static_cast<long double>(totalJokers_ + 1);
  for (int i = 0; i < k_; ++i) keySpace *= static_cast<long double>(rankBase_);
  if (keySpace > 9.0e18L) throw std::invalid_argument("configuration exceeds the state key range");
  choiceBits_ = std::min(32, 64 / k_);

  free_.assign(static_cast<std::size_t>(n_ * k_), 0);
  mandatory_.assign(static_cast<std::size_t>(n_ * k_), 0);
  suffixValue_.assign(static_cast<std::size_t>(n_ + 2), 0);
  for (int v = n_; v >= 1; --v) {
    int layer = 0;
    for (int s = 0; s < k_; ++s) {
      free_[(v - 1) * k_ + s] = problem.hand.count(v, s + 1);
      mandatory_[(v - 1) * k_ + s] = problem.table.count(v, s + 1);
      layer += v * (problem.hand.count(v, s + 1) + problem.table.count(v, s + 1));
    }
    suffixValue_[v] = suffixValue_[v + 1] + layer;
  }

  optionCache_.resize(static_cast<std::size_t>(n_));
  MemoMode mode = options_.memo;
  long double denseSize = keySpace * static_cast<long double>(n_ + 1);
  if (mode == MemoMode::Auto) {
    mode = (!flagged_ && denseSize <= static_cast<long double>(1u << 20)) ? MemoMode::Dense
                                                                          : MemoMode::Hashed;
  }
  if (mode == MemoMode::Dense) {
    if (denseSize > static_cast<long double>(1u << 26)) {
      throw std::invalid_argument("dense memo table too large for this configuration");
    }
    dense_ = true;
    denseMemo_.resize(static_cast<std::size_t>(denseSize));
  } else if (mode == MemoMode::Hashed) {
    hashedMemo_.resize(static_cast<std::size_t>(n_ + 1));
  }
  options_.memo = mode;
}

Ranks DpSolver::initialRanks() const {
  Ranks r{};
  int zero = rankOf_.at(packCodes(SuitRunState::initial(m_)));
  for (int i = 0; i < k_; ++i) r[i] = static_cast<std::uint16_t>(zero);
  return r;
}

std::uint64_t DpSolver::keyOf(const Ranks& ranks, int jokersUsed) const {
  std::uint64_t key = 0;
  for (int i = k_ - 1; i >= 0; --i) key = key * rankBase_ + ranks[i];
  return key * static_cast<std::uint64_t>(totalJokers_ + 1) + static_cast<std::uint64_t>(jokersUsed);
}

const DpSolver::OptionList& DpSolver::options(int rank, int value, int suit, int jokersLeft) {
  int a = freeAt(value, suit);
  int b = mandatoryAt(value, suit);
  int cap = std::min(jokersLeft, m_);
  std::uint64_t key = ((static_cast<std::uint64_t>(rank) * 16 + a) * 16 + b) * 16 + cap;
  auto& cache = optionCache_[value - 1];
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  OptionList list;
  list.transitions = makeRuns(suitStates_[rank], a, b, cap, value);
  for (const auto& t : list.transitions) {
    list.options.push_back({rankOf_.at(packCodes(t.next)), t.deferredScore, t.committedTiles,
                            t.freeUsed, t.mandatoryUsed, t.jokersUsed});
  }
  if (list.options.size() >= (std::uint64_t{1} << choiceBits_)) {
    throw std::logic_error("too many run transitions to encode");
  }
  return cache.emplace(key, std::move(list)).first->second;
}

const std::vector<int>& DpSolver::groupResults(std::uint64_t leftover,
                                               const std::array<int, kMaxSuits>& avail,
                                               const std::array<int, kMaxSuits>& mand, int budget) {
  GroupKey key{leftover, budget};
  auto it = groupCache_.find(key);
  if (it != groupCache_.end()) return it->second;
  std::vector<int> res(budget + 1);
  std::span<const int> a(avail.data(), k_);
  std::span<const int> b(mand.data(), k_);
  for (int s = 0; s <= budget; ++s) res[s] = maxGroupTilesForSpend(a, b, s, k_);
  return groupCache_.emplace(key, std::move(res)).first->second;
}

Entry* DpSolver::memoSlot(int value, std::uint64_t key) {
  if (dense_) return &denseMemo_[static_cast<std::size_t>(value - 1) * (denseMemo_.size() / (n_ + 1)) + key];
  if (hashedMemo_.empty()) return nullptr;
  auto& layer = hashedMemo_[value - 1];
  auto it = layer.find(key);
  return it == layer.end() ? nullptr : &it->second;
}

void DpSolver::memoStore(int value, std::uint64_t key, const Entry& e) {
  if (dense_) {
    denseMemo_[static_cast<std::size_t>(value - 1) * (denseMemo_.size() / (n_ + 1)) + key] = e;
  } else if (!hashedMemo_.empty()) {
    hashedMemo_[value - 1][key] = e;
  }
}

int DpSolver::upperBound(int value, const Ranks& ranks) const {
  int bound = suffixValue_[value];
  for (int i = 0; i < k_; ++i) {
    for (auto sym : suitStates_[ranks[i]].slots) bound += pendingValue(sym, value);
  }
  return bound;
}

Entry DpSolver::solve(int value, const Ranks& ranks, int jokersUsed) {
  ++nodes_;
  const std::uint64_t key = keyOf(ranks, jokersUsed);
  if (value > n_) {
    Entry e;
    e.state = EntryState::Done;
    if (jokersUsed < tableJokers_) e.state = EntryState::Infeasible;
    for (int i = 0; i < k_ && e.state == EntryState::Done; ++i) {
      for (auto sym : suitStates_[ranks[i]].slots) {
        if (!sym.droppable()) e.state = EntryState::Infeasible;
      }
    }
    return e;
  }
  if (Entry* hit = memoSlot(value, key); hit && hit->state != EntryState::Unset) return *hit;

  Entry best;
  best.state = EntryState::Infeasible;
  const int jokersLeft = totalJokers_ - jokersUsed;
  const int bound = options_.earlyStop ? upperBound(value, ranks) : 0;
  const int minJokers = std::max(0, tableJokers_ - jokersUsed);

  std::array<const OptionList*, kMaxSuits> lists{};
  for (int i = 0; i < k_; ++i) {
    lists[i] = &options(ranks[i], value, i, jokersLeft);
    if (lists[i]->options.empty()) {
      memoStore(value, key, best);
      return best;
    }
  }

  std::array<int, kMaxSuits> idx{};
  std::array<int, kMaxSuits> avail{};
  std::array<int, kMaxSuits> mand{};
  bool done = false;
  while (!done) {
    Ranks next{};
    int runJokers = 0, runScore = 0, runTiles = 0;
    std::uint64_t leftover = 0;
    for (int i = 0; i < k_; ++i) {
      const SuitOption& o = lists[i]->options[idx[i]];
      next[i] = static_cast<std::uint16_t>(o.next);
      runJokers += o.jokers;
      runScore += o.score;
      runTiles += o.tiles;
      avail[i] = freeAt(value, i) - o.freeUsed;
      mand[i] = mandatoryAt(value, i) - o.mandatoryUsed;
      leftover = (leftover * 16 + avail[i]) * 16 + mand[i];
    }
    if (runJokers <= jokersLeft) {
      const auto& groups = groupResults(leftover, avail, mand, jokersLeft - runJokers);
      for (int spend = 0; spend < static_cast<int>(groups.size()); ++spend) {
        if (groups[spend] < 0) continue;
        const int jokersAfter = jokersUsed + runJokers + spend;
        Entry child = solve(value + 1, next, jokersAfter);
        if (child.state != EntryState::Done) continue;
        Metric cand{child.best.score + runScore + groups[spend] * value,
                    child.best.jokers + runJokers + spend, child.best.tiles + runTiles + groups[spend]};
        std::uint64_t succ = keyOf(next, jokersAfter);
        bool take = best.state != EntryState::Done || better(cand, best.best) ||
                    (sameMetric(cand, best.best) && succ < best.successor);
        if (take) {
          best.state = EntryState::Done;
          best.best = cand;
          best.successor = succ;
          best.spend = static_cast<std::uint8_t>(spend);
          best.choice = 0;
          for (int i = k_ - 1; i >= 0; --i) {
            best.choice = (best.choice << choiceBits_) | static_cast<std::uint64_t>(idx[i]);
          }
        }
        if (options_.earlyStop && best.state == EntryState::Done && best.best.score == bound &&
            best.best.jokers == minJokers) {
          done = true;
          break;
        }
      }
    }
    int i = 0;
    while (!done && i < k_ && ++idx[i] == static_cast<int>(lists[i]->options.size())) {
      idx[i] = 0;
      ++i;
    }
    if (i == k_) done = true;
  }
  memoStore(value, key, best);
  return best;
}

SolveStats DpSolver::stats() const {
  SolveStats s;
  s.nodesExpanded = nodes_;
  s.denseMemo = dense_;
  if (dense_) {
    for (const auto& e : denseMemo_) s.memoEntries += e.state != EntryState::Unset;
  } else {
    for (const auto& layer : hashedMemo_) s.memoEntries += layer.size();
  }
  return s;
}

struct OpenRun {
  int start = 0;
  std::vector<bool> joker;
  bool mandatory = false;

  RunSymbol symbol() const {
    switch (joker.size()) {
      case 0: return RunSymbol::empty();
      case 1: return RunSymbol::single(joker[0], mandatory);
      case 2: return RunSymbol::pair(joker[0], joker[1], mandatory);
      default: return RunSymbol::complete();
    }
  }
};

void closeRun(const OpenRun& run, int suit, std::vector<RunPlacement>& out) {
  if (run.joker.size() < static_cast<std::size_t>(kMinSetSize)) {
    if (run.mandatory || std::find(run.joker.begin(), run.joker.end(), true) != run.joker.end()) {
      throw std::logic_error("reconstruction dropped a committed run");
    }
    return;
  }
  RunPlacement p{suit, run.start, static_cast<int>(run.joker.size()), {}};
  for (std::size_t i = 0; i < run.joker.size(); ++i) {
    if (run.joker[i]) p.jokerValues.push_back(run.start + static_cast<int>(i));
  }
  out.push_back(std::move(p));
}

Arrangement DpSolver::reconstruct() {
  Arrangement out;
  std::vector<std::vector<OpenRun>> open(k_);
  Ranks ranks = initialRanks();
  int jokersUsed = 0;
  const std::uint64_t mask = choiceBits_ == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << choiceBits_) - 1;

  for (int value = 1; value <= n_; ++value) {
    const Entry* e = memoSlot(value, keyOf(ranks, jokersUsed));
    if (!e || e->state != EntryState::Done) throw std::logic_error("missing memo entry on optimal path");
    const int jokersLeft = totalJokers_ - jokersUsed;
    std::vector<int> avail(k_), mand(k_);
    int runJokers = 0;
    for (int i = 0; i < k_; ++i) {
      const auto& list = options(ranks[i], value, i, jokersLeft);
      const int pick = static_cast<int>((e->choice >> (choiceBits_ * i)) & mask);
      const RunTransition& t = list.transitions[pick];
      std::vector<bool> matched(open[i].size(), false);
      std::vector<OpenRun> stillOpen;
      for (const SlotMove& mv : t.moves) {
        OpenRun* target = nullptr;
        if (mv.from.length() > 0) {
          for (std::size_t r = 0; r < open[i].size(); ++r) {
            if (!matched[r] && open[i][r].symbol() == mv.from) {
              matched[r] = true;
              target = &open[i][r];
              break;
            }
          }
          if (!target) throw std::logic_error("run slot not found during reconstruction");
        }
        const bool joker = mv.fill == Fill::Joker;
        const bool table = mv.fill == Fill::Mandatory;
        switch (mv.action) {
          case SlotAction::Stop:
            if (target) closeRun(*target, i + 1, out.runs);
            break;
          case SlotAction::Extend:
            if (target) {
              target->joker.push_back(joker);
              target->mandatory = target->mandatory || table;
              stillOpen.push_back(*target);
            } else {
              stillOpen.push_back(OpenRun{value, {joker}, table});
            }
            break;
          case SlotAction::Restart:
            closeRun(*target, i + 1, out.runs);
            stillOpen.push_back(OpenRun{value, {joker}, table});
            break;
        }
      }
      open[i] = std::move(stillOpen);
      avail[i] = freeAt(value, i) - t.freeUsed;
      mand[i] = mandatoryAt(value, i) - t.mandatoryUsed;
      runJokers += t.jokersUsed;
      ranks[i] = static_cast<std::uint16_t>(list.options[pick].next);
    }
    auto groups = layoutGroups(avail, mand, e->spend, k_);
    if (!groups) throw std::logic_error("group layout infeasible on optimal path");
    for (auto& g : *groups) out.groups.push_back({value, std::move(g.suits), g.jokers});
    jokersUsed += runJokers + e->spend;
  }
  for (int i = 0; i < k_; ++i) {
    for (const auto& r : open[i]) closeRun(r, i + 1, out.runs);
  }
  std::sort(out.runs.begin(), out.runs.end());
  out.score = arrangementScore(out);
  return out;
}

}  // namespace

std::optional<int> maxScore(const Problem& problem, const SolverOptions& options, SolveStats* stats) {
  DpSolver solver(problem, options);
  Entry root = solver.solveRoot();
  if (stats) *stats = solver.stats();
  if (root.state != EntryState::Done) return std::nullopt;
  return root.best.score;
}

Arrangement bestArrangement(const Problem& problem, const SolverOptions& options) {
  SolverOptions opts = options;
  if (opts.memo == MemoMode::Off) opts.memo = MemoMode::Auto;
  DpSolver solver(problem, opts);
  Entry root = solver.solveRoot();
  if (root.state != EntryState::Done) throw InfeasibleError();
  Arrangement a = solver.reconstruct();
  if (a.score != root.best.score) throw std::logic_error("reconstructed score differs from optimum");
  return a;
}

bool isFullyPlayable(const Hand& hand, const TileSetParams& params) {
  // Every tile becomes mandatory: the hand is fully playable iff the table
  // constraint over the whole hand is satisfiable.
  Problem p = Problem::make(params, Hand(params.n, params.k), hand);
  return maxScore(p).has_value();
}

}  // namespace rummikub
