#include "rummikub/counting.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <type_traits>
#include <unordered_map>

namespace rummikub {

std::vector<BigInt> handCountPolynomial(const TileSetParams& params) {
  params.validate();
  const int types = params.tileTypes();
  std::vector<BigInt> poly{1};
  for (int i = 0; i < types; ++i) {
    std::vector<BigInt> next(poly.size() + params.m);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (poly[d] == 0) continue;
      for (int c = 0; c <= params.m; ++c) next[d + c] += poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

BigInt totalHands(const TileSetParams& params, int t) {
  if (t < 0 || t > params.plainTiles()) {
    throw std::out_of_range("hand size " + std::to_string(t) + " outside 0.." +
                            std::to_string(params.plainTiles()));
  }
  return handCountPolynomial(params)[t];
}

namespace {

void partitionsFrom(int left, int minPart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = minPart; part <= 5 && part <= left; ++part) {
    cur.push_back(part);
    partitionsFrom(left - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitionsInto345(int t) {
  if (t < 0) throw std::invalid_argument("negative hand size");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitionsFrom(t, kMinSetSize, cur, out);
  return out;
}

std::vector<Tile> CandidateSet::tiles() const {
  std::vector<Tile> out;
  if (kind == Kind::Run) {
    for (int v = start; v < start + size; ++v) out.push_back({v, suit});
  } else {
    for (int s : suits) out.push_back({value, s});
  }
  return out;
}

std::vector<CandidateSet> catalogSets(const TileSetParams& params) {
  params.validate();
  std::vector<CandidateSet> out;
  for (int s = 1; s <= params.k; ++s) {
    for (int len = kMinSetSize; len <= 5; ++len) {
      for (int start = 1; start + len - 1 <= params.n; ++start) {
        CandidateSet c;
        c.kind = CandidateSet::Kind::Run;
        c.suit = s;
        c.start = start;
        c.size = len;
        out.push_back(std::move(c));
      }
    }
  }
  const int maxGroup = std::min(params.k, 5);
  for (int v = 1; v <= params.n; ++v) {
    for (int size = kMinSetSize; size <= maxGroup; ++size) {
      // Suit subsets of this size in lexicographic order.
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i + 1;
      while (true) {
        CandidateSet c;
        c.kind = CandidateSet::Kind::Group;
        c.value = v;
        c.suits = pick;
        c.size = size;
        out.push_back(std::move(c));
        int i = size - 1;
        while (i >= 0 && pick[i] == params.k - (size - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Bit-packed form of canonicalKey (no joker byte): fixed-width count fields in
// suit-major then value order.
struct PackedKeys {
  using Key = u128;
  int bits;
  Key unit(int type) const { return Key{1} << (type * bits); }
  static std::uint64_t hash(const Key& k) {
    return mix(static_cast<std::uint64_t>(k) ^ mix(static_cast<std::uint64_t>(k >> 64)));
  }
};

// Byte-per-count keys for universes too large to pack into 128 bits.
struct ByteKeys {
  using Key = std::string;
  static std::uint64_t hash(const Key& k) { return std::hash<std::string>()(k); }
};

template <class Keys>
class CoverEnumerator {
public:
  using Key = typename Keys::Key;

  CoverEnumerator(const TileSetParams& params, const std::vector<CandidateSet>& catalog,
                  const Keys& keys, int shard, int shards, std::size_t maxKeys)
      : params_(params), keys_(keys), shard_(shard), shards_(shards), maxKeys_(maxKeys) {
    usage_.assign(static_cast<std::size_t>(params.tileTypes()), 0);
    for (const auto& c : catalog) {
      std::vector<int> types;
      for (const Tile& t : c.tiles()) types.push_back((t.suit - 1) * params.n + (t.value - 1));
      bySize_[c.size].push_back(std::move(types));
    }
    if constexpr (std::is_same_v<Key, std::string>) {
      key_.assign(usage_.size(), '\0');
    } else {
      key_ = 0;
    }
  }

  std::size_t run(int t) {
    for (const auto& parts : partitionsInto345(t)) {
      int counts[6] = {0, 0, 0, 0, 0, 0};
      for (int p : parts) ++counts[p];
      shape_[0] = counts[5];
      shape_[1] = counts[4];
      shape_[2] = counts[3];
      choose(0, shape_[0], 0);
    }
    compact();
    return found_.size();
  }

private:
  static constexpr int kSizes[3] = {5, 4, 3};

  bool apply(const std::vector<int>& types, int delta) {
    bool ok = true;
    for (int type : types) {
      usage_[type] = static_cast<std::uint8_t>(usage_[type] + delta);
      if (usage_[type] > params_.m) ok = false;
      if constexpr (std::is_same_v<Key, std::string>) {
        key_[type] = static_cast<char>(key_[type] + delta);
      } else {
        if (delta > 0) key_ += keys_.unit(type);
        else key_ -= keys_.unit(type);
      }
    }
    return ok;
  }

  void choose(int level, int left, std::size_t from) {
    if (left == 0) {
      if (level == 2) {
        emit();
        return;
      }
      choose(level + 1, shape_[level + 1], 0);
      return;
    }
    const auto& list = bySize_[kSizes[level]];
    for (std::size_t i = from; i < list.size(); ++i) {
      if (apply(list[i], +1)) choose(level, left - 1, i);
      apply(list[i], -1);
    }
  }

  void emit() {
    if (shards_ > 1 && Keys::hash(key_) % static_cast<std::uint64_t>(shards_) != static_cast<std::uint64_t>(shard_)) {
      return;
    }
    found_.push_back(key_);
    if (found_.size() >= compactAt_) {
      compact();
      compactAt_ = std::max(compactAt_, 2 * found_.size());
    }
  }

  void compact() {
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    if (found_.size() > maxKeys_) {
      throw CountingBudgetExceeded("dedup set exceeded " + std::to_string(maxKeys_) + " keys", -1);
    }
  }

  TileSetParams params_;
  Keys keys_;
  int shard_;
  int shards_;
  std::size_t maxKeys_;
  std::vector<std::vector<int>> bySize_[6];
  std::vector<std::uint8_t> usage_;
  Key key_;
  int shape_[3] = {0, 0, 0};
  std::vector<Key> found_;
  std::size_t compactAt_ = std::size_t{1} << 22;
};

template <class Keys>
BigInt countWithKeys(const TileSetParams& params, int t, const CountOptions& options, const Keys& keys) {
  auto catalog = catalogSets(params);
  if (options.reverseOrder) std::reverse(catalog.begin(), catalog.end());
  const int shards = std::max(1, options.shards);
  const int threads = std::clamp(options.threads, 1, shards);
  std::vector<std::size_t> sizes(shards, 0);
  std::vector<std::exception_ptr> errors(threads);

  auto worker = [&](int w) {
    try {
      for (int shard = w; shard < shards; shard += threads) {
        CoverEnumerator<Keys> e(params, catalog, keys, shard, shards, options.maxKeys);
        sizes[shard] = e.run(t);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  BigInt total = 0;
  for (auto s : sizes) total += s;
  return total;
}

}  // namespace

BigInt countWinningHands(const TileSetParams& params, int t, const CountOptions& options) {
  params.validate();
  if (t < 0 || t > params.plainTiles()) throw std::out_of_range("hand size out of range");
  if (t == 0) return 1;
  const int bits = std::bit_width(static_cast<unsigned>(params.m));
  if (params.tileTypes() * bits <= 128) return countWithKeys(params, t, options, PackedKeys{bits});
  return countWithKeys(params, t, options, ByteKeys{});
}

namespace {

enum class Horizon { Open, OneLeft, Last };

// Full-play automaton over per-suit run-length multisets (lengths 0..3).
class WinningAutomaton {
public:
  explicit WinningAutomaton(const TileSetParams& params) : p_(params) {
    std::vector<int> cur;
    enumerateSuitStates(0, cur);
    for (std::size_t r = 0; r < suitStates_.size(); ++r) suitRank_[suitStates_[r]] = static_cast<int>(r);
    base_ = suitStates_.size();
    long double space = 1;
    for (int i = 0; i < p_.k; ++i) space *= static_cast<long double>(base_);
    if (space > 4.0e9L) throw std::invalid_argument("universe too large for the winning automaton");

    suitOptions_.resize(base_ * (p_.m + 1));
    for (std::size_t r = 0; r < base_; ++r) {
      for (int c = 0; c <= p_.m; ++c) buildOptions(static_cast<int>(r), c);
    }
    withoutComplete_.resize(base_);
    completeCount_.resize(base_);
    for (std::size_t r = 0; r < base_; ++r) {
      std::vector<int> reduced = suitStates_[r];
      completeCount_[r] = static_cast<int>(std::count(reduced.begin(), reduced.end(), 3));
      std::replace(reduced.begin(), reduced.end(), 3, 0);
      std::sort(reduced.begin(), reduced.end());
      withoutComplete_[r] = suitRank_.at(reduced);
    }
    if (p_.k <= 5) {
      std::vector<int> perm(p_.k);
      for (int i = 0; i < p_.k; ++i) perm[i] = i;
      do {
        perms_.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    hasSingle_.resize(base_);
    for (std::size_t r = 0; r < base_; ++r) {
      hasSingle_[r] = std::count(suitStates_[r].begin(), suitStates_[r].end(), 1) > 0;
    }
    finalSuit_.resize(base_);
    for (std::size_t r = 0; r < base_; ++r) {
      finalSuit_[r] = std::all_of(suitStates_[r].begin(), suitStates_[r].end(),
                                  [](int len) { return len == 0 || len == 3; });
    }
  }

  std::vector<BigInt> run() {
    const int maxT = p_.plainTiles();
    std::vector<std::vector<int>> countVectors;
    std::vector<int> cv(p_.k, 0);
    enumerateCounts(0, cv, countVectors);

    std::uint32_t zero = 0;
    const int zeroSuit = suitRank_.at(std::vector<int>(p_.m, 0));
    for (int i = p_.k - 1; i >= 0; --i) zero = zero * static_cast<std::uint32_t>(base_) + zeroSuit;
    std::map<int, std::vector<u128>> layer;
    layer[intern({zero})] = polyWith(0, maxT);

    std::vector<BigInt> out(maxT + 1);
    for (int value = 1; value <= p_.n; ++value) {
      const Horizon horizon = value == p_.n ? Horizon::Last
                              : value + 1 == p_.n ? Horizon::OneLeft
                                                  : Horizon::Open;
      std::map<int, std::vector<u128>> next;
      std::vector<u128> accepted(maxT + 1, 0);
      for (const auto& [sid, poly] : layer) {
        for (std::size_t ci = 0; ci < countVectors.size(); ++ci) {
          int target = transition(sid, ci, countVectors[ci], horizon);
          if (target < 0) continue;
          int added = 0;
          for (int c : countVectors[ci]) added += c;
          auto& dst = horizon == Horizon::Last ? accepted : next[target];
          if (dst.empty()) dst.assign(maxT + 1, 0);
          for (int t = 0; t + added <= maxT; ++t) {
            if (poly[t]) dst[t + added] += poly[t];
          }
        }
      }
      layer = std::move(next);
      if (horizon == Horizon::Last) {
        for (int t = 0; t <= maxT; ++t) out[t] = toBig(accepted[t]);
      }
    }
    return out;
  }

private:
  static BigInt toBig(u128 x) {
    BigInt hi = static_cast<std::uint64_t>(x >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(x);
  }

  static std::vector<u128> polyWith(int t, int maxT) {
    std::vector<u128> p(maxT + 1, 0);
    p[t] = 1;
    return p;
  }

  void enumerateSuitStates(int minLen, std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) == p_.m) {
      suitStates_.push_back(cur);
      return;
    }
    for (int len = minLen; len <= 3; ++len) {
      cur.push_back(len);
      enumerateSuitStates(len, cur);
      cur.pop_back();
    }
  }

  void enumerateCounts(int suit, std::vector<int>& cv, std::vector<std::vector<int>>& out) {
    if (suit == p_.k) {
      out.push_back(cv);
      return;
    }
    for (int c = 0; c <= p_.m; ++c) {
      cv[suit] = c;
      enumerateCounts(suit + 1, cv, out);
    }
  }

  // Every tile must be placed: incomplete runs must continue; empty and
  // complete slots may take a tile or stay/become empty.
  void buildOptions(int rank, int count) {
    const auto& slots = suitStates_[rank];
    std::vector<std::pair<int, int>> found;
    std::vector<int> next;
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
      if (used > count) return;
      if (i == slots.size()) {
        std::vector<int> sorted = next;
        std::sort(sorted.begin(), sorted.end());
        found.emplace_back(suitRank_.at(sorted), used);
        return;
      }
      auto go = [&](int len, int tiles) {
        next.push_back(len);
        self(self, i + 1, used + tiles);
        next.pop_back();
      };
      switch (slots[i]) {
        case 0: go(0, 0); go(1, 1); break;
        case 1: go(2, 1); break;
        case 2: go(3, 1); break;
        default: go(0, 0); go(3, 1); go(1, 1); break;
      }
    };
    rec(rec, 0, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    suitOptions_[rank * (p_.m + 1) + count] = std::move(found);
  }

  // Drops states dominated by another member (a complete slot can do
  // everything an empty one can), then picks the lexicographically smallest
  // image under suit relabeling.
  void canonicalize(std::vector<std::uint32_t>& states) const {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    if (states.size() > 1) {
      std::map<std::uint32_t, std::vector<std::uint32_t>> bySignature;
      for (std::uint32_t joint : states) {
        std::uint32_t sig = 0, rest = joint, scale = 1;
        for (int i = 0; i < p_.k; ++i) {
          sig += static_cast<std::uint32_t>(withoutComplete_[rest % base_]) * scale;
          rest /= static_cast<std::uint32_t>(base_);
          scale *= static_cast<std::uint32_t>(base_);
        }
        bySignature[sig].push_back(joint);
      }
      std::vector<std::uint32_t> kept;
      for (auto& [sig, members] : bySignature) {
        for (std::uint32_t a : members) {
          bool dominated = false;
          for (std::uint32_t b : members) {
            if (a != b && dominates(b, a)) {
              dominated = true;
              break;
            }
          }
          if (!dominated) kept.push_back(a);
        }
      }
      states = std::move(kept);
    }
    if (perms_.empty()) {
      std::sort(states.begin(), states.end());
      return;
    }
    std::vector<std::uint32_t> best, image(states.size());
    std::vector<int> digits(p_.k);
    for (const auto& perm : perms_) {
      for (std::size_t s = 0; s < states.size(); ++s) {
        std::uint32_t rest = states[s];
        for (int i = 0; i < p_.k; ++i) {
          digits[i] = static_cast<int>(rest % base_);
          rest /= static_cast<std::uint32_t>(base_);
        }
        std::uint32_t mapped = 0;
        for (int i = p_.k - 1; i >= 0; --i) {
          mapped = mapped * static_cast<std::uint32_t>(base_) + static_cast<std::uint32_t>(digits[perm[i]]);
        }
        image[s] = mapped;
      }
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
    states = std::move(best);
  }

  // Same incomplete runs in every suit and at least as many complete ones.
  bool dominates(std::uint32_t high, std::uint32_t low) const {
    for (int i = 0; i < p_.k; ++i) {
      if (completeCount_[high % base_] < completeCount_[low % base_]) return false;
      high /= static_cast<std::uint32_t>(base_);
      low /= static_cast<std::uint32_t>(base_);
    }
    return true;
  }

  int intern(std::vector<std::uint32_t> states) {
    canonicalize(states);
    auto [it, inserted] = setIds_.emplace(std::move(states), static_cast<int>(sets_.size()));
    if (inserted) sets_.push_back(&it->first);
    return it->second;
  }

  // Open: any successor set. OneLeft: successors may not hold runs of length
  // 1 (they cannot complete). Last: 1 if some successor is a final state,
  // -1 otherwise.
  int transition(int sid, std::size_t countIndex, const std::vector<int>& counts, Horizon horizon) {
    const std::uint64_t memoKey =
        (static_cast<std::uint64_t>(sid) * 4096 + countIndex) * 3 + static_cast<std::uint64_t>(horizon);
    if (auto it = transitions_.find(memoKey); it != transitions_.end()) return it->second;

    std::vector<std::uint32_t> out;
    std::vector<int> ranks(p_.k);
    std::vector<std::size_t> idx(p_.k);
    std::vector<const std::vector<std::pair<int, int>>*> lists(p_.k);
    for (std::uint32_t joint : *sets_[sid]) {
      bool empty = false;
      for (int i = 0; i < p_.k; ++i) {
        ranks[i] = static_cast<int>(joint % base_);
        joint /= static_cast<std::uint32_t>(base_);
        lists[i] = &suitOptions_[ranks[i] * (p_.m + 1) + counts[i]];
        empty = empty || lists[i]->empty();
        idx[i] = 0;
      }
      if (empty) continue;
      while (true) {
        int sum = 0, peak = 0;
        std::uint32_t nextJoint = 0;
        for (int i = p_.k - 1; i >= 0; --i) {
          const auto& [nr, used] = (*lists[i])[idx[i]];
          int left = counts[i] - used;
          sum += left;
          peak = std::max(peak, left);
          nextJoint = nextJoint * static_cast<std::uint32_t>(base_) + static_cast<std::uint32_t>(nr);
        }
        // Leftovers split exactly into groups of >= 3 distinct suits.
        if (sum >= kMinSetSize * peak) {
          bool keep = true;
          std::uint32_t rest = nextJoint;
          for (int i = 0; i < p_.k && keep; ++i) {
            std::size_t r = rest % base_;
            rest /= static_cast<std::uint32_t>(base_);
            if (horizon == Horizon::Last) keep = finalSuit_[r];
            else if (horizon == Horizon::OneLeft) keep = !hasSingle_[r];
          }
          if (keep && horizon == Horizon::Last) {
            transitions_.emplace(memoKey, 1);
            return 1;
          }
          if (keep) out.push_back(nextJoint);
        }
        int i = 0;
        while (i < p_.k && ++idx[i] == lists[i]->size()) {
          idx[i] = 0;
          ++i;
        }
        if (i == p_.k) break;
      }
    }
    int result = -1;
    if (!out.empty() && horizon != Horizon::Last) {
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      result = intern(std::move(out));
    }
    transitions_.emplace(memoKey, result);
    return result;
  }

  TileSetParams p_;
  std::vector<std::vector<int>> suitStates_;
  std::map<std::vector<int>, int> suitRank_;
  std::size_t base_ = 0;
  std::vector<std::vector<std::pair<int, int>>> suitOptions_;
  std::vector<bool> finalSuit_;
  std::vector<bool> hasSingle_;
  std::vector<int> withoutComplete_;
  std::vector<int> completeCount_;
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<std::uint32_t>, int> setIds_;
  std::vector<const std::vector<std::uint32_t>*> sets_;
  std::unordered_map<std::uint64_t, int> transitions_;
};

}  // namespace

std::vector<BigInt> winningHandsByAutomaton(const TileSetParams& params) {
  params.validate();
  int vectors = 1;
  for (int i = 0; i < params.k; ++i) vectors *= params.m + 1;
  if (vectors > 4096) throw std::invalid_argument("too many count vectors for the winning automaton");
  return WinningAutomaton(params).run();
}

std::string CountRow::ratio() const {
  if (!winning) return {};
  return formatRatio(*winning, total);
}

std::string formatRatio(const BigInt& num, const BigInt& den) {
  if (den <= 0 || num < 0 || num > den) throw std::invalid_argument("ratio outside [0, 1]");
  if (num == 0) return "0.00e0";
  // Find e with 10^e <= num/den < 10^(e+1); e <= 0 here.
  int e = 0;
  BigInt scaled = num;
  while (scaled < den) {
    scaled *= 10;
    --e;
  }
  // mantissa*100 = round(num * 10^(2-e) / den)
  BigInt numer = num;
  for (int i = 0; i < 2 - e; ++i) numer *= 10;
  BigInt mant = (2 * numer + den) / (2 * den);
  if (mant >= 1000) {
    mant /= 10;
    ++e;
  }
  std::string digits = mant.str();
  return digits.substr(0, 1) + "." + digits.substr(1, 2) + "e" + std::to_string(e);
}

std::vector<CountRow> totalsTable(const TileSetParams& params, int tFrom, int tTo) {
  if (tFrom < 0 || tFrom > tTo || tTo > params.plainTiles()) {
    throw std::out_of_range("invalid hand size range");
  }
  auto poly = handCountPolynomial(params);
  std::vector<CountRow> rows;
  for (int t = tFrom; t <= tTo; ++t) rows.push_back({t, poly[t], std::nullopt});
  return rows;
}

std::vector<CountRow> winningTable(const TileSetParams& params, int tFrom, int tTo,
                                   WinningMethod method, const CountOptions& options) {
  auto rows = totalsTable(params, tFrom, tTo);
  if (method == WinningMethod::Automaton) {
    auto winning = winningHandsByAutomaton(params);
    for (auto& row : rows) row.winning = winning[row.t];
    return rows;
  }
  int lastDone = -1;
  for (auto& row : rows) {
    try {
      row.winning = countWinningHands(params, row.t, options);
    } catch (const CountingBudgetExceeded& e) {
      throw CountingBudgetExceeded(std::string(e.what()) + " at t=" + std::to_string(row.t), lastDone);
    }
    lastDone = row.t;
  }
  return rows;
}

std::string formatCsv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "t,total,winning,ratio\n";
  for (const auto& row : rows) {
    os << row.t << ',' << row.total << ',';
    if (row.winning) os << *row.winning << ',' << row.ratio();
    else os << ',';
    os << '\n';
  }
  return os.str();
}

}  // namespace rummikub
