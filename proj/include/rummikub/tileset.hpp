#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rummikub {

/// Minimum size of a run or a group. Fixed for every supported tile set.
inline constexpr int kMinSetSize = 3;

/// Generalized tile-set parameters: n values per suit, k suits, m copies of
/// each (value, suit) tile, and j jokers.
struct TileSetParams {
  int n = 13;
  int k = 4;
  int m = 2;
  int j = 2;

  /// Throws std::invalid_argument when any parameter is out of range or when a
  /// set size other than kMinSetSize is requested.
  static TileSetParams make(int n, int k, int m, int j, int s = kMinSetSize);

  void validate() const;
  int tileTypes() const { return n * k; }
  int plainTiles() const { return n * k * m; }

  friend bool operator==(const TileSetParams&, const TileSetParams&) = default;
};

struct Tile {
  int value = 1;
  int suit = 1;

  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Bounded multiset of tiles stored as a count grid (suit-major, then value)
/// plus a joker count. Bounds against m and j are checked by Problem.
class Hand {
public:
  Hand() = default;
  Hand(int n, int k) : n_(n), k_(k), counts_(static_cast<std::size_t>(n * k), 0) {}

  int n() const { return n_; }
  int k() const { return k_; }

  int count(int value, int suit) const { return counts_[index(value, suit)]; }
  int count(Tile t) const { return count(t.value, t.suit); }
  int jokers() const { return jokers_; }

  void add(Tile t, int copies = 1);
  void remove(Tile t, int copies = 1);
  void setCount(Tile t, int copies);
  void addJokers(int copies = 1);
  void setJokers(int copies);

  /// Real tiles plus jokers.
  int size() const;
  int realTiles() const;
  bool empty() const { return size() == 0; }

  std::span<const std::uint8_t> counts() const { return counts_; }

  friend bool operator==(const Hand&, const Hand&) = default;

private:
  std::size_t index(int value, int suit) const;

  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> counts_;
  int jokers_ = 0;
};

/// Free hand tiles plus mandatory table tiles over one tile set.
struct Problem {
  TileSetParams params;
  Hand hand;   // free tiles, may remain unused
  Hand table;  // mandatory tiles, must all be used

  /// Validates the combined supply against m and j. Throws std::invalid_argument.
  static Problem make(const TileSetParams& params, Hand hand, Hand table);
  static Problem fromHand(const TileSetParams& params, Hand hand);

  void validate() const;

  /// Hand and table merged into one multiset.
  Hand combined() const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Parses the line-oriented problem format:
///   params n=<int> k=<int> m=<int> j=<int>
///   hand <value>:<suit>|J ...
///   table <value>:<suit>|J ...     (optional)
/// '#' starts a comment. Repeated tokens accumulate.
Problem parseProblem(std::string_view text);

/// Inverse of parseProblem; tokens are emitted in canonical order.
std::string formatProblem(const Problem& problem);

std::string formatHandTokens(const Hand& hand);

/// Sum of real tile values; jokers count zero.
int handValue(const Hand& hand);

/// Injective byte key: one byte per count in suit-major then value order,
/// followed by one joker byte.
std::string canonicalKey(const Hand& hand);

}  // namespace rummikub
