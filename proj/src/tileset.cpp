#include "rummikub/tileset.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace rummikub {

TileSetParams TileSetParams::make(int n, int k, int m, int j, int s) {
  if (s != kMinSetSize) {
    throw std::invalid_argument("set size must be " + std::to_string(kMinSetSize));
  }
  TileSetParams p{n, k, m, j};
  p.validate();
  return p;
}

void TileSetParams::validate() const {
  if (n < 1 || k < 1 || m < 1 || j < 0) {
    throw std::invalid_argument("invalid tile set parameters n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                " j=" + std::to_string(j));
  }
  if (m > 255 || j > 255) {
    throw std::invalid_argument("m and j must not exceed 255");
  }
}

std::size_t Hand::index(int value, int suit) const {
  if (value < 1 || value > n_ || suit < 1 || suit > k_) {
    throw std::out_of_range("tile " + std::to_string(value) + ":" + std::to_string(suit) +
                            " outside tile set");
  }
  return static_cast<std::size_t>((suit - 1) * n_ + (value - 1));
}

void Hand::add(Tile t, int copies) {
  auto& c = counts_[index(t.value, t.suit)];
  int next = c + copies;
  if (next < 0 || next > 255) {
    throw std::out_of_range("tile count out of range");
  }
  c = static_cast<std::uint8_t>(next);
}

void Hand::remove(Tile t, int copies) { add(t, -copies); }

void Hand::setCount(Tile t, int copies) {
  if (copies < 0 || copies > 255) {
    throw std::out_of_range("tile count out of range");
  }
  counts_[index(t.value, t.suit)] = static_cast<std::uint8_t>(copies);
}

void Hand::addJokers(int copies) { setJokers(jokers_ + copies); }

void Hand::setJokers(int copies) {
  if (copies < 0 || copies > 255) {
    throw std::out_of_range("joker count out of range");
  }
  jokers_ = copies;
}

int Hand::realTiles() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int Hand::size() const { return realTiles() + jokers_; }

Problem Problem::make(const TileSetParams& params, Hand hand, Hand table) {
  Problem p{params, std::move(hand), std::move(table)};
  p.validate();
  return p;
}

Problem Problem::fromHand(const TileSetParams& params, Hand hand) {
  Hand table(params.n, params.k);
  return make(params, std::move(hand), std::move(table));
}

void Problem::validate() const {
  params.validate();
  for (const Hand* h : {&hand, &table}) {
    if (h->n() != params.n || h->k() != params.k) {
      throw std::invalid_argument("hand dimensions do not match parameters");
    }
  }
  for (int s = 1; s <= params.k; ++s) {
    for (int v = 1; v <= params.n; ++v) {
      int c = hand.count(v, s) + table.count(v, s);
      if (c > params.m) {
        throw std::invalid_argument("count " + std::to_string(c) + " of tile " +
                                    std::to_string(v) + ":" + std::to_string(s) +
                                    " exceeds m=" + std::to_string(params.m));
      }
    }
  }
  if (hand.jokers() + table.jokers() > params.j) {
    throw std::invalid_argument("jokers exceed j=" + std::to_string(params.j));
  }
}

Hand Problem::combined() const {
  Hand all = hand;
  for (int s = 1; s <= params.k; ++s) {
    for (int v = 1; v <= params.n; ++v) {
      if (int c = table.count(v, s)) all.add({v, s}, c);
    }
  }
  all.addJokers(table.jokers());
  return all;
}

namespace {

std::vector<std::string_view> splitWords(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parseInt(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void parseTiles(const std::vector<std::string_view>& words, int lineNo, const TileSetParams& params,
                Hand& into) {
  for (std::size_t w = 1; w < words.size(); ++w) {
    std::string_view tok = words[w];
    if (tok == "J") {
      into.addJokers();
      continue;
    }
    auto colon = tok.find(':');
    int value = 0;
    int suit = 0;
    if (colon == std::string_view::npos || !parseInt(tok.substr(0, colon), value) ||
        !parseInt(tok.substr(colon + 1), suit)) {
      throw ParseError(lineNo, "malformed tile token '" + std::string(tok) + "'");
    }
    if (value < 1 || value > params.n || suit < 1 || suit > params.k) {
      throw ParseError(lineNo, "tile '" + std::string(tok) + "' out of range for n=" +
                                   std::to_string(params.n) + " k=" + std::to_string(params.k));
    }
    if (into.count(value, suit) >= params.m) {
      throw ParseError(lineNo, "count of tile '" + std::string(tok) + "' exceeds m=" +
                                   std::to_string(params.m));
    }
    into.add({value, suit});
  }
}

}  // namespace

Problem parseProblem(std::string_view text) {
  TileSetParams params;
  bool haveParams = false;
  bool haveHand = false;
  bool haveTable = false;
  Hand hand;
  Hand table;

  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = splitWords(line);
    if (words.empty()) continue;

    std::string_view head = words[0];
    if (head == "params") {
      if (haveParams) throw ParseError(lineNo, "duplicate params line");
      int vals[4] = {-1, -1, -1, -1};
      const char* names[4] = {"n", "k", "m", "j"};
      for (std::size_t w = 1; w < words.size(); ++w) {
        auto eq = words[w].find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(lineNo, "malformed parameter '" + std::string(words[w]) + "'");
        }
        std::string_view key = words[w].substr(0, eq);
        int slot = -1;
        for (int i = 0; i < 4; ++i) {
          if (key == names[i]) slot = i;
        }
        if (slot < 0 || !parseInt(words[w].substr(eq + 1), vals[slot])) {
          throw ParseError(lineNo, "malformed parameter '" + std::string(words[w]) + "'");
        }
      }
      for (int i = 0; i < 4; ++i) {
        if (vals[i] < 0) throw ParseError(lineNo, std::string("missing parameter ") + names[i]);
      }
      try {
        params = TileSetParams::make(vals[0], vals[1], vals[2], vals[3]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineNo, e.what());
      }
      haveParams = true;
      hand = Hand(params.n, params.k);
      table = Hand(params.n, params.k);
    } else if (head == "hand" || head == "table") {
      if (!haveParams) throw ParseError(lineNo, "params line must come first");
      bool isHand = head == "hand";
      if (isHand ? haveHand : haveTable) {
        throw ParseError(lineNo, "duplicate " + std::string(head) + " line");
      }
      if (!isHand && !haveHand) throw ParseError(lineNo, "table line must follow hand line");
      (isHand ? haveHand : haveTable) = true;
      parseTiles(words, lineNo, params, isHand ? hand : table);
    } else {
      throw ParseError(lineNo, "unknown directive '" + std::string(head) + "'");
    }
  }
  if (!haveParams) throw ParseError(lineNo, "missing params line");
  if (!haveHand) throw ParseError(lineNo, "missing hand line");

  for (int s = 1; s <= params.k; ++s) {
    for (int v = 1; v <= params.n; ++v) {
      if (hand.count(v, s) + table.count(v, s) > params.m) {
        throw ParseError(lineNo, "combined count of tile " + std::to_string(v) + ":" +
                                     std::to_string(s) + " exceeds m=" + std::to_string(params.m));
      }
    }
  }
  if (hand.jokers() + table.jokers() > params.j) {
    throw ParseError(lineNo, "jokers exceed j=" + std::to_string(params.j));
  }
  return Problem{params, std::move(hand), std::move(table)};
}

std::string formatHandTokens(const Hand& hand) {
  std::ostringstream os;
  bool first = true;
  for (int s = 1; s <= hand.k(); ++s) {
    for (int v = 1; v <= hand.n(); ++v) {
      for (int c = 0; c < hand.count(v, s); ++c) {
        os << (first ? "" : " ") << v << ':' << s;
        first = false;
      }
    }
  }
  for (int c = 0; c < hand.jokers(); ++c) {
    os << (first ? "" : " ") << 'J';
    first = false;
  }
  return os.str();
}

std::string formatProblem(const Problem& problem) {
  const auto& p = problem.params;
  std::ostringstream os;
  os << "params n=" << p.n << " k=" << p.k << " m=" << p.m << " j=" << p.j << '\n';
  std::string handTokens = formatHandTokens(problem.hand);
  os << "hand" << (handTokens.empty() ? "" : " ") << handTokens << '\n';
  if (!problem.table.empty()) os << "table " << formatHandTokens(problem.table) << '\n';
  return os.str();
}

int handValue(const Hand& hand) {
  int total = 0;
  for (int s = 1; s <= hand.k(); ++s) {
    for (int v = 1; v <= hand.n(); ++v) total += v * hand.count(v, s);
  }
  return total;
}

std::string canonicalKey(const Hand& hand) {
  auto counts = hand.counts();
  std::string key(counts.begin(), counts.end());
  key.push_back(static_cast<char>(hand.jokers()));
  return key;
}

}  // namespace rummikub
