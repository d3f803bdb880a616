// Command-line front end: solve, check, oracle, count, winning.
//
// Exit codes: 0 success, 1 parse or configuration error, 2 infeasible table
// or failed check, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rummikub/counting.hpp"
#include "rummikub/oracle.hpp"
#include "rummikub/solver.hpp"

using namespace rummikub;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRejected = 2, kBudget = 3 };

struct Config {
  std::string problemPath;
  std::string params;
  std::optional<int> tFrom;
  std::optional<int> tTo;
  std::string out;
  int threads = 1;
  bool noEarlyStop = false;
  std::uint64_t budgetNodes = OracleBudget{}.maxNodes;
  int budgetTiles = OracleBudget{}.maxTiles;
  std::string method = "auto";
  std::size_t maxKeys = static_cast<std::size_t>(-1);
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// "n=6,k=4" overrides the named fields of `base`.
TileSetParams applyOverrides(TileSetParams base, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("malformed --params entry '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed --params entry '" + item + "'");
    }
    if (key == "n") base.n = value;
    else if (key == "k") base.k = value;
    else if (key == "m") base.m = value;
    else if (key == "j") base.j = value;
    else throw UsageError("unknown parameter '" + key + "' in --params");
  }
  try {
    return TileSetParams::make(base.n, base.k, base.m, base.j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Problem loadProblem(const Config& cfg) {
  std::ifstream in(cfg.problemPath);
  if (!in) throw UsageError("cannot read " + cfg.problemPath);
  std::stringstream text;
  text << in.rdbuf();
  Problem p;
  try {
    p = parseProblem(text.str());
  } catch (const ParseError& e) {
    throw UsageError(cfg.problemPath + ": " + e.what());
  }
  if (cfg.params.empty()) return p;
  TileSetParams params = applyOverrides(p.params, cfg.params);
  if (params.n != p.params.n || params.k != p.params.k) {
    // Re-read the tiles against the new board.
    std::string rewritten = formatProblem(p);
    rewritten = rewritten.substr(rewritten.find('\n') + 1);
    std::string head = "params n=" + std::to_string(params.n) + " k=" + std::to_string(params.k) +
                       " m=" + std::to_string(params.m) + " j=" + std::to_string(params.j) + "\n";
    try {
      return parseProblem(head + rewritten);
    } catch (const ParseError& e) {
      throw UsageError(cfg.problemPath + ": " + e.what());
    }
  }
  try {
    return Problem::make(params, p.hand, p.table);
  } catch (const std::invalid_argument& e) {
    throw UsageError(cfg.problemPath + ": " + e.what());
  }
}

std::string scoreText(const std::optional<int>& s) { return s ? std::to_string(*s) : "INFEASIBLE"; }

int runSolve(const Config& cfg) {
  Problem p = loadProblem(cfg);
  SolverOptions opts;
  opts.earlyStop = !cfg.noEarlyStop;
  Arrangement a;
  try {
    a = bestArrangement(p, opts);
  } catch (const InfeasibleError& e) {
    std::cerr << e.what() << "\n";
    return kRejected;
  }
  std::cout << "score " << a.score << "\n";
  for (const auto& line : formatArrangement(a)) std::cout << line << "\n";
  Hand unused = p.combined();
  Hand used = a.usage(p.params.n, p.params.k);
  for (int v = 1; v <= p.params.n; ++v) {
    for (int s = 1; s <= p.params.k; ++s) unused.setCount({v, s}, unused.count(v, s) - used.count(v, s));
  }
  unused.setJokers(unused.jokers() - a.jokersPlaced());
  std::string tokens = formatHandTokens(unused);
  std::cout << "unused" << (tokens.empty() ? "" : " ") << tokens << "\n";
  if (unused.jokers() > 0) std::cout << "joker penalty " << jokerPenalty(p, a) << "\n";
  return kOk;
}

// Decision form: can every tile, hand and table, be placed?
int runCheck(const Config& cfg) {
  Problem p = loadProblem(cfg);
  bool ok = isFullyPlayable(p.combined(), p.params);
  std::cout << (ok ? "playable" : "not playable") << "\n";
  return ok ? kOk : kRejected;
}

int runOracle(const Config& cfg) {
  Problem p = loadProblem(cfg);
  SolverOptions opts;
  opts.earlyStop = !cfg.noEarlyStop;
  auto dp = maxScore(p, opts);
  std::cout << "dp " << scoreText(dp) << "\n";
  OracleResult oracle;
  try {
    oracle = oracleSolve(p, {cfg.budgetTiles, cfg.budgetNodes});
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  }
  std::cout << "oracle " << scoreText(oracle.score) << "\n";
  if (dp != oracle.score) {
    std::cerr << "scores differ\n";
    return kRejected;
  }
  return kOk;
}

int emitCsv(const Config& cfg, const std::vector<CountRow>& rows) {
  std::string csv = formatCsv(rows);
  if (cfg.out.empty()) {
    std::cout << csv;
    return kOk;
  }
  std::ofstream out(cfg.out);
  if (!out) throw UsageError("cannot write " + cfg.out);
  out << csv;
  return kOk;
}

int runCount(const Config& cfg, bool winning) {
  TileSetParams params = applyOverrides({}, cfg.params);
  int tFrom = cfg.tFrom.value_or(0);
  int tTo = cfg.tTo.value_or(params.plainTiles());
  if (tFrom < 0 || tFrom > tTo || tTo > params.plainTiles()) {
    throw UsageError("t range " + std::to_string(tFrom) + ".." + std::to_string(tTo) + " outside 0.." +
                     std::to_string(params.plainTiles()));
  }
  if (!winning) return emitCsv(cfg, totalsTable(params, tFrom, tTo));

  CountOptions opts;
  opts.threads = cfg.threads;
  opts.shards = cfg.threads;
  opts.maxKeys = cfg.maxKeys;
  // The automaton yields every t at once but its state sets grow about
  // tenfold per value; past n=6 enumerating covers per t is the practical choice.
  bool automaton = cfg.method == "automaton" || (cfg.method == "auto" && params.n <= 6);
  WinningMethod method = automaton ? WinningMethod::Automaton : WinningMethod::Partition;
  try {
    return emitCsv(cfg, winningTable(params, tFrom, tTo, method, opts));
  } catch (const CountingBudgetExceeded& e) {
    std::cerr << e.what() << "; last completed t: "
              << (e.lastCompletedT() < 0 ? std::string("none") : std::to_string(e.lastCompletedT())) << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rummikub puzzle solver and hand counting"};
  app.require_subcommand(1);
  Config cfg;

  auto addParams = [&](CLI::App* cmd) {
    cmd->add_option("--params", cfg.params, "Overrides, e.g. n=13,k=4,m=2,j=2");
  };
  auto addProblem = [&](CLI::App* cmd) {
    cmd->add_option("problem", cfg.problemPath, "Problem file")->required();
    addParams(cmd);
    cmd->add_flag("--no-early-stop", cfg.noEarlyStop, "Disable the upper-bound cutoff");
  };

  auto* solve = app.add_subcommand("solve", "Maximum score and an optimal arrangement");
  addProblem(solve);
  auto* check = app.add_subcommand("check", "Whether every tile can be placed");
  addProblem(check);
  auto* oracle = app.add_subcommand("oracle", "Compare the solver with exhaustive search");
  addProblem(oracle);
  oracle->add_option("--budget-nodes", cfg.budgetNodes, "Search node cap")->check(CLI::PositiveNumber);
  oracle->add_option("--budget-tiles", cfg.budgetTiles, "Tile cap")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Number of hands per size (CSV)");
  auto* winning = app.add_subcommand("winning", "Winning hands per size (CSV)");
  for (auto* cmd : {count, winning}) {
    addParams(cmd);
    cmd->add_option("--t-from", cfg.tFrom, "First hand size");
    cmd->add_option("--t-to", cfg.tTo, "Last hand size");
    cmd->add_option("--out", cfg.out, "Write CSV to this path");
  }
  winning->add_option("--threads", cfg.threads, "Worker threads (partition method)")->check(CLI::PositiveNumber);
  winning->add_option("--method", cfg.method, "auto, automaton or partition")
      ->check(CLI::IsMember({"auto", "automaton", "partition"}));
  winning->add_option("--max-keys", cfg.maxKeys, "Dedup key cap per shard (partition method)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return runSolve(cfg);
    if (*check) return runCheck(cfg);
    if (*oracle) return runOracle(cfg);
    if (*count) return runCount(cfg, false);
    return runCount(cfg, true);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
