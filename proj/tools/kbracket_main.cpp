#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kbracket/bracket.hpp"
#include "kbracket/error.hpp"
#include "kbracket/json_io.hpp"
#include "kbracket/moves.hpp"
#include "kbracket/reduce.hpp"

using namespace kbracket;

namespace {

struct InputArgs {
  std::string path;
  std::string inline_text;
  bool has_inline = false;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("input", in.path, "input file");
  auto* opt = cmd->add_option("-c,--code", in.inline_text, "inline input");
  opt->expected(1);
  cmd->callback([cmd, &in] { in.has_inline = cmd->count("-c") > 0; });
}

std::string read_input(const InputArgs& in) {
  if (in.has_inline) return in.inline_text;
  if (in.path.empty()) throw Error("cli.no-input", "provide an input file or -c");
  std::ifstream f(in.path);
  if (!f) throw Error("cli.no-input", "cannot open \"" + in.path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_dot(const std::string& path, const Web& w) {
  std::ofstream f(path);
  if (!f) throw Error("cli.bad-output", "cannot write \"" + path + "\"");
  f << web_to_dot(w);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string summand_line(const Monomial& m, const std::vector<int>& counts) {
  std::string line = "summand: " + m.str() + " vertices=[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) line += ",";
    line += std::to_string(counts[i]);
  }
  return line + "]";
}

int run_fuzz(const GaussCode& start, int moves, std::uint64_t seed, bool free_harness,
             int max_crossings, const std::optional<std::string>& replay_path,
             const EvalOptions& eval) {
  const bool use_free = free_harness || start.free_mode;
  auto value_of = [&](const GaussCode& code) -> std::string {
    if (use_free)
      return free_bracket(code, 1, eval).str() + " | " + free_bracket(code, -1, eval).str();
    return normalized_bracket(code, eval).str();
  };

  std::vector<MoveRecord> script;
  if (replay_path) {
    std::ifstream f(*replay_path);
    if (!f) throw Error("cli.no-input", "cannot open \"" + *replay_path + "\"");
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      script.push_back(parse_move(line));
    }
  }

  if (max_crossings == 0)
    max_crossings = std::min(12, std::max(start.crossing_count() + 2, 10));

  MoveOptions mopts;
  mopts.include_switches = use_free && !start.free_mode;
  mopts.max_crossings = max_crossings;

  const std::string baseline = value_of(start);
  GaussCode code = start;
  std::mt19937_64 rng(seed);
  const int steps = replay_path ? static_cast<int>(script.size()) : moves;
  for (int i = 0; i < steps; ++i) {
    MoveRecord m;
    if (replay_path) {
      m = script[static_cast<std::size_t>(i)];
    } else {
      auto candidates = enumerate_moves(code, mopts);
      if (candidates.empty()) break;
      m = candidates[static_cast<std::size_t>(rng() % candidates.size())];
    }
    code = apply_move(code, m);
    std::cout << move_to_string(m) << "\n";
    const std::string now = value_of(code);
    if (now != baseline) {
      std::cout << "fail: bracket changed after move " << (i + 1) << "\n";
      std::cout << "  start:    " << to_string(start) << "\n";
      std::cout << "  current:  " << to_string(code) << "\n";
      std::cout << "  expected: " << baseline << "\n";
      std::cout << "  got:      " << now << "\n";
      return 2;
    }
  }
  std::cout << "pass\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kuperberg sl(3) bracket of virtual and free links from Gauss codes"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  EvalOptions eval;
  app.add_option("--threads", eval.threads, "worker threads (0 = auto)");
  app.add_flag_callback("--no-cache", [&eval] { eval.use_cache = false; },
                        "disable the reduction memo table");

  InputArgs in;
  std::string dot_path;
  bool trace = false;
  std::uint64_t seed = 0;
  int moves = 8;
  int max_crossings = 0;
  bool free_harness = false;
  std::optional<std::string> replay_path;

  auto* cmd_eval = app.add_subcommand("eval", "state-sum bracket of a signed Gauss code");
  add_input(cmd_eval, in);

  auto* cmd_free = app.add_subcommand("free", "sign-blind bracket at A = +1 and -1");
  add_input(cmd_free, in);

  auto* cmd_kus = app.add_subcommand("kus", "all-unoriented state web of a Gauss code");
  add_input(cmd_kus, in);
  cmd_kus->add_option("--dot", dot_path, "write the web as DOT");

  auto* cmd_minimal = app.add_subcommand("minimal", "crossing-minimality certificate");
  add_input(cmd_minimal, in);

  auto* cmd_reduce = app.add_subcommand("reduce", "normal form of a web (JSON input)");
  add_input(cmd_reduce, in);
  cmd_reduce->add_flag("--trace", trace, "print each applied rule");
  cmd_reduce->add_option("--dot", dot_path, "write the input web as DOT");

  auto* cmd_canon = app.add_subcommand("canon", "canonical form of a connected web (JSON input)");
  add_input(cmd_canon, in);
  cmd_canon->add_option("--dot", dot_path, "write the canonical web as DOT");

  auto* cmd_fuzz = app.add_subcommand("fuzz", "random-move invariance check");
  add_input(cmd_fuzz, in);
  cmd_fuzz->add_option("--seed", seed, "random seed")->capture_default_str();
  cmd_fuzz->add_option("--moves", moves, "number of moves")->capture_default_str();
  cmd_fuzz->add_option("--max-crossings", max_crossings,
                       "insertion cap (0 = automatic)");
  cmd_fuzz->add_flag("--free", free_harness,
                     "free-link harness: compare free brackets, allow switches");
  std::string replay_str;
  auto* replay_opt = cmd_fuzz->add_option("--replay", replay_str, "replay a move transcript");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_eval) {
      const BracketReport r = report(parse_gauss(read_input(in)), eval);
      if (format == "json") {
        std::cout << report_to_json(r) << "\n";
      } else {
        std::cout << "raw: " << r.raw.str() << "\n";
        std::cout << "normalized: " << r.normalized.str() << "\n";
        std::cout << "writhe: " << r.writhe << "\n";
        std::cout << "scalar: " << bool_str(r.scalar) << "\n";
        for (const auto& [m, counts] : r.summands) std::cout << summand_line(m, counts) << "\n";
      }
    } else if (*cmd_free) {
      const GaussCode code = parse_gauss(read_input(in));
      const ModuleElement plus = free_bracket(code, 1, eval);
      const ModuleElement minus = free_bracket(code, -1, eval);
      if (format == "json") {
        std::cout << "{\"free_at_plus1\":" << module_element_to_json(plus)
                  << ",\"free_at_minus1\":" << module_element_to_json(minus) << "}\n";
      } else {
        std::cout << "free[A=1]: " << plus.str() << "\n";
        std::cout << "free[A=-1]: " << minus.str() << "\n";
      }
    } else if (*cmd_kus) {
      const Web kus = unoriented_state_web(parse_gauss(read_input(in)));
      if (!dot_path.empty()) write_dot(dot_path, kus);
      auto [parts, circles] = components(kus);
      std::string key;
      if (parts.size() == 1 && circles == 0) key = canonical_form(parts[0]).str();
      if (format == "json") {
        std::cout << "{\"kus\":" << (key.empty() ? "null" : "\"" + key + "\"")
                  << ",\"web\":" << web_to_json(kus) << "}\n";
      } else if (!key.empty()) {
        std::cout << key << "\n";
      } else {
        std::cout << web_to_json(kus) << "\n";
      }
    } else if (*cmd_minimal) {
      const MinimalityCertificate cert = minimality_certificate(parse_gauss(read_input(in)));
      if (format == "json")
        std::cout << certificate_to_json(cert) << "\n";
      else
        std::cout << cert.str() << "\n";
    } else if (*cmd_reduce) {
      const Web w = web_from_json(read_input(in));
      if (!dot_path.empty()) write_dot(dot_path, w);
      std::vector<std::string> lines;
      TraceSink sink;
      if (trace) sink = [&lines](const std::string& line) { lines.push_back(line); };
      const ModuleElement nf = normal_form(w, ReductionStrategy::deterministic(), sink);
      if (format == "json") {
        std::cout << "{\"element\":" << module_element_to_json(nf) << ",\"trace\":[";
        for (std::size_t i = 0; i < lines.size(); ++i)
          std::cout << (i ? "," : "") << "\"" << lines[i] << "\"";
        std::cout << "]}\n";
      } else {
        for (const auto& line : lines) std::cout << line << "\n";
        std::cout << nf.str() << "\n";
      }
    } else if (*cmd_canon) {
      const Web w = web_from_json(read_input(in));
      const CanonicalWeb cw = canonical_form(w);
      if (!dot_path.empty()) write_dot(dot_path, cw.to_web());
      if (format == "json")
        std::cout << "{\"canonical\":\"" << cw.str() << "\"}\n";
      else
        std::cout << cw.str() << "\n";
    } else if (*cmd_fuzz) {
      if (replay_opt->count() > 0) replay_path = replay_str;
      return run_fuzz(parse_gauss(read_input(in)), moves, seed, free_harness, max_crossings,
                      replay_path, eval);
    }
  } catch (const Error& e) {
    std::cerr << "error[" << e.cls() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
