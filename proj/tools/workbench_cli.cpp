// workbench: command-line front end for the computability workbench.
//
//   workbench rank <string> [--alphabet ab]
//   workbench unrank <number> [--alphabet ab]
//   workbench run-tm <machine-file> <input> [--budget N]
//   workbench encode <machine-file>
//   workbench decode <bitstring>
//   workbench dovetail <machine-file> [--max-prints N] [--max-rounds R]
//   workbench nth (<machine-file> | --bijection NAME) <n>
//   workbench index-of (<machine-file> | --bijection NAME) <string> [--budget N]
//   workbench decide-increasing <stream-spec> <string>
//   workbench deletemin [--bijection NAME] [--count N]
//   workbench chain-search [--order lex-nn|unrank] --from A --to B [--budget N]
//   workbench diagonalize --library DIR --mode flip|shift|machine-x [--input w]
//
// Output is plain text, one item per line; the empty string prints as an
// empty line. WORKBENCH_DEFAULT_BUDGET overrides the default step budget.

#include <algorithm>
#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "workbench/workbench.hpp"

namespace {

using namespace workbench;

volatile std::sig_atomic_t g_interrupted = 0;

extern "C" void on_interrupt(int) { g_interrupted = 1; }

constexpr int kInterruptedExit = 130;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("WORKBENCH_DEFAULT_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("WORKBENCH_DEFAULT_BUDGET is not a number: ") + env);
  }
  return 1'000'000;
}

Rank parse_rank(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("'" + text + "' is not a natural number");
  }
  return Rank(text);
}

CountingBijection<std::string> named_bijection(const std::string& name, const Alphabet& alphabet) {
  if (name == "unrank") return unrank_bijection(alphabet);
  if (name == "even-rank") return strided_unrank_bijection(alphabet, 2);
  if (name == "squares") return square_unrank_bijection(alphabet);
  throw std::invalid_argument("unknown bijection '" + name + "' (unrank, even-rank, squares)");
}

// <machine-file> dovetails the machine; unrank, even-rank and squares are
// bijection streams; list:s1,s2,... is a finite stream.
EnumerationStream stream_from_spec(const std::string& spec, const Alphabet& alphabet,
                                   Index max_rounds) {
  if (spec.rfind("list:", 0) == 0) {
    std::vector<std::string> items;
    std::stringstream in(spec.substr(5));
    for (std::string item; std::getline(in, item, ',');) items.push_back(item);
    if (!spec.empty() && spec.back() == ',') items.emplace_back();
    return stream_from_list(std::move(items), alphabet);
  }
  if (spec == "unrank" || spec == "even-rank" || spec == "squares") {
    return enumerator_from_bijection(named_bijection(spec, alphabet), alphabet);
  }
  return recognizer_to_enumerator(load_machine(spec), max_rounds);
}

NatPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected x,y but got '" + text + "'");
  const auto x = parse_rank(text.substr(0, comma));
  const auto y = parse_rank(text.substr(comma + 1));
  return {static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)};
}

std::vector<TuringMachine> load_library(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<TuringMachine> machines;
  for (const auto& f : files) machines.push_back(load_machine(f.string()));
  return machines;
}

int run(int argc, char** argv) {
  CLI::App app{"Computability workbench: canonical order, Turing machines, enumerators, "
               "counting orders and diagonalization"};
  app.require_subcommand(1);

  std::string alphabet_text = "ab";
  const std::uint64_t fallback_budget = default_budget();

  // rank / unrank
  std::string rank_input;
  auto* rank_cmd = app.add_subcommand("rank", "Print the canonical rank of a string");
  rank_cmd->add_option("string", rank_input, "String over the alphabet")->required();
  rank_cmd->add_option("--alphabet", alphabet_text, "Ordered symbols")->capture_default_str();

  std::string unrank_input;
  auto* unrank_cmd = app.add_subcommand("unrank", "Print the string of a given rank");
  unrank_cmd->add_option("number", unrank_input, "Natural number")->required();
  unrank_cmd->add_option("--alphabet", alphabet_text, "Ordered symbols")->capture_default_str();

  // machines
  std::string machine_file;
  std::string tm_input;
  std::uint64_t budget = fallback_budget;
  auto* run_cmd = app.add_subcommand("run-tm", "Run a machine on an input with a step budget");
  run_cmd->add_option("machine-file", machine_file)->required()->check(CLI::ExistingFile);
  run_cmd->add_option("input", tm_input)->required();
  run_cmd->add_option("--budget", budget, "Step budget")->capture_default_str();

  auto* encode_cmd = app.add_subcommand("encode", "Print the binary encoding of a machine");
  encode_cmd->add_option("machine-file", machine_file)->required()->check(CLI::ExistingFile);

  std::string bits;
  auto* decode_cmd = app.add_subcommand("decode", "Validate and decode a machine encoding");
  decode_cmd->add_option("bitstring", bits)->required();

  // enumerators
  Index max_prints = 10;
  Index max_rounds = 10'000;
  auto* dovetail_cmd = app.add_subcommand("dovetail", "Enumerate L(M) by dovetailing");
  dovetail_cmd->add_option("machine-file", machine_file)->required()->check(CLI::ExistingFile);
  dovetail_cmd->add_option("--max-prints", max_prints, "Stop after this many strings")
      ->capture_default_str();
  dovetail_cmd->add_option("--max-rounds", max_rounds, "Stop after this many rounds")
      ->capture_default_str();

  std::vector<std::string> positionals;
  std::string bijection_name;
  auto* nth_cmd = app.add_subcommand("nth", "Algorithm A: the n-th printed string (from 0)");
  nth_cmd->add_option("args", positionals, "[machine-file] n")->required()->expected(1, 2);
  nth_cmd->add_option("--bijection", bijection_name, "unrank | even-rank | squares");
  nth_cmd->add_option("--alphabet", alphabet_text, "Alphabet for --bijection")
      ->capture_default_str();
  nth_cmd->add_option("--max-rounds", max_rounds, "Dovetail round limit")->capture_default_str();

  auto* index_cmd = app.add_subcommand("index-of", "Algorithm B: print index of a string");
  index_cmd->add_option("args", positionals, "[machine-file] string")->required()->expected(1, 2);
  index_cmd->add_option("--bijection", bijection_name, "unrank | even-rank | squares");
  index_cmd->add_option("--alphabet", alphabet_text, "Alphabet for --bijection")
      ->capture_default_str();
  index_cmd->add_option("--budget", budget, "Maximum number of prints to scan")
      ->capture_default_str();
  index_cmd->add_option("--max-rounds", max_rounds, "Dovetail round limit")->capture_default_str();

  std::string stream_spec;
  std::string target;
  auto* decide_cmd = app.add_subcommand(
      "decide-increasing", "Decide membership from a strictly increasing enumeration");
  decide_cmd->add_option("stream-spec", stream_spec,
                         "machine file, unrank, even-rank, squares or list:s1,s2,...")
      ->required();
  decide_cmd->add_option("string", target)->required();
  decide_cmd->add_option("--alphabet", alphabet_text, "Alphabet for built-in streams")
      ->capture_default_str();
  decide_cmd->add_option("--max-rounds", max_rounds, "Dovetail round limit")->capture_default_str();

  // counting orders
  Index count = 10;
  std::string deletemin_bijection = "unrank";
  auto* deletemin_cmd = app.add_subcommand("deletemin", "Call deleteMin repeatedly");
  deletemin_cmd->add_option("--bijection", deletemin_bijection, "unrank | even-rank | squares")
      ->capture_default_str();
  deletemin_cmd->add_option("--count", count, "Number of calls")->capture_default_str();
  deletemin_cmd->add_option("--alphabet", alphabet_text, "Ordered symbols")->capture_default_str();

  std::string order_name = "lex-nn";
  std::string from_text;
  std::string to_text_arg;
  Index chain_budget = 10'000;
  auto* chain_cmd = app.add_subcommand("chain-search", "Bounded search for a long descending chain");
  chain_cmd->add_option("--order", order_name, "lex-nn | unrank")->capture_default_str();
  chain_cmd->add_option("--from", from_text, "Upper endpoint (x,y for lex-nn)")->required();
  chain_cmd->add_option("--to", to_text_arg, "Lower endpoint")->required();
  chain_cmd->add_option("--budget", chain_budget, "Chain length budget")->capture_default_str();
  chain_cmd->add_option("--alphabet", alphabet_text, "Alphabet for --order unrank")
      ->capture_default_str();

  // diagonalization
  std::string library_dir;
  std::string mode;
  std::optional<std::string> x_input;
  auto* diag_cmd = app.add_subcommand("diagonalize", "Diagonal constructions over a library");
  diag_cmd->add_option("--library", library_dir, "Directory of .tm decider files")
      ->required()
      ->check(CLI::ExistingDirectory);
  diag_cmd->add_option("--mode", mode, "flip | shift | machine-x")
      ->required()
      ->check(CLI::IsMember({"flip", "shift", "machine-x"}));
  diag_cmd->add_option("--input", x_input, "Single input for machine-x");
  diag_cmd->add_option("--budget", budget, "Step budget per run")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::ostream& out = std::cout;

  if (*rank_cmd) {
    const Alphabet alphabet(alphabet_text);
    out << rank(rank_input, alphabet).str() << '\n';
  } else if (*unrank_cmd) {
    const Alphabet alphabet(alphabet_text);
    out << unrank(parse_rank(unrank_input), alphabet) << '\n';
  } else if (*run_cmd) {
    const auto m = load_machine(machine_file);
    const auto outcome = workbench::run(m, tm_input, budget);
    out << to_string(outcome.verdict) << " steps=" << outcome.steps << '\n';
  } else if (*encode_cmd) {
    out << encode(load_machine(machine_file)).bits << '\n';
  } else if (*decode_cmd) {
    const auto decoded = decode_validate(MachineEncoding{bits});
    if (!decoded) {
      out << "invalid: " << decoded.reason << '\n';
      return 1;
    }
    out << to_text(*decoded.machine);
  } else if (*dovetail_cmd) {
    auto stream = recognizer_to_enumerator(load_machine(machine_file), max_rounds);
    for (Index i = 0; i < max_prints && !g_interrupted; ++i) {
      auto s = stream.next();
      if (!s) break;
      out << *s << '\n';
    }
  } else if (*nth_cmd || *index_cmd) {
    const bool by_bijection = positionals.size() == 1;
    if (by_bijection == bijection_name.empty()) {
      throw std::invalid_argument("give either a machine file or --bijection, not both or neither");
    }
    const Alphabet alphabet(alphabet_text);
    auto stream = by_bijection
                      ? enumerator_from_bijection(named_bijection(bijection_name, alphabet), alphabet)
                      : recognizer_to_enumerator(load_machine(positionals[0]), max_rounds);
    const std::string& arg = positionals.back();
    if (*nth_cmd) {
      out << algorithm_A(stream, static_cast<Index>(parse_rank(arg))) << '\n';
    } else {
      const auto c = algorithm_B(stream, arg, budget);
      if (c) {
        out << *c << '\n';
      } else {
        out << "not_seen\n";
      }
    }
  } else if (*decide_cmd) {
    const Alphabet alphabet(alphabet_text);
    const auto stream = stream_from_spec(stream_spec, alphabet, max_rounds);
    const auto d = decider_from_increasing_enumerator(stream, target);
    out << (d == Decision::accepted ? "accepted" : "rejected") << '\n';
  } else if (*deletemin_cmd) {
    const Alphabet alphabet(alphabet_text);
    auto source = delete_min_from_bijection(named_bijection(deletemin_bijection, alphabet));
    for (Index i = 0; i < count && !g_interrupted; ++i) out << source.delete_min() << '\n';
  } else if (*chain_cmd) {
    auto report = [&out](const auto& result, auto&& show) {
      out << (result.budget_exceeded ? "budget_exceeded"
                                     : result.reached_target ? "reached" : "stuck")
          << " length=" << result.chain.size() << '\n';
      for (const auto& x : result.chain) out << show(x) << '\n';
    };
    if (order_name == "lex-nn") {
      const auto result = chain_search(lexicographic_nat_pairs(), parse_pair(from_text),
                                       parse_pair(to_text_arg), chain_budget);
      report(result, [](const NatPair& p) {
        return std::to_string(p.first) + "," + std::to_string(p.second);
      });
    } else if (order_name == "unrank") {
      const Alphabet alphabet(alphabet_text);
      const auto result = chain_search(order_from_bijection(unrank_bijection(alphabet)), from_text,
                                       to_text_arg, chain_budget);
      report(result, [](const std::string& s) { return s; });
    } else {
      throw std::invalid_argument("unknown order '" + order_name + "' (lex-nn, unrank)");
    }
  } else if (*diag_cmd) {
    const MachineLibrary library(load_library(library_dir));
    check_decider_library(library, budget);
    if (mode == "machine-x") {
      out << "k\tw\tM_k(w)\tX(w)\n";
      auto row = [&](const std::string& w) {
        const auto x = machine_x(library, w, budget);
        const auto direct = library.run(x.consulted, w, budget);
        out << x.consulted << '\t' << w << '\t'
            << (direct.verdict == Verdict::accepted ? 1 : 0) << '\t'
            << (x.bit ? std::to_string(*x.bit) : std::string("out_of_budget")) << '\n';
      };
      if (x_input) {
        row(*x_input);
      } else {
        for (std::size_t k = 0; k < library.size(); ++k) row(unrank(k, library.alphabet()));
      }
    } else {
      FunctionTable table;
      table.budget = budget;
      for (std::size_t k = 0; k < library.size(); ++k) {
        table.functions.push_back(
            machine_decision_function(std::make_shared<const TuringMachine>(library[k])));
      }
      const auto g = mode == "flip" ? diagonal_flip(table) : diagonal_shift(table);
      out << "k\tf_k(k)\tg(k)\n";
      for (std::size_t k = 0; k < table.size(); ++k) {
        out << k << '\t' << table.evaluate(k, k) << '\t' << g(k) << '\n';
      }
    }
  }

  out.flush();
  return g_interrupted ? kInterruptedExit : 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
