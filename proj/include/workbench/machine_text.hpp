#pragma once

// Plain-text machine files.
//
//   # comment
//   states: q0 q1 acc rej
//   input_alphabet: a b
//   tape_alphabet: a b X _
//   blank: _
//   start: q0
//   accept: acc
//   reject: rej
//   delta: q0 a -> q1 b R
//
// Symbols are single characters. The blank is moved to tape position 0;
// the other tape symbols keep their listed order.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "workbench/error.hpp"
#include "workbench/machine.hpp"

namespace workbench {

namespace detail {

inline std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace detail

inline TuringMachine parse_machine(std::string_view text) {
  struct Delta {
    std::size_t line;
    std::vector<std::string> words;
  };
  std::map<std::string, std::pair<std::size_t, std::string>> fields;
  std::vector<Delta> deltas;

  auto syntax = [](std::size_t line, const std::string& why) {
    return Error(ErrorCode::machine_file_syntax, "line " + std::to_string(line) + ": " + why);
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw syntax(line_no, "expected 'key: value'");
    const auto key = detail::trim(std::string_view(line).substr(0, colon));
    auto value = line.substr(colon + 1);
    if (key == "delta") {
      for (auto at = value.find("->"); at != std::string::npos; at = value.find("->", at + 4)) {
        value.replace(at, 2, " -> ");
      }
      deltas.push_back({line_no, detail::split_words(value)});
      continue;
    }
    static const char* const known[] = {"states", "input_alphabet", "tape_alphabet",
                                        "blank",  "start",          "accept",
                                        "reject"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw syntax(line_no, "unknown key '" + key + "'");
    if (fields.count(key)) throw syntax(line_no, "duplicate '" + key + "' line");
    fields[key] = {line_no, detail::trim(value)};
  }

  auto require = [&](const std::string& key) -> const std::pair<std::size_t, std::string>& {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw Error(ErrorCode::machine_file_syntax, "missing '" + key + ":' line");
    }
    return it->second;
  };
  auto symbols_of = [&](const std::string& key) {
    const auto& [line, value] = require(key);
    std::string symbols;
    for (const auto& w : detail::split_words(value)) {
      if (w.size() != 1) throw syntax(line, "symbol '" + w + "' must be one character");
      if (symbols.find(w[0]) != std::string::npos) {
        throw syntax(line, "symbol '" + w + "' listed twice");
      }
      symbols += w[0];
    }
    if (symbols.empty()) throw syntax(line, "no symbols listed");
    return symbols;
  };

  const auto& [states_line, states_value] = require("states");
  const auto states = detail::split_words(states_value);
  if (states.empty()) throw syntax(states_line, "no states listed");
  auto state_index = [&](std::size_t line, const std::string& name) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i] == name) return i;
    }
    throw syntax(line, "undeclared state '" + name + "'");
  };
  auto single_state = [&](const std::string& key) {
    const auto& [line, value] = require(key);
    const auto words = detail::split_words(value);
    if (words.size() != 1) throw syntax(line, "expected exactly one state");
    return state_index(line, words[0]);
  };

  const std::string input = symbols_of("input_alphabet");
  const std::string listed_tape = symbols_of("tape_alphabet");
  const auto& [blank_line, blank_value] = require("blank");
  if (blank_value.size() != 1) throw syntax(blank_line, "blank must be one character");
  const char blank = blank_value[0];
  if (input.find(blank) != std::string::npos) {
    throw syntax(blank_line, "blank is also an input symbol");
  }
  std::string tape(1, blank);
  for (char a : listed_tape) {
    if (a != blank) tape += a;
  }
  for (char a : input) {
    if (tape.find(a) == std::string::npos) {
      throw syntax(fields["tape_alphabet"].first,
                   std::string("input symbol '") + a + "' missing from tape alphabet");
    }
  }
  const Alphabet tape_alphabet(tape);

  const auto start = single_state("start");
  const auto accept = single_state("accept");
  const auto reject = single_state("reject");
  if (accept == reject) throw syntax(fields["reject"].first, "reject state equals accept state");

  TransitionTable delta;
  for (const auto& d : deltas) {
    const auto& w = d.words;
    if (w.size() != 6 || w[2] != "->") throw syntax(d.line, "expected 'delta: q a -> q' b L|R'");
    auto symbol = [&](const std::string& s) {
      if (s.size() != 1 || !tape_alphabet.contains(s[0])) {
        throw syntax(d.line, "'" + s + "' is not a tape symbol");
      }
      return tape_alphabet.index_of(s[0]);
    };
    Move move;
    if (w[5] == "L") {
      move = Move::left;
    } else if (w[5] == "R") {
      move = Move::right;
    } else {
      throw syntax(d.line, "direction must be L or R");
    }
    const TransitionKey key{state_index(d.line, w[0]), symbol(w[1])};
    if (key.first == accept || key.first == reject) {
      throw syntax(d.line, "no transition may leave halting state '" + w[0] + "'");
    }
    const Action action{state_index(d.line, w[3]), symbol(w[4]), move};
    if (!delta.emplace(key, action).second) {
      throw syntax(d.line, "second transition for (" + w[0] + ", " + w[1] + ")");
    }
  }

  return TuringMachine(states, Alphabet(input), tape_alphabet, start, accept, reject,
                       std::move(delta));
}

inline TuringMachine load_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open machine file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_machine(text.str());
}

inline std::string to_text(const TuringMachine& m) {
  std::ostringstream out;
  auto symbols = [](std::string_view s) {
    std::string joined;
    for (char a : s) {
      if (!joined.empty()) joined += ' ';
      joined += a;
    }
    return joined;
  };
  out << "states:";
  for (const auto& q : m.states()) out << ' ' << q;
  out << "\ninput_alphabet: " << symbols(m.input_alphabet().symbols())
      << "\ntape_alphabet: " << symbols(m.tape_alphabet().symbols()) << "\nblank: " << m.blank()
      << "\nstart: " << m.states()[m.start()] << "\naccept: " << m.states()[m.accept()]
      << "\nreject: " << m.states()[m.reject()] << '\n';
  for (const auto& [key, action] : m.transitions()) {
    out << "delta: " << m.states()[key.first] << ' ' << m.tape_alphabet().symbol(key.second)
        << " -> " << m.states()[action.next_state] << ' '
        << m.tape_alphabet().symbol(action.write) << ' '
        << (action.move == Move::left ? 'L' : 'R') << '\n';
  }
  return out.str();
}

}  // namespace workbench
