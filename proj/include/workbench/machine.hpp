#pragma once

// Deterministic single-tape Turing machines: representation, step-budgeted
// execution, and the unary binary encoding <M> together with its decoder.
//
// Tape geometry: cells 0, 1, 2, ...; a left move on cell 0 stays on cell 0.
// A (state, symbol) pair with no transition moves to the reject state.
// Tape symbol 0 is always the blank.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "workbench/canonical_order.hpp"
#include "workbench/error.hpp"

namespace workbench {

enum class Move : std::uint8_t { left = 1, right = 2 };

struct Action {
  std::size_t next_state;
  std::size_t write;  // tape symbol index
  Move move;

  friend bool operator==(const Action&, const Action&) = default;
};

/// Key of the transition table: (state index, scanned tape symbol index).
using TransitionKey = std::pair<std::size_t, std::size_t>;
using TransitionTable = std::map<TransitionKey, Action>;

class TuringMachine {
 public:
  /// Validates every structural invariant; throws Error(malformed_machine).
  TuringMachine(std::vector<std::string> states, Alphabet input_alphabet, Alphabet tape_alphabet,
                std::size_t start, std::size_t accept, std::size_t reject,
                TransitionTable transitions)
      : states_(std::move(states)),
        input_(std::move(input_alphabet)),
        tape_(std::move(tape_alphabet)),
        start_(start),
        accept_(accept),
        reject_(reject),
        delta_(std::move(transitions)) {
    validate();
    dense_.resize(states_.size() * tape_.size());
    for (const auto& [key, action] : delta_) dense_[key.first * tape_.size() + key.second] = action;
  }

  const std::vector<std::string>& states() const noexcept { return states_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const Alphabet& input_alphabet() const noexcept { return input_; }
  const Alphabet& tape_alphabet() const noexcept { return tape_; }
  char blank() const { return tape_.symbol(0); }
  std::size_t start() const noexcept { return start_; }
  std::size_t accept() const noexcept { return accept_; }
  std::size_t reject() const noexcept { return reject_; }
  const TransitionTable& transitions() const noexcept { return delta_; }

  bool is_halting(std::size_t state) const noexcept {
    return state == accept_ || state == reject_;
  }

  const Action* find(std::size_t state, std::size_t symbol) const {
    const auto& slot = dense_[state * tape_.size() + symbol];
    return slot ? &*slot : nullptr;
  }

 private:
  void validate() const {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::malformed_machine, why); };
    const auto q = states_.size();
    if (q < 2) fail("need at least an accept and a reject state");
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = i + 1; j < q; ++j) {
        if (states_[i] == states_[j]) fail("state '" + states_[i] + "' declared twice");
      }
    }
    if (start_ >= q || accept_ >= q || reject_ >= q) fail("start/accept/reject out of range");
    if (accept_ == reject_) fail("accept and reject must differ");
    if (input_.contains(tape_.symbol(0))) fail("input alphabet contains the blank");
    for (char a : input_.symbols()) {
      if (!tape_.contains(a)) fail(std::string("input symbol '") + a + "' missing from tape alphabet");
    }
    const auto g = tape_.size();
    for (const auto& [key, action] : delta_) {
      const auto [state, symbol] = key;
      if (state >= q || action.next_state >= q) fail("transition references an undeclared state");
      if (symbol >= g || action.write >= g) fail("transition references an undeclared symbol");
      if (is_halting(state)) fail("transition leaves " + states_[state]);
      if (action.move != Move::left && action.move != Move::right) fail("bad head move");
    }
  }

  std::vector<std::string> states_;
  Alphabet input_;
  Alphabet tape_;
  std::size_t start_;
  std::size_t accept_;
  std::size_t reject_;
  TransitionTable delta_;
  std::vector<std::optional<Action>> dense_;  // row-major (state, symbol) lookup
};

/// Equality of everything the binary encoding carries: state count, tape
/// alphabet size, start/accept/reject indices and the transition table.
/// Names of states and symbols are presentation only.
inline bool structurally_equal(const TuringMachine& x, const TuringMachine& y) {
  return x.state_count() == y.state_count() &&
         x.tape_alphabet().size() == y.tape_alphabet().size() && x.start() == y.start() &&
         x.accept() == y.accept() && x.reject() == y.reject() &&
         x.transitions() == y.transitions();
}

/// Instantaneous description. Cells at or beyond tape.size() are blank.
struct Configuration {
  std::size_t state = 0;
  std::vector<std::uint16_t> tape;
  std::size_t head = 0;
  std::uint64_t steps = 0;

  std::size_t scanned() const { return head < tape.size() ? tape[head] : 0; }

  void write(std::size_t symbol) {
    if (head >= tape.size()) {
      if (symbol == 0) return;
      tape.resize(head + 1, 0);
    }
    tape[head] = static_cast<std::uint16_t>(symbol);
  }

  friend bool operator==(const Configuration& x, const Configuration& y) {
    auto trimmed = [](const std::vector<std::uint16_t>& t) {
      auto n = t.size();
      while (n > 0 && t[n - 1] == 0) --n;
      return n;
    };
    const auto nx = trimmed(x.tape);
    const auto ny = trimmed(y.tape);
    return x.state == y.state && x.head == y.head && x.steps == y.steps && nx == ny &&
           std::equal(x.tape.begin(), x.tape.begin() + static_cast<std::ptrdiff_t>(nx),
                      y.tape.begin());
  }
};

enum class Verdict { accepted, rejected, out_of_budget };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected: return "rejected";
    case Verdict::out_of_budget: return "out_of_budget";
  }
  return "?";
}

struct RunOutcome {
  Verdict verdict;
  std::uint64_t steps;

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// Start configuration for input w; throws if w leaves the input alphabet.
inline Configuration initial_configuration(const TuringMachine& m, std::string_view w) {
  Configuration c;
  c.state = m.start();
  c.tape.reserve(w.size());
  for (char a : w) {
    if (!m.input_alphabet().contains(a)) {
      throw Error(ErrorCode::input_symbol_not_in_alphabet,
                  std::string("'") + a + "' is not an input symbol");
    }
    c.tape.push_back(static_cast<std::uint16_t>(m.tape_alphabet().index_of(a)));
  }
  return c;
}

inline std::optional<Verdict> halt_verdict(const TuringMachine& m, const Configuration& c) {
  if (c.state == m.accept()) return Verdict::accepted;
  if (c.state == m.reject()) return Verdict::rejected;
  return std::nullopt;
}

/// One move, in place. Precondition: c is not in a halting state.
inline void advance(const TuringMachine& m, Configuration& c) {
  ++c.steps;
  const Action* action = m.find(c.state, c.scanned());
  if (action == nullptr) {
    c.state = m.reject();
    return;
  }
  c.write(action->write);
  if (action->move == Move::right) {
    ++c.head;
  } else if (c.head > 0) {
    --c.head;
  }
  c.state = action->next_state;
}

inline Configuration step(const TuringMachine& m, Configuration c) {
  advance(m, c);
  return c;
}

/// Continues c until it halts or has taken `budget` steps in total.
inline RunOutcome resume(const TuringMachine& m, Configuration& c, std::uint64_t budget) {
  while (true) {
    if (auto v = halt_verdict(m, c)) return {*v, c.steps};
    if (c.steps >= budget) return {Verdict::out_of_budget, c.steps};
    advance(m, c);
  }
}

inline RunOutcome run(const TuringMachine& m, std::string_view w, std::uint64_t budget) {
  Configuration c = initial_configuration(m, w);
  return resume(m, c, budget);
}

// ---------------------------------------------------------------------------
// Binary encoding
//
//   0^|Q| 1 0^|G| 1 0^(start+1) 1 0^(accept+1) 1 0^(reject+1) 1 1
//   then per transition (q, a) -> (q', b, d), in increasing (q, a) order:
//   0^(q+1) 1 0^(a+1) 1 0^(q'+1) 1 0^(b+1) 1 0^d      d: 1 = L, 2 = R
//   with consecutive transitions joined by 1 1.

struct MachineEncoding {
  std::string bits;

  friend bool operator==(const MachineEncoding&, const MachineEncoding&) = default;
};

inline MachineEncoding encode(const TuringMachine& m) {
  std::string bits;
  auto unary = [&bits](std::size_t n) { bits.append(n, '0'); };
  unary(m.state_count());
  bits += '1';
  unary(m.tape_alphabet().size());
  bits += '1';
  unary(m.start() + 1);
  bits += '1';
  unary(m.accept() + 1);
  bits += '1';
  unary(m.reject() + 1);
  bits += "11";
  bool first = true;
  for (const auto& [key, action] : m.transitions()) {  // std::map: already (q, a) ordered
    if (!first) bits += "11";
    first = false;
    unary(key.first + 1);
    bits += '1';
    unary(key.second + 1);
    bits += '1';
    unary(action.next_state + 1);
    bits += '1';
    unary(action.write + 1);
    bits += '1';
    unary(static_cast<std::size_t>(action.move));
  }
  return {std::move(bits)};
}

/// Symbols given to decoded tape alphabets, blank first.
inline constexpr std::string_view kDecodedSymbols =
    "_abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

struct DecodeResult {
  std::optional<TuringMachine> machine;
  std::string reason;  // why the encoding is invalid; empty when valid

  explicit operator bool() const noexcept { return machine.has_value(); }
};

/// Decides membership in the set of well-formed machine encodings. Only the
/// canonical form produced by encode() is accepted, so encode is a bijection
/// onto the valid encodings. A valid string decodes to states q0..q{n-1} and
/// tape symbols drawn from kDecodedSymbols; every non-blank symbol is an
/// input symbol.
inline DecodeResult decode_validate(const MachineEncoding& e) {
  auto invalid = [](std::string why) { return DecodeResult{std::nullopt, std::move(why)}; };
  const std::string& bits = e.bits;
  for (char b : bits) {
    if (b != '0' && b != '1') return invalid("not a bit string");
  }

  // Split into maximal zero runs separated by single 1s.
  std::vector<std::size_t> fields;
  std::size_t run = 0;
  for (char b : bits) {
    if (b == '0') {
      ++run;
    } else {
      fields.push_back(run);
      run = 0;
    }
  }
  fields.push_back(run);

  // Header: |Q|, |G|, start+1, accept+1, reject+1, then the empty field of "11".
  if (fields.size() < 7) return invalid("header incomplete");
  for (std::size_t i = 0; i < 5; ++i) {
    if (fields[i] == 0) return invalid("empty header field");
  }
  if (fields[5] != 0) return invalid("header not terminated by 11");
  const std::size_t q = fields[0];
  const std::size_t g = fields[1];
  if (q < 2) return invalid("fewer than two states");
  if (g < 2) return invalid("tape alphabet needs the blank and one input symbol");
  if (g > kDecodedSymbols.size()) return invalid("tape alphabet too large");
  const std::size_t start = fields[2] - 1;
  const std::size_t accept = fields[3] - 1;
  const std::size_t reject = fields[4] - 1;
  if (start >= q || accept >= q || reject >= q) return invalid("header state out of range");
  if (accept == reject) return invalid("accept equals reject");

  TransitionTable delta;
  const std::size_t rest = fields.size() - 6;
  if (rest == 1) {
    if (fields[6] != 0) return invalid("trailing bits after header");
  } else {
    // transitions: 5 fields each, separated by a single empty field
    if ((rest + 1) % 6 != 0) return invalid("truncated transition");
    std::optional<TransitionKey> previous;
    for (std::size_t at = 6; at < fields.size(); at += 6) {
      if (at > 6 && fields[at - 1] != 0) return invalid("transitions not separated by 11");
      for (std::size_t j = 0; j < 5; ++j) {
        if (fields[at + j] == 0) return invalid("empty transition field");
      }
      const std::size_t from = fields[at] - 1;
      const std::size_t read = fields[at + 1] - 1;
      const std::size_t to = fields[at + 2] - 1;
      const std::size_t write = fields[at + 3] - 1;
      const std::size_t dir = fields[at + 4];
      if (from >= q || to >= q) return invalid("transition state out of range");
      if (read >= g || write >= g) return invalid("transition symbol out of range");
      if (dir != 1 && dir != 2) return invalid("direction must be 0 (L) or 00 (R)");
      if (from == accept || from == reject) return invalid("transition leaves a halting state");
      const TransitionKey key{from, read};
      if (previous && !(*previous < key)) return invalid("transitions not in strictly increasing order");
      previous = key;
      delta.emplace(key, Action{to, write, static_cast<Move>(dir)});
    }
  }

  std::vector<std::string> names;
  names.reserve(q);
  for (std::size_t i = 0; i < q; ++i) names.push_back("q" + std::to_string(i));
  const auto tape_symbols = kDecodedSymbols.substr(0, g);
  return DecodeResult{TuringMachine(std::move(names), Alphabet(tape_symbols.substr(1)),
                                    Alphabet(tape_symbols), start, accept, reject,
                                    std::move(delta)),
                      {}};
}

}  // namespace workbench
