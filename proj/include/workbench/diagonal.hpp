#pragma once

// Diagonal constructions over finite prefixes of an enumeration.
//
// Each construction returns a function g that differs from the k-th listed
// function at argument k. Over an infinite enumeration this is the usual
// proof that the enumeration misses g; here the lists are finite, so what
// is checkable is the pointwise disagreement on the diagonal, not the
// unenumerability conclusion itself.
//
// Coverage:
//   diagonal_flip   g(n) = 1 - f_n(n)    decision functions N -> {0,1}: D_T, D_TC,
//                                        and D_L through characteristic functions
//   diagonal_shift  g(n) = f_n(n) + 1    functions N -> N: F_T, F_TC
//   machine_x       X(w) = 1 - M_i(w), i = rank(w), over a decider library:
//                   D_TM, and Al_TM (encodings of algorithms) likewise
//
// The input routed to M_k is w_k = unrank(k), the one string X sends to M_k.

#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "workbench/canonical_order.hpp"
#include "workbench/enumerator.hpp"
#include "workbench/error.hpp"
#include "workbench/machine.hpp"

namespace workbench {

/// f(arg, budget): the value, or nullopt if not produced within budget.
using TableFunction = std::function<std::optional<Index>(Index arg, Index budget)>;

struct FunctionTable {
  std::vector<TableFunction> functions;
  Index budget = 1'000'000;

  std::size_t size() const noexcept { return functions.size(); }

  /// f_k(arg); a miss of the budget breaches the totality contract.
  Index evaluate(std::size_t k, Index arg) const {
    if (k >= functions.size()) {
      throw Error(ErrorCode::index_out_of_table,
                  std::to_string(k) + " >= table size " + std::to_string(functions.size()));
    }
    auto v = functions[k](arg, budget);
    if (!v) {
      throw Error(ErrorCode::totality_breach,
                  "f_" + std::to_string(k) + "(" + std::to_string(arg) + ") exceeded budget");
    }
    return *v;
  }
};

/// Wraps an ordinary total function.
inline TableFunction total_function(std::function<Index(Index)> f) {
  return [f = std::move(f)](Index n, Index) -> std::optional<Index> { return f(n); };
}

/// The decision function n -> M(unrank(n)) as 0/1.
inline TableFunction machine_decision_function(std::shared_ptr<const TuringMachine> m) {
  return [m](Index n, Index budget) -> std::optional<Index> {
    const auto out = run(*m, unrank(n, m->input_alphabet()), budget);
    if (out.verdict == Verdict::out_of_budget) return std::nullopt;
    return out.verdict == Verdict::accepted ? 1 : 0;
  };
}

using DiagonalFunction = std::function<Index(Index)>;

inline DiagonalFunction diagonal_flip(FunctionTable table) {
  return [table = std::move(table)](Index n) -> Index {
    const auto v = table.evaluate(static_cast<std::size_t>(n), n);
    if (v > 1) {
      throw Error(ErrorCode::non_boolean_value,
                  "f_" + std::to_string(n) + "(" + std::to_string(n) + ") = " + std::to_string(v));
    }
    return 1 - v;
  };
}

inline DiagonalFunction diagonal_shift(FunctionTable table) {
  return [table = std::move(table)](Index n) -> Index {
    return table.evaluate(static_cast<std::size_t>(n), n) + 1;
  };
}

/// An indexed list of machines sharing one input alphabet.
class MachineLibrary {
 public:
  explicit MachineLibrary(std::vector<TuringMachine> machines) : machines_(std::move(machines)) {
    if (machines_.empty()) throw std::invalid_argument("empty machine library");
    for (const auto& m : machines_) {
      if (!(m.input_alphabet() == machines_.front().input_alphabet())) {
        throw Error(ErrorCode::alphabet_mismatch, "library machines use different input alphabets");
      }
    }
  }

  std::size_t size() const noexcept { return machines_.size(); }
  const Alphabet& alphabet() const { return machines_.front().input_alphabet(); }
  const TuringMachine& operator[](std::size_t i) const { return machines_.at(i); }

  RunOutcome run(std::size_t i, std::string_view w, std::uint64_t budget) const {
    return workbench::run(machines_.at(i), w, budget);
  }

 private:
  std::vector<TuringMachine> machines_;
};

/// Anything machine_x can consult: an indexed family of budgeted runs.
template <class L>
concept DeciderLibrary = requires(const L& lib, std::size_t i, std::string_view w,
                                  std::uint64_t budget) {
  { lib.size() } -> std::convertible_to<std::size_t>;
  { lib.alphabet() } -> std::convertible_to<const Alphabet&>;
  { lib.run(i, w, budget) } -> std::convertible_to<RunOutcome>;
};

/// Pre-flight check of the decider contract: every machine halts within
/// `budget` on every input of length <= max_length.
template <DeciderLibrary L>
void check_decider_library(const L& library, std::uint64_t budget, std::size_t max_length = 6) {
  const Alphabet& alphabet = library.alphabet();
  for (std::size_t i = 0; i < library.size(); ++i) {
    std::string w;
    while (w.size() <= max_length) {
      if (library.run(i, w, budget).verdict == Verdict::out_of_budget) {
        throw Error(ErrorCode::decider_contract_breach,
                    "machine " + std::to_string(i) + " does not halt on '" + w + "' within " +
                        std::to_string(budget) + " steps");
      }
      w = successor(w, alphabet);
    }
  }
}

struct XOutcome {
  std::optional<int> bit;  // nullopt: the consulted machine ran out of budget
  std::size_t consulted;   // index of the machine that was run
};

/// X(w): run decider rank(w) on w and answer the opposite.
template <DeciderLibrary L>
XOutcome machine_x(const L& library, std::string_view w, std::uint64_t budget) {
  const Rank i = rank(w, library.alphabet());
  if (i >= library.size()) {
    throw Error(ErrorCode::rank_out_of_library,
                "rank " + i.str() + " >= library size " + std::to_string(library.size()));
  }
  const auto k = static_cast<std::size_t>(i);
  const auto out = library.run(k, w, budget);
  if (out.verdict == Verdict::out_of_budget) return {std::nullopt, k};
  return {out.verdict == Verdict::accepted ? 0 : 1, k};
}

}  // namespace workbench
