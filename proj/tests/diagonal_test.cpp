#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "workbench/diagonal.hpp"

namespace workbench {
namespace {

using testing::decider_names;
using testing::sample;

const Alphabet kAB("ab");

MachineLibrary decider_library() {
  std::vector<TuringMachine> machines;
  for (const auto& name : decider_names()) machines.push_back(sample(name));
  return MachineLibrary(std::move(machines));
}

FunctionTable boolean_table() {
  FunctionTable table;
  table.functions.push_back(total_function([](Index) { return 0; }));
  table.functions.push_back(total_function([](Index) { return 1; }));
  table.functions.push_back(total_function([](Index n) { return n % 2; }));
  table.functions.push_back(total_function([](Index n) { return n % 3 == 0 ? 1 : 0; }));
  table.functions.push_back(total_function([](Index n) { return n > 5 ? 1 : 0; }));
  for (const auto& name : {"even_length", "starts_with_a", "contains_bb", "palindrome", "equal_ab"}) {
    table.functions.push_back(
        machine_decision_function(std::make_shared<const TuringMachine>(sample(name))));
  }
  return table;
}

FunctionTable numeric_table() {
  FunctionTable table;
  table.functions.push_back(total_function([](Index n) { return n; }));
  table.functions.push_back(total_function([](Index n) { return n * n; }));
  table.functions.push_back(total_function([](Index) { return 0; }));
  table.functions.push_back(total_function([](Index n) { return 2 * n + 7; }));
  table.functions.push_back(total_function([](Index n) { return n / 2; }));
  table.functions.push_back(total_function([](Index n) { return Index{1} << n; }));
  table.functions.push_back(total_function([](Index n) { return n % 4; }));
  table.functions.push_back(total_function([](Index n) {
    Index f = 1;
    for (Index i = 2; i <= n; ++i) f *= i;
    return f;
  }));
  table.functions.push_back(total_function([](Index n) { return 100 - n; }));
  table.functions.push_back(total_function([](Index n) { return n * n * n; }));
  table.functions.push_back(total_function([](Index) { return 42; }));
  return table;
}

TEST(DiagonalFlip, ConstantTable) {
  FunctionTable table;
  table.functions = {total_function([](Index) { return 0; }), total_function([](Index) { return 1; })};
  const auto g = diagonal_flip(table);
  EXPECT_EQ(g(0), 1u);
  EXPECT_EQ(g(1), 0u);
}

TEST(DiagonalFlip, DisagreesOnDiagonal) {
  const auto table = boolean_table();
  ASSERT_GE(table.size(), 10u);
  const auto g = diagonal_flip(table);
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Index fk = table.evaluate(k, k);
    ASSERT_LE(fk, 1u);
    EXPECT_NE(g(k), fk) << k;
    EXPECT_EQ(g(k), 1 - fk);
  }
}

TEST(DiagonalFlip, Errors) {
  FunctionTable table;
  table.functions = {total_function([](Index) { return 2; })};
  const auto g = diagonal_flip(table);
  try {
    g(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_boolean_value);
  }
  try {
    g(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::index_out_of_table);
  }
}

TEST(DiagonalShift, Examples) {
  FunctionTable table;
  table.functions = {total_function([](Index n) { return n; }),
                     total_function([](Index n) { return n * n; })};
  const auto g = diagonal_shift(table);
  EXPECT_EQ(g(0), 1u);
  EXPECT_EQ(g(1), 2u);

  const auto empty = diagonal_shift(FunctionTable{});
  try {
    empty(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::index_out_of_table);
  }
}

TEST(DiagonalShift, DisagreesOnDiagonal) {
  const auto table = numeric_table();
  ASSERT_GE(table.size(), 10u);
  const auto g = diagonal_shift(table);
  for (std::size_t k = 0; k < table.size(); ++k) EXPECT_NE(g(k), table.evaluate(k, k)) << k;
}

TEST(FunctionTable, TotalityBreach) {
  FunctionTable table;
  table.budget = 100;
  table.functions = {machine_decision_function(std::make_shared<const TuringMachine>(sample("loop_on_odd")))};
  EXPECT_EQ(table.evaluate(0, 0), 1u);  // ε has even length
  try {
    table.evaluate(0, 1);  // "a" loops
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::totality_breach);
  }
}

TEST(MachineX, AcceptAllOnEmptyString) {
  const MachineLibrary library({sample("accept_all")});
  const auto x = machine_x(library, "", 1'000);
  EXPECT_EQ(x.consulted, 0u);
  EXPECT_EQ(x.bit, 0);
}

TEST(MachineX, DisagreesWithEveryDecider) {
  const auto library = decider_library();
  ASSERT_GE(library.size(), 10u);
  check_decider_library(library, 1'000'000);
  for (std::size_t k = 0; k < library.size(); ++k) {
    const auto w = unrank(k, library.alphabet());
    const auto x = machine_x(library, w, 1'000'000);
    ASSERT_EQ(x.consulted, k);
    ASSERT_TRUE(x.bit);
    const auto direct = run(library[k], w, 1'000'000);
    ASSERT_NE(direct.verdict, Verdict::out_of_budget);
    EXPECT_NE(*x.bit, direct.verdict == Verdict::accepted ? 1 : 0) << "k=" << k << " w='" << w << "'";
  }
}

TEST(MachineX, OutOfLibrary) {
  const auto library = decider_library();
  const auto w = unrank(library.size(), library.alphabet());
  try {
    machine_x(library, w, 1'000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::rank_out_of_library);
  }
}

// X consults exactly one machine, the one whose index is rank(w).
struct RecordingLibrary {
  MachineLibrary inner;
  mutable std::vector<std::size_t> calls;

  std::size_t size() const { return inner.size(); }
  const Alphabet& alphabet() const { return inner.alphabet(); }
  RunOutcome run(std::size_t i, std::string_view w, std::uint64_t budget) const {
    calls.push_back(i);
    return inner.run(i, w, budget);
  }
};

TEST(MachineX, ConsultsOnlyTheDiagonalMachine) {
  RecordingLibrary library{decider_library(), {}};
  for (std::size_t k = 0; k < library.size(); ++k) {
    library.calls.clear();
    machine_x(library, unrank(k, kAB), 1'000'000);
    ASSERT_EQ(library.calls, std::vector<std::size_t>{k});
  }
}

TEST(DeciderPreflight, RejectsNonDecider) {
  const MachineLibrary library({sample("even_length"), sample("loop_on_odd")});
  try {
    check_decider_library(library, 10'000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::decider_contract_breach);
  }
  // X still answers on the inputs routed to the non-decider, or reports the miss
  const auto x = machine_x(library, "a", 10'000);
  EXPECT_EQ(x.consulted, 1u);
  EXPECT_FALSE(x.bit);
}

TEST(MachineLibrary, AlphabetMismatch) {
  TransitionTable delta;
  const TuringMachine other({"acc", "rej"}, Alphabet("xy"), Alphabet("_xy"), 0, 0, 1, delta);
  EXPECT_THROW(MachineLibrary({sample("accept_all"), other}), Error);
}

}  // namespace
}  // namespace workbench
