#pragma once

// Counting orders: total, well-founded orders with only finitely many
// elements between any two. Includes the order induced by a counting
// bijection, the deleteMin operation in both directions, and a bounded
// chain search that can expose orders which are not gap-finite.
//
// Gap-finiteness is not decidable in general. chain_search is a bounded
// falsifier: a chain longer than the budget is a witness against
// gap-finiteness at that scale, while a short chain proves nothing.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "workbench/enumerator.hpp"
#include "workbench/error.hpp"

namespace workbench {

/// A (partial) order on T. `below` proposes elements x with from > x >= to,
/// used by chain_search; `scale` tells it how far to reach.
template <class T>
struct ComparableOrder {
  std::function<std::partial_ordering(const T&, const T&)> compare;
  std::function<std::vector<T>(const T& from, const T& to, Index scale)> below;
  bool total = true;
  std::string description;
};

/// a >= b iff f^{-1}(a) >= f^{-1}(b). Elements f^{-1} cannot place within
/// `inverse_budget` raise inverse_failure.
template <class T>
ComparableOrder<T> order_from_bijection(CountingBijection<T> f, Index inverse_budget = 1'000'000) {
  auto shared = std::make_shared<const CountingBijection<T>>(std::move(f));
  auto index_of = [shared, inverse_budget](const T& x) {
    auto i = shared->inverse(x, inverse_budget);
    if (!i) throw Error(ErrorCode::inverse_failure, "element outside " + shared->description);
    return *i;
  };
  return {
      [index_of](const T& a, const T& b) -> std::partial_ordering {
        return index_of(a) <=> index_of(b);
      },
      [shared, index_of](const T& from, const T& to, Index) {
        std::vector<T> out;
        const Index i = index_of(from);
        if (i > index_of(to)) out.push_back(shared->forward(i - 1));
        return out;
      },
      true,
      "order induced by " + shared->description,
  };
}

using NatPair = std::pair<std::uint64_t, std::uint64_t>;

/// Lexicographic order on N x N: first coordinates decide, ties go to the
/// second. A well order, but (1,0) sits above every (0,y).
inline ComparableOrder<NatPair> lexicographic_nat_pairs() {
  return {
      [](const NatPair& a, const NatPair& b) -> std::partial_ordering { return a <=> b; },
      [](const NatPair& from, const NatPair& to, Index scale) {
        std::vector<NatPair> out;
        if (from.second > 0) out.push_back({from.first, from.second - 1});
        if (from.first > to.first) {
          const auto x = from.first - 1;
          out.push_back({x, 0});
          out.push_back({x, scale});
        }
        std::erase_if(out, [&](const NatPair& p) { return p < to; });
        return out;
      },
      true,
      "lexicographic N x N",
  };
}

/// Reverse inclusion on finite subsets of {0..63}: X >= Y iff Y is a subset
/// of X. Well-founded but neither total nor gap-finite on all of P(N).
inline ComparableOrder<std::uint64_t> subset_order() {
  return {
      [](std::uint64_t x, std::uint64_t y) -> std::partial_ordering {
        if (x == y) return std::partial_ordering::equivalent;
        if ((x & y) == y) return std::partial_ordering::greater;
        if ((x & y) == x) return std::partial_ordering::less;
        return std::partial_ordering::unordered;
      },
      [](std::uint64_t from, std::uint64_t to, Index) {
        // drop one element of from \ to
        std::vector<std::uint64_t> out;
        for (std::uint64_t rest = from & ~to; rest != 0; rest &= rest - 1) {
          out.push_back(from & ~(rest & (~rest + 1)));
        }
        return out;
      },
      false,
      "reverse subset order on finite sets",
  };
}

template <class T>
struct ChainResult {
  std::vector<T> chain;       // strictly descending, starting at `from`
  bool budget_exceeded = false;
  bool reached_target = false;
};

/// Greedily descends from `from` toward `to`, always stepping to the
/// largest proposed element strictly below the current one. Once the chain
/// holds more than `budget` elements the search stops with budget_exceeded,
/// appending the target itself when it lies below the last element.
template <class T>
ChainResult<T> chain_search(const ComparableOrder<T>& order, const T& from, const T& to,
                            Index budget) {
  const auto ends = order.compare(from, to);
  if (ends == std::partial_ordering::unordered || ends == std::partial_ordering::less) {
    throw Error(ErrorCode::incomparable_endpoints, "start is not above the target");
  }
  ChainResult<T> result;
  result.chain.push_back(from);
  while (true) {
    const T& current = result.chain.back();
    if (order.compare(current, to) == std::partial_ordering::equivalent) {
      result.reached_target = true;
      return result;
    }
    if (result.chain.size() > budget) {
      // close the witness off at the target so it spans the whole gap
      result.budget_exceeded = true;
      if (order.compare(current, to) == std::partial_ordering::greater) {
        result.chain.push_back(to);
        result.reached_target = true;
      }
      return result;
    }
    std::optional<T> best;
    for (auto& candidate : order.below(current, to, budget)) {
      if (order.compare(current, candidate) != std::partial_ordering::greater) continue;
      const auto floor = order.compare(candidate, to);
      if (floor != std::partial_ordering::greater && floor != std::partial_ordering::equivalent) {
        continue;
      }
      if (!best || order.compare(candidate, *best) == std::partial_ordering::greater) {
        best = std::move(candidate);
      }
    }
    if (!best) return result;
    result.chain.push_back(*std::move(best));
  }
}

// ---------------------------------------------------------------------------
// deleteMin

/// Removes and returns the current minimum of a set no one else mutates.
template <class T>
class DeleteMinSource {
 public:
  /// `take` returns the next minimum, or nullopt once the set is empty.
  explicit DeleteMinSource(std::function<std::optional<T>()> take) : take_(std::move(take)) {}

  T delete_min() {
    auto x = take_();
    if (!x) {
      throw Error(ErrorCode::source_exhausted,
                  "set empty after " + std::to_string(calls_) + " deletions");
    }
    ++calls_;
    return *std::move(x);
  }

  Index call_count() const noexcept { return calls_; }

 private:
  std::function<std::optional<T>()> take_;
  Index calls_ = 0;
};

/// The (c+1)-th call returns f(c).
template <class T>
DeleteMinSource<T> delete_min_from_bijection(CountingBijection<T> f) {
  auto counter = std::make_shared<Index>(0);
  return DeleteMinSource<T>([f = std::move(f), counter]() -> std::optional<T> {
    if (f.size && *counter >= *f.size) return std::nullopt;
    return f.forward((*counter)++);
  });
}

/// deleteMin on an explicit finite set: scans for the minimum under `order`.
template <class T>
DeleteMinSource<T> delete_min_from_set(std::vector<T> elements, ComparableOrder<T> order) {
  auto set = std::make_shared<std::vector<T>>(std::move(elements));
  return DeleteMinSource<T>([set, order = std::move(order)]() -> std::optional<T> {
    if (set->empty()) return std::nullopt;
    std::size_t min = 0;
    for (std::size_t i = 1; i < set->size(); ++i) {
      if (order.compare((*set)[i], (*set)[min]) == std::partial_ordering::less) min = i;
    }
    T x = std::move((*set)[min]);
    set->erase(set->begin() + static_cast<std::ptrdiff_t>(min));
    return x;
  });
}

/// g(i) = the element returned by the (i+1)-th deleteMin call. Returns are
/// memoized so g is a function; the inverse searches the memo and then pulls
/// up to `budget` further elements.
template <class T>
CountingBijection<T> bijection_from_delete_min(DeleteMinSource<T> source) {
  struct State {
    DeleteMinSource<T> source;
    std::vector<T> seen;
    bool exhausted = false;

    bool pull() {
      if (exhausted) return false;
      try {
        seen.push_back(source.delete_min());
        return true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::source_exhausted) throw;
        exhausted = true;
        return false;
      }
    }
  };
  auto state = std::make_shared<State>(State{std::move(source), {}, false});
  return {
      [state](Index i) -> T {
        while (state->seen.size() <= i) {
          if (!state->pull()) {
            throw Error(ErrorCode::source_exhausted,
                        "index " + std::to_string(i) + " beyond set of size " +
                            std::to_string(state->seen.size()));
          }
        }
        return state->seen[i];
      },
      [state](const T& x, Index budget) -> std::optional<Index> {
        for (Index i = 0; i < state->seen.size(); ++i) {
          if (state->seen[i] == x) return i;
        }
        for (Index extra = 0; extra < budget; ++extra) {
          if (!state->pull()) return std::nullopt;
          if (state->seen.back() == x) return state->seen.size() - 1;
        }
        return std::nullopt;
      },
      std::nullopt,
      "deleteMin order",
  };
}

}  // namespace workbench
