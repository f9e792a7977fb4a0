#pragma once

// Enumerators (machines with a printer) modeled as lazy string streams, and
// the conversions between enumerators, recognizers, deciders and counting
// bijections.
//
// A stream is a shared, immutable source plus a private cursor. Every
// operation below opens a fresh cursor on the source, so callers never have
// their own position consumed.

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "workbench/canonical_order.hpp"
#include "workbench/error.hpp"
#include "workbench/machine.hpp"

namespace workbench {

using Index = std::uint64_t;

/// f: N -> S together with a budgeted inverse. `size` is set for finite S;
/// forward must only be called below it.
template <class T>
struct CountingBijection {
  std::function<T(Index)> forward;
  /// Index of the element, or nullopt if it was not located within `budget`
  /// units of work (the element may lie outside S).
  std::function<std::optional<Index>(const T&, Index budget)> inverse;
  std::optional<Index> size;
  std::string description;
};

/// unrank over the alphabet; inverse is rank (exact, budget unused).
inline CountingBijection<std::string> unrank_bijection(const Alphabet& alphabet) {
  return {
      [alphabet](Index n) { return unrank(n, alphabet); },
      [alphabet](const std::string& s, Index) -> std::optional<Index> {
        for (char a : s) {
          if (!alphabet.contains(a)) return std::nullopt;
        }
        const Rank r = rank(s, alphabet);
        if (r > std::numeric_limits<Index>::max()) return std::nullopt;
        return static_cast<Index>(r);
      },
      std::nullopt,
      "unrank",
  };
}

/// n -> unrank(stride * n): the strings whose rank is a multiple of stride.
inline CountingBijection<std::string> strided_unrank_bijection(const Alphabet& alphabet,
                                                               Index stride) {
  return {
      [alphabet, stride](Index n) { return unrank(Rank(n) * stride, alphabet); },
      [alphabet, stride](const std::string& s, Index) -> std::optional<Index> {
        for (char a : s) {
          if (!alphabet.contains(a)) return std::nullopt;
        }
        const Rank r = rank(s, alphabet);
        if (r % stride != 0) return std::nullopt;
        const Rank q = r / stride;
        if (q > std::numeric_limits<Index>::max()) return std::nullopt;
        return static_cast<Index>(q);
      },
      std::nullopt,
      "unrank-stride-" + std::to_string(stride),
  };
}

/// n -> unrank(n^2).
inline CountingBijection<std::string> square_unrank_bijection(const Alphabet& alphabet) {
  return {
      [alphabet](Index n) { return unrank(Rank(n) * n, alphabet); },
      [alphabet](const std::string& s, Index budget) -> std::optional<Index> {
        for (char a : s) {
          if (!alphabet.contains(a)) return std::nullopt;
        }
        const Rank r = rank(s, alphabet);
        for (Index n = 0; n <= budget; ++n) {
          const Rank sq = Rank(n) * n;
          if (sq == r) return n;
          if (sq > r) return std::nullopt;
        }
        return std::nullopt;
      },
      std::nullopt,
      "unrank-square",
  };
}

// ---------------------------------------------------------------------------
// Streams

class StreamCursor {
 public:
  virtual ~StreamCursor() = default;
  /// Next printed string, or nullopt once the cursor stops.
  virtual std::optional<std::string> next() = 0;
  /// True when the cursor stopped because of an imposed limit rather than
  /// because the underlying set ran out.
  virtual bool truncated() const { return false; }
};

class StreamSource {
 public:
  virtual ~StreamSource() = default;
  virtual std::unique_ptr<StreamCursor> open() const = 0;
  virtual const Alphabet& alphabet() const = 0;
};

class EnumerationStream {
 public:
  explicit EnumerationStream(std::shared_ptr<const StreamSource> source)
      : source_(std::move(source)), cursor_(source_->open()) {}

  std::optional<std::string> next() {
    auto s = cursor_->next();
    if (s) ++position_;
    return s;
  }

  /// A new stream over the same source, positioned at the start.
  EnumerationStream fresh() const { return EnumerationStream(source_); }

  Index position() const noexcept { return position_; }
  bool truncated() const { return cursor_->truncated(); }
  const Alphabet& alphabet() const { return source_->alphabet(); }

 private:
  std::shared_ptr<const StreamSource> source_;
  std::unique_ptr<StreamCursor> cursor_;
  Index position_ = 0;
};

namespace detail {

class ListSource final : public StreamSource {
 public:
  ListSource(std::vector<std::string> items, Alphabet alphabet)
      : items_(std::move(items)), alphabet_(std::move(alphabet)) {
    for (const auto& s : items_) alphabet_.check(s);
  }

  std::unique_ptr<StreamCursor> open() const override {
    struct Cursor final : StreamCursor {
      const std::vector<std::string>* items;
      std::size_t at = 0;
      std::optional<std::string> next() override {
        if (at >= items->size()) return std::nullopt;
        return (*items)[at++];
      }
    };
    auto c = std::make_unique<Cursor>();
    c->items = &items_;
    return c;
  }

  const Alphabet& alphabet() const override { return alphabet_; }

 private:
  std::vector<std::string> items_;
  Alphabet alphabet_;
};

class BijectionSource final : public StreamSource {
 public:
  BijectionSource(CountingBijection<std::string> f, Alphabet alphabet)
      : f_(std::move(f)), alphabet_(std::move(alphabet)) {}

  std::unique_ptr<StreamCursor> open() const override {
    struct Cursor final : StreamCursor {
      const CountingBijection<std::string>* f;
      Index n = 0;
      std::optional<std::string> next() override {
        if (f->size && n >= *f->size) return std::nullopt;
        return f->forward(n++);
      }
    };
    auto c = std::make_unique<Cursor>();
    c->f = &f_;
    return c;
  }

  const Alphabet& alphabet() const override { return alphabet_; }

 private:
  CountingBijection<std::string> f_;
  Alphabet alphabet_;
};

/// Dovetailed simulation. Round i admits the string of rank i-1 and runs
/// every admitted, still-undecided string up to i steps; accepted strings
/// are printed in canonical order within the round. Runs are resumed rather
/// than restarted, which by determinism prints exactly what rerunning each
/// string from scratch with budget i would print.
class DovetailSource final : public StreamSource {
 public:
  DovetailSource(TuringMachine machine, std::optional<Index> max_rounds)
      : machine_(std::move(machine)), max_rounds_(max_rounds) {}

  std::unique_ptr<StreamCursor> open() const override {
    return std::make_unique<Cursor>(machine_, max_rounds_);
  }

  const Alphabet& alphabet() const override { return machine_.input_alphabet(); }

 private:
  class Cursor final : public StreamCursor {
   public:
    Cursor(const TuringMachine& machine, std::optional<Index> max_rounds)
        : machine_(machine), max_rounds_(max_rounds) {}

    std::optional<std::string> next() override {
      while (ready_.empty()) {
        if (max_rounds_ && round_ >= *max_rounds_) {
          truncated_ = true;
          return std::nullopt;
        }
        run_round();
      }
      auto s = std::move(ready_.front());
      ready_.pop_front();
      return s;
    }

    bool truncated() const override { return truncated_; }

   private:
    struct Pending {
      std::string input;
      Configuration config;
    };

    void run_round() {
      ++round_;
      pending_.push_back({incoming_, initial_configuration(machine_, incoming_)});
      incoming_ = successor(incoming_, machine_.input_alphabet());

      std::size_t kept = 0;
      for (auto& p : pending_) {
        const auto outcome = resume(machine_, p.config, round_);
        if (outcome.verdict == Verdict::accepted) {
          if (printed_.insert(p.input).second) ready_.push_back(std::move(p.input));
        } else if (outcome.verdict == Verdict::out_of_budget) {
          if (&pending_[kept] != &p) pending_[kept] = std::move(p);
          ++kept;
        }
      }
      pending_.resize(kept);
    }

    const TuringMachine& machine_;
    std::optional<Index> max_rounds_;
    Index round_ = 0;
    std::string incoming_;  // next string to admit, in canonical order
    std::vector<Pending> pending_;
    std::unordered_set<std::string> printed_;
    std::deque<std::string> ready_;
    bool truncated_ = false;
  };

  TuringMachine machine_;
  std::optional<Index> max_rounds_;
};

}  // namespace detail

/// A finite stream printing `items` in order.
inline EnumerationStream stream_from_list(std::vector<std::string> items, Alphabet alphabet) {
  return EnumerationStream(
      std::make_shared<const detail::ListSource>(std::move(items), std::move(alphabet)));
}

/// Duplicate-free enumerator of L(M) by dovetailing. Without `max_rounds`
/// the stream never ends; with it, the cursor reports truncation after that
/// many rounds.
inline EnumerationStream recognizer_to_enumerator(TuringMachine machine,
                                                  std::optional<Index> max_rounds = std::nullopt) {
  return EnumerationStream(
      std::make_shared<const detail::DovetailSource>(std::move(machine), max_rounds));
}

/// Prints f(0), f(1), f(2), ... (stopping at f.size when finite).
inline EnumerationStream enumerator_from_bijection(CountingBijection<std::string> f,
                                                   Alphabet alphabet) {
  return EnumerationStream(
      std::make_shared<const detail::BijectionSource>(std::move(f), std::move(alphabet)));
}

// ---------------------------------------------------------------------------
// Conversions

struct Recognition {
  enum class Verdict { accepted, not_seen } verdict;
  /// not_seen is definitive only when the stream genuinely ran out.
  bool definitive;
};

inline Recognition enumerator_to_recognizer(const EnumerationStream& stream, std::string_view w,
                                            Index print_budget) {
  auto cursor = stream.fresh();
  for (Index i = 0; i < print_budget; ++i) {
    auto s = cursor.next();
    if (!s) return {Recognition::Verdict::not_seen, !cursor.truncated()};
    if (*s == w) return {Recognition::Verdict::accepted, true};
  }
  return {Recognition::Verdict::not_seen, false};
}

/// The (n+1)-th printed string: count prints from 0 and return the print
/// at which the counter equals n.
inline std::string algorithm_A(const EnumerationStream& stream, Index n) {
  auto cursor = stream.fresh();
  for (Index c = 0;; ++c) {
    auto s = cursor.next();
    if (!s) {
      throw Error(ErrorCode::stream_exhausted,
                  "only " + std::to_string(c) + " strings printed" +
                      (cursor.truncated() ? " before the round limit" : "") + ", wanted index " +
                      std::to_string(n));
    }
    if (c == n) return *std::move(s);
  }
}

/// Print index of w, scanning at most print_budget prints.
inline std::optional<Index> algorithm_B(const EnumerationStream& stream, std::string_view w,
                                        Index print_budget) {
  auto cursor = stream.fresh();
  for (Index c = 0; c < print_budget; ++c) {
    auto s = cursor.next();
    if (!s) return std::nullopt;
    if (*s == w) return c;
  }
  return std::nullopt;
}

/// f(n) = algorithm_A(E, n), f^{-1}(w) = algorithm_B(E, w, budget).
inline CountingBijection<std::string> bijection_from_stream(const EnumerationStream& stream) {
  auto source = std::make_shared<EnumerationStream>(stream.fresh());
  return {
      [source](Index n) { return algorithm_A(*source, n); },
      [source](const std::string& w, Index budget) { return algorithm_B(*source, w, budget); },
      std::nullopt,
      "print-order",
  };
}

enum class Decision { accepted, rejected };

/// Decides w from a stream that prints in strictly increasing canonical
/// order: read until a print >= w shows up or the stream ends.
inline Decision decider_from_increasing_enumerator(const EnumerationStream& stream,
                                                   std::string_view w) {
  const Alphabet& alphabet = stream.alphabet();
  alphabet.check(w);
  auto cursor = stream.fresh();
  std::optional<std::string> previous;
  while (auto s = cursor.next()) {
    if (previous && compare(*previous, *s, alphabet) != std::strong_ordering::less) {
      throw Error(ErrorCode::non_increasing_stream,
                  "'" + *s + "' printed after '" + *previous + "'");
    }
    const auto order = compare(*s, w, alphabet);
    if (order == std::strong_ordering::equal) return Decision::accepted;
    if (order == std::strong_ordering::greater) return Decision::rejected;
    previous = std::move(s);
  }
  return Decision::rejected;
}

/// True iff the first n prints (or all of them, if fewer) strictly increase.
inline bool check_increasing_prefix(const EnumerationStream& stream, Index n) {
  const Alphabet& alphabet = stream.alphabet();
  auto cursor = stream.fresh();
  std::optional<std::string> previous;
  for (Index i = 0; i < n; ++i) {
    auto s = cursor.next();
    if (!s) return true;
    if (previous && compare(*previous, *s, alphabet) != std::strong_ordering::less) return false;
    previous = std::move(s);
  }
  return true;
}

}  // namespace workbench
