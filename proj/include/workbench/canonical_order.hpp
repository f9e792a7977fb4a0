#pragma once

// Canonical (shortlex) order on Sigma*: the rank bijection between strings
// and naturals, its inverse, and successor stepping.
//
// For an alphabet a_0 < a_1 < ... < a_{k-1} the rank of s is the number of
// strings strictly shorter than s plus the base-k value of s read with
// digit(a_i) = i. Over a unary alphabet the rank of a^i is i.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "workbench/error.hpp"

namespace workbench {

/// Arbitrary-precision natural number.
using Rank = boost::multiprecision::cpp_int;

/// An ordered set of k >= 1 distinct single-character symbols. The position
/// of a symbol in the list is its digit value.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
      throw Error(ErrorCode::empty_alphabet, "an alphabet needs at least one symbol");
    }
    index_.fill(kAbsent);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
      if (slot != kAbsent) {
        throw Error(ErrorCode::duplicate_symbol,
                    std::string("symbol '") + symbols_[i] + "' listed twice");
      }
      slot = static_cast<std::int16_t>(i);
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  std::string_view symbols() const noexcept { return symbols_; }
  char symbol(std::size_t digit) const { return symbols_.at(digit); }

  bool contains(char a) const noexcept {
    return index_[static_cast<unsigned char>(a)] != kAbsent;
  }

  std::size_t index_of(char a) const {
    const auto i = index_[static_cast<unsigned char>(a)];
    if (i == kAbsent) {
      throw Error(ErrorCode::symbol_not_in_alphabet,
                  std::string("'") + a + "' is not in {" + symbols_ + "}");
    }
    return static_cast<std::size_t>(i);
  }

  /// Throws unless every character of s is a symbol of this alphabet.
  void check(std::string_view s) const {
    for (char a : s) index_of(a);
  }

  friend bool operator==(const Alphabet& x, const Alphabet& y) noexcept {
    return x.symbols_ == y.symbols_;
  }

 private:
  static constexpr std::int16_t kAbsent = -1;
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// A finite string tagged with the alphabet it is drawn from.
class CanonicalString {
 public:
  CanonicalString(std::shared_ptr<const Alphabet> alphabet, std::string text)
      : alphabet_(std::move(alphabet)), text_(std::move(text)) {
    alphabet_->check(text_);
  }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }
  const std::string& text() const noexcept { return text_; }
  std::size_t length() const noexcept { return text_.size(); }

  friend bool operator==(const CanonicalString& x, const CanonicalString& y) {
    return x.text_ == y.text_ && *x.alphabet_ == *y.alphabet_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::string text_;
};

inline std::size_t symbol_index(char a, const Alphabet& alphabet) {
  return alphabet.index_of(a);
}

/// Base-k value: v(eps) = 0, v(xa) = v(x) * k + digit(a).
inline Rank string_value(std::string_view s, const Alphabet& alphabet) {
  const auto k = alphabet.size();
  if (k == 1) {
    alphabet.check(s);
    return 0;
  }
  Rank value = 0;
  for (char a : s) {
    value *= k;
    value += alphabet.index_of(a);
  }
  return value;
}

/// Number of strings of length < n, i.e. (k^n - 1)/(k - 1), or n when k = 1.
inline Rank shorter_string_count(std::size_t n, std::size_t k) {
  if (k == 1) return Rank(n);
  Rank count = 0;
  Rank block = 1;
  for (std::size_t len = 0; len < n; ++len) {
    count += block;
    block *= k;
  }
  return count;
}

inline Rank rank(std::string_view s, const Alphabet& alphabet) {
  return shorter_string_count(s.size(), alphabet.size()) + string_value(s, alphabet);
}

inline Rank rank(const CanonicalString& s) { return rank(s.text(), s.alphabet()); }

/// Inverse of rank. The length is located by accumulating geometric block
/// sizes in exact arithmetic; the remainder is written as exactly that many
/// base-k digits, most significant first, padded with a_0.
inline std::string unrank(const Rank& x, const Alphabet& alphabet) {
  if (x < 0) {
    throw std::domain_error("unrank: negative rank");
  }
  const auto k = alphabet.size();
  if (k == 1) {
    if (x > Rank(std::numeric_limits<std::size_t>::max() / 2)) {
      throw std::length_error("unrank: unary string too long to materialize");
    }
    return std::string(static_cast<std::size_t>(x), alphabet.symbol(0));
  }

  std::size_t n = 0;
  Rank offset = 0;  // rank of a_0^n
  Rank block = 1;   // k^n
  while (x >= offset + block) {
    offset += block;
    block *= k;
    ++n;
  }

  Rank value = x - offset;
  std::string s(n, alphabet.symbol(0));
  for (std::size_t i = n; i-- > 0;) {
    const auto digit = static_cast<std::size_t>(value % k);
    s[i] = alphabet.symbol(digit);
    value /= k;
  }
  return s;
}

inline std::string unrank(std::uint64_t x, const Alphabet& alphabet) {
  return unrank(Rank(x), alphabet);
}

/// Shortlex comparison; agrees with comparing ranks but never builds them.
inline std::strong_ordering compare(std::string_view x, std::string_view y,
                                    const Alphabet& alphabet) {
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto dx = alphabet.index_of(x[i]);
    const auto dy = alphabet.index_of(y[i]);
    if (dx != dy) return dx <=> dy;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const CanonicalString& x, const CanonicalString& y) {
  if (!(x.alphabet() == y.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch,
                "{" + std::string(x.alphabet().symbols()) + "} vs {" +
                    std::string(y.alphabet().symbols()) + "}");
  }
  return compare(x.text(), y.text(), x.alphabet());
}

/// The string whose rank is rank(s) + 1.
inline std::string successor(std::string_view s, const Alphabet& alphabet) {
  alphabet.check(s);
  const auto top = alphabet.size() - 1;
  std::string t(s);
  for (std::size_t i = t.size(); i-- > 0;) {
    const auto d = alphabet.index_of(t[i]);
    if (d < top) {
      t[i] = alphabet.symbol(d + 1);
      return t;
    }
    t[i] = alphabet.symbol(0);
  }
  // every digit was a_{k-1}: carry into a new leading position
  t.push_back(alphabet.symbol(0));
  return t;
}

inline CanonicalString successor(const CanonicalString& s) {
  return CanonicalString(s.alphabet_ptr(), successor(s.text(), s.alphabet()));
}

}  // namespace workbench
