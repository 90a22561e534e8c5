#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

/// Finite binary string. Position 0 is the leftmost character of the
/// textual form, so string comparison is lexicographic comparison.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view text);

  static BitString zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int at(std::size_t i) const {
    assert(i < bits_.size());
    return bits_[i] - '0';
  }
  void set(std::size_t i, int bit) {
    assert(i < bits_.size());
    bits_[i] = bit ? '1' : '0';
  }
  void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }

  BitString prefix(std::size_t n) const;
  BitString suffix_from(std::size_t i) const;

  const std::string& str() const { return bits_; }

  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::string bits_;  // '0'/'1' only
};

bool is_prefix(const BitString& sigma, const BitString& tau);

/// Bits of `value` laid out over positions [0,width), most significant bit
/// at position 0, so counting value upward walks strings in lexicographic
/// order. width must be < 64.
BitString bits_msb_first(std::uint64_t value, std::size_t width);

/// Element of 2^ω with a finite head followed by a period repeated forever.
/// Equality, membership and the eventual-agreement relations are all exactly
/// decidable for values of this shape.
class Real {
 public:
  Real();  // 0^ω
  Real(BitString head, BitString period);

  static Real parse(std::string_view text);  // "head|period"
  static Real zeros();
  static Real ones();
  /// Characteristic function of a finite set, 0 tail.
  static Real from_positions(const std::vector<std::size_t>& positions);

  int at(std::size_t n) const {
    if (n < head_.size()) return head_.at(n);
    return period_.at((n - head_.size()) % period_.size());
  }

  const BitString& head() const { return head_; }
  const BitString& period() const { return period_; }

  /// Same value with the head materialized to at least `h` positions.
  Real rephased(std::size_t h) const;

  std::string str() const;

 private:
  BitString head_;
  BitString period_;  // nonempty
};

/// Bound below which an exhaustive check quantifies. Always positive.
struct Window {
  explicit Window(std::size_t l) : limit(l) {
    if (l == 0) throw Error("window limit must be positive");
  }
  std::size_t limit;
};

/// result(n) = sigma(n) for n < |sigma|, x(n) otherwise.
Real splice(const BitString& sigma, const Real& x);

/// Number of positions below w.limit where x and y disagree.
std::size_t hamming_window(const Real& x, const Real& y, Window w);

/// x and y agree on [n, ∞). Exact: comparison runs to the periodicity bound.
bool eq_star_n(const Real& x, const Real& y, std::size_t n);

/// Least n with eq_star_n(x, y, n), or absent when the tails never agree.
std::optional<std::size_t> eq_star(const Real& x, const Real& y);

/// x(n) = y(n) for every n.
bool extensionally_equal(const Real& x, const Real& y);

}  // namespace cantor
