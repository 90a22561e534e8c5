#include "cantor/bits.hpp"

#include <algorithm>
#include <numeric>

namespace cantor {

BitString::BitString(std::string_view text) : bits_(text) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw ParseError("bit string may contain only 0 and 1: \"" +
                       std::string(text) + "\"");
    }
  }
}

BitString BitString::zeros(std::size_t n) {
  BitString s;
  s.bits_.assign(n, '0');
  return s;
}

BitString BitString::prefix(std::size_t n) const {
  assert(n <= size());
  BitString s;
  s.bits_ = bits_.substr(0, n);
  return s;
}

BitString BitString::suffix_from(std::size_t i) const {
  assert(i <= size());
  BitString s;
  s.bits_ = bits_.substr(i);
  return s;
}

bool is_prefix(const BitString& sigma, const BitString& tau) {
  return sigma.size() <= tau.size() &&
         std::equal(sigma.str().begin(), sigma.str().end(), tau.str().begin());
}

BitString bits_msb_first(std::uint64_t value, std::size_t width) {
  assert(width < 64);
  BitString s;
  for (std::size_t i = 0; i < width; ++i) {
    s.push_back(static_cast<int>((value >> (width - 1 - i)) & 1));
  }
  return s;
}

Real::Real() : period_(BitString("0")) {}

Real::Real(BitString head, BitString period)
    : head_(std::move(head)), period_(std::move(period)) {
  if (period_.empty()) {
    throw ParseError("eventually periodic value needs a nonempty period");
  }
}

Real Real::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("expected \"head|period\": \"" + std::string(text) + "\"");
  }
  return Real(BitString(text.substr(0, bar)), BitString(text.substr(bar + 1)));
}

Real Real::zeros() { return Real(); }

Real Real::ones() { return Real(BitString{}, BitString("1")); }

Real Real::from_positions(const std::vector<std::size_t>& positions) {
  if (positions.empty()) return Real();
  std::size_t top = *std::max_element(positions.begin(), positions.end());
  BitString head = BitString::zeros(top + 1);
  for (std::size_t p : positions) head.set(p, 1);
  return Real(std::move(head), BitString("0"));
}

Real Real::rephased(std::size_t h) const {
  if (h <= head_.size()) return *this;
  BitString head = head_;
  for (std::size_t n = head_.size(); n < h; ++n) head.push_back(at(n));
  BitString period;
  for (std::size_t j = 0; j < period_.size(); ++j) period.push_back(at(h + j));
  return Real(std::move(head), std::move(period));
}

std::string Real::str() const { return head_.str() + "|" + period_.str(); }

Real splice(const BitString& sigma, const Real& x) {
  if (sigma.empty()) return x;
  std::size_t h = std::max(sigma.size(), x.head().size());
  BitString head;
  for (std::size_t n = 0; n < h; ++n) {
    head.push_back(n < sigma.size() ? sigma.at(n) : x.at(n));
  }
  BitString period;
  for (std::size_t j = 0; j < x.period().size(); ++j) {
    period.push_back(x.at(h + j));
  }
  return Real(std::move(head), std::move(period));
}

std::size_t hamming_window(const Real& x, const Real& y, Window w) {
  std::size_t count = 0;
  for (std::size_t n = 0; n < w.limit; ++n) {
    if (x.at(n) != y.at(n)) ++count;
  }
  return count;
}

bool eq_star_n(const Real& x, const Real& y, std::size_t n) {
  std::size_t l = std::lcm(x.period().size(), y.period().size());
  std::size_t bound = std::max(n, x.head().size() + y.head().size()) + l;
  for (std::size_t i = n; i < bound; ++i) {
    if (x.at(i) != y.at(i)) return false;
  }
  return true;
}

std::optional<std::size_t> eq_star(const Real& x, const Real& y) {
  std::size_t l = std::lcm(x.period().size(), y.period().size());
  std::size_t bound = x.head().size() + y.head().size() + l;
  // Beyond `bound` both values are periodic with period l, so a disagreement
  // there recurs forever and the tails never agree.
  if (!eq_star_n(x, y, bound)) return std::nullopt;
  std::size_t witness = 0;
  for (std::size_t i = 0; i < bound; ++i) {
    if (x.at(i) != y.at(i)) witness = i + 1;
  }
  return witness;
}

bool extensionally_equal(const Real& x, const Real& y) {
  auto w = eq_star(x, y);
  return w.has_value() && *w == 0;
}

}  // namespace cantor
