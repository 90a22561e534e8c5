#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cantor/bits.hpp"

namespace cantor {

/// Bijection of ω equal to the identity outside a finite set. Only the
/// non-fixed mappings are stored, sorted by argument, together with the
/// inverse mappings.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity() { return {}; }
  /// Pairs (n, image). Must describe a bijection whose domain equals its
  /// range; fixed points may be listed and are dropped.
  static Permutation from_pairs(
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// images[i] is the image of i; images must be a permutation of
  /// 0..images.size()-1.
  static Permutation from_images(const std::vector<std::size_t>& images);
  static Permutation transposition(std::size_t a, std::size_t b);

  std::size_t operator()(std::size_t n) const { return map_at(fwd_, n); }
  std::size_t inverse(std::size_t n) const { return map_at(inv_, n); }
  Permutation inverted() const;

  bool is_identity() const { return fwd_.empty(); }
  /// 1 + the largest non-fixed point; 0 for the identity.
  std::size_t support_bound() const;
  /// Non-fixed mappings, sorted by argument.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return fwd_;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  static std::size_t map_at(
      const std::vector<std::pair<std::size_t, std::size_t>>& m, std::size_t n);

  std::vector<std::pair<std::size_t, std::size_t>> fwd_;
  std::vector<std::pair<std::size_t, std::size_t>> inv_;
};

/// Table of k(n) = θ⁻¹(θ(n)+1) for n < upto: the successor function
/// conjugated by θ.
std::vector<std::size_t> conjugate_successor(const Permutation& theta,
                                             std::size_t upto);

/// Runs the recursion t(0) = seed, t(m+1) = k(t(m)) for m+1 < m_bound.
/// When k is the table of θ⁻¹∘S∘θ and seed = θ⁻¹(0), the result is the table
/// of θ⁻¹ on [0, m_bound). Throws OutOfWindow when an iterate reaches a value
/// the k table does not cover.
std::vector<std::size_t> recover_inverse(const std::vector<std::size_t>& k,
                                         std::size_t seed, std::size_t m_bound);

/// result(n) = x(θ(n)); eventually periodic again since θ has finite support.
Real induced_map(const Permutation& theta, const Real& x);

}  // namespace cantor
