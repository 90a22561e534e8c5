#include "cantor/perm.hpp"

#include <algorithm>

namespace cantor {

namespace {

void sort_by_key(std::vector<std::pair<std::size_t, std::size_t>>& m) {
  std::sort(m.begin(), m.end());
}

}  // namespace

Permutation Permutation::from_pairs(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> fwd;
  for (auto [n, image] : pairs) {
    if (n != image) fwd.emplace_back(n, image);
  }
  sort_by_key(fwd);
  fwd.erase(std::unique(fwd.begin(), fwd.end()), fwd.end());

  std::vector<std::size_t> domain, range;
  for (auto [n, image] : fwd) {
    domain.push_back(n);
    range.push_back(image);
  }
  std::sort(range.begin(), range.end());
  bool keys_unique =
      std::adjacent_find(domain.begin(), domain.end()) == domain.end();
  bool values_unique =
      std::adjacent_find(range.begin(), range.end()) == range.end();
  if (!keys_unique || !values_unique || domain != range) {
    throw ParseError(
        "pairs do not describe a finite-support bijection "
        "(domain and range must coincide)");
  }

  Permutation p;
  p.fwd_ = fwd;
  for (auto [n, image] : fwd) p.inv_.emplace_back(image, n);
  sort_by_key(p.inv_);
  return p;
}

Permutation Permutation::from_images(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw ParseError("images must be a permutation of 0..n-1");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < images.size(); ++i) pairs.emplace_back(i, images[i]);
  return from_pairs(pairs);
}

Permutation Permutation::transposition(std::size_t a, std::size_t b) {
  if (a == b) return identity();
  return from_pairs({{a, b}, {b, a}});
}

Permutation Permutation::inverted() const {
  Permutation p;
  p.fwd_ = inv_;
  p.inv_ = fwd_;
  return p;
}

std::size_t Permutation::support_bound() const {
  if (fwd_.empty()) return 0;
  return fwd_.back().first + 1;
}

std::size_t Permutation::map_at(
    const std::vector<std::pair<std::size_t, std::size_t>>& m, std::size_t n) {
  for (auto [key, value] : m) {
    if (key == n) return value;
    if (key > n) break;
  }
  return n;
}

std::vector<std::size_t> conjugate_successor(const Permutation& theta,
                                             std::size_t upto) {
  std::vector<std::size_t> k(upto);
  for (std::size_t n = 0; n < upto; ++n) k[n] = theta.inverse(theta(n) + 1);
  return k;
}

std::vector<std::size_t> recover_inverse(const std::vector<std::size_t>& k,
                                         std::size_t seed,
                                         std::size_t m_bound) {
  if (k.size() < m_bound) {
    throw Error("k table covers fewer positions than requested");
  }
  std::vector<std::size_t> t;
  t.reserve(m_bound);
  if (m_bound == 0) return t;
  t.push_back(seed);
  for (std::size_t m = 1; m < m_bound; ++m) {
    std::size_t prev = t.back();
    if (prev >= m_bound) {
      throw OutOfWindow("iterate " + std::to_string(prev) +
                        " escapes the k table of size " +
                        std::to_string(m_bound));
    }
    t.push_back(k[prev]);
  }
  return t;
}

Real induced_map(const Permutation& theta, const Real& x) {
  if (theta.is_identity()) return x;
  std::size_t h = std::max(x.head().size(), theta.support_bound());
  BitString head;
  for (std::size_t n = 0; n < h; ++n) head.push_back(x.at(theta(n)));
  BitString period;
  for (std::size_t j = 0; j < x.period().size(); ++j) {
    period.push_back(x.at(h + j));
  }
  return Real(std::move(head), std::move(period));
}

}  // namespace cantor
