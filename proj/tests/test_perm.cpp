#include "cantor/perm.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"

using namespace cantor;

namespace {

// All permutations fixing everything outside [0, k).
std::vector<Permutation> all_permutations_below(std::size_t k) {
  std::vector<std::size_t> images(k);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Independent route to the conjugate table: search m with θ(m) = θ(n)+1.
std::size_t conjugate_by_search(const Permutation& theta, std::size_t n,
                                std::size_t search_bound) {
  std::size_t target = theta(n) + 1;
  for (std::size_t m = 0; m < search_bound; ++m) {
    if (theta(m) == target) return m;
  }
  FAIL("conjugate search exhausted");
  return 0;
}

}  // namespace

TEST_CASE("permutation construction and validation") {
  Permutation swap05 = Permutation::from_pairs({{0, 5}, {5, 0}});
  CHECK(swap05(0) == 5);
  CHECK(swap05(5) == 0);
  CHECK(swap05(3) == 3);
  CHECK(swap05.inverse(5) == 0);
  CHECK(swap05.support_bound() == 6);
  CHECK(swap05 == Permutation::transposition(0, 5));
  CHECK(swap05.inverted() == swap05);

  CHECK(Permutation::identity().is_identity());
  CHECK(Permutation::transposition(2, 2).is_identity());
  CHECK(Permutation::from_pairs({{3, 3}}).is_identity());

  CHECK_THROWS_AS(Permutation::from_pairs({{0, 5}}), ParseError);
  CHECK_THROWS_AS(Permutation::from_pairs({{0, 5}, {1, 5}, {5, 0}}),
                  ParseError);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 0}), ParseError);

  Permutation cycle = Permutation::from_images({1, 2, 0});
  CHECK(cycle(0) == 1);
  CHECK(cycle(2) == 0);
  CHECK(cycle.inverse(0) == 2);
  CHECK(cycle.inverted()(1) == 0);
}

TEST_CASE("successor conjugate tables") {
  CHECK(conjugate_successor(Permutation::identity(), 5) ==
        std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(conjugate_successor(Permutation::transposition(0, 1), 4) ==
        std::vector<std::size_t>{2, 0, 3, 4});
  CHECK(conjugate_successor(Permutation::transposition(0, 5), 6)[5] == 1);

  // Cross-check against the search oracle on a mixed family.
  std::vector<Permutation> family = {
      Permutation::identity(), Permutation::transposition(0, 1),
      Permutation::transposition(0, 5), Permutation::from_images({1, 2, 0}),
      Permutation::from_images({4, 3, 2, 1, 0})};
  for (const auto& theta : family) {
    auto k = conjugate_successor(theta, 10);
    for (std::size_t n = 0; n < 10; ++n) {
      CHECK(k[n] == conjugate_by_search(theta, n, 32));
    }
  }
}

TEST_CASE("inverse recovery by the seeded recursion") {
  CHECK(recover_inverse({1, 2, 3, 4, 5, 6}, 0, 6) ==
        std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  CHECK(recover_inverse({2, 0, 3, 4}, 1, 4) ==
        std::vector<std::size_t>{1, 0, 2, 3});

  Permutation swap05 = Permutation::transposition(0, 5);
  auto recovered = recover_inverse(conjugate_successor(swap05, 8), 5, 8);
  CHECK(recovered == std::vector<std::size_t>{5, 1, 2, 3, 4, 0, 6, 7});

  CHECK_THROWS_AS(recover_inverse({5, 5}, 5, 2), OutOfWindow);
  CHECK_THROWS_AS(recover_inverse({1}, 0, 2), Error);
}

TEST_CASE("recursion recovers the inverse for every small permutation") {
  std::size_t skipped = 0;
  for (const auto& theta : all_permutations_below(8)) {
    for (std::size_t m_bound = 1; m_bound <= 16; ++m_bound) {
      auto k = conjugate_successor(theta, m_bound);
      std::vector<std::size_t> recovered;
      try {
        recovered = recover_inverse(k, theta.inverse(0), m_bound);
      } catch (const OutOfWindow&) {
        // An iterate left the window; nothing to compare for this m_bound.
        ++skipped;
        continue;
      }
      for (std::size_t m = 0; m < m_bound; ++m) {
        REQUIRE(recovered[m] == theta.inverse(m));
      }
    }
  }
  // Windows at least 8 wide always keep the iterates in range.
  CHECK(skipped < 40320 * 7);
}

TEST_CASE("induced map") {
  Real x = Real::parse("1|0");
  CHECK(extensionally_equal(induced_map(Permutation::identity(), x), x));
  CHECK(extensionally_equal(induced_map(Permutation::transposition(0, 5), x),
                            Real::from_positions({5})));

  // Pointwise oracle on a permutation with a longer cycle.
  Permutation cycle = Permutation::from_images({2, 0, 3, 1});
  Real y = Real::parse("0110|10");
  Real image = induced_map(cycle, y);
  for (std::size_t n = 0; n < 20; ++n) CHECK(image.at(n) == y.at(cycle(n)));
}

TEST_CASE("induced maps of inverse permutations compose to the identity") {
  std::vector<Permutation> family = {
      Permutation::transposition(0, 5), Permutation::from_images({1, 2, 0}),
      Permutation::from_images({4, 0, 1, 3, 2})};
  for (const auto& theta : family) {
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << 8); ++h) {
      for (int tail = 0; tail <= 1; ++tail) {
        Real x(bits_msb_first(h, 8), BitString(tail ? "1" : "0"));
        Real round = induced_map(theta.inverted(), induced_map(theta, x));
        CHECK(eq_star(round, x) == 0);
        Real other = induced_map(theta, induced_map(theta.inverted(), x));
        CHECK(eq_star(other, x) == 0);
      }
    }
  }
}
