#include "cantor/tt.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

using namespace cantor;

namespace {

// Input with the given low bits and a zero tail.
Real real_from_assignment(std::uint64_t bits, std::size_t width) {
  BitString head;
  for (std::size_t i = 0; i < width; ++i) {
    head.push_back(static_cast<int>((bits >> i) & 1));
  }
  return Real(std::move(head), BitString("0"));
}

TruthTableFunctional random_functional(std::mt19937& rng, std::size_t arity,
                                       std::size_t position_bound) {
  std::uniform_int_distribution<std::size_t> npos(1, 3);
  std::uniform_int_distribution<std::size_t> pos(0, position_bound - 1);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<OutputTable> outputs;
  for (std::size_t n = 0; n < arity; ++n) {
    std::vector<std::size_t> use;
    while (use.size() < npos(rng)) {
      std::size_t p = pos(rng);
      if (std::find(use.begin(), use.end(), p) == use.end()) use.push_back(p);
    }
    std::sort(use.begin(), use.end());
    std::vector<std::uint8_t> table(std::size_t{1} << use.size());
    for (auto& entry : table) entry = static_cast<std::uint8_t>(bit(rng));
    outputs.push_back(OutputTable{std::move(use), std::move(table)});
  }
  return TruthTableFunctional(std::move(outputs));
}

}  // namespace

TEST_CASE("table validation") {
  CHECK(make_table({2, 3}, {1, 0, 1, 1}).use == std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(make_table({3, 2}, {1, 0, 1, 1}), Error);
  CHECK_THROWS_AS(make_table({2, 2}, {1, 0, 1, 1}), Error);
  CHECK_THROWS_AS(make_table({2, 3}, {1, 0, 1}), Error);
  CHECK_THROWS_AS(make_table({2}, {1, 2}), Error);
}

TEST_CASE("applying a functional") {
  TruthTableFunctional phi = pair_and_functional();
  CHECK(tt_apply(phi, Real::ones(), 3) == 1);
  CHECK(tt_apply(phi, Real::parse("|10"), 0) == 0);

  TruthTableFunctional id = identity_functional(4);
  Real x = Real::parse("0110|10");
  for (std::size_t n = 0; n < 4; ++n) CHECK(tt_apply(id, x, n) == x.at(n));

  TruthTableFunctional finite({identity_table(0), identity_table(1)});
  CHECK_THROWS_AS(tt_apply(finite, x, 5), MissingTable);
  CHECK_FALSE(finite.has_output(5));
  CHECK(phi.has_output(1000));
}

TEST_CASE("materialization through the rule") {
  TruthTableFunctional phi = pair_and_functional();
  CHECK(phi.arity() == 0);
  phi.materialize(4);
  CHECK(phi.arity() == 4);
  CHECK(phi.outputs()[3].use == std::vector<std::size_t>{6, 7});

  TruthTableFunctional finite({identity_table(0)});
  CHECK_THROWS_AS(finite.materialize(2), MissingTable);
}

TEST_CASE("composition by substitution") {
  TruthTableFunctional phi = pair_and_functional();

  // Left identity.
  TruthTableFunctional left = tt_compose(identity_functional(3), phi, 3);
  phi.materialize(3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(left.outputs()[n] == phi.outputs()[n]);
  }

  // A single table reading positions 2,3 pushed through the conjunction
  // functional reads the pairs at 4..7.
  TruthTableFunctional implication(
      {make_table({2, 3}, {1, 0, 1, 1})});
  TruthTableFunctional pushed = tt_compose(implication, phi, 1);
  CHECK(pushed.outputs()[0].use == std::vector<std::size_t>{4, 5, 6, 7});

  // Conjunction composed with itself: output 0 reads 0..3 and is the
  // conjunction of all four bits. Expected table from double evaluation.
  TruthTableFunctional twice = tt_compose(phi, phi, 1);
  CHECK(twice.outputs()[0].use == std::vector<std::size_t>{0, 1, 2, 3});
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    Real x = real_from_assignment(bits, 4);
    BitString image;
    for (std::size_t j = 0; j < 2; ++j) image.push_back(tt_apply(phi, x, j));
    int expected = tt_apply(phi, Real(image, BitString("0")), 0);
    CHECK(tt_apply(twice, x, 0) == expected);
    CHECK(tt_apply(twice, x, 0) == (bits == 15 ? 1 : 0));
  }

  TruthTableFunctional finite({identity_table(9)});
  TruthTableFunctional narrow({identity_table(0)});
  CHECK_THROWS_AS(tt_compose(finite, narrow, 1), MissingTable);
  CHECK_THROWS_AS(tt_compose(narrow, narrow, 2), MissingTable);
}

TEST_CASE("substitution matches double evaluation on random functionals") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 25; ++round) {
    TruthTableFunctional inner = random_functional(rng, 8, 8);
    TruthTableFunctional outer = random_functional(rng, 4, 8);
    TruthTableFunctional composed = tt_compose(outer, inner, 4);
    for (std::size_t n = 0; n < 4; ++n) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 8); ++bits) {
        Real x = real_from_assignment(bits, 8);
        BitString image;
        for (std::size_t j = 0; j < 8; ++j) image.push_back(tt_apply(inner, x, j));
        int expected = tt_apply(outer, Real(image, BitString("0")), n);
        REQUIRE(tt_apply(composed, x, n) == expected);
      }
    }
  }
}

TEST_CASE("star operator") {
  TruthTableFunctional shift = shift_functional(4);
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(shift.outputs()[n].use == std::vector<std::size_t>{n + 1});
    CHECK(shift.outputs()[n].table == std::vector<std::uint8_t>{0, 1});
  }

  TruthTableFunctional id =
      star_of_function([](std::size_t n) { return n; }, 3);
  Real x = Real::parse("101|0");
  for (std::size_t n = 0; n < 3; ++n) CHECK(tt_apply(id, x, n) == x.at(n));

  TruthTableFunctional constant2 = star_of_table({2});
  CHECK(constant2.outputs()[0].use == std::vector<std::size_t>{2});
  CHECK_FALSE(constant2.has_rule());
}

TEST_CASE("star contravariance") {
  std::vector<std::size_t> f = {3, 0, 2, 5, 1, 4};
  std::vector<std::size_t> g = {7, 6, 0, 3, 9, 2, 11, 4, 1, 5, 8, 10};
  std::vector<std::size_t> gf;
  for (std::size_t n = 0; n < f.size(); ++n) gf.push_back(g[f[n]]);

  TruthTableFunctional lhs = star_of_table(gf);
  TruthTableFunctional rhs =
      tt_compose(star_of_table(f), star_of_table(g), f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    CHECK(tables_extensionally_equal(lhs.outputs()[n], rhs.outputs()[n]));
  }
}

TEST_CASE("permutation functionals") {
  TruthTableFunctional id = from_permutation(Permutation::identity(), 4);
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(id.outputs()[n] == identity_table(n));
  }

  Permutation swap05 = Permutation::transposition(0, 5);
  TruthTableFunctional f = from_permutation(swap05, 6);
  CHECK(f.outputs()[0].use == std::vector<std::size_t>{5});
  CHECK(f.outputs()[5].use == std::vector<std::size_t>{0});
  CHECK(f.outputs()[3].use == std::vector<std::size_t>{3});
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    Real x = real_from_assignment(bits, 6);
    Real expected = induced_map(swap05, x);
    for (std::size_t n = 0; n < 6; ++n) {
      REQUIRE(tt_apply(f, x, n) == expected.at(n));
    }
  }

  // Composing the involution with itself gives the identity on a window.
  CHECK(verify_homeo_pair(f, f, Window(8)));

  // Agreement with the induced map also holds for a non-involution.
  Permutation cycle = Permutation::from_images({1, 2, 0});
  TruthTableFunctional g = from_permutation(cycle, 6);
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    Real x = real_from_assignment(bits, 6);
    Real expected = induced_map(cycle, x);
    for (std::size_t n = 0; n < 6; ++n) {
      REQUIRE(tt_apply(g, x, n) == expected.at(n));
    }
  }
}

TEST_CASE("homeomorphism pair verification") {
  CHECK(verify_homeo_pair(identity_functional(4), identity_functional(4),
                          Window(4)));
  CHECK_FALSE(verify_homeo_pair(shift_functional(4), identity_functional(4),
                                Window(2)));

  Permutation cycle = Permutation::from_images({1, 2, 0});
  CHECK(verify_homeo_pair(from_permutation(cycle, 8),
                          from_permutation(cycle.inverted(), 8), Window(8)));
  CHECK_FALSE(verify_homeo_pair(from_permutation(cycle, 8),
                                from_permutation(cycle, 8), Window(8)));

  CHECK_THROWS_AS(HomeoPair::checked(shift_functional(4),
                                     identity_functional(4), Window(2)),
                  Error);
  HomeoPair pair = HomeoPair::from_permutation(cycle, Window(8));
  CHECK(pair.verified_window.limit == 8);
}

TEST_CASE("use growth beyond the cap is refused") {
  TruthTableFunctional phi = pair_and_functional();
  TruthTableFunctional wide = tt_compose(pair_and_functional(),
                                         pair_and_functional(), 1);
  CHECK(wide.outputs()[0].use.size() == 4);
  CHECK_THROWS_AS(tt_compose(phi, phi, 1, 3), UseTooLarge);
}
