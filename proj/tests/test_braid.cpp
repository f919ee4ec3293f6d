#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "legbraid/braid.hpp"
#include "legbraid/verification.hpp"

using namespace legbraid;

namespace {

// Independent oracle: apply the transpositions one by one as functions.
Permutation compose_transpositions(const BraidWord& b, int upto) {
  std::vector<int> images(b.strands);
  std::iota(images.begin(), images.end(), 1);
  for (int i = 0; i < b.strands; ++i) {
    int v = i + 1;
    for (int k = 0; k < upto; ++k) {
      int t = b.letters[k];
      if (v == t)
        v = t + 1;
      else if (v == t + 1)
        v = t;
    }
    images[i] = v;
  }
  return Permutation::from_images(images);
}

std::vector<Permutation> all_permutations(int q) {
  std::vector<int> images(q);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

TEST_CASE("parsing braid words") {
  BraidWord trefoil = parse_braid_word("s1^3");
  CHECK(trefoil.strands == 2);
  CHECK(trefoil.letters == std::vector<int>{1, 1, 1});

  BraidWord torus = parse_braid_word("1 2 1 2 1 2 1 2 1 2 1 2");
  CHECK(torus.strands == 3);
  CHECK(torus.length() == 12);
  for (int k = 0; k < 12; ++k) CHECK(torus.letters[k] == 1 + k % 2);

  BraidWord overridden = parse_braid_word("s3", 5);
  CHECK(overridden.strands == 5);
  CHECK(overridden.letters == std::vector<int>{3});

  CHECK(parse_braid_word("1,2,,3").letters == std::vector<int>{1, 2, 3});
  CHECK(parse_braid_word("s2^2 s1").letters == std::vector<int>{2, 2, 1});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_braid_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("s1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("s1^-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("x2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("1 2", 2), std::invalid_argument);
}

TEST_CASE("underlying permutation") {
  BraidWord trefoil = parse_braid_word("s1^3");
  CHECK(underlying_permutation(trefoil) ==
        Permutation::from_images({2, 1}));
  CHECK(underlying_permutation(trefoil, 0) == Permutation(2));

  BraidWord b = parse_braid_word("1 2");
  CHECK(underlying_permutation(b, 2) == Permutation::from_images({3, 1, 2}));

  CHECK_THROWS_AS(underlying_permutation(trefoil, 4), std::invalid_argument);
}

TEST_CASE("underlying permutation matches transposition composition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> qd(2, 6), wd(0, 12);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    for (int k = 0; k <= b.length(); ++k)
      CHECK(underlying_permutation(b, k) == compose_transpositions(b, k));
  }
}

TEST_CASE("diagram statistics") {
  DiagramStats trefoil = diagram_stats(parse_braid_word("s1^3"));
  CHECK(trefoil.w == 3);
  CHECK(trefoil.q == 2);
  CHECK(trefoil.mu == 1);
  CHECK(trefoil.tb == 1);
  CHECK(trefoil.chi_star == 1);
  CHECK(trefoil.connected);

  BraidWord empty;
  empty.strands = 3;
  DiagramStats e = diagram_stats(empty);
  CHECK(e.mu == 3);
  CHECK(e.tb == -3);
  CHECK_FALSE(e.connected);

  DiagramStats torus = diagram_stats(parse_braid_word("1 2 1 2 1 2 1 2 1 2 1 2"));
  CHECK(torus.mu == 3);
  CHECK(torus.tb == 9);
  CHECK(torus.connected);
}

TEST_CASE("cyclic rotation") {
  BraidWord b;
  b.strands = 3;
  b.letters = {1, 2, 2};
  CHECK(cyclic_rotate(b, 1).letters == std::vector<int>{2, 2, 1});
  CHECK(cyclic_rotate(b, -1).letters == std::vector<int>{2, 1, 2});

  BraidWord single = parse_braid_word("1");
  CHECK(cyclic_rotate(single, 5).letters == std::vector<int>{1});

  BraidWord two = parse_braid_word("1 2");
  CHECK(cyclic_rotate(two, -1).letters == std::vector<int>{2, 1});
}

TEST_CASE("cyclic rotation preserves diagram statistics") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> qd(2, 5), wd(1, 12);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    DiagramStats base = diagram_stats(b);
    for (int s = 0; s <= b.length(); ++s)
      CHECK(diagram_stats(cyclic_rotate(b, s)) == base);
  }
}

TEST_CASE("R3 move") {
  BraidWord b = parse_braid_word("1 2 1");
  CHECK(apply_r3(b, 1).letters == std::vector<int>{2, 1, 2});

  BraidWord embedded = parse_braid_word("3 1 2 1");
  CHECK(apply_r3(embedded, 2).letters == std::vector<int>{3, 2, 1, 2});

  CHECK_THROWS_AS(apply_r3(parse_braid_word("1 1 2"), 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_r3(b, 2), std::invalid_argument);
}

TEST_CASE("R3 preserves permutation, length, and strands") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> qd(3, 6), wd(0, 8);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    // Plant a relation site at a random position.
    std::uniform_int_distribution<int> pd(0, b.length());
    std::uniform_int_distribution<int> id(1, b.strands - 2);
    int pos = pd(rng), i = id(rng);
    bool ascending = rng() & 1;
    std::vector<int> triple = ascending ? std::vector<int>{i, i + 1, i}
                                        : std::vector<int>{i + 1, i, i + 1};
    b.letters.insert(b.letters.begin() + pos, triple.begin(), triple.end());

    BraidWord moved = apply_r3(b, pos + 1);
    CHECK(moved.strands == b.strands);
    CHECK(moved.length() == b.length());
    CHECK(underlying_permutation(moved) == underlying_permutation(b));
    CHECK(apply_r3(moved, pos + 1) == b);
  }
}

TEST_CASE("reduced permutation words") {
  CHECK(reduced_permutation_word(Permutation(4)).length() == 0);

  Permutation swap14 = Permutation::from_images({4, 2, 3, 1});
  BraidWord w14 = reduced_permutation_word(swap14);
  CHECK(w14.length() == 5);
  CHECK(underlying_permutation(w14) == swap14);

  Permutation half_twist = Permutation::from_images({4, 3, 2, 1});
  BraidWord delta4 = reduced_permutation_word(half_twist);
  CHECK(delta4.length() == 6);
  CHECK(underlying_permutation(delta4) == half_twist);
}

TEST_CASE("reduced words are exact for all permutations up to six strands") {
  for (int q = 1; q <= 6; ++q) {
    for (const Permutation& p : all_permutations(q)) {
      BraidWord word = reduced_permutation_word(p);
      CHECK(underlying_permutation(word) == p);
      // Word length equals the inversion count, counted directly.
      long long inversions = 0;
      for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
          if (p.of(i) > p.of(j)) ++inversions;
      CHECK(word.length() == inversions);
      CHECK(p.inversion_count() == inversions);
    }
  }
}

TEST_CASE("permutation helpers") {
  Permutation p = Permutation::from_images({3, 1, 2});
  CHECK(p.inverse() == Permutation::from_images({2, 3, 1}));
  CHECK(p.of(1) == 3);
  CHECK(p.inverse_of(3) == 1);
  CHECK(p.cycle_count() == 1);
  CHECK(Permutation(4).cycle_count() == 4);
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), std::invalid_argument);
}
