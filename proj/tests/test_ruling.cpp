#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "legbraid/ruling.hpp"
#include "legbraid/verification.hpp"

using namespace legbraid;

namespace {

const BraidWord kTrefoil = parse_braid_word("s1^3");

RulingPolynomial brute_polynomial(const BraidWord& b) {
  RulingPolynomial rp;
  std::uint64_t total = std::uint64_t(1) << b.length();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    CrossingSet s{b.length(), bits};
    if (auto theta = is_ruling(b, s)) ++rp.coeffs[1 - *theta];
  }
  return rp;
}

}  // namespace

TEST_CASE("sweep on the trefoil") {
  CHECK(is_ruling(kTrefoil, CrossingSet::all(3)) == -1);
  CHECK(is_ruling(kTrefoil, CrossingSet::from_indices(3, {1})) == 1);
  CHECK(is_ruling(kTrefoil, CrossingSet::from_indices(3, {3})) == 1);
  CHECK_FALSE(is_ruling(kTrefoil, CrossingSet::from_indices(3, {2})));
  CHECK_FALSE(is_ruling(kTrefoil, CrossingSet::empty(3)));
  CHECK_THROWS_AS(is_ruling(kTrefoil, CrossingSet::empty(2)),
                  std::invalid_argument);
}

TEST_CASE("trefoil ruling census") {
  auto rulings = enumerate_rulings(kTrefoil);
  REQUIRE(rulings.size() == 3);
  CHECK(rulings[0].first.indices() == std::vector<int>{3});
  CHECK(rulings[0].second == 1);
  CHECK(rulings[1].first.indices() == std::vector<int>{1});
  CHECK(rulings[1].second == 1);
  CHECK(rulings[2].first.indices() == std::vector<int>{1, 2, 3});
  CHECK(rulings[2].second == -1);
  CHECK(ruling_polynomial(kTrefoil).to_string() == "z^2 + 2");
}

TEST_CASE("Seifert ruling is the unique minimum") {
  std::mt19937 rng(149);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> qd(2, 4), wd(1, 10);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    int theta_min = b.strands - b.length();
    auto all = enumerate_rulings(b);
    int at_min = 0;
    for (const auto& [s, theta] : all) {
      CHECK(theta >= theta_min);
      if (theta == theta_min) {
        ++at_min;
        CHECK(s == CrossingSet::all(b.length()));
      }
    }
    CHECK(at_min == 1);
  }
}

TEST_CASE("second-lowest level has tb + 1 rulings on connected words") {
  std::mt19937 rng(151);
  int seen = 0;
  while (seen < 15) {
    std::uniform_int_distribution<int> qd(2, 4), wd(2, 10);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    if (!diagram_stats(b).connected) continue;
    ++seen;
    RulingPolynomial rp = ruling_polynomial(b);
    int theta = b.strands - b.length() + 2;
    CHECK(rp.at(1 - theta) == std::uint64_t(b.length() - b.strands + 1));
  }
}

TEST_CASE("theta parity and range") {
  std::mt19937 rng(157);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> qd(2, 5), wd(0, 10);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    int mu = diagram_stats(b).mu;
    bool max_attained = false;
    for (const auto& [s, theta] : enumerate_rulings(b)) {
      (void)s;
      CHECK((theta - mu) % 2 == 0);
      CHECK(theta >= b.strands - b.length());
      CHECK(theta <= mu);
      max_attained = max_attained || theta == mu;
    }
    CHECK(max_attained);
  }
}

TEST_CASE("transfer-matrix polynomial matches brute force") {
  std::mt19937 rng(163);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> qd(2, 4), wd(0, 14);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    CHECK(ruling_polynomial(b) == brute_polynomial(b));

    auto listed = enumerate_rulings(b);
    RulingPolynomial from_list;
    for (const auto& [s, theta] : listed) {
      (void)s;
      ++from_list.coeffs[1 - theta];
    }
    CHECK(ruling_polynomial(b) == from_list);
  }
}

TEST_CASE("ruling polynomial is invariant under rotation of connected words") {
  std::mt19937 rng(167);
  int seen = 0;
  while (seen < 12) {
    std::uniform_int_distribution<int> qd(2, 4), wd(2, 10);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    if (!diagram_stats(b).connected) continue;
    ++seen;
    RulingPolynomial base = ruling_polynomial(b);
    for (int s = 1; s < b.length(); ++s)
      CHECK(ruling_polynomial(cyclic_rotate(b, s)) == base);
  }
}

TEST_CASE("two-component torus link has a negative exponent") {
  BraidWord b = parse_braid_word("s1^2");
  RulingPolynomial rp = ruling_polynomial(b);
  CHECK(rp.at(-1) == 1);
  CHECK(rp.to_string() == "z + z^-1");
  CHECK(diagram_stats(b).mu == 2);
}

TEST_CASE("closed form for the two-strand torus family") {
  CHECK(torus2_closed_form(3).to_string() == "z^2 + 2");
  CHECK(torus2_closed_form(11).to_string() ==
        "z^10 + 10z^8 + 36z^6 + 56z^4 + 35z^2 + 6");

  // Value at z = 1 runs through the Fibonacci numbers 1, 2, 3, 5, ...
  std::uint64_t prev = 1, cur = 2;
  CHECK(torus2_closed_form(1).total() == 1);
  CHECK(torus2_closed_form(2).total() == 2);
  for (int p = 3; p <= 16; ++p) {
    std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
    CHECK(torus2_closed_form(p).total() == cur);
  }

  for (int p = 1; p <= 12; ++p) {
    BraidWord b = parse_braid_word("s1^" + std::to_string(p));
    CHECK(ruling_polynomial(b) == torus2_closed_form(p));
  }
}

TEST_CASE("audit pass accepts every enumerated ruling") {
  std::mt19937 rng(173);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> qd(2, 5), wd(0, 9);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    for (const auto& [s, theta] : enumerate_rulings(b)) {
      (void)theta;
      CHECK(audit_ruling(b, s));
    }
    CrossingSet probe{b.length(), b.length() ? 2u : 0u};
    if (!is_ruling(b, probe)) CHECK_FALSE(audit_ruling(b, probe));
  }
}

TEST_CASE("polynomial text and empty words") {
  BraidWord empty;
  empty.strands = 3;
  RulingPolynomial rp = ruling_polynomial(empty);
  CHECK(rp.coeffs.size() == 1);
  CHECK(rp.at(-2) == 1);
  CHECK(rp.to_string() == "z^-2");

  RulingPolynomial zero;
  CHECK(zero.to_string() == "0");
}

// The count at theta = q - w + 4 versus the binomial C(w-q, 2) is an open
// question; report what the enumerator sees without asserting it.
TEST_CASE("informational: census at the third-lowest level") {
  std::mt19937 rng(179);
  int agree = 0, total = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> qd(2, 4), wd(4, 10);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    if (!diagram_stats(b).connected) continue;
    long long tb = b.length() - b.strands;
    RulingPolynomial rp = ruling_polynomial(b);
    std::uint64_t observed = rp.at(1 - (b.strands - b.length() + 4));
    std::uint64_t binom = std::uint64_t(tb) * (tb - 1) / 2;
    ++total;
    if (observed == binom) ++agree;
  }
  MESSAGE("theta = q-w+4 census matched C(tb,2) on ", agree, " of ", total,
          " sampled connected words");
}
