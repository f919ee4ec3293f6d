#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "legbraid/dga.hpp"
#include "legbraid/pathmatrix.hpp"
#include "legbraid/verification.hpp"

using namespace legbraid;

namespace {

// Independent brute-force oracle: generate every sequence over {1..n-1} up
// to the maximal admissible length and filter.
bool brute_admissible(const std::vector<int>& seq) {
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] != seq[b]) continue;
      bool ok = false;
      for (size_t m = a + 1; m < b; ++m) ok = ok || seq[m] > seq[a];
      if (!ok) return false;
    }
  return true;
}

std::vector<std::vector<int>> brute_sequences(int n) {
  std::vector<std::vector<int>> out;
  int max_len = (1 << (n - 1)) - 1;
  for (int len = 0; len <= max_len; ++len) {
    long long total = 1;
    for (int i = 0; i < len; ++i) total *= (n - 1);
    for (long long code = 0; code < total; ++code) {
      std::vector<int> seq(len);
      long long c = code;
      for (int i = len - 1; i >= 0; --i) {
        seq[i] = int(c % (n - 1)) + 1;
        c /= (n - 1);
      }
      if (brute_admissible(seq)) out.push_back(std::move(seq));
    }
  }
  return out;
}

const BraidWord kTrefoil = parse_braid_word("s1^3");

}  // namespace

TEST_CASE("admissible sequence predicate") {
  CHECK(is_admissible({}, 1));
  CHECK(is_admissible({1, 2, 1}, 3));
  CHECK_FALSE(is_admissible({1, 1}, 3));
  CHECK_FALSE(is_admissible({2, 1, 2}, 3));
  CHECK(is_admissible({1, 3, 1}, 4));
  CHECK_FALSE(is_admissible({3}, 3));  // entries must stay below n
}

TEST_CASE("admissible sequences for small n") {
  CHECK(admissible_sequences(1) == std::vector<std::vector<int>>{{}});
  CHECK(admissible_sequences(2) == std::vector<std::vector<int>>{{}, {1}});
  CHECK(admissible_sequences(3) ==
        std::vector<std::vector<int>>{
            {}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}});
}

TEST_CASE("admissible sequence counts and brute-force agreement") {
  CHECK(admissible_sequences(4).size() == 42);
  CHECK(admissible_sequences(5).size() == 1806);
  // |D_{n+1}| = |D_n| (|D_n| + 1)
  CHECK(1806 == 42 * 43);

  for (int n = 1; n <= 4; ++n) {
    auto fast = admissible_sequences(n);
    auto brute = brute_sequences(n);
    std::sort(fast.begin(), fast.end());
    std::sort(brute.begin(), brute.end());
    CHECK(fast == brute);
  }

  CHECK_THROWS_AS(admissible_sequences(6), std::invalid_argument);
  CHECK_THROWS_AS(admissible_sequences(0), std::invalid_argument);
}

TEST_CASE("M polynomials") {
  for (int q = 1; q <= 4; ++q)
    for (int j = 1; j <= q; ++j)
      CHECK(polynomial_M(1, j, q) ==
            NcPoly::variable(Ring::Z, var_B(1, j)));

  NcPoly m22 = polynomial_M(2, 2, 3);
  NcPoly expected = NcPoly::variable(Ring::Z, var_B(2, 2)) +
                    NcPoly::variable(Ring::Z, var_B(2, 1)) *
                        NcPoly::variable(Ring::Z, var_B(1, 2));
  CHECK(m22 == expected);
}

TEST_CASE("recurrences agree with direct enumeration up to five strands") {
  for (int q = 1; q <= 5; ++q) {
    for (int i = 1; i <= q; ++i) {
      for (int j = 1; j <= q; ++j) {
        CHECK(polynomial_M(i, j, q) == polynomial_M_direct(i, j, q));
        if (i < j) {
          CHECK(polynomial_C(i, j, q) == polynomial_C_direct(i, j, q));
        }
        if (i > j) {
          AdmissibleSums sums(generic_symbol_matrix(q, Ring::Z));
          CHECK(sums.C_lower(i, j) == polynomial_C_lower_direct(i, j, q));
        }
      }
      CHECK(polynomial_C(i, i, q) == polynomial_C_direct(i, i, q));
    }
  }
}

TEST_CASE("C vs M identities") {
  for (int q = 2; q <= 5; ++q) {
    for (int i = 2; i <= q; ++i)
      CHECK(polynomial_C(i - 1, i, q) == polynomial_M(i - 1, i, q));
    for (int n = 1; n <= q; ++n)
      CHECK(polynomial_C(n, n, q) == polynomial_M(n, n, q));
  }
  CHECK_THROWS_AS(polynomial_C(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(polynomial_M(1, 1, 6), std::invalid_argument);
}

TEST_CASE("trefoil diagonal C values on the path matrix") {
  AdmissibleSums sums(path_matrix(kTrefoil, Ring::Z2));
  CHECK(sums.C(1, 1) == parse_nc_poly("b1 + b3 + b1b2b3", Ring::Z2));
  // C(2,2) = B22 + B21 B12 evaluated on the path matrix.
  NcPoly expected = parse_nc_poly("b2", Ring::Z2) +
                    parse_nc_poly("1 + b2b3", Ring::Z2) *
                        parse_nc_poly("1 + b1b2", Ring::Z2);
  CHECK(sums.C(2, 2) == expected);
}

TEST_CASE("generic C substituted by path entries matches direct evaluation") {
  BraidWord b = parse_braid_word("1 2 1");
  NcMatrix pm = path_matrix(b, Ring::Z2);
  AdmissibleSums direct(pm);
  for (int n = 1; n <= b.strands; ++n) {
    NcPoly generic = polynomial_C(n, n, b.strands, Ring::Z2);
    std::map<VarId, NcPoly> images;
    for (int i = 1; i <= b.strands; ++i)
      for (int j = 1; j <= b.strands; ++j)
        images.emplace(var_B(i, j), pm.at(i, j));
    CHECK(nc_substitute(generic, images) == direct.C(n, n));
  }
}

TEST_CASE("differential of the trefoil") {
  std::vector<NcPoly> diff = differential(kTrefoil);
  REQUIRE(diff.size() == 2);
  CHECK(diff[0] == parse_nc_poly("1 + b1 + b3 + b1b2b3", Ring::Z2));
  CHECK(diff[1] == parse_nc_poly("b2 + b1b2 + b2b3 + b2b3b1b2", Ring::Z2));
}

TEST_CASE("differential of the empty word on one strand vanishes") {
  BraidWord unknot;
  unknot.strands = 1;
  std::vector<NcPoly> diff = differential(unknot);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].is_zero());
}

TEST_CASE("differential entries use only crossing labels") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> qd(2, 4), wd(0, 8);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    for (const NcPoly& da : differential(b))
      for (VarId v : da.variables()) {
        CHECK_FALSE(is_generic_var(v));
        CHECK(crossing_index(v) >= 1);
        CHECK(crossing_index(v) <= b.length());
      }
  }
  CHECK_THROWS_AS(differential(parse_braid_word("s1^20")),
                  std::invalid_argument);
}

TEST_CASE("differential at the zero assignment tracks the permutation") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> qd(2, 4), wd(0, 8);
    BraidWord b = random_braid_word(qd(rng), wd(rng), rng);
    Permutation pi = underlying_permutation(b);
    std::vector<NcPoly> diff = differential(b);
    std::map<VarId, long long> zeros;
    for (int k = 1; k <= b.length(); ++k) zeros[var_b(k)] = 0;

    for (int n = 1; n <= b.strands; ++n) {
      // Independent count: admissible sequences that the permutation matrix
      // turns into closed chains n -> i1 -> ... -> n.
      long long chains = 0;
      for (const auto& seq : admissible_sequences(n)) {
        int prev = n;
        bool match = true;
        for (int s : seq) {
          if (pi.of(prev) != s) match = false;
          prev = s;
        }
        if (pi.of(prev) != n) match = false;
        if (match) ++chains;
      }
      CHECK(nc_evaluate(diff[n - 1], zeros) == (1 + chains) % 2);
    }
  }
}

TEST_CASE("triangular inverse identity") {
  for (int q = 1; q <= 4; ++q) CHECK(verify_triangular_inverse(q));
}

TEST_CASE("matrix product identity") {
  for (int q = 1; q <= 4; ++q) CHECK(verify_mmb(q));

  // Spot check of the two-strand diagonal entry: -1 - B21 B12.
  AdmissibleSums sums(generic_symbol_matrix(2, Ring::Z));
  NcMatrix left(2, Ring::Z), right(2, Ring::Z);
  left.at(1, 1) = NcPoly::constant(Ring::Z, -1);
  left.at(2, 1) = sums.M(2, 1);
  left.at(2, 2) = NcPoly::constant(Ring::Z, -1);
  right.at(1, 1) = NcPoly::constant(Ring::Z, 1);
  right.at(1, 2) = -sums.M(1, 2);
  right.at(2, 2) = NcPoly::constant(Ring::Z, 1);
  NcMatrix prod = left * right;
  CHECK(prod.at(2, 2) == parse_nc_poly("-1 - B[2,1]B[1,2]", Ring::Z));
}
