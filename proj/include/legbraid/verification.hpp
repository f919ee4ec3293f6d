#pragma once

// Batch verification suites behind the `identities` and `grobner` CLI
// subcommands: symbolic matrix identities on sampled words, and the two
// ideal theorems at small strand counts.

#include <random>
#include <string>
#include <vector>

#include "legbraid/braid.hpp"

namespace legbraid {

BraidWord random_braid_word(int strands, int length, std::mt19937& rng);

struct CheckResult {
  std::string name;
  bool passed = false;
};

// Symbolic identity suite over words with q <= max_q:
// path matrix vs path enumeration, two-sided inverse, zero substitution,
// row-reduction factorization, abelianized determinant, triangular-inverse
// lemma, and the full matrix product identity.
std::vector<CheckResult> run_identity_suite(int max_q, int oracle_cases,
                                            unsigned seed);

// Ideal and Groebner-basis theorems for q = 1..max_q over Q and GF(2),
// under the default order and `random_orders` random diagonal-dominant
// orders, plus the initial-term structure up to q = max_q + 1.
std::vector<CheckResult> run_grobner_suite(int max_q, int random_orders,
                                           unsigned seed);

}  // namespace legbraid
