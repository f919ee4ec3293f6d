#pragma once

// Normal rulings of the closed-braid front, computed by a left-to-right
// sweep over the braid region.  The closing arcs are crossing-free, so the
// sweep state is just the pairing between braid slots and closing-arc
// depths; it starts and ends in the rainbow pairing, switches must be
// nested, and non-switches swap partners.  Every ruling has exactly q eyes
// (one per right cusp), so theta = q - |switches|.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legbraid/augment.hpp"
#include "legbraid/braid.hpp"

namespace legbraid {

// Laurent polynomial in z with nonnegative integer coefficients, exponents
// descending.  Negative exponents occur only for multi-component links.
struct RulingPolynomial {
  std::map<int, std::uint64_t, std::greater<int>> coeffs;

  std::uint64_t at(int exponent) const {
    auto it = coeffs.find(exponent);
    return it == coeffs.end() ? 0 : it->second;
  }
  std::uint64_t total() const;  // value at z = 1
  std::string to_string() const;
  bool operator==(const RulingPolynomial&) const = default;
};

// Accepts iff the sweep returns to the rainbow with every switch nested;
// on success returns theta = q - |switches|.
std::optional<int> is_ruling(const BraidWord& b, const CrossingSet& switches);

// All rulings with their theta values, in lexicographic order of the switch
// bit vector.  Depth-first search over the crossings, pruning states that
// cannot reach the rainbow with the remaining letters.
std::vector<std::pair<CrossingSet, int>> enumerate_rulings(const BraidWord& b);

// Exponent histogram of 1 - theta, computed by transfer-matrix dynamic
// programming over sweep states; enumerate_rulings is the brute-force
// cross-check.
RulingPolynomial ruling_polynomial(const BraidWord& b);

// Closed form for the (p,2) torus link: sum_k C(p-k, k) z^(p-1-2k).
// Its value at z = 1 is the p-th Fibonacci number (1, 2, 3, 5, ...).
RulingPolynomial torus2_closed_form(int p);

// Definitional audit of an accepted sweep: reconstructs the q eyes from the
// state history and re-checks the switch configurations with the generic
// non-interleaving test (nested or disjoint vertical intervals).
bool audit_ruling(const BraidWord& b, const CrossingSet& switches);

}  // namespace legbraid
