#pragma once

// Multivariate division and Buchberger's algorithm over a field, plus the
// verification routines for the two ideal theorems: the ideal of the
// corner-minor polynomials agrees with the ideal of the 1 + C(n,n), and the
// latter form its reduced Groebner basis under every diagonal-dominant
// lexicographic order.

#include <random>
#include <vector>

#include "legbraid/commpoly.hpp"

namespace legbraid {

// Remainder of multivariate division of f by G; no term of the result is
// divisible by any leading monomial of G.  When `cofactors` is non-null it
// receives one polynomial per element of G with
// f = sum_i cofactors[i] * G[i] + remainder.
template <typename K>
CommPoly<K> normal_form(const CommPoly<K>& f,
                        const std::vector<CommPoly<K>>& basis,
                        const TermOrder& order,
                        std::vector<CommPoly<K>>* cofactors = nullptr);

// Reduced Groebner basis: monic generators, every S-polynomial reduces to
// zero, and no term of any element is divisible by another's leading
// monomial.  Output sorted by leading monomial, largest first.
template <typename K>
std::vector<CommPoly<K>> buchberger(std::vector<CommPoly<K>> gens,
                                    const TermOrder& order);

// Upper-left n x n minor of the generic symbol matrix, minus (-1)^n.
template <typename K>
CommPoly<K> corner_minor_generator(int n);

// 1 + C(n,n) as a commutative polynomial in the generic symbols.
template <typename K>
CommPoly<K> diagonal_c_generator(int n, int q);

// A uniformly random variable order subject to diagonal dominance.
TermOrder random_diagonal_dominant_order(int q, std::mt19937& rng);

enum class CoeffField { Q, F2 };

// Both containments between the minor ideal and the 1 + C(n,n) ideal,
// checked with normal forms against the two Groebner bases.
bool verify_ideal_theorem(int q, const TermOrder& order, CoeffField field,
                          bool allow_q4 = false);

// The reduced Groebner basis of the minor ideal equals {1 + C(n,n)}, and
// each 1 + C(n,n) has leading monomial B[n,n] with no other term containing
// a diagonal variable.
bool verify_grobner_theorem(int q, const TermOrder& order, CoeffField field);

// The leading-monomial structure of 1 + C(n,n) alone (cheap; works to q = 5).
bool verify_initial_term_structure(int q, const TermOrder& order);

}  // namespace legbraid
