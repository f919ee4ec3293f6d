#pragma once

// Path matrices of positive braid words: the product-of-elementary-blocks
// construction, the independent path-enumeration oracle, the inverse matrix,
// and the row-reduction factorization.

#include <span>
#include <utility>
#include <vector>

#include "legbraid/braid.hpp"
#include "legbraid/ncpoly.hpp"

namespace legbraid {

// Identity except the 2x2 block at rows/cols i, i+1, which is
// [[label, 1], [1, 0]].
NcMatrix elementary_matrix(int i, VarId label, int q, Ring ring = Ring::Z2);

// Inverse block [[0, 1], [1, label]] at the same position.
NcMatrix inverse_elementary_matrix(int i, VarId label, int q,
                                   Ring ring = Ring::Z2);

NcMatrix permutation_matrix_nc(const Permutation& p, Ring ring = Ring::Z2);

// Product of elementary matrices for the letters left to right; crossing k
// uses the variable b_{k+label_offset}.  The empty word gives the identity.
NcMatrix path_matrix(const BraidWord& b, Ring ring = Ring::Z2,
                     int label_offset = 0);

// Same product with an explicit label per crossing.
NcMatrix path_matrix_labeled(const BraidWord& b, std::span<const VarId> labels,
                             Ring ring = Ring::Z2);

// Independent oracle: entry (i,j) sums, over monotone left-to-right paths
// from left endpoint i to right endpoint j that turn only at up-facing
// quadrants, the product of the turned-at crossing labels.  Implemented as
// a sweep that carries explicit label words per strand position; no matrix
// products.
NcMatrix path_matrix_by_paths(const BraidWord& b, Ring ring = Ring::Z2);

// Product, in reversed letter order, of the inverse elementary blocks.
// Equals the down-turning right-to-left path sum.
NcMatrix inverse_path_matrix(const BraidWord& b, Ring ring = Ring::Z2);

// B = A_1 A_2 ... A_w P_pi, where A_k is the identity plus a single b_k in
// position (pi_{k-1}^{-1}(i_k), pi_{k-1}^{-1}(i_k + 1)).  Over Z_2 each A_k
// is an involution, so A_w ... A_1 B = P_pi is the corresponding row
// reduction.
struct RowReductionFactors {
  std::vector<NcMatrix> factors;
  NcMatrix permutation_part;
};
RowReductionFactors row_reduction_factors(const BraidWord& b,
                                          Ring ring = Ring::Z2);

// Builds the reduced word for p, computes its path matrix, and verifies the
// permutation-braid pattern: 1s of the permutation matrix, a single crossing
// label exactly at each inversion position (p(i) > j and p^{-1}(j) > i),
// zeros elsewhere, with all w labels distinct.
bool permutation_braid_pattern_check(const Permutation& p);

}  // namespace legbraid
