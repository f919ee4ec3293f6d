#pragma once

// Admissible sequences, the polynomial families M and C built from them,
// the differential of the crossing algebra, and symbolic verification of
// the triangular-inverse and matrix product identities.

#include <vector>

#include "legbraid/braid.hpp"
#include "legbraid/ncpoly.hpp"

namespace legbraid {

// A sequence of positive integers is admissible when between any two equal
// entries there is a strictly larger one.  D_n is the set of admissible
// sequences over {1, ..., n-1}.
bool is_admissible(const std::vector<int>& seq, int n);

// All of D_n, enumerated by length, then lexicographically.  |D_n| satisfies
// |D_{n+1}| = |D_n| (|D_n| + 1), so the enumeration is guarded at n <= 5
// (|D_5| = 1806).
std::vector<std::vector<int>> admissible_sequences(int n);

// Sums over admissible sequences of ordered products of the entries of a
// base matrix:
//   M(i,j) sums over D_{min(i,j)} the products E(i,s1) E(s1,s2) ... E(sc,j),
//   C(i,j) for i < j restricts D_j to sequences whose first entry is i and
//   C(n,n) = M(n,n); C_lower is the mirror family for the lower-triangular
//   identity (sequences in D_i with last entry j).
// Computed by the recurrences that group terms by the highest element;
// the direct enumerations below serve as oracles.
class AdmissibleSums {
 public:
  explicit AdmissibleSums(NcMatrix base);

  int size() const { return base_.size(); }
  const NcMatrix& base() const { return base_; }

  const NcPoly& M(int i, int j);
  const NcPoly& C(int i, int j);        // requires i < j or i == j
  const NcPoly& C_lower(int i, int j);  // requires i > j

 private:
  NcMatrix base_;
  std::vector<NcPoly> m_, c_, cl_;
  std::vector<char> m_done_, c_done_, cl_done_;
};

// The generic q x q matrix of independent symbols B[i,j].
NcMatrix generic_symbol_matrix(int q, Ring ring = Ring::Z);

// Generic-symbol versions (guarded at q <= 5).
NcPoly polynomial_M(int i, int j, int q, Ring ring = Ring::Z);
NcPoly polynomial_C(int i, int j, int q, Ring ring = Ring::Z);

// Direct D_n-enumeration oracles for the recurrences.
NcPoly polynomial_M_direct(int i, int j, int q, Ring ring = Ring::Z);
NcPoly polynomial_C_direct(int i, int j, int q, Ring ring = Ring::Z);
NcPoly polynomial_C_lower_direct(int i, int j, int q, Ring ring = Ring::Z);

// The differential on the index-1 generators: entry n is 1 + C(n,n)
// evaluated on the path matrix of b, a polynomial over Z_2 in the crossing
// labels.  The crossing generators themselves have zero differential.
// Guarded on the word length because entries grow quickly.
std::vector<NcPoly> differential(const BraidWord& b, int max_w = 14);

// Symbolic check that the unit-triangular matrices built from C and -M are
// two-sided inverses, in both the upper and the lower variant (over Z with
// generic symbols; guarded at q <= 5).
bool verify_triangular_inverse(int q);

// Symbolic check of the full matrix identity whose diagonal entries are
// B[i,i] - C(i,i) - 1 and whose off-diagonal entries recover B[i,j]
// (over Z with generic symbols; guarded at q <= 5).
bool verify_mmb(int q);

}  // namespace legbraid
