#pragma once

// Deciding and enumerating augmentations via the principal-minor test over
// GF(2): a crossing subset works iff Gaussian elimination on the evaluated
// path matrix completes without row permutation.  The determinant of a path
// matrix is always 1, so only the first q-1 pivots need checking.  The
// enumeration kernel is OpenMP-parallel over contiguous subset ranges; a
// plain serial reference is kept alongside for testing and benchmarking.

#include <cstdint>
#include <optional>
#include <vector>

#include "legbraid/braid.hpp"

namespace legbraid {

// A subset of the w crossings of a word; bit k-1 corresponds to crossing k.
struct CrossingSet {
  int width = 0;
  std::uint64_t bits = 0;

  static CrossingSet empty(int width) { return {width, 0}; }
  static CrossingSet all(int width);
  static CrossingSet from_indices(int width, const std::vector<int>& indices);

  bool contains(int k) const { return (bits >> (k - 1)) & 1; }
  CrossingSet& insert(int k) {
    bits |= std::uint64_t(1) << (k - 1);
    return *this;
  }
  int count() const;
  std::vector<int> indices() const;

  bool operator==(const CrossingSet&) const = default;
};

// Subsets are enumerated in lexicographic order of the bit vector
// (b_1, ..., b_w); these convert between that order and the stored mask.
std::uint64_t crossing_set_rank(const CrossingSet& s);
CrossingSet crossing_set_from_rank(int width, std::uint64_t rank);

struct BitMatrix {
  int n = 0;
  std::vector<std::uint32_t> rows;  // row i-1, bit j-1

  static BitMatrix identity(int n);
  bool get(int i, int j) const { return (rows[i - 1] >> (j - 1)) & 1; }
  void set(int i, int j, bool v);
  bool operator==(const BitMatrix&) const = default;
};

BitMatrix bit_matrix_mul(const BitMatrix& a, const BitMatrix& b);
bool is_unit_upper_triangular(const BitMatrix& m);

// The 0-1 matrix obtained by sending crossings in Y to 1 and the rest to 0,
// computed by multiplying evaluated elementary blocks; no symbolic work.
BitMatrix evaluate_matrix_gf2(const BraidWord& b, const CrossingSet& y);

struct AugmentationCheck {
  bool is_augmentation = false;
  // On success, the accumulated row-operation matrix: unit lower triangular
  // with the plat-diagram multipliers c_{i,j} below the diagonal, satisfying
  // multipliers * evaluate_matrix_gf2(b, y) = unit upper triangular.
  std::optional<BitMatrix> multipliers;
};

AugmentationCheck is_augmentation(const BraidWord& b, const CrossingSet& y);

// Independent oracle: evaluates the symbolic differential entries at the
// characteristic assignment of y and requires them all to vanish.
bool augmentation_oracle_direct(const BraidWord& b, const CrossingSet& y,
                                int max_w = 14);

// The oracle decided for every subset at once (bit v of the result = verdict
// on the subset with rank v in enumeration order).  Guarded like the
// symbolic differential.
std::vector<bool> augmentation_oracle_all_subsets(const BraidWord& b,
                                                  int max_w = 14);

inline constexpr std::uint64_t kDefaultSubsetGuard = std::uint64_t(1) << 26;

struct AugmentationEnumeration {
  std::uint64_t count = 0;
  std::vector<CrossingSet> list;  // filled only when requested
};

// Exact count (and, when `collect` is set, the enumeration-ordered list) of
// augmentations.  The subset space is split into `jobs` contiguous ranges
// processed in parallel; the result does not depend on `jobs`.
AugmentationEnumeration enumerate_augmentations(
    const BraidWord& b, bool collect = false, int jobs = 1,
    std::uint64_t max_subsets = kDefaultSubsetGuard);

inline std::uint64_t count_augmentations(
    const BraidWord& b, int jobs = 1,
    std::uint64_t max_subsets = kDefaultSubsetGuard) {
  return enumerate_augmentations(b, false, jobs, max_subsets).count;
}

// Serial reference: one subset at a time through the public matrix path.
std::uint64_t count_augmentations_serial(
    const BraidWord& b, std::uint64_t max_subsets = kDefaultSubsetGuard);

// The augmentation count predicted by the ruling census:
// sum over rulings of 2^((theta + w - q) / 2).
std::uint64_t count_via_rulings(const BraidWord& b);

}  // namespace legbraid
