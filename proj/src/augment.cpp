#include "legbraid/augment.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "legbraid/dga.hpp"
#include "legbraid/pathmatrix.hpp"
#include "legbraid/ruling.hpp"

namespace legbraid {

namespace {

constexpr int kMaxKernelStrands = 24;

void check_widths(const BraidWord& b, const CrossingSet& y) {
  if (y.width != b.length())
    throw std::invalid_argument("crossing set length does not match the word");
}

}  // namespace

CrossingSet CrossingSet::all(int width) {
  if (width < 0 || width > 63)
    throw std::invalid_argument("crossing set width out of range");
  return {width, width == 0 ? 0 : (std::uint64_t(1) << width) - 1};
}

CrossingSet CrossingSet::from_indices(int width,
                                      const std::vector<int>& indices) {
  if (width < 0 || width > 63)
    throw std::invalid_argument("crossing set width out of range");
  CrossingSet s{width, 0};
  for (int k : indices) {
    if (k < 1 || k > width)
      throw std::invalid_argument("crossing index out of range");
    s.insert(k);
  }
  return s;
}

int CrossingSet::count() const { return std::popcount(bits); }

std::vector<int> CrossingSet::indices() const {
  std::vector<int> out;
  for (int k = 1; k <= width; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

std::uint64_t crossing_set_rank(const CrossingSet& s) {
  std::uint64_t rank = 0;
  for (int k = 1; k <= s.width; ++k)
    if (s.contains(k)) rank |= std::uint64_t(1) << (s.width - k);
  return rank;
}

CrossingSet crossing_set_from_rank(int width, std::uint64_t rank) {
  CrossingSet s{width, 0};
  for (int k = 1; k <= width; ++k)
    if ((rank >> (width - k)) & 1) s.insert(k);
  return s;
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m{n, std::vector<std::uint32_t>(n, 0)};
  for (int i = 0; i < n; ++i) m.rows[i] = std::uint32_t(1) << i;
  return m;
}

void BitMatrix::set(int i, int j, bool v) {
  if (v)
    rows[i - 1] |= std::uint32_t(1) << (j - 1);
  else
    rows[i - 1] &= ~(std::uint32_t(1) << (j - 1));
}

BitMatrix bit_matrix_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("bit matrix size mismatch");
  BitMatrix r{a.n, std::vector<std::uint32_t>(a.n, 0)};
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k)
      if ((a.rows[i] >> k) & 1) r.rows[i] ^= b.rows[k];
  return r;
}

bool is_unit_upper_triangular(const BitMatrix& m) {
  for (int i = 1; i <= m.n; ++i) {
    if (!m.get(i, i)) return false;
    for (int j = 1; j < i; ++j)
      if (m.get(i, j)) return false;
  }
  return true;
}

BitMatrix evaluate_matrix_gf2(const BraidWord& b, const CrossingSet& y) {
  check_widths(b, y);
  if (b.strands > kMaxKernelStrands)
    throw std::invalid_argument("GF(2) evaluation limited to 24 strands");
  BitMatrix m = BitMatrix::identity(b.strands);
  // Left-multiplying by evaluated elementary blocks, rightmost letter first,
  // builds the product row by row.
  for (int k = b.length(); k >= 1; --k) {
    int i = b.letters[k - 1] - 1;
    std::uint32_t top = m.rows[i], bottom = m.rows[i + 1];
    m.rows[i] = (y.contains(k) ? top : 0u) ^ bottom;
    m.rows[i + 1] = top;
  }
  return m;
}

namespace {

// Elimination without pivoting over GF(2): succeeds iff the first q-1
// leading principal minors are 1; the q-th is vacuous for path matrices.
// When `ops` is non-null it accumulates the applied row operations.
bool eliminate(std::uint32_t* rows, int q, std::uint32_t* ops) {
  for (int c = 0; c < q - 1; ++c) {
    if (!((rows[c] >> c) & 1)) return false;
    for (int r = c + 1; r < q; ++r) {
      if ((rows[r] >> c) & 1) {
        rows[r] ^= rows[c];
        if (ops) ops[r] ^= ops[c];
      }
    }
  }
  return true;
}

}  // namespace

AugmentationCheck is_augmentation(const BraidWord& b, const CrossingSet& y) {
  BitMatrix m = evaluate_matrix_gf2(b, y);
  BitMatrix ops = BitMatrix::identity(b.strands);
  if (!eliminate(m.rows.data(), b.strands, ops.rows.data())) return {false, {}};
  return {true, std::move(ops)};
}

bool augmentation_oracle_direct(const BraidWord& b, const CrossingSet& y,
                                int max_w) {
  check_widths(b, y);
  std::map<VarId, long long> assignment;
  for (int k = 1; k <= b.length(); ++k)
    assignment[var_b(k)] = y.contains(k) ? 1 : 0;
  for (const NcPoly& da : differential(b, max_w))
    if (nc_evaluate(da, assignment) != 0) return false;
  return true;
}

std::vector<bool> augmentation_oracle_all_subsets(const BraidWord& b,
                                                  int max_w) {
  int w = b.length();
  if (w > 25)
    throw std::invalid_argument("oracle subset sweep guarded at w <= 25");
  // A monomial evaluates to 1 exactly when its crossing set is contained in
  // the evaluated subset, so each differential entry reduces to a list of
  // monomial masks (in enumeration-order bit layout).
  std::vector<std::vector<std::uint32_t>> masks(b.strands);
  std::vector<NcPoly> diff = differential(b, max_w);
  for (int n = 0; n < b.strands; ++n) {
    for (const auto& [word, coeff] : diff[n].terms()) {
      (void)coeff;
      std::uint32_t mask = 0;
      for (VarId v : word) mask |= std::uint32_t(1) << (w - crossing_index(v));
      masks[n].push_back(mask);
    }
  }
  std::uint64_t total = std::uint64_t(1) << w;
  std::vector<bool> verdict(total);
  for (std::uint64_t sub = 0; sub < total; ++sub) {
    bool ok = true;
    for (int n = 0; n < b.strands && ok; ++n) {
      unsigned parity = 0;
      for (std::uint32_t mask : masks[n])
        parity ^= unsigned((mask & sub) == mask);
      ok = parity == 0;
    }
    verdict[sub] = ok;
  }
  return verdict;
}

namespace {

struct RangeResult {
  std::uint64_t count = 0;
  std::vector<CrossingSet> list;
};

RangeResult scan_range(const BraidWord& b, std::uint64_t lo, std::uint64_t hi,
                       bool collect) {
  RangeResult out;
  int w = b.length();
  int q = b.strands;
  std::uint32_t rows[kMaxKernelStrands];
  for (std::uint64_t sub = lo; sub < hi; ++sub) {
    for (int i = 0; i < q; ++i) rows[i] = std::uint32_t(1) << i;
    for (int k = w; k >= 1; --k) {
      int i = b.letters[k - 1] - 1;
      std::uint32_t top = rows[i], bottom = rows[i + 1];
      rows[i] = (((sub >> (w - k)) & 1) ? top : 0u) ^ bottom;
      rows[i + 1] = top;
    }
    if (eliminate(rows, q, nullptr)) {
      ++out.count;
      if (collect) out.list.push_back(crossing_set_from_rank(w, sub));
    }
  }
  return out;
}

}  // namespace

AugmentationEnumeration enumerate_augmentations(const BraidWord& b,
                                                bool collect, int jobs,
                                                std::uint64_t max_subsets) {
  int w = b.length();
  if (w > 62 || (std::uint64_t(1) << w) > max_subsets)
    throw std::invalid_argument("enumerate_augmentations: 2^w exceeds the subset guard");
  if (b.strands > kMaxKernelStrands)
    throw std::invalid_argument("enumerate_augmentations: too many strands");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");

  std::uint64_t total = std::uint64_t(1) << w;
  int ranges = int(std::min<std::uint64_t>(jobs, total));
  std::vector<RangeResult> partial(ranges);

  // The partition is fixed by `jobs` so results never depend on the thread
  // count; only the worker pool is capped.
  int threads = std::min(ranges, 64);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int r = 0; r < ranges; ++r) {
    std::uint64_t lo = total / ranges * r + std::min<std::uint64_t>(r, total % ranges);
    std::uint64_t hi = lo + total / ranges + (std::uint64_t(r) < total % ranges ? 1 : 0);
    partial[r] = scan_range(b, lo, hi, collect);
  }
  (void)threads;

  AugmentationEnumeration out;
  for (const RangeResult& p : partial) {
    out.count += p.count;
    out.list.insert(out.list.end(), p.list.begin(), p.list.end());
  }
  return out;
}

std::uint64_t count_augmentations_serial(const BraidWord& b,
                                         std::uint64_t max_subsets) {
  int w = b.length();
  if (w > 62 || (std::uint64_t(1) << w) > max_subsets)
    throw std::invalid_argument("count_augmentations_serial: 2^w exceeds the subset guard");
  std::uint64_t total = std::uint64_t(1) << w;
  std::uint64_t count = 0;
  for (std::uint64_t sub = 0; sub < total; ++sub)
    if (is_augmentation(b, crossing_set_from_rank(w, sub)).is_augmentation)
      ++count;
  return count;
}

std::uint64_t count_via_rulings(const BraidWord& b) {
  RulingPolynomial rp = ruling_polynomial(b);
  int chi_star = b.length() - b.strands;
  std::uint64_t total = 0;
  for (const auto& [exponent, count] : rp.coeffs) {
    int theta = 1 - exponent;
    int twice_log = theta + chi_star;
    if (twice_log < 0 || twice_log % 2 != 0)
      throw std::logic_error("count_via_rulings: theta parity violated");
    total += count << (twice_log / 2);
  }
  return total;
}

}  // namespace legbraid
