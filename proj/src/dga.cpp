#include "legbraid/dga.hpp"

#include <stdexcept>

#include "legbraid/pathmatrix.hpp"

namespace legbraid {

bool is_admissible(const std::vector<int>& seq, int n) {
  for (int v : seq)
    if (v < 1 || v > n - 1) return false;
  for (size_t a = 0; a < seq.size(); ++a) {
    for (size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] != seq[b]) continue;
      bool separated = false;
      for (size_t m = a + 1; m < b; ++m)
        if (seq[m] > seq[a]) separated = true;
      if (!separated) return false;
    }
  }
  return true;
}

namespace {

// A sequence stays admissible under appending l iff, scanning backwards,
// some entry larger than l appears before any earlier l does.
bool can_append(const std::vector<int>& seq, int l) {
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it > l) return true;
    if (*it == l) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> admissible_sequences(int n) {
  if (n < 1) throw std::invalid_argument("admissible_sequences: n must be >= 1");
  if (n > 5)
    throw std::invalid_argument(
        "admissible_sequences: enumeration guarded at n <= 5");
  std::vector<std::vector<int>> all{{}};
  std::vector<std::vector<int>> layer{{}};
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& seq : layer) {
      for (int l = 1; l <= n - 1; ++l) {
        if (!can_append(seq, l)) continue;
        std::vector<int> ext = seq;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

AdmissibleSums::AdmissibleSums(NcMatrix base)
    : base_(std::move(base)),
      m_(size_t(base_.size() + 1) * (base_.size() + 1), NcPoly(base_.ring())),
      c_(m_.size(), NcPoly(base_.ring())),
      cl_(m_.size(), NcPoly(base_.ring())),
      m_done_(m_.size(), 0),
      c_done_(m_.size(), 0),
      cl_done_(m_.size(), 0) {}

const NcPoly& AdmissibleSums::M(int i, int j) {
  int q = base_.size();
  if (i < 1 || j < 1 || i > q || j > q)
    throw std::invalid_argument("AdmissibleSums::M: index out of range");
  size_t idx = size_t(i) * (q + 1) + j;
  if (!m_done_[idx]) {
    NcPoly sum = base_.at(i, j);
    for (int k = 1; k < std::min(i, j); ++k) sum += M(i, k) * M(k, j);
    m_[idx] = std::move(sum);
    m_done_[idx] = 1;
  }
  return m_[idx];
}

const NcPoly& AdmissibleSums::C(int i, int j) {
  int q = base_.size();
  if (i < 1 || j < 1 || i > q || j > q || i > j)
    throw std::invalid_argument("AdmissibleSums::C: requires i <= j in range");
  size_t idx = size_t(i) * (q + 1) + j;
  if (!c_done_[idx]) {
    // Group by the highest element k of the admissible sequence.
    NcPoly sum = M(i, j);
    if (i < j)
      for (int k = i + 1; k < j; ++k) sum += C(i, k) * M(k, j);
    c_[idx] = std::move(sum);
    c_done_[idx] = 1;
  }
  return c_[idx];
}

const NcPoly& AdmissibleSums::C_lower(int i, int j) {
  int q = base_.size();
  if (i < 1 || j < 1 || i > q || j > q || i <= j)
    throw std::invalid_argument("AdmissibleSums::C_lower: requires i > j in range");
  size_t idx = size_t(i) * (q + 1) + j;
  if (!cl_done_[idx]) {
    NcPoly sum = M(i, j);
    for (int k = j + 1; k < i; ++k) sum += M(i, k) * C_lower(k, j);
    cl_[idx] = std::move(sum);
    cl_done_[idx] = 1;
  }
  return cl_[idx];
}

NcMatrix generic_symbol_matrix(int q, Ring ring) {
  NcMatrix m(q, ring);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      m.at(i, j) = NcPoly::variable(ring, var_B(i, j));
  return m;
}

namespace {

void check_generic_guard(int q) {
  if (q < 1) throw std::invalid_argument("strand count must be >= 1");
  if (q > 5)
    throw std::invalid_argument("generic-symbol computations guarded at q <= 5");
}

NcPoly sequence_product(const NcMatrix& base, int from,
                        const std::vector<int>& seq, int to) {
  int prev = from;
  NcPoly prod = NcPoly::constant(base.ring(), 1);
  for (int s : seq) {
    prod = prod * base.at(prev, s);
    prev = s;
  }
  return prod * base.at(prev, to);
}

}  // namespace

NcPoly polynomial_M(int i, int j, int q, Ring ring) {
  check_generic_guard(q);
  AdmissibleSums sums(generic_symbol_matrix(q, ring));
  return sums.M(i, j);
}

NcPoly polynomial_C(int i, int j, int q, Ring ring) {
  check_generic_guard(q);
  if (i > j)
    throw std::invalid_argument("polynomial_C: requires i < j or i == j");
  AdmissibleSums sums(generic_symbol_matrix(q, ring));
  return sums.C(i, j);
}

NcPoly polynomial_M_direct(int i, int j, int q, Ring ring) {
  check_generic_guard(q);
  NcMatrix base = generic_symbol_matrix(q, ring);
  NcPoly sum(ring);
  for (const auto& seq : admissible_sequences(std::min(i, j)))
    sum += sequence_product(base, i, seq, j);
  return sum;
}

NcPoly polynomial_C_direct(int i, int j, int q, Ring ring) {
  check_generic_guard(q);
  if (i > j)
    throw std::invalid_argument("polynomial_C_direct: requires i < j or i == j");
  NcMatrix base = generic_symbol_matrix(q, ring);
  NcPoly sum(ring);
  if (i == j) {
    for (const auto& seq : admissible_sequences(i))
      sum += sequence_product(base, i, seq, i);
  } else {
    // Whole sequences in D_j whose first entry is i.
    for (const auto& seq : admissible_sequences(j)) {
      if (seq.empty() || seq[0] != i) continue;
      std::vector<int> rest(seq.begin() + 1, seq.end());
      sum += sequence_product(base, i, rest, j);
    }
  }
  return sum;
}

NcPoly polynomial_C_lower_direct(int i, int j, int q, Ring ring) {
  check_generic_guard(q);
  if (i <= j)
    throw std::invalid_argument("polynomial_C_lower_direct: requires i > j");
  NcMatrix base = generic_symbol_matrix(q, ring);
  NcPoly sum(ring);
  for (const auto& seq : admissible_sequences(i)) {
    if (seq.empty() || seq.back() != j) continue;
    std::vector<int> rest(seq.begin(), seq.end() - 1);
    sum += sequence_product(base, i, rest, j);
  }
  return sum;
}

std::vector<NcPoly> differential(const BraidWord& b, int max_w) {
  if (b.length() > max_w)
    throw std::invalid_argument("differential: word length exceeds guard");
  AdmissibleSums sums(path_matrix(b, Ring::Z2));
  std::vector<NcPoly> out;
  for (int n = 1; n <= b.strands; ++n)
    out.push_back(NcPoly::constant(Ring::Z2, 1) + sums.C(n, n));
  return out;
}

bool verify_triangular_inverse(int q) {
  check_generic_guard(q);
  AdmissibleSums sums(generic_symbol_matrix(q, Ring::Z));
  NcMatrix upper_c = NcMatrix::identity(q, Ring::Z);
  NcMatrix upper_m = NcMatrix::identity(q, Ring::Z);
  NcMatrix lower_c = NcMatrix::identity(q, Ring::Z);
  NcMatrix lower_m = NcMatrix::identity(q, Ring::Z);
  for (int i = 1; i <= q; ++i) {
    for (int j = i + 1; j <= q; ++j) {
      upper_c.at(i, j) = sums.C(i, j);
      upper_m.at(i, j) = -sums.M(i, j);
      lower_c.at(j, i) = sums.C_lower(j, i);
      lower_m.at(j, i) = -sums.M(j, i);
    }
  }
  NcMatrix id = NcMatrix::identity(q, Ring::Z);
  return upper_c * upper_m == id && upper_m * upper_c == id &&
         lower_c * lower_m == id && lower_m * lower_c == id;
}

bool verify_mmb(int q) {
  check_generic_guard(q);
  AdmissibleSums sums(generic_symbol_matrix(q, Ring::Z));
  const NcMatrix& base = sums.base();
  for (int n = 1; n <= q; ++n) {
    NcMatrix left(n, Ring::Z), right(n, Ring::Z), expected(n, Ring::Z);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) {
          left.at(i, j) = NcPoly::constant(Ring::Z, -1);
          right.at(i, j) = NcPoly::constant(Ring::Z, 1);
          expected.at(i, j) =
              base.at(i, i) - sums.C(i, i) - NcPoly::constant(Ring::Z, 1);
        } else if (i > j) {
          left.at(i, j) = sums.M(i, j);
          expected.at(i, j) = base.at(i, j);
        } else {
          right.at(i, j) = -sums.M(i, j);
          expected.at(i, j) = base.at(i, j);
        }
      }
    }
    if (!(left * right == expected)) return false;
  }
  return true;
}

}  // namespace legbraid
