#include "legbraid/pathmatrix.hpp"

#include <stdexcept>

namespace legbraid {

NcMatrix elementary_matrix(int i, VarId label, int q, Ring ring) {
  if (i < 1 || i > q - 1)
    throw std::invalid_argument("elementary_matrix: generator index out of range");
  NcMatrix m = NcMatrix::identity(q, ring);
  m.at(i, i) = NcPoly::variable(ring, label);
  m.at(i, i + 1) = NcPoly::constant(ring, 1);
  m.at(i + 1, i) = NcPoly::constant(ring, 1);
  m.at(i + 1, i + 1) = NcPoly::zero(ring);
  return m;
}

NcMatrix inverse_elementary_matrix(int i, VarId label, int q, Ring ring) {
  if (i < 1 || i > q - 1)
    throw std::invalid_argument("elementary_matrix: generator index out of range");
  NcMatrix m = NcMatrix::identity(q, ring);
  m.at(i, i) = NcPoly::zero(ring);
  m.at(i, i + 1) = NcPoly::constant(ring, 1);
  m.at(i + 1, i) = NcPoly::constant(ring, 1);
  m.at(i + 1, i + 1) = NcPoly::variable(ring, label);
  return m;
}

NcMatrix permutation_matrix_nc(const Permutation& p, Ring ring) {
  NcMatrix m(p.size(), ring);
  for (int i = 1; i <= p.size(); ++i)
    m.at(i, p.of(i)) = NcPoly::constant(ring, 1);
  return m;
}

NcMatrix path_matrix_labeled(const BraidWord& b, std::span<const VarId> labels,
                             Ring ring) {
  if (int(labels.size()) != b.length())
    throw std::invalid_argument("path_matrix_labeled: label count mismatch");
  NcMatrix m = NcMatrix::identity(b.strands, ring);
  for (int k = 0; k < b.length(); ++k)
    m = m * elementary_matrix(b.letters[k], labels[k], b.strands, ring);
  return m;
}

NcMatrix path_matrix(const BraidWord& b, Ring ring, int label_offset) {
  std::vector<VarId> labels;
  for (int k = 1; k <= b.length(); ++k) labels.push_back(var_b(k + label_offset));
  return path_matrix_labeled(b, labels, ring);
}

NcMatrix path_matrix_by_paths(const BraidWord& b, Ring ring) {
  int q = b.strands;
  NcMatrix m(q, ring);
  for (int start = 1; start <= q; ++start) {
    // words[h-1]: the turn words of every partial path from `start` that is
    // currently at strand position h.
    std::vector<std::vector<Word>> words(q);
    words[start - 1].push_back({});
    for (int k = 0; k < b.length(); ++k) {
      int p = b.letters[k];
      std::vector<Word>& top = words[p - 1];
      std::vector<Word>& bottom = words[p];
      std::vector<Word> new_top;
      // A path meeting the crossing from position p may turn around the
      // up-facing quadrant (stay at p, collect the label) or pass through
      // to p+1; one arriving at p+1 must pass through to p.
      new_top.reserve(top.size() + bottom.size());
      for (Word w : top) {
        w.push_back(var_b(k + 1));
        new_top.push_back(std::move(w));
      }
      for (Word& w : bottom) new_top.push_back(std::move(w));
      bottom = std::move(top);
      top = std::move(new_top);
    }
    for (int end = 1; end <= q; ++end) {
      NcPoly sum(ring);
      for (const Word& w : words[end - 1]) sum.add_term(w, 1);
      m.at(start, end) = sum;
    }
  }
  return m;
}

NcMatrix inverse_path_matrix(const BraidWord& b, Ring ring) {
  NcMatrix m = NcMatrix::identity(b.strands, ring);
  for (int k = b.length(); k >= 1; --k)
    m = m * inverse_elementary_matrix(b.letters[k - 1], var_b(k), b.strands, ring);
  return m;
}

RowReductionFactors row_reduction_factors(const BraidWord& b, Ring ring) {
  RowReductionFactors out{{}, NcMatrix::identity(b.strands, ring)};
  for (int k = 1; k <= b.length(); ++k) {
    Permutation prev = underlying_permutation(b, k - 1);
    int i = b.letters[k - 1];
    NcMatrix a = NcMatrix::identity(b.strands, ring);
    a.at(prev.inverse_of(i), prev.inverse_of(i + 1)) =
        NcPoly::variable(ring, var_b(k));
    out.factors.push_back(std::move(a));
  }
  out.permutation_part = permutation_matrix_nc(underlying_permutation(b), ring);
  return out;
}

bool permutation_braid_pattern_check(const Permutation& p) {
  BraidWord word = reduced_permutation_word(p);
  NcMatrix m = path_matrix(word, Ring::Z2);
  int q = p.size();
  std::vector<char> label_seen(word.length() + 1, 0);
  long long labeled_positions = 0;
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      const NcPoly& e = m.at(i, j);
      if (j == p.of(i)) {
        if (!e.is_one()) return false;
        continue;
      }
      bool inversion = p.of(i) > j && p.inverse_of(j) > i;
      if (!inversion) {
        if (!e.is_zero()) return false;
        continue;
      }
      // A single crossing label must sit at each inversion position.
      if (e.terms().size() != 1) return false;
      const auto& [w, c] = *e.terms().begin();
      if (w.size() != 1 || c != 1) return false;
      int k = crossing_index(w[0]);
      if (k < 1 || k > word.length() || label_seen[k]) return false;
      label_seen[k] = 1;
      ++labeled_positions;
    }
  }
  return labeled_positions == p.inversion_count() &&
         labeled_positions == word.length();
}

}  // namespace legbraid
