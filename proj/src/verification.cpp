#include "legbraid/verification.hpp"

#include <algorithm>

#include "legbraid/commpoly.hpp"
#include "legbraid/dga.hpp"
#include "legbraid/grobner.hpp"
#include "legbraid/pathmatrix.hpp"

namespace legbraid {

BraidWord random_braid_word(int strands, int length, std::mt19937& rng) {
  BraidWord b;
  b.strands = strands;
  std::uniform_int_distribution<int> letter(1, std::max(1, strands - 1));
  for (int k = 0; k < length; ++k) b.letters.push_back(letter(rng));
  return b;
}

namespace {

std::vector<BraidWord> exhaustive_words(int max_q, int max_w) {
  std::vector<BraidWord> words;
  for (int q = 1; q <= max_q; ++q) {
    for (int w = 0; w <= max_w; ++w) {
      long long total = 1;
      for (int k = 0; k < w; ++k) total *= std::max(1, q - 1);
      for (long long code = 0; code < total; ++code) {
        BraidWord b;
        b.strands = q;
        long long c = code;
        for (int k = 0; k < w; ++k) {
          b.letters.push_back(int(c % std::max(1, q - 1)) + 1);
          c /= std::max(1, q - 1);
        }
        if (q == 1 && w > 0) continue;
        words.push_back(std::move(b));
      }
    }
  }
  return words;
}

bool oracle_matches(const BraidWord& b) {
  return path_matrix(b, Ring::Z2) == path_matrix_by_paths(b, Ring::Z2);
}

bool inverse_ok(const BraidWord& b) {
  NcMatrix m = path_matrix(b, Ring::Z2);
  NcMatrix inv = inverse_path_matrix(b, Ring::Z2);
  NcMatrix id = NcMatrix::identity(b.strands, Ring::Z2);
  return m * inv == id && inv * m == id;
}

bool zero_substitution_ok(const BraidWord& b) {
  NcMatrix m = path_matrix(b, Ring::Z2);
  NcMatrix p = permutation_matrix_nc(underlying_permutation(b), Ring::Z2);
  std::map<VarId, long long> zeros;
  for (int k = 1; k <= b.length(); ++k) zeros[var_b(k)] = 0;
  for (int i = 1; i <= b.strands; ++i)
    for (int j = 1; j <= b.strands; ++j)
      if (nc_evaluate(m.at(i, j), zeros) !=
          (p.at(i, j).is_one() ? 1 : 0))
        return false;
  return true;
}

bool row_reduction_ok(const BraidWord& b) {
  RowReductionFactors f = row_reduction_factors(b, Ring::Z2);
  NcMatrix prod = NcMatrix::identity(b.strands, Ring::Z2);
  for (const NcMatrix& a : f.factors) prod = prod * a;
  prod = prod * f.permutation_part;
  if (!(prod == path_matrix(b, Ring::Z2))) return false;
  // Over Z_2 each factor is an involution, so applying A_1, ..., A_w from
  // the left reduces B to the permutation matrix.
  NcMatrix red = path_matrix(b, Ring::Z2);
  for (const NcMatrix& a : f.factors) red = a * red;
  return red == f.permutation_part;
}

bool determinant_ok(const BraidWord& b) {
  int q = b.strands;
  NcMatrix m2 = path_matrix(b, Ring::Z2);
  CommMatrix<GF2> a2(q, std::vector<F2Poly>(q));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) a2[i - 1][j - 1] = abelianize_f2(m2.at(i, j));
  if (!(comm_det(a2) == F2Poly::constant(GF2(1)))) return false;

  NcMatrix mz = path_matrix(b, Ring::Z);
  CommMatrix<Rat> az(q, std::vector<QPoly>(q));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) az[i - 1][j - 1] = abelianize_q(mz.at(i, j));
  QPoly det = comm_det(az);
  return det == QPoly::constant(Rat(1)) || det == QPoly::constant(Rat(-1));
}

}  // namespace

std::vector<CheckResult> run_identity_suite(int max_q, int oracle_cases,
                                            unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<BraidWord> small = exhaustive_words(std::min(max_q, 3), 5);
  std::vector<BraidWord> sampled;
  std::uniform_int_distribution<int> qdist(2, std::max(2, max_q));
  std::uniform_int_distribution<int> wdist(0, 8);
  for (int c = 0; c < std::max(oracle_cases, 1); ++c)
    sampled.push_back(random_braid_word(qdist(rng), wdist(rng), rng));

  std::vector<BraidWord> identity_words = small;
  for (int c = 0; c < std::max(oracle_cases / 4, 32) &&
                  c < int(sampled.size());
       ++c)
    identity_words.push_back(sampled[c]);

  auto all_of_words = [](const std::vector<BraidWord>& words, auto&& pred) {
    for (const BraidWord& b : words)
      if (!pred(b)) return false;
    return true;
  };

  std::vector<CheckResult> out;
  bool oracle = all_of_words(small, oracle_matches) &&
                all_of_words(sampled, oracle_matches);
  out.push_back({"path matrix = path enumeration oracle", oracle});
  out.push_back({"B * B^-1 = B^-1 * B = I", all_of_words(identity_words, inverse_ok)});
  out.push_back({"B(0) = permutation matrix", all_of_words(identity_words, zero_substitution_ok)});
  out.push_back({"row reduction factors: B = A_1..A_w P and A_w..A_1 B = P",
                 all_of_words(identity_words, row_reduction_ok)});
  out.push_back({"abelianized det B = 1 over Z2 and +-1 over Z",
                 all_of_words(identity_words, determinant_ok)});

  bool tri = true, mmb = true;
  for (int q = 1; q <= std::min(max_q, 4); ++q) {
    tri = tri && verify_triangular_inverse(q);
    mmb = mmb && verify_mmb(q);
  }
  out.push_back({"unit triangular inverses (upper and lower, both orders)", tri});
  out.push_back({"matrix product identity with diagonal B[i,i]-C(i,i)-1", mmb});
  return out;
}

std::vector<CheckResult> run_grobner_suite(int max_q, int random_orders,
                                           unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<CheckResult> out;
  for (int q = 1; q <= max_q; ++q) {
    std::vector<TermOrder> orders{default_term_order(q)};
    for (int r = 0; r < random_orders; ++r)
      orders.push_back(random_diagonal_dominant_order(q, rng));
    bool ideal_ok = true, grob_ok = true;
    for (const TermOrder& order : orders) {
      for (CoeffField field : {CoeffField::Q, CoeffField::F2}) {
        ideal_ok = ideal_ok && verify_ideal_theorem(q, order, field);
        grob_ok = grob_ok && verify_grobner_theorem(q, order, field);
      }
    }
    out.push_back({"minor ideal = diagonal-C ideal, q=" + std::to_string(q),
                   ideal_ok});
    out.push_back({"reduced Groebner basis is {1 + C(n,n)}, q=" + std::to_string(q),
                   grob_ok});
  }
  int structure_q = std::min(max_q + 1, 5);
  out.push_back({"leading term of 1 + C(n,n) is B[n,n], q=" +
                     std::to_string(structure_q),
                 verify_initial_term_structure(structure_q,
                                               default_term_order(structure_q))});
  return out;
}

}  // namespace legbraid
